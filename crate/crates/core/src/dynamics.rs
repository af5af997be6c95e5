//! Rigid bodies in P(R*(3,0,1)): inertia on bivectors, kinetic energy,
//! the Euler equations for pose and velocity, and a renormalizing RK4
//! integrator.
//!
//! Conventions. The pose `g` is a motor from body to space and the body
//! velocity is `Ω = g̃ġ`, so `ġ = gΩ` and a body point `P` moves with
//! velocity `2 Ω × P`. The inertia `M` is the 6×6 matrix on bivector
//! coordinates (`e01 e02 e03 e23 e31 e12`) with `ΩᵀMΩ` equal to the kinetic
//! energy. Momentum `Π` is the bivector paired with velocity by the wedge,
//! `Ω ∧ Π = E I`, which puts the coordinates of `MΩ` on the complementary
//! blades. Conservation of `gΠg̃` then gives `Π̇ = Φ + 2 Π × Ω` in the body.

use std::io::{self, Write};

use nalgebra::{Cholesky, Matrix3, Matrix6, Vector3, Vector6, U6};

use crate::algebra::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::motors;
use crate::pga3d::{self, SIG};
use crate::text::format_number;

/// A point mass `m` at body coordinates `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointMass {
    pub mass: f64,
    pub position: [f64; 3],
}

/// Parses `mass x y z` lines; blank lines and `#` comments are skipped.
pub fn parse_body(text: &str) -> Result<Vec<PointMass>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<f64> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidBody(format!("line {}: {e}", n + 1)))?;
        let [mass, x, y, z] = fields[..] else {
            return Err(Error::InvalidBody(format!("line {}: expected `mass x y z`", n + 1)));
        };
        out.push(PointMass { mass, position: [x, y, z] });
    }
    Ok(out)
}

/// Velocity `2 Ω × P` of the body point at `r` under body velocity `Ω`.
pub fn point_velocity(omega: &Multivector, r: [f64; 3]) -> [f64; 3] {
    let p = pga3d::point(r[0], r[1], r[2]);
    let v = omega.commutator(&p).expect("signatures agree") * 2.0;
    let [x, y, z, _] = pga3d::homogeneous_coords(&v);
    [x, y, z]
}

/// Angular velocity vector of a body velocity bivector.
pub fn angular_velocity(omega: &Multivector) -> [f64; 3] {
    let c = pga3d::bivector_coords(omega);
    [-2.0 * c[3], -2.0 * c[4], -2.0 * c[5]]
}

/// Body velocity bivector with angular velocity `w` and linear velocity
/// `v` of the body point at the origin.
pub fn velocity_bivector(w: [f64; 3], v: [f64; 3]) -> Multivector {
    pga3d::bivector([-v[0] / 2.0, -v[1] / 2.0, -v[2] / 2.0, -w[0] / 2.0, -w[1] / 2.0, -w[2] / 2.0])
}

fn coords(b: &Multivector) -> Vector6<f64> {
    Vector6::from(pga3d::bivector_coords(b))
}

fn from_coords(c: &Vector6<f64>) -> Multivector {
    pga3d::bivector([c[0], c[1], c[2], c[3], c[4], c[5]])
}

/// Exchanges each basis bivector with its wedge partner (`e01 ↔ e23`,
/// `e02 ↔ e31`, `e03 ↔ e12`).
fn swap(c: &Vector6<f64>) -> Vector6<f64> {
    Vector6::new(c[3], c[4], c[5], c[0], c[1], c[2])
}

/// Kinetic-energy form on body velocities.
#[derive(Debug, Clone)]
pub struct InertiaTensor {
    matrix: Matrix6<f64>,
    factor: Option<Cholesky<f64, U6>>,
}

impl InertiaTensor {
    /// `M = Σ ½ mᵢ LᵢᵀLᵢ`, where `Lᵢ` maps `Ω` to the velocity of mass `i`.
    pub fn from_masses(masses: &[PointMass]) -> Result<InertiaTensor> {
        if masses.is_empty() {
            return Err(Error::InvalidBody("no masses".into()));
        }
        let mut matrix = Matrix6::zeros();
        for pm in masses {
            if !(pm.mass > 0.0 && pm.mass.is_finite()) {
                return Err(Error::InvalidBody(format!("nonpositive mass {}", pm.mass)));
            }
            let mut l = nalgebra::Matrix3x6::zeros();
            for k in 0..6 {
                let mut unit = [0.0; 6];
                unit[k] = 1.0;
                let v = point_velocity(&pga3d::bivector(unit), pm.position);
                l.set_column(k, &Vector3::from(v));
            }
            matrix += l.transpose() * l * (0.5 * pm.mass);
        }
        let factor = Cholesky::new(matrix);
        Ok(InertiaTensor { matrix, factor })
    }

    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.matrix
    }

    /// `ΩᵀMΩ`, the kinetic energy.
    pub fn energy(&self, omega: &Multivector) -> f64 {
        let c = coords(omega);
        c.dot(&(self.matrix * c))
    }

    /// Momentum bivector `Π` with `Ω ∧ Π = (ΩᵀMΩ) I`.
    pub fn momentum(&self, omega: &Multivector) -> Multivector {
        from_coords(&swap(&(self.matrix * coords(omega))))
    }

    /// Velocity with the given momentum, `Ω = M⁻¹ swap(Π)`.
    pub fn velocity(&self, momentum: &Multivector) -> Result<Multivector> {
        let chol = self.factor.as_ref().ok_or(Error::SingularInertia)?;
        Ok(from_coords(&chol.solve(&swap(&coords(momentum)))))
    }
}

/// Classical inertia tensor `Σ m (|r|² 1 − r rᵀ)` about the body origin.
pub fn classical_inertia(masses: &[PointMass]) -> Matrix3<f64> {
    masses.iter().fold(Matrix3::zeros(), |acc, pm| {
        let r = Vector3::from(pm.position);
        acc + (Matrix3::identity() * r.norm_squared() - r * r.transpose()) * pm.mass
    })
}

/// Pose and body velocity.
#[derive(Debug, Clone, PartialEq)]
pub struct BodyState {
    pub pose: Multivector,
    pub velocity: Multivector,
}

impl BodyState {
    pub fn at_rest() -> BodyState {
        BodyState { pose: Multivector::scalar(SIG, 1.0), velocity: Multivector::zero(SIG) }
    }

    pub fn new(pose: Multivector, velocity: Multivector) -> Result<BodyState> {
        if pose.sig() != SIG || velocity.sig() != SIG {
            return Err(Error::UnsupportedSignature(pose.sig()));
        }
        Ok(BodyState { pose: motors::normalize_motor(&pose)?, velocity: velocity.grade_part(2) })
    }
}

/// A rigid body made of point masses.
#[derive(Debug, Clone)]
pub struct RigidBody {
    pub masses: Vec<PointMass>,
    pub inertia: InertiaTensor,
}

impl RigidBody {
    pub fn new(masses: Vec<PointMass>) -> Result<RigidBody> {
        let inertia = InertiaTensor::from_masses(&masses)?;
        Ok(RigidBody { masses, inertia })
    }

    /// Kinetic energy, the `I` coefficient of `Ω ∧ Π`.
    pub fn kinetic_energy(&self, state: &BodyState) -> f64 {
        (&state.velocity ^ &self.inertia.momentum(&state.velocity)).pseudoscalar_part()
    }

    /// Momentum in space, `g Π g̃`.
    pub fn space_momentum(&self, state: &BodyState) -> Multivector {
        let g = &state.pose;
        (g * &self.inertia.momentum(&state.velocity) * g.reverse()).grade_part(2)
    }

    /// `(ġ, Ω̇)` for body force `Φ`.
    pub fn derivative(&self, state: &BodyState, force: &Multivector) -> Result<(Multivector, Multivector)> {
        let pi = self.inertia.momentum(&state.velocity);
        let pi_dot = force + &(pi.commutator(&state.velocity)? * 2.0);
        Ok((&state.pose * &state.velocity, self.inertia.velocity(&pi_dot)?))
    }

    /// One classical RK4 step followed by renormalization of the pose.
    pub fn step(&self, state: &BodyState, force: &Multivector, dt: f64) -> Result<BodyState> {
        let shifted = |k: &(Multivector, Multivector), h: f64| BodyState { pose: &state.pose + &(&k.0 * h), velocity: &state.velocity + &(&k.1 * h) };
        let k1 = self.derivative(state, force)?;
        let k2 = self.derivative(&shifted(&k1, dt / 2.0), force)?;
        let k3 = self.derivative(&shifted(&k2, dt / 2.0), force)?;
        let k4 = self.derivative(&shifted(&k3, dt), force)?;
        let w = dt / 6.0;
        let pose = &state.pose + &(&(&(&k1.0 + &(&k2.0 * 2.0)) + &(&(&k3.0 * 2.0) + &k4.0)) * w);
        let velocity = &state.velocity + &(&(&(&k1.1 + &(&k2.1 * 2.0)) + &(&(&k3.1 * 2.0) + &k4.1)) * w);
        Ok(BodyState { pose: motors::normalize_motor(&pose)?, velocity })
    }

    /// Rate of work `2 (Φ ∧ Ω)` done by a body force, as an `I` coefficient.
    pub fn power(force: &Multivector, velocity: &Multivector) -> f64 {
        2.0 * (force ^ velocity).pseudoscalar_part()
    }

    /// Integrates `steps` RK4 steps of size `dt` under a constant body force.
    pub fn integrate(&self, initial: BodyState, force: &Multivector, dt: f64, steps: usize) -> Result<Trajectory> {
        if dt.is_nan() || dt <= 0.0 {
            return Err(Error::Degenerate(format!("time step {dt}")));
        }
        let mut state = initial;
        let mut samples = Vec::with_capacity(steps + 1);
        samples.push(self.sample(0.0, &state));
        for i in 1..=steps {
            state = self.step(&state, force, dt)?;
            samples.push(self.sample(i as f64 * dt, &state));
        }
        Ok(Trajectory { samples, force: force.clone() })
    }

    fn sample(&self, t: f64, state: &BodyState) -> Sample {
        Sample { t, energy: self.kinetic_energy(state), space_momentum: self.space_momentum(state), state: state.clone() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub state: BodyState,
    pub energy: f64,
    pub space_momentum: Multivector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub force: Multivector,
}

const MOTOR_BLADES: [(&str, u32); 8] =
    [("1", 0), ("e01", 0b0011), ("e02", 0b0101), ("e03", 0b1001), ("e23", 0b1100), ("e31", 0b1010), ("e12", 0b0110), ("e0123", 0b1111)];

const BIVECTOR_NAMES: [&str; 6] = ["e01", "e02", "e03", "e23", "e31", "e12"];

/// Motor coefficients in the order `1 e01 e02 e03 e23 e31 e12 e0123`.
pub fn motor_coords(g: &Multivector) -> [f64; 8] {
    MOTOR_BLADES.map(|(name, bits)| {
        let sign = if name == "e31" { -1.0 } else { 1.0 };
        sign * g.get(Blade(bits))
    })
}

impl Trajectory {
    pub fn kinetic_energy(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.energy).collect()
    }

    /// Largest `|E(t) − E(0)| / E(0)`; absolute drift when `E(0) = 0`.
    pub fn max_energy_drift(&self) -> f64 {
        let e0 = self.samples.first().map_or(0.0, |s| s.energy);
        let scale = if e0 == 0.0 { 1.0 } else { e0.abs() };
        self.samples.iter().map(|s| (s.energy - e0).abs() / scale).fold(0.0, f64::max)
    }

    /// Largest componentwise change of the space momentum.
    pub fn max_momentum_drift(&self) -> f64 {
        let Some(first) = self.samples.first() else { return 0.0 };
        self.samples.iter().map(|s| s.space_momentum.distance_max(&first.space_momentum)).fold(0.0, f64::max)
    }

    /// Cumulative work `∫ 2 Φ ∧ Ω dt` by the trapezoid rule, one value per sample.
    pub fn work_done(&self) -> Vec<f64> {
        let mut acc = 0.0;
        let mut out = Vec::with_capacity(self.samples.len());
        for (i, s) in self.samples.iter().enumerate() {
            if i > 0 {
                let prev = &self.samples[i - 1];
                let p0 = RigidBody::power(&self.force, &prev.state.velocity);
                let p1 = RigidBody::power(&self.force, &s.state.velocity);
                acc += 0.5 * (p0 + p1) * (s.t - prev.t);
            }
            out.push(acc);
        }
        out
    }

    /// CSV with one row per sample: time, pose, body velocity, energy and
    /// space momentum.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        let mut header = vec!["t".to_string()];
        header.extend(MOTOR_BLADES.iter().map(|(n, _)| format!("g_{n}")));
        header.extend(BIVECTOR_NAMES.iter().map(|n| format!("omega_{n}")));
        header.push("energy".into());
        header.extend(BIVECTOR_NAMES.iter().map(|n| format!("momentum_{n}")));
        writeln!(w, "{}", header.join(","))?;
        for s in &self.samples {
            let mut row = vec![format_number(s.t)];
            row.extend(motor_coords(&s.state.pose).iter().map(|c| format_number(*c)));
            row.extend(pga3d::bivector_coords(&s.state.velocity).iter().map(|c| format_number(*c)));
            row.push(format_number(s.energy));
            row.extend(pga3d::bivector_coords(&s.space_momentum).iter().map(|c| format_number(*c)));
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// Classical body-frame Euler equations `I ω̇ = (I ω) × ω`, integrated with
/// RK4; returns `ω` after each step, starting with `ω₀`.
pub fn classical_euler(inertia: &Matrix3<f64>, w0: [f64; 3], dt: f64, steps: usize) -> Result<Vec<[f64; 3]>> {
    let inv = inertia.try_inverse().ok_or(Error::SingularInertia)?;
    let f = |w: &Vector3<f64>| inv * (inertia * w).cross(w);
    let mut w = Vector3::from(w0);
    let mut out = vec![w0];
    for _ in 0..steps {
        let k1 = f(&w);
        let k2 = f(&(w + k1 * (dt / 2.0)));
        let k3 = f(&(w + k2 * (dt / 2.0)));
        let k4 = f(&(w + k3 * dt));
        w += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
        out.push([w[0], w[1], w[2]]);
    }
    Ok(out)
}
