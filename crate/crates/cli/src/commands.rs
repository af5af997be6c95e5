//! Subcommand bodies, written against `Write` sinks so they can be tested
//! without a process boundary.

use std::io::{BufRead, IsTerminal, Write};

use pga::algebra::CayleyTable;
use pga::dynamics::{self, BodyState, RigidBody, Trajectory};
use pga::formulas::catalog;
use pga::text::format_number;
use pga::{golden, pga3d, Multivector, Signature};

use crate::error::CliError;
use crate::eval::{self, Env};

/// Evaluates a program and returns the formatted value of its last statement.
pub fn eval_source(src: &str, sig: Signature) -> Result<String, CliError> {
    let value = eval::run(src, &mut Env::new(sig))?;
    Ok(value.map(|v| v.to_string()).unwrap_or_default())
}

/// Prints the Cayley table of `sig` and checks it against the embedded
/// reference when one exists.
pub fn tables(sig: Signature, out: &mut impl Write, err: &mut impl Write) -> Result<(), CliError> {
    let table = CayleyTable::new(sig);
    write!(out, "{table}")?;
    let Some(reference) = golden::reference_table(sig) else {
        writeln!(err, "no reference table for {sig}")?;
        return Ok(());
    };
    let mismatches = golden::compare(&table, &reference);
    for m in &mismatches {
        writeln!(err, "row {} col {}: expected {}, found {}", m.row, m.col, m.expected, m.found)?;
    }
    if mismatches.is_empty() {
        writeln!(err, "{sig}: all cells match the reference table")?;
        Ok(())
    } else {
        Err(CliError::GoldenMismatch(mismatches.len()))
    }
}

/// One line per catalog entry: name, signature, parameters and summary.
pub fn list_formulas(out: &mut impl Write) -> Result<(), CliError> {
    for f in catalog::all() {
        writeln!(out, "{}\t{}\t({})\t{}", f.name, f.sig, f.params, f.summary)?;
    }
    Ok(())
}

/// Evaluates a catalog entry; each argument is an expression in the
/// entry's signature.
pub fn formula(name: &str, args: &[String]) -> Result<String, CliError> {
    let f = catalog::find(name).ok_or_else(|| CliError::Usage(format!("unknown formula `{name}`; try --list")))?;
    let mut values = Vec::with_capacity(args.len());
    for a in args {
        let value = eval::run(a, &mut Env::new(f.sig))?;
        values.push(value.ok_or_else(|| CliError::Usage(format!("empty argument for {name}")))?);
    }
    Ok(f.eval(&values)?.to_string())
}

/// Parameters of a free or driven rigid-body run.
#[derive(Debug, Clone, PartialEq)]
pub struct Simulation {
    pub dt: f64,
    pub steps: usize,
    /// Body-frame angular velocity followed by the linear velocity of the
    /// body origin.
    pub velocity: [f64; 6],
    /// Constant body-frame force bivector on `e01 e02 e03 e23 e31 e12`.
    pub force: [f64; 6],
}

impl Simulation {
    pub fn run(&self, body: &str) -> Result<Trajectory, CliError> {
        let rigid = RigidBody::new(dynamics::parse_body(body)?)?;
        let [wx, wy, wz, vx, vy, vz] = self.velocity;
        let start = BodyState::new(Multivector::scalar(pga3d::SIG, 1.0), dynamics::velocity_bivector([wx, wy, wz], [vx, vy, vz]))?;
        Ok(rigid.integrate(start, &pga3d::bivector(self.force), self.dt, self.steps)?)
    }
}

/// Summary line of a run: final energy, relative energy drift and
/// momentum drift. Under a force the momentum is not conserved, and the
/// line reports work done alongside the energy change instead.
pub fn summary(sim: &Simulation, traj: &Trajectory) -> String {
    let last = traj.samples.last().expect("trajectories start with the initial sample");
    let mut line = format!(
        "steps={} dt={} t_end={} energy={} energy_drift_rel={} momentum_drift={}",
        sim.steps,
        format_number(sim.dt),
        format_number(last.t),
        format_number(last.energy),
        format_number(traj.max_energy_drift()),
        format_number(traj.max_momentum_drift()),
    );
    if sim.force.iter().any(|f| *f != 0.0) {
        let work = traj.work_done().last().copied().unwrap_or(0.0);
        let gain = last.energy - traj.samples[0].energy;
        line.push_str(&format!(" work={} energy_gain={}", format_number(work), format_number(gain)));
    }
    line
}

/// Reads statements line by line, printing each value or error. Lines
/// starting with `:sig NAME` switch the signature and clear bindings.
pub fn repl(sig: Signature, input: impl BufRead, out: &mut impl Write, err: &mut impl Write) -> Result<(), CliError> {
    let mut env = Env::new(sig);
    let prompt = std::io::stdin().is_terminal();
    if prompt {
        write!(out, "{sig}> ")?;
        out.flush()?;
    }
    for line in input.lines() {
        let line = line?;
        let trimmed = line.trim();
        if let Some(name) = trimmed.strip_prefix(":sig") {
            match name.trim().parse() {
                Ok(s) => env.set_sig(s),
                Err(e) => writeln!(err, "{e}")?,
            }
        } else if matches!(trimmed, ":quit" | ":q") {
            break;
        } else {
            match eval::run(&line, &mut env) {
                Ok(Some(v)) => writeln!(out, "{v}")?,
                Ok(None) => {}
                Err(e) => writeln!(err, "{e}")?,
            }
        }
        if prompt {
            write!(out, "{}> ", env.sig)?;
            out.flush()?;
        }
    }
    Ok(())
}
