//! Evaluation of parse trees by direct calls into the library.

use std::collections::HashMap;
use std::f64::consts::PI;

use pga::algebra::{Basis, Blade};
use pga::{motors, norms, Multivector, Signature};

use crate::ast::{BinaryOp, Expr, UnaryOp};
use crate::error::{CliError, EvalError};
use crate::parser::parse_program;

/// Variable bindings of a session. `pi` reads as π unless rebound.
#[derive(Debug, Clone)]
pub struct Env {
    pub sig: Signature,
    vars: HashMap<String, Multivector>,
}

impl Env {
    pub fn new(sig: Signature) -> Env {
        Env { sig, vars: HashMap::new() }
    }

    pub fn get(&self, name: &str) -> Option<&Multivector> {
        self.vars.get(name)
    }

    pub fn set(&mut self, name: &str, value: Multivector) {
        self.vars.insert(name.to_string(), value);
    }

    /// Switches the active signature and forgets bindings from the old one.
    pub fn set_sig(&mut self, sig: Signature) {
        if sig != self.sig {
            self.sig = sig;
            self.vars.clear();
        }
    }
}

/// Value of a basis element token (`e021`, `E0`, `I`) in `sig`.
pub fn blade_value(name: &str, sig: Signature) -> Option<Multivector> {
    if let Some(digits) = name.strip_prefix('e') {
        let (sign, blade) = Blade::parse_factors(digits, sig.generators())?;
        return Some(Multivector::blade(sig, blade, sign));
    }
    let e = Basis::new(sig).by_name(name).cloned()?;
    Some(Multivector::blade(sig, e.blade, e.sign))
}

fn scalar_of(x: &Multivector) -> Option<f64> {
    (x.grade_part(0) == *x).then(|| x.scalar_part())
}

fn fail(e: &Expr, message: impl ToString) -> EvalError {
    EvalError { expr: e.to_string(), message: message.to_string() }
}

/// Evaluates one statement, updating `env` on assignment.
pub fn eval(e: &Expr, env: &mut Env) -> Result<Multivector, EvalError> {
    let sig = env.sig;
    let lib = |r: pga::Result<Multivector>| r.map_err(|err| fail(e, err));
    match e {
        Expr::Number(x) => Ok(Multivector::scalar(sig, *x)),
        Expr::Blade(name) => blade_value(name, sig).ok_or_else(|| fail(e, format!("unknown basis element for {sig}"))),
        Expr::Var(name) => match env.get(name) {
            Some(v) => Ok(v.clone()),
            None if name == "pi" => Ok(Multivector::scalar(sig, PI)),
            None => Err(fail(e, "unbound variable")),
        },
        Expr::Assign(name, x) => {
            let v = eval(x, env)?;
            env.set(name, v.clone());
            Ok(v)
        }
        Expr::Unary(op, x) => {
            let v = eval(x, env)?;
            Ok(match op {
                UnaryOp::Neg => -v,
                UnaryOp::Reverse => v.reverse(),
                UnaryOp::Dual => v.poincare_dual(),
            })
        }
        Expr::Binary(op, a, b) => {
            let (x, y) = (eval(a, env)?, eval(b, env)?);
            match op {
                BinaryOp::Add => Ok(&x + &y),
                BinaryOp::Sub => Ok(&x - &y),
                BinaryOp::Join => lib(x.join(&y)),
                BinaryOp::Meet => lib(x.wedge(&y)),
                BinaryOp::Inner => lib(x.inner(&y)),
                BinaryOp::Mul => lib(x.geometric_product(&y)),
                BinaryOp::Div => match scalar_of(&y) {
                    Some(s) if s != 0.0 => Ok(&x / s),
                    _ => Err(fail(e, "division requires a nonzero scalar divisor")),
                },
            }
        }
        Expr::Call(name, args) => {
            let vals = args.iter().map(|a| eval(a, env)).collect::<Result<Vec<_>, _>>()?;
            call(name, &vals, sig).map_err(|m| fail(e, m))
        }
    }
}

fn call(name: &str, args: &[Multivector], sig: Signature) -> Result<Multivector, String> {
    let x = &args[0];
    let s = scalar_of(x);
    let scalar = |v: f64| Ok(Multivector::scalar(sig, v));
    let lib = |r: pga::Result<Multivector>| r.map_err(|e| e.to_string());
    match name {
        "exp" => match s {
            Some(v) => scalar(v.exp()),
            None => lib(motors::exp_bivector(x)),
        },
        "log" => match s {
            Some(v) if v > 0.0 => scalar(v.ln()),
            Some(_) => Err("logarithm of a nonpositive scalar".into()),
            None => lib(motors::log_motor(x)),
        },
        "sqrt" => match s {
            Some(v) if v >= 0.0 => scalar(v.sqrt()),
            Some(_) => Err("square root of a negative scalar".into()),
            None => lib(motors::sqrt_motor(x)),
        },
        "norm" => match s {
            Some(v) => scalar(v.abs()),
            None => norms::norm(x).map(|n| Multivector::scalar(sig, n.value)).map_err(|e| e.to_string()),
        },
        "inorm" => norms::ideal_norm(x).map(|v| Multivector::scalar(sig, v)).map_err(|e| e.to_string()),
        "normalize" => {
            if x.dominant_grade(norms::GRADE_NOISE).is_none() && x.is_even() && !x.is_zero() {
                lib(motors::normalize_motor(x))
            } else {
                lib(norms::normalize(x))
            }
        }
        "grade" => match scalar_of(&args[1]) {
            Some(k) if k >= 0.0 && k.fract() == 0.0 && k as usize <= sig.generators() => Ok(x.grade_part(k as usize)),
            _ => Err(format!("grade must be an integer from 0 to {}", sig.generators())),
        },
        "sandwich" => lib(motors::sandwich(x, &args[1])),
        "point" => {
            let coords = args.iter().map(|a| scalar_of(a).ok_or("point coordinates must be scalars")).collect::<Result<Vec<_>, _>>()?;
            point(&coords, sig)
        }
        _ => Err(format!("unknown function `{name}`")),
    }
}

fn point(coords: &[f64], sig: Signature) -> Result<Multivector, String> {
    if sig == pga::pga2d::SIG {
        Ok(pga::pga2d::point(coords[0], coords[1]))
    } else if sig == pga::pga3d::SIG {
        Ok(pga::pga3d::point(coords[0], coords[1], coords[2]))
    } else {
        Err(format!("point is defined for d201 and d301, not {sig}"))
    }
}

/// Parses and evaluates a program, returning the value of its last
/// statement (`None` when it has none).
pub fn run(src: &str, env: &mut Env) -> Result<Option<Multivector>, CliError> {
    let stmts = parse_program(src, env.sig)?;
    let mut last = None;
    for s in &stmts {
        last = Some(eval(s, env)?);
    }
    Ok(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn value(src: &str, sig: Signature) -> String {
        run(src, &mut Env::new(sig)).unwrap().unwrap().to_string()
    }

    #[test]
    fn ideal_generator_squares_to_zero() {
        assert_eq!(value("e0*e0", Signature::PLANE), "0");
        assert_eq!(value("e1 e1 + e02 e02", Signature::PLANE), "1");
    }

    #[test]
    fn rotor_exponential() {
        assert_eq!(value("exp(0.7853981634*E0)", Signature::PLANE), "0.7071067812 + 0.7071067812*e12");
        assert_eq!(value("exp(pi/4*E0)", Signature::PLANE), "0.7071067812 + 0.7071067812*e12");
    }

    #[test]
    fn blade_tokens_carry_orientation() {
        assert_eq!(value("e21", Signature::PLANE), "-1*e12");
        assert_eq!(value("e31", Signature::SPACE), "-1*e13");
        assert_eq!(value("E1", Signature::PLANE), "-1*e02");
    }

    #[test]
    fn assignments_persist() {
        let mut env = Env::new(Signature::SPACE);
        run("p = point(1, 2, 3); q = point(1, 2, 5)", &mut env).unwrap();
        assert_eq!(run("norm(p & q)", &mut env).unwrap().unwrap().to_string(), "2");
        env.set_sig(Signature::PLANE);
        assert!(env.get("p").is_none());
    }

    #[test]
    fn errors_name_the_offending_subexpression() {
        let mut env = Env::new(Signature::PLANE);
        let e = parse("1 + e1 / e2", Signature::PLANE).unwrap();
        let err = eval(&e, &mut env).unwrap_err();
        assert_eq!(err.expr, "e1/e2");
        let err = eval(&parse("normalize(e0) + zz", Signature::PLANE).unwrap(), &mut env).unwrap_err();
        assert_eq!(err.expr, "zz");
        let err = eval(&parse("norm(e1 + e12)", Signature::PLANE).unwrap(), &mut env).unwrap_err();
        assert_eq!(err.expr, "norm(e1 + e12)");
    }
}
