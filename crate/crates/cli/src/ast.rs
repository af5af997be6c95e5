//! Parse tree of the expression language and its canonical printer.
//!
//! The printer inserts only the parentheses that precedence and left
//! associativity require, so printing a parsed tree and parsing the text
//! again yields the same tree.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Reverse,
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Join,
    Meet,
    Inner,
    Mul,
    Div,
}

/// Binding strength of prefix operators, tighter than every binary operator.
pub const UNARY_PRECEDENCE: u8 = 6;
const ATOM_PRECEDENCE: u8 = 7;

impl BinaryOp {
    /// Binding strength, loosest first: `+ -`, `&`, `^`, `|`, `* /`.
    pub fn precedence(self) -> u8 {
        match self {
            BinaryOp::Add | BinaryOp::Sub => 1,
            BinaryOp::Join => 2,
            BinaryOp::Meet => 3,
            BinaryOp::Inner => 4,
            BinaryOp::Mul | BinaryOp::Div => 5,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => " + ",
            BinaryOp::Sub => " - ",
            BinaryOp::Join => " & ",
            BinaryOp::Meet => " ^ ",
            BinaryOp::Inner => " | ",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
        }
    }
}

impl UnaryOp {
    fn symbol(self) -> char {
        match self {
            UnaryOp::Neg => '-',
            UnaryOp::Reverse => '~',
            UnaryOp::Dual => '!',
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// Nonnegative finite literal.
    Number(f64),
    /// Basis element token such as `e021`, `E0` or `I`, already validated.
    Blade(String),
    Var(String),
    Unary(UnaryOp, Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
    Assign(String, Box<Expr>),
}

impl Expr {
    pub fn unary(op: UnaryOp, x: Expr) -> Expr {
        Expr::Unary(op, Box::new(x))
    }

    pub fn binary(op: BinaryOp, a: Expr, b: Expr) -> Expr {
        Expr::Binary(op, Box::new(a), Box::new(b))
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Assign(..) => 0,
            Expr::Binary(op, ..) => op.precedence(),
            Expr::Unary(..) => UNARY_PRECEDENCE,
            _ => ATOM_PRECEDENCE,
        }
    }
}

/// Shortest text that reads back as the same `f64`.
pub fn format_literal(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{x}")
    } else {
        format!("{x:?}")
    }
}

fn child(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(x) => f.write_str(&format_literal(*x)),
            Expr::Blade(name) | Expr::Var(name) => f.write_str(name),
            Expr::Unary(op, x) => {
                write!(f, "{}", op.symbol())?;
                child(f, x, x.precedence() < UNARY_PRECEDENCE)
            }
            Expr::Binary(op, a, b) => {
                let p = op.precedence();
                child(f, a, a.precedence() < p)?;
                f.write_str(op.symbol())?;
                child(f, b, b.precedence() <= p)
            }
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::Assign(name, x) => write!(f, "{name} = {x}"),
        }
    }
}
