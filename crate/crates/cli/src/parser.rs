//! Pratt parser for the expression language.
//!
//! Statements are separated by `;` or line breaks. A statement is either
//! `name = expr` or an expression. Binary operators, loosest first, are
//! `+ -`, `&` (join), `^` (wedge, the meet), `|` (inner) and `* /`
//! (geometric product, division by a scalar); all associate to the left.
//! Prefix `-`, `~` (reverse) and `!` (Poincaré dual) bind tighter still.
//! Two adjacent atoms such as `a b` or `2 e12` multiply.

use pga::algebra::{Basis, Blade};
use pga::Signature;

use crate::ast::{BinaryOp, Expr, UnaryOp, UNARY_PRECEDENCE};
use crate::error::ParseError;
use crate::lexer::{tokenize, Token, TokenKind};

/// Built-in functions and their argument counts. `point` takes one
/// coordinate per euclidean dimension of the active signature.
pub const FUNCTIONS: &[(&str, usize)] =
    &[("exp", 1), ("log", 1), ("sqrt", 1), ("norm", 1), ("inorm", 1), ("normalize", 1), ("grade", 2), ("sandwich", 2), ("point", 0)];

fn arity(name: &str, sig: Signature) -> Option<usize> {
    let &(_, n) = FUNCTIONS.iter().find(|(f, _)| *f == name)?;
    Some(if name == "point" { sig.generators().saturating_sub(1) } else { n })
}

/// Whether `name` has the shape of a basis element token.
pub fn is_blade_token(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some('I') => name.len() == 1,
        Some('E') => name.len() > 1 && chars.all(|c| c.is_ascii_digit()),
        Some('e') => name.len() > 1 && chars.all(|c| c.is_ascii_digit() || c == 'a' || c == 'b'),
        _ => false,
    }
}

/// Checks a blade token against the generators of `sig`.
pub fn validate_blade(name: &str, sig: Signature) -> Result<(), String> {
    let n = sig.generators();
    if let Some(digits) = name.strip_prefix('e') {
        return match Blade::parse_factors(digits, n) {
            Some(_) => Ok(()),
            None if digits.chars().any(|c| digits.matches(c).count() > 1) => Err(format!("repeated generator in `{name}`")),
            None => Err(format!("unknown generator in `{name}` for signature {sig}")),
        };
    }
    if Basis::new(sig).by_name(name).is_some() {
        Ok(())
    } else {
        Err(format!("unknown basis element `{name}` for signature {sig}"))
    }
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    sig: Signature,
    src: &'a str,
}

/// Parses a whole program into its statements.
pub fn parse_program(src: &str, sig: Signature) -> Result<Vec<Expr>, ParseError> {
    let mut p = Parser { tokens: tokenize(src)?, pos: 0, sig, src };
    let mut out = Vec::new();
    loop {
        while p.eat(&TokenKind::Separator) {}
        if p.peek().is_none() {
            return Ok(out);
        }
        out.push(p.statement()?);
        match p.peek() {
            None | Some(TokenKind::Separator) => {}
            Some(_) => return Err(p.error_here("expected an operator or the end of the statement")),
        }
    }
}

/// Parses exactly one statement.
pub fn parse(src: &str, sig: Signature) -> Result<Expr, ParseError> {
    let mut stmts = parse_program(src, sig)?;
    match stmts.len() {
        1 => Ok(stmts.remove(0)),
        0 => Err(ParseError::new(1, 1, "empty input")),
        n => Err(ParseError::new(1, 1, format!("expected one statement, found {n}"))),
    }
}

fn ends_in_atom(e: &Expr) -> bool {
    match e {
        Expr::Number(_) | Expr::Blade(_) | Expr::Var(_) => true,
        Expr::Unary(_, x) | Expr::Binary(BinaryOp::Mul, _, x) => ends_in_atom(x),
        _ => false,
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn peek_at(&self, k: usize) -> Option<&TokenKind> {
        self.tokens.get(self.pos + k).map(|t| &t.kind)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error_here(&self, message: &str) -> ParseError {
        match self.tokens.get(self.pos) {
            Some(t) => ParseError::new(t.line, t.col, message),
            None => {
                let line = self.src.lines().count().max(1);
                let col = self.src.lines().last().map_or(0, |l| l.chars().count()) + 1;
                ParseError::new(line, col, format!("{message}, found the end of input"))
            }
        }
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<(), ParseError> {
        if self.eat(&kind) {
            Ok(())
        } else {
            Err(self.error_here(&format!("expected {what}")))
        }
    }

    fn statement(&mut self) -> Result<Expr, ParseError> {
        if let (Some(TokenKind::Ident(name)), Some(TokenKind::Equals)) = (self.peek(), self.peek_at(1)) {
            let name = name.clone();
            if is_blade_token(&name) || arity(&name, self.sig).is_some() {
                return Err(self.error_here(&format!("cannot assign to `{name}`")));
            }
            self.pos += 2;
            return Ok(Expr::Assign(name, Box::new(self.statement()?)));
        }
        self.expr(0)
    }

    fn infix(&self, lhs: &Expr) -> Option<(BinaryOp, bool)> {
        let op = match self.peek()? {
            TokenKind::Plus => BinaryOp::Add,
            TokenKind::Minus => BinaryOp::Sub,
            TokenKind::Amp => BinaryOp::Join,
            TokenKind::Caret => BinaryOp::Meet,
            TokenKind::Pipe => BinaryOp::Inner,
            TokenKind::Star => BinaryOp::Mul,
            TokenKind::Slash => BinaryOp::Div,
            TokenKind::Ident(_) if self.peek_at(1) != Some(&TokenKind::LParen) && ends_in_atom(lhs) => {
                return Some((BinaryOp::Mul, true));
            }
            _ => return None,
        };
        Some((op, false))
    }

    fn expr(&mut self, min: u8) -> Result<Expr, ParseError> {
        let mut lhs = self.prefix()?;
        while let Some((op, juxtaposed)) = self.infix(&lhs) {
            let p = op.precedence();
            if p < min {
                break;
            }
            if !juxtaposed {
                self.pos += 1;
            }
            let rhs = self.expr(p + 1)?;
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Expr, ParseError> {
        let Some(token) = self.tokens.get(self.pos).cloned() else {
            return Err(self.error_here("expected an expression"));
        };
        self.pos += 1;
        let op = match token.kind {
            TokenKind::Minus => Some(UnaryOp::Neg),
            TokenKind::Tilde => Some(UnaryOp::Reverse),
            TokenKind::Bang => Some(UnaryOp::Dual),
            _ => None,
        };
        if let Some(op) = op {
            return Ok(Expr::unary(op, self.expr(UNARY_PRECEDENCE)?));
        }
        match token.kind {
            TokenKind::Number(x) => Ok(Expr::Number(x)),
            TokenKind::LParen => {
                let inner = self.statement()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(inner)
            }
            TokenKind::Ident(name) if self.peek() == Some(&TokenKind::LParen) => self.call(name, token.line, token.col),
            TokenKind::Ident(name) if is_blade_token(&name) => {
                validate_blade(&name, self.sig).map(|()| Expr::Blade(name)).map_err(|m| ParseError::new(token.line, token.col, m))
            }
            TokenKind::Ident(name) => Ok(Expr::Var(name)),
            _ => {
                self.pos -= 1;
                Err(self.error_here("expected an expression"))
            }
        }
    }

    fn call(&mut self, name: String, line: usize, col: usize) -> Result<Expr, ParseError> {
        let Some(n) = arity(&name, self.sig) else {
            return Err(ParseError::new(line, col, format!("unknown function `{name}`")));
        };
        self.pos += 1;
        let mut args = Vec::new();
        if !self.eat(&TokenKind::RParen) {
            loop {
                args.push(self.expr(0)?);
                if self.eat(&TokenKind::RParen) {
                    break;
                }
                self.expect(TokenKind::Comma, "`,` or `)`")?;
            }
        }
        if args.len() != n {
            return Err(ParseError::new(line, col, format!("`{name}` takes {n} argument{}, found {}", if n == 1 { "" } else { "s" }, args.len())));
        }
        Ok(Expr::Call(name, args))
    }
}
