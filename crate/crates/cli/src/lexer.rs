//! Tokens of the expression language, each tagged with its source position.

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Number(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Amp,
    Pipe,
    Tilde,
    Bang,
    Equals,
    Comma,
    LParen,
    RParen,
    /// Statement separator: `;` or a line break.
    Separator,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

/// Splits `src` into tokens. Numbers are unsigned decimal literals with an
/// optional exponent, so `2e1` is twenty; write `2 e1` or `2*e1` for the
/// scaled blade.
pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut tokens = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        let push = |tokens: &mut Vec<Token>, kind| tokens.push(Token { kind, line: start_line, col: start_col });
        if c == '\n' {
            push(&mut tokens, TokenKind::Separator);
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let len = if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            let len = number_len(&chars[i..]);
            let text: String = chars[i..i + len].iter().collect();
            let value: f64 =
                text.parse().ok().filter(|v: &f64| v.is_finite()).ok_or_else(|| ParseError::new(line, col, format!("malformed number `{text}`")))?;
            push(&mut tokens, TokenKind::Number(value));
            len
        } else if c.is_alphabetic() || c == '_' {
            let len = chars[i..].iter().take_while(|c| c.is_alphanumeric() || **c == '_').count();
            push(&mut tokens, TokenKind::Ident(chars[i..i + len].iter().collect()));
            len
        } else {
            let kind = match c {
                '+' => TokenKind::Plus,
                '-' => TokenKind::Minus,
                '*' => TokenKind::Star,
                '/' => TokenKind::Slash,
                '^' => TokenKind::Caret,
                '&' => TokenKind::Amp,
                '|' => TokenKind::Pipe,
                '~' => TokenKind::Tilde,
                '!' => TokenKind::Bang,
                '=' => TokenKind::Equals,
                ',' => TokenKind::Comma,
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                ';' => TokenKind::Separator,
                _ => return Err(ParseError::new(line, col, format!("unexpected character `{c}`"))),
            };
            push(&mut tokens, kind);
            1
        };
        i += len;
        col += len;
    }
    Ok(tokens)
}

fn number_len(s: &[char]) -> usize {
    let digits = |from: usize| s[from..].iter().take_while(|c| c.is_ascii_digit()).count();
    let mut n = digits(0);
    if s.get(n) == Some(&'.') {
        n += 1 + digits(n + 1);
    }
    if matches!(s.get(n), Some('e' | 'E')) {
        let sign = usize::from(matches!(s.get(n + 1), Some('+' | '-')));
        let exp = digits(n + 1 + sign);
        if exp > 0 {
            n += 1 + sign + exp;
        }
    }
    n
}
