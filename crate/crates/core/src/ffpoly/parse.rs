//! Text syntax for polynomials.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := signed ('*' signed)*
//! signed  := ('+' | '-') signed | power
//! power   := primary ('^' integer)?
//! primary := integer | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition is rejected: `x(x-1)` and `2x` are syntax errors.

use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.signed()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.checked_mul(&self.signed()?)?;
        }
        Ok(acc)
    }

    fn signed(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.signed()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.signed()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        let out = if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(s)) => s.parse::<u32>().map_err(|_| Error::ExponentOverflow)?,
                _ => return self.err("expected an integer exponent after `^`"),
            };
            self.pos += 1;
            base.checked_pow(e)?
        } else {
            base
        };
        match self.peek() {
            Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                self.err("juxtaposition is not multiplication; write `*`")
            }
            Some(Tok::Caret) => self.err("chained `^` is ambiguous; add parentheses"),
            _ => Ok(out),
        }
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                let p = self.ring.modulus() as u64;
                let v = s.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Polynomial::constant(self.ring, v as i64))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable(name)),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        ring,
        toks,
        pos: 0,
        end: text.len(),
    };
    let out = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{Monomial, PolyRing, TermOrder};

    fn ring(p: u32, vars: &[&str]) -> Ring {
        PolyRing::new(p, vars, TermOrder::GrevLex).unwrap()
    }

    #[test]
    fn d41_relation() {
        let r = ring(2, &["x", "y", "z"]);
        let f = parse("z^2+x^2*y+x*y^2+x*y*z", &r).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.to_string(), "x^2*y + x*y^2 + x*y*z + z^2");
    }

    #[test]
    fn zero() {
        let r = ring(2, &["x"]);
        assert!(parse("0", &r).unwrap().is_zero());
        assert!(parse("x - x", &r).unwrap().is_zero());
        assert!(parse("2", &r).unwrap().is_zero());
    }

    #[test]
    fn juxtaposition_rejected() {
        let r = ring(3, &["x", "y", "z"]);
        let err = parse("x(x-z^2)(x-2z^2)-y^2", &r).unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                pos: 1,
                msg: "juxtaposition is not multiplication; write `*`".into()
            }
        );
        assert!(matches!(parse("2x", &r), Err(Error::Syntax { pos: 1, .. })));
    }

    #[test]
    fn cubic_over_f3_expands() {
        let r = ring(3, &["x", "y", "z"]);
        let f = parse("x*(x-z^2)*(x-2*z^2)-y^2", &r).unwrap();
        // x(x-z^2)(x-2z^2) = x^3 - 3x^2 z^2 + 2x z^4 = x^3 + 2 x z^4 (mod 3); minus y^2 = + 2 y^2
        let expected = Polynomial::from_terms(
            &r,
            vec![
                (Monomial::new(vec![3, 0, 0]), 1),
                (Monomial::new(vec![1, 0, 4]), 2),
                (Monomial::new(vec![0, 2, 0]), 2),
            ],
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn errors() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(parse("x + w", &r), Err(Error::UnknownVariable("w".into())));
        assert_eq!(parse("x^99999999999", &r), Err(Error::ExponentOverflow));
        assert_eq!(parse("x^4294967295*x", &r), Err(Error::ExponentOverflow));
        assert!(matches!(parse("x +", &r), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse("(x", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x $ y", &r), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("x^2^3", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn precedence() {
        let r = ring(5, &["x", "y"]);
        assert_eq!(parse("-x^2", &r).unwrap(), parse("4*x^2", &r).unwrap());
        assert_eq!(parse("x+y*x^2", &r).unwrap(), parse("x + (y*(x^2))", &r).unwrap());
        assert_eq!(parse("(x+y)^2", &r).unwrap(), parse("x^2+2*x*y+y^2", &r).unwrap());
        assert_eq!(parse("x - -y", &r).unwrap(), parse("x+y", &r).unwrap());
    }
}
