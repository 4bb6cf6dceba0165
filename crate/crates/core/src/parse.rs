//! Recursive-descent parser for polynomial strings using `+ - * ^`,
//! parentheses, integer literals and the ring's variable names.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::RingSpec;

/// Split on commas that are not inside parentheses.
pub fn split_top_level_commas(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn peek_tok(&mut self) -> Result<Tok> {
        let save = self.pos;
        let t = self.next_tok()?;
        self.pos = save;
        Ok(t)
    }

    fn next_tok(&mut self) -> Result<Tok> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        Ok(match c {
            b'+' => Tok::Plus,
            b'-' | 0xE2 => {
                // accept unicode minus (E2 88 92) as well
                if c == 0xE2 {
                    if self.pos + 1 < self.src.len()
                        && self.src[self.pos] == 0x88
                        && self.src[self.pos + 1] == 0x92
                    {
                        self.pos += 2;
                    } else {
                        return Err(Error::Parse("unexpected byte in polynomial".into()));
                    }
                }
                Tok::Minus
            }
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(
                    s.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("integer literal too large: {s}")))?,
                )
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(String::from_utf8(self.src[start..self.pos].to_vec()).unwrap())
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{}`",
                    other as char
                )))
            }
        })
    }
}

struct Parser<'a> {
    lx: Lexer<'a>,
    ring: &'a RingSpec,
}

impl<'a> Parser<'a> {
    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.lx.peek_tok()? {
            Tok::Minus => {
                self.lx.next_tok()?;
                self.term()?.neg(self.ring)
            }
            _ => self.term()?,
        };
        loop {
            match self.lx.peek_tok()? {
                Tok::Plus => {
                    self.lx.next_tok()?;
                    let t = self.term()?;
                    acc = acc.add(&t, self.ring);
                }
                Tok::Minus => {
                    self.lx.next_tok()?;
                    let t = self.term()?;
                    acc = acc.sub(&t, self.ring);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.lx.peek_tok()? == Tok::Star {
            self.lx.next_tok()?;
            let f = self.factor()?;
            acc = acc.mul(&f, self.ring);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = match self.lx.next_tok()? {
            Tok::Int(n) => Poly::constant(self.ring, n),
            Tok::Ident(name) => {
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                Poly::var(self.ring, i)
            }
            Tok::LParen => {
                let e = self.expr()?;
                match self.lx.next_tok()? {
                    Tok::RParen => e,
                    _ => return Err(Error::Parse("expected `)`".into())),
                }
            }
            Tok::Minus => self.factor()?.neg(self.ring),
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if self.lx.peek_tok()? == Tok::Caret {
            self.lx.next_tok()?;
            match self.lx.next_tok()? {
                Tok::Int(e) if e >= 0 => Ok(base.pow(e as u32, self.ring)),
                _ => Err(Error::Parse("exponent must be a non-negative integer".into())),
            }
        } else {
            Ok(base)
        }
    }
}

/// Parse a polynomial over the ambient variables of `ring`. The result is in
/// canonical form but is not reduced modulo the quotient ideal.
pub fn parse_poly(src: &str, ring: &RingSpec) -> Result<Poly> {
    let mut p = Parser {
        lx: Lexer::new(src),
        ring,
    };
    let e = p.expr()?;
    match p.lx.next_tok()? {
        Tok::End => Ok(e),
        other => Err(Error::Parse(format!("trailing input at {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    #[test]
    fn parse_roundtrip() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        for src in ["x^2 - y^2", "x*y + 3", "-x + 2*y", "(x + y)^2", "0"] {
            let p = parse_poly(src, &r).unwrap();
            let back = parse_poly(&p.display(&r), &r).unwrap();
            assert_eq!(p, back, "roundtrip failed for {src}");
        }
    }

    #[test]
    fn parse_binomial_power() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let p = parse_poly("(x + y)^2", &r).unwrap();
        assert_eq!(p.display(&r), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn parse_errors() {
        let r = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        assert!(parse_poly("z + 1", &r).is_err());
        assert!(parse_poly("x^", &r).is_err());
        assert!(parse_poly("x (", &r).is_err());
    }

    #[test]
    fn split_commas() {
        assert_eq!(
            split_top_level_commas("x*y, (a, b), z"),
            vec!["x*y", " (a, b)", " z"]
        );
    }
}
