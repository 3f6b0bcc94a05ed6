//! A small expression language for symmetric functions:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | atom | '(' expr ')'
//! atom   := BASIS '[' INT (',' INT)* ']' | BASIS '[]'
//! ```
//!
//! `BASIS` is one of `s p h e m P Q`. A bare integer literal on the left of
//! `*` is a scalar multiple; everything else multiplies in the ring.

use std::fmt;

use crate::error::Error;
use crate::partition::Partition;
use crate::ratfunc::RatFunc;
use crate::symfunc::{Basis, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FExpr {
    Int(u64),
    Atom(Basis, Partition),
    Add(Box<FExpr>, Box<FExpr>),
    Sub(Box<FExpr>, Box<FExpr>),
    Mul(Box<FExpr>, Box<FExpr>),
    Scale(u64, Box<FExpr>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(err(self.pos, format!("expected '{}', found '{}'", c as char, x as char))),
            None => Err(err(self.pos, format!("expected '{}', found end of input", c as char))),
        }
    }

    fn int(&mut self) -> Result<u64, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| err(start, "integer literal too large"))
    }

    fn expr(&mut self) -> Result<FExpr, Error> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = FExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = FExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FExpr, Error> {
        let (mut acc, mut bare_int) = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let (rhs, _) = self.factor()?;
            acc = match acc {
                FExpr::Int(k) if bare_int => FExpr::Scale(k, Box::new(rhs)),
                other => FExpr::Mul(Box::new(other), Box::new(rhs)),
            };
            bare_int = false;
        }
        Ok(acc)
    }

    /// The flag records an unparenthesized integer literal.
    fn factor(&mut self) -> Result<(FExpr, bool), Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok((e, false))
            }
            Some(c) if c.is_ascii_digit() => Ok((FExpr::Int(self.int()?), true)),
            Some(c) => match Basis::from_symbol(c as char) {
                Some(b) => {
                    let start = self.pos;
                    self.pos += 1;
                    Ok((FExpr::Atom(b, self.parts(start)?), false))
                }
                None => Err(err(self.pos, format!("unexpected '{}'", c as char))),
            },
            None => Err(err(self.pos, "unexpected end of input")),
        }
    }

    fn parts(&mut self, atom_start: usize) -> Result<Partition, Error> {
        self.expect(b'[')?;
        let mut parts = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(Partition::empty());
        }
        loop {
            parts.push(self.int()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(err(self.pos, "expected ',' or ']'")),
            }
        }
        let parts = parts
            .into_iter()
            .map(|p| u32::try_from(p).map_err(|_| err(atom_start, "part too large")))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|e| match e {
            Error::InvalidPartition(msg) => err(atom_start, msg),
            other => other,
        })
    }
}

pub fn parse_fexpr(text: &str) -> Result<FExpr, Error> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(err(p.pos, format!("unexpected '{}'", c as char)));
    }
    Ok(e)
}

impl FExpr {
    /// Canonical text; `parse_fexpr(&e.render()) == Ok(e)`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.write(&mut s, 0);
        s
    }

    /// `level`: 0 inside a sum, 1 as the left operand of a product, 2 as a
    /// right operand of a product.
    fn write(&self, out: &mut String, level: u8) {
        let needs_parens = match self {
            FExpr::Add(..) | FExpr::Sub(..) => level >= 1,
            FExpr::Mul(..) | FExpr::Scale(..) => level >= 2,
            _ => false,
        };
        if needs_parens {
            out.push('(');
        }
        match self {
            FExpr::Int(k) => out.push_str(&k.to_string()),
            FExpr::Atom(b, l) => {
                out.push(b.symbol());
                out.push('[');
                let parts: Vec<String> = l.parts().iter().map(u32::to_string).collect();
                out.push_str(&parts.join(","));
                out.push(']');
            }
            FExpr::Add(a, b) | FExpr::Sub(a, b) => {
                a.write(out, 0);
                out.push_str(if matches!(self, FExpr::Add(..)) { " + " } else { " - " });
                b.write(out, 1);
            }
            FExpr::Mul(a, b) => {
                if let FExpr::Int(k) = **a {
                    out.push_str(&format!("({k})"));
                } else {
                    a.write(out, 1);
                }
                out.push('*');
                b.write(out, 2);
            }
            FExpr::Scale(k, b) => {
                out.push_str(&format!("{k}*"));
                b.write(out, 2);
            }
        }
        if needs_parens {
            out.push(')');
        }
    }

    /// The symmetric function denoted; Hall–Littlewood atoms carry the
    /// parameter as the coefficient variable.
    pub fn elaborate(&self) -> Result<SymFunc, Error> {
        Ok(match self {
            FExpr::Int(k) => SymFunc::term(Basis::Power, Partition::empty(), RatFunc::from_int(*k)),
            FExpr::Atom(b, l) => SymFunc::basis_element(*b, l.clone()),
            FExpr::Add(a, b) => a.elaborate()?.add(&b.elaborate()?)?,
            FExpr::Sub(a, b) => a.elaborate()?.sub(&b.elaborate()?)?,
            FExpr::Mul(a, b) => a.elaborate()?.multiply(&b.elaborate()?)?,
            FExpr::Scale(k, b) => b.elaborate()?.scale(&RatFunc::from_int(*k)),
        })
    }
}

impl fmt::Display for FExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses and elaborates in one step.
pub fn parse_symfunc(text: &str) -> Result<SymFunc, Error> {
    parse_fexpr(text)?.elaborate()
}
