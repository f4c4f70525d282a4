//! Expression parser for ring elements: `2*x^2 - x*y + 3/2`, `(x+1)^3`.

use num_bigint::BigInt;

use super::{Ring, RingElem};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}' at column {}", i + 1)));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0 + 1).unwrap_or(0)
    }

    fn err(&self, msg: &str) -> Error {
        match self.toks.get(self.pos) {
            Some(_) => Error::Parse(format!("{msg} at column {}", self.column())),
            None => Error::Parse(format!("{msg} at end of input")),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RingElem> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RingElem> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                acc = &acc * &d.inverse()?;
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                // juxtaposition: 2x, x y, 3(x+1)
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RingElem> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u64 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RingElem> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.from_bigint(&n))
            }
            Some(Tok::Ident(name)) => {
                let col = self.column();
                self.pos += 1;
                self.ring
                    .var_named(&name)
                    .map_err(|_| Error::Parse(format!("unknown variable '{name}' at column {col}")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

pub(super) fn parse_elem(ring: &Ring, text: &str) -> Result<RingElem> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected token"));
    }
    Ok(e)
}
