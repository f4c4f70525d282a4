//! Sparse multivariate polynomials with a fixed monomial order.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use super::field::{Coeff, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grevlex => "grevlex",
        })
    }
}

/// Exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn fmt_with(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Arithmetic context: field, number of variables and monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyCtx {
    pub field: Field,
    pub nvars: usize,
    pub order: MonomialOrder,
}

/// Terms sorted strictly descending in the context's order; all coefficients nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Coeff)>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(ctx: &PolyCtx, c: Coeff) -> Self {
        Self::term(ctx, Monomial::one(ctx.nvars), c)
    }

    pub fn one(ctx: &PolyCtx) -> Self {
        Self::constant(ctx, Coeff::one())
    }

    pub fn var(ctx: &PolyCtx, i: usize) -> Self {
        Self::term(ctx, Monomial::var(ctx.nvars, i), Coeff::one())
    }

    pub fn term(ctx: &PolyCtx, m: Monomial, c: Coeff) -> Self {
        let c = ctx.field.normalize(c);
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
    pub fn from_terms(ctx: &PolyCtx, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        terms.sort_by(|a, b| ctx.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ctx.field.add(lc, &c),
                _ => out.push((m, ctx.field.normalize(c))),
            }
            if out.last().is_some_and(|(_, c)| c.is_zero()) {
                out.pop();
            }
        }
        Self { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && !self.is_zero() && self.terms[0].1.is_one()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Coeff {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Coeff::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    fn merge(&self, other: &Self, ctx: &PolyCtx, negate_other: bool) -> Self {
        let f = &ctx.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &Coeff| if negate_other { f.neg(c) } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ctx.order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), rhs(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(ca, &rhs(cb));
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Self { terms: out }
    }

    pub fn add(&self, other: &Self, ctx: &PolyCtx) -> Self {
        self.merge(other, ctx, false)
    }

    pub fn sub(&self, other: &Self, ctx: &PolyCtx) -> Self {
        self.merge(other, ctx, true)
    }

    pub fn neg(&self, ctx: &PolyCtx) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), ctx.field.neg(c))).collect() }
    }

    pub fn scale(&self, c: &Coeff, ctx: &PolyCtx) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (m.clone(), ctx.field.mul(a, c))).collect() }
    }

    /// Multiplication by a term preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff, ctx: &PolyCtx) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(a, b)| (a.mul(m), ctx.field.mul(b, c))).collect() }
    }

    pub fn mul(&self, other: &Self, ctx: &PolyCtx) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Self::from_terms(ctx, terms)
    }

    pub fn pow(&self, mut e: u64, ctx: &PolyCtx) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, ctx);
            }
            base = base.mul(&base, ctx);
            e >>= 1;
        }
        acc
    }

    pub fn monic(&self, ctx: &PolyCtx) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = ctx.field.inv(&self.lc()).expect("nonzero leading coefficient");
        self.scale(&inv, ctx)
    }

    /// Re-embeds into a context with extra trailing variables.
    pub fn extend_vars(&self, ctx: &PolyCtx) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.resize(ctx.nvars, 0);
                (Monomial(e), c.clone())
            })
            .collect();
        Self::from_terms(ctx, terms)
    }

    pub fn fmt_with(&self, vars: &[String], field: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let neg = field.is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&field.fmt_coeff(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&field.fmt_coeff(&abs));
                    out.push('*');
                }
                out.push_str(&m.fmt_with(vars));
            }
        }
        out
    }
}
