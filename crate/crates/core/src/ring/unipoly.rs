//! Dense univariate polynomials over a coefficient [`Field`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{Coeff, Field};
use crate::{Error, Result};

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(Coeff::one(), 1)
    }

    pub fn monomial(c: Coeff, deg: usize) -> Self {
        let mut coeffs = vec![Coeff::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from already-normalized coefficients, trimming zeros.
    pub fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(f: &Field, cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| f.from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Coeff {
        self.coeffs.get(i).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Coeff {
        self.coeffs.last().cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    pub fn add(&self, other: &Self, f: &Field) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self, f: &Field) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Field) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: &Coeff, f: &Field) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Self, f: &Field) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Coeff::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out.into_iter().map(|c| f.normalize(c)).collect())
    }

    pub fn pow(&self, mut e: u64, f: &Field) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            e >>= 1;
        }
        acc
    }

    pub fn div_rem(&self, divisor: &Self, f: &Field) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lc = f.inv(&divisor.lc())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Coeff::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(&rem[i], &inv_lc);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = f.sub(&rem[k], &f.mul(&c, b));
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self, f: &Field) -> Result<Self> {
        Ok(self.div_rem(divisor, f)?.1)
    }

    /// Monic associate and the leading coefficient that was divided out.
    pub fn monic(&self, f: &Field) -> (Self, Coeff) {
        if self.is_zero() {
            return (Self::zero(), Coeff::one());
        }
        let lc = self.lc();
        let inv = f.inv(&lc).expect("nonzero leading coefficient");
        (self.scale(&inv, f), lc)
    }

    /// Monic gcd (zero when both inputs vanish).
    pub fn gcd(&self, other: &Self, f: &Field) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(f).0
    }

    /// `(g, s, t)` with `s·self + t·other = g`, `g` monic (or zero).
    pub fn ext_gcd(&self, other: &Self, f: &Field) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1, f).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1, f), f);
            let t = t0.sub(&q.mul(&t1, f), f);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(&r0.lc()).expect("nonzero");
        (r0.scale(&inv, f), s0.scale(&inv, f), t0.scale(&inv, f))
    }

    pub fn derivative(&self, f: &Field) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Coeff, f: &Field) -> Coeff {
        self.coeffs.iter().rev().fold(Coeff::zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, e: &BigInt, modulus: &Self, f: &Field) -> Self {
        let mut base = self.rem(modulus, f).expect("nonzero modulus");
        let mut acc = Self::one().rem(modulus, f).expect("nonzero modulus");
        let mut e = e.clone();
        let two = BigInt::from(2);
        while !e.is_zero() {
            if e.is_odd() {
                acc = acc.mul(&base, f).rem(modulus, f).expect("nonzero modulus");
            }
            base = base.mul(&base, f).rem(modulus, f).expect("nonzero modulus");
            e /= &two;
        }
        acc
    }

    /// For `self = g(x^p)` over `F_p`, returns `g` (the p-th root, since Frobenius fixes `F_p`).
    pub(crate) fn pth_root(&self, p: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().step_by(p).cloned().collect())
    }

    pub fn fmt_with(&self, var: &str, f: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = f.is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let cs = f.fmt_coeff(&abs);
            match i {
                0 => out.push_str(&cs),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&cs);
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let f = Field::Rational;
        let a = UniPoly::from_i64s(&f, &[-1, 0, 0, 1]);
        let b = UniPoly::from_i64s(&f, &[1, 1]);
        let (q, r) = a.div_rem(&b, &f).unwrap();
        assert_eq!(q.mul(&b, &f).add(&r, &f), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_of_x2m1_x3m1_is_xm1() {
        let f = Field::Rational;
        let a = UniPoly::from_i64s(&f, &[-1, 0, 1]);
        let b = UniPoly::from_i64s(&f, &[-1, 0, 0, 1]);
        assert_eq!(a.gcd(&b, &f), UniPoly::from_i64s(&f, &[-1, 1]));
        let (g, s, t) = a.ext_gcd(&b, &f);
        assert_eq!(s.mul(&a, &f).add(&t.mul(&b, &f), &f), g);
    }

    #[test]
    fn display() {
        let f = Field::Rational;
        assert_eq!(UniPoly::from_i64s(&f, &[-1, 0, 2, 1]).fmt_with("x", &f), "x^3 + 2*x^2 - 1");
        let f2 = Field::Prime(2);
        assert_eq!(UniPoly::from_i64s(&f2, &[1, 1, 1]).fmt_with("t", &f2), "t^2 + t + 1");
    }
}
