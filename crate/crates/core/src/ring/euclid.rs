//! Euclidean-domain operations on ℤ, fields and k[x].
//!
//! Quotient rings are not Euclidean; callers lift to [`Ring::cover`] first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Ring, RingElem, RingKind, UniPoly, Value};
use crate::{Error, Result};

impl Ring {
    pub fn is_euclidean(&self) -> bool {
        matches!(
            self.kind(),
            RingKind::Int | RingKind::PrimeField(_) | RingKind::Rational | RingKind::UniPoly { .. }
        )
    }
}

impl RingElem {
    fn require_euclidean(&self) -> Result<()> {
        if self.ring().is_euclidean() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("{} is not a Euclidean domain", self.ring())))
        }
    }

    /// Euclidean norm: |a| on ℤ, degree on k[x], 0 on nonzero field elements.
    /// Only meaningful for nonzero elements of a Euclidean domain.
    pub fn norm(&self) -> BigInt {
        match self.value() {
            Value::Int(x) if self.ring().is_field() => {
                if x.is_zero() {
                    BigInt::from(-1)
                } else {
                    BigInt::zero()
                }
            }
            Value::Int(x) => x.abs(),
            Value::Rat(x) => {
                if x.is_zero() {
                    BigInt::from(-1)
                } else {
                    BigInt::zero()
                }
            }
            Value::Uni(p) => p.degree().map(BigInt::from).unwrap_or_else(|| BigInt::from(-1)),
            Value::Multi(p) => BigInt::from(p.total_degree()),
        }
    }

    /// `(q, r)` with `self = q·d + r` and `r = 0` or `norm(r) < norm(d)`.
    pub fn div_rem(&self, d: &RingElem) -> Result<(RingElem, RingElem)> {
        self.require_euclidean()?;
        if self.ring() != d.ring() {
            return Err(Error::RingMismatch(self.ring().to_string(), d.ring().to_string()));
        }
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = self.ring();
        match (self.value(), d.value()) {
            (Value::Int(a), Value::Int(b)) if matches!(ring.kind(), RingKind::Int) => {
                let (q, r) = a.div_rem(b);
                Ok((ring.elem(Value::Int(q)), ring.elem(Value::Int(r))))
            }
            (Value::Uni(a), Value::Uni(b)) => {
                let (q, r) = a.div_rem(b, ring.poly_field().expect("poly"))?;
                Ok((ring.elem(Value::Uni(q)), ring.elem(Value::Uni(r))))
            }
            _ => Ok((self * &d.inverse()?, ring.zero())),
        }
    }

    /// Splits `self = unit · normal` with `normal` the canonical associate
    /// (nonnegative integer, monic polynomial, 1 for nonzero field elements).
    pub fn normalize_associate(&self) -> (RingElem, RingElem) {
        let ring = self.ring();
        if self.is_zero() {
            return (self.clone(), ring.one());
        }
        match (ring.kind(), self.value()) {
            (RingKind::Int, Value::Int(x)) => {
                if x.is_negative() {
                    (-self, ring.from_int(-1))
                } else {
                    (self.clone(), ring.one())
                }
            }
            (RingKind::UniPoly { coeff, .. }, Value::Uni(p)) => {
                let (m, lc) = p.monic(coeff);
                (ring.elem(Value::Uni(m)), ring.elem(Value::Uni(UniPoly::constant(lc))))
            }
            _ if ring.is_field() => (ring.one(), self.clone()),
            _ => (self.clone(), ring.one()),
        }
    }

    pub fn normalized(&self) -> RingElem {
        self.normalize_associate().0
    }

    pub fn divides(&self, other: &RingElem) -> Result<bool> {
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(other.div_rem(self)?.1.is_zero())
    }

    pub fn exact_div(&self, d: &RingElem) -> Result<RingElem> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Invariant(format!("{d} does not divide {self}")))
        }
    }

    /// Normalized gcd.
    pub fn gcd(&self, other: &RingElem) -> Result<RingElem> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b)?.1;
            a = b;
            b = r;
        }
        Ok(a.normalized())
    }

    /// `(g, s, t)` with `s·self + t·other = g` and `g` normalized.
    pub fn ext_gcd(&self, other: &RingElem) -> Result<(RingElem, RingElem, RingElem)> {
        self.require_euclidean()?;
        let ring = self.ring();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (ring.one(), ring.zero());
        let (mut t0, mut t1) = (ring.zero(), ring.one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let (g, unit) = r0.normalize_associate();
        let inv = unit.inverse()?;
        Ok((g, &s0 * &inv, &t0 * &inv))
    }

    /// Normalized lcm; zero if either argument is zero.
    pub fn lcm(&self, other: &RingElem) -> Result<RingElem> {
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring().zero());
        }
        let g = self.gcd(other)?;
        Ok((self * &other.exact_div(&g)?).normalized())
    }

    /// Largest `k` with `d^k | self`, for nonzero `self` and non-unit nonzero `d`.
    pub fn valuation(&self, d: &RingElem) -> Result<u32> {
        if self.is_zero() || d.is_zero() || d.is_unit() {
            return Err(Error::Precondition("valuation needs nonzero arguments and a non-unit base".into()));
        }
        let mut k = 0;
        let mut x = self.clone();
        loop {
            let (q, r) = x.div_rem(d)?;
            if !r.is_zero() {
                return Ok(k);
            }
            x = q;
            k += 1;
        }
    }
}

/// Normalized gcd of a list (zero for an empty or all-zero list).
pub fn gcd_all<'a>(ring: &Ring, elems: impl IntoIterator<Item = &'a RingElem>) -> Result<RingElem> {
    elems.into_iter().try_fold(ring.zero(), |acc, e| acc.gcd(e))
}
