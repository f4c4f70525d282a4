//! Coefficient fields for polynomial rings: the rationals and prime fields.
//!
//! Every coefficient is carried as a [`BigRational`]. Over `F_p` the value is
//! always an integer in `[0, p)`, so equality of canonical forms is plain
//! equality of the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Coeff = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Coeff {
        Coeff::zero()
    }

    pub fn one(&self) -> Coeff {
        Coeff::one()
    }

    pub fn from_int(&self, n: &BigInt) -> Coeff {
        self.normalize(Coeff::from_integer(n.clone()))
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        self.from_int(&BigInt::from(n))
    }

    /// Brings an arbitrary rational into canonical form for this field.
    pub fn normalize(&self, c: Coeff) -> Coeff {
        match self {
            Field::Rational => c,
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                let num = c.numer().mod_floor(&p);
                let den = c.denom().mod_floor(&p);
                let inv = mod_inverse(&den, &p).expect("denominator divisible by the characteristic");
                Coeff::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a + b)
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a - b)
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a * b)
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        self.normalize(-a)
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Field::Rational => a.recip(),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                Coeff::from_integer(mod_inverse(a.numer(), &p).ok_or(Error::DivisionByZero)?)
            }
        })
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Enumerates the field elements of `F_p`; `None` over the rationals.
    pub fn elements(&self) -> Option<Vec<Coeff>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..*p).map(|i| Coeff::from_integer(BigInt::from(i))).collect()),
        }
    }

    pub fn fmt_coeff(&self, c: &Coeff) -> String {
        if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }

    pub(crate) fn is_negative(&self, c: &Coeff) -> bool {
        matches!(self, Field::Rational) && c.is_negative()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else if (-&e.gcd).is_one() {
        Some((-e.x).mod_floor(m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_normalizes_fractions() {
        let f = Field::Prime(7);
        // 1/2 = 4 in F_7
        let half = Coeff::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.normalize(half), f.from_i64(4));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Field::Prime(5).inv(&Coeff::zero()), Err(Error::DivisionByZero));
        assert_eq!(Field::Rational.inv(&Coeff::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn prime_field_inverses() {
        let f = Field::Prime(11);
        for c in f.elements().unwrap().into_iter().skip(1) {
            assert!(f.mul(&c, &f.inv(&c).unwrap()).is_one());
        }
    }
}
