//! Concrete commutative rings and their elements.
//!
//! A [`Ring`] is a cheap, shareable handle on a [`RingKind`]. Elements carry
//! their ring and a canonical payload, so structural equality of
//! [`RingElem`]s is equality in the ring.

pub mod euclid;
pub mod factor;
pub mod field;
pub mod multipoly;
mod parse;
pub mod unipoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use field::{Coeff, Field};
pub use multipoly::{Monomial, MonomialOrder, MultiPoly, PolyCtx};
pub use unipoly::UniPoly;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Int,
    IntMod(BigInt),
    PrimeField(u64),
    Rational,
    UniPoly { coeff: Field, var: String },
    UniQuot { coeff: Field, var: String, modulus: UniPoly },
    MultiPoly { coeff: Field, vars: Vec<String>, order: MonomialOrder },
}

/// Which decision procedures apply to a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    /// ℤ, fields, k[x] and their quotients: everything reduces to a PID.
    Euclidean,
    /// k[x₁,…,xₙ]: Gröbner bases only, no homology.
    Multivariate,
}

#[derive(Clone, Debug, Eq)]
pub struct Ring(Arc<RingKind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Value {
    Int(BigInt),
    Rat(BigRational),
    Uni(UniPoly),
    Multi(MultiPoly),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: Ring,
    value: Value,
}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    fn wrap(kind: RingKind) -> Self {
        Ring(Arc::new(kind))
    }

    pub fn integers() -> Self {
        Self::wrap(RingKind::Int)
    }

    pub fn rationals() -> Self {
        Self::wrap(RingKind::Rational)
    }

    pub fn int_mod(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(Error::InvalidRing(format!("modulus {m} must be at least 2")));
        }
        Ok(Self::wrap(RingKind::IntMod(m)))
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(Self::wrap(RingKind::PrimeField(p)))
    }

    pub fn field_check(f: &Field) -> Result<()> {
        match f {
            Field::Prime(p) if !is_prime_u64(*p) => Err(Error::InvalidRing(format!("{p} is not prime"))),
            _ => Ok(()),
        }
    }

    pub fn unipoly(coeff: Field, var: &str) -> Result<Self> {
        Self::field_check(&coeff)?;
        Ok(Self::wrap(RingKind::UniPoly { coeff, var: var.to_string() }))
    }

    /// `k[var]/(modulus)`; the modulus is made monic.
    pub fn uniquot(coeff: Field, var: &str, modulus: UniPoly) -> Result<Self> {
        Self::field_check(&coeff)?;
        if modulus.is_constant() {
            return Err(Error::InvalidRing("quotient modulus must be nonconstant".into()));
        }
        let modulus = modulus.monic(&coeff).0;
        Ok(Self::wrap(RingKind::UniQuot { coeff, var: var.to_string(), modulus }))
    }

    pub fn multipoly(coeff: Field, vars: &[&str], order: MonomialOrder) -> Result<Self> {
        Self::field_check(&coeff)?;
        if vars.is_empty() {
            return Err(Error::InvalidRing("polynomial ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable {v}")));
            }
        }
        Ok(Self::wrap(RingKind::MultiPoly {
            coeff,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        }))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn tier(&self) -> Tier {
        match self.kind() {
            RingKind::MultiPoly { .. } => Tier::Multivariate,
            _ => Tier::Euclidean,
        }
    }

    pub fn require_tier1(&self) -> Result<()> {
        match self.tier() {
            Tier::Euclidean => Ok(()),
            Tier::Multivariate => Err(Error::Tier2(self.to_string())),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self.kind(), RingKind::PrimeField(_) | RingKind::Rational)
    }

    /// Integral domains among the supported kinds (quotients are checked, not assumed).
    pub fn is_domain(&self) -> bool {
        matches!(
            self.kind(),
            RingKind::Int | RingKind::PrimeField(_) | RingKind::Rational | RingKind::UniPoly { .. } | RingKind::MultiPoly { .. }
        )
    }

    pub fn is_quotient(&self) -> bool {
        matches!(self.kind(), RingKind::IntMod(_) | RingKind::UniQuot { .. })
    }

    pub(crate) fn poly_field(&self) -> Option<&Field> {
        match self.kind() {
            RingKind::UniPoly { coeff, .. } | RingKind::UniQuot { coeff, .. } | RingKind::MultiPoly { coeff, .. } => {
                Some(coeff)
            }
            _ => None,
        }
    }

    pub fn poly_ctx(&self) -> Option<PolyCtx> {
        match self.kind() {
            RingKind::MultiPoly { coeff, vars, order } => {
                Some(PolyCtx { field: coeff.clone(), nvars: vars.len(), order: *order })
            }
            _ => None,
        }
    }

    pub fn vars(&self) -> Vec<String> {
        match self.kind() {
            RingKind::UniPoly { var, .. } | RingKind::UniQuot { var, .. } => vec![var.clone()],
            RingKind::MultiPoly { vars, .. } => vars.clone(),
            _ => Vec::new(),
        }
    }

    /// Euclidean domain covering this ring: ℤ for ℤ/m, k[x] for k[x]/(f), itself otherwise.
    pub fn cover(&self) -> Ring {
        match self.kind() {
            RingKind::IntMod(_) => Ring::integers(),
            RingKind::UniQuot { coeff, var, .. } => Self::wrap(RingKind::UniPoly { coeff: coeff.clone(), var: var.clone() }),
            _ => self.clone(),
        }
    }

    /// The modulus as an element of [`Ring::cover`], for quotient rings.
    pub fn modulus(&self) -> Option<RingElem> {
        match self.kind() {
            RingKind::IntMod(m) => Some(self.cover().elem(Value::Int(m.clone()))),
            RingKind::UniQuot { modulus, .. } => Some(self.cover().elem(Value::Uni(modulus.clone()))),
            _ => None,
        }
    }

    /// Canonical representative in the covering ring.
    pub fn lift(&self, e: &RingElem) -> RingElem {
        debug_assert_eq!(&e.ring, self);
        if self.is_quotient() {
            self.cover().elem(e.value.clone())
        } else {
            e.clone()
        }
    }

    /// Image of a covering-ring element.
    pub fn reduce(&self, e: &RingElem) -> RingElem {
        if self.is_quotient() {
            self.elem(e.value.clone())
        } else {
            e.clone()
        }
    }

    /// Canonicalizes a payload for this ring.
    pub(crate) fn elem(&self, value: Value) -> RingElem {
        let value = match (self.kind(), value) {
            (RingKind::Int, v @ Value::Int(_)) => v,
            (RingKind::IntMod(m), Value::Int(a)) => Value::Int(a.mod_floor(m)),
            (RingKind::PrimeField(p), Value::Int(a)) => Value::Int(a.mod_floor(&BigInt::from(*p))),
            (RingKind::Rational, Value::Int(a)) => Value::Rat(BigRational::from_integer(a)),
            (RingKind::Rational, v @ Value::Rat(_)) => v,
            (RingKind::UniPoly { .. }, v @ Value::Uni(_)) => v,
            (RingKind::UniQuot { coeff, modulus, .. }, Value::Uni(p)) => {
                Value::Uni(p.rem(modulus, coeff).expect("nonzero modulus"))
            }
            (RingKind::MultiPoly { .. }, v @ Value::Multi(_)) => v,
            (k, v) => panic!("payload {v:?} does not belong to {k:?}"),
        };
        RingElem { ring: self.clone(), value }
    }

    pub fn from_bigint(&self, n: &BigInt) -> RingElem {
        match self.kind() {
            RingKind::Int | RingKind::IntMod(_) | RingKind::PrimeField(_) | RingKind::Rational => {
                self.elem(Value::Int(n.clone()))
            }
            RingKind::UniPoly { coeff, .. } | RingKind::UniQuot { coeff, .. } => {
                self.elem(Value::Uni(UniPoly::constant(coeff.from_int(n))))
            }
            RingKind::MultiPoly { coeff, .. } => {
                let ctx = self.poly_ctx().expect("multivariate");
                self.elem(Value::Multi(MultiPoly::constant(&ctx, coeff.from_int(n))))
            }
        }
    }

    pub fn from_int(&self, n: i64) -> RingElem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn zero(&self) -> RingElem {
        self.from_int(0)
    }

    pub fn one(&self) -> RingElem {
        self.from_int(1)
    }

    /// The `i`-th polynomial variable.
    pub fn var(&self, i: usize) -> Result<RingElem> {
        match self.kind() {
            RingKind::UniPoly { .. } | RingKind::UniQuot { .. } if i == 0 => Ok(self.elem(Value::Uni(UniPoly::x()))),
            RingKind::MultiPoly { vars, .. } if i < vars.len() => {
                let ctx = self.poly_ctx().expect("multivariate");
                Ok(self.elem(Value::Multi(MultiPoly::var(&ctx, i))))
            }
            _ => Err(Error::Parse(format!("ring {self} has no variable #{i}"))),
        }
    }

    pub fn var_named(&self, name: &str) -> Result<RingElem> {
        let i = self
            .vars()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable '{name}' in ring {self}")))?;
        self.var(i)
    }

    pub fn from_unipoly(&self, p: UniPoly) -> Result<RingElem> {
        match self.kind() {
            RingKind::UniPoly { .. } | RingKind::UniQuot { .. } => Ok(self.elem(Value::Uni(p))),
            _ => Err(Error::Unsupported(format!("{self} is not a univariate polynomial ring"))),
        }
    }

    pub fn from_multipoly(&self, p: MultiPoly) -> Result<RingElem> {
        match self.kind() {
            RingKind::MultiPoly { .. } => Ok(self.elem(Value::Multi(p))),
            _ => Err(Error::Unsupported(format!("{self} is not a multivariate polynomial ring"))),
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<RingElem> {
        match self.kind() {
            RingKind::Rational => Ok(self.elem(Value::Rat(q.clone()))),
            _ if q.is_integer() => Ok(self.from_bigint(q.numer())),
            _ => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                num.checked_mul(&den.inverse()?)
            }
        }
    }

    pub fn parse_elem(&self, text: &str) -> Result<RingElem> {
        parse::parse_elem(self, text)
    }

    /// Every element, when the ring is finite and has at most `limit` elements.
    pub fn enumerate(&self, limit: usize) -> Option<Vec<RingElem>> {
        match self.kind() {
            RingKind::IntMod(m) => {
                let n = m.to_usize().filter(|&n| n <= limit)?;
                Some((0..n).map(|i| self.from_int(i as i64)).collect())
            }
            RingKind::PrimeField(p) => {
                let n = usize::try_from(*p).ok().filter(|&n| n <= limit)?;
                Some((0..n).map(|i| self.from_int(i as i64)).collect())
            }
            RingKind::UniQuot { coeff: Field::Prime(p), modulus, .. } => {
                let d = modulus.degree()? as u32;
                let n = (*p as usize).checked_pow(d).filter(|&n| n <= limit)?;
                let f = Field::Prime(*p);
                Some(
                    (0..n)
                        .map(|mut idx| {
                            let mut cs = Vec::with_capacity(d as usize);
                            for _ in 0..d {
                                cs.push(f.from_i64((idx % *p as usize) as i64));
                                idx /= *p as usize;
                            }
                            self.elem(Value::Uni(UniPoly::from_coeffs(cs)))
                        })
                        .collect(),
                )
            }
            _ => None,
        }
    }

    fn add_v(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Int(x), Value::Int(y)) => Value::Int(x + y),
            (Value::Rat(x), Value::Rat(y)) => Value::Rat(x + y),
            (Value::Uni(x), Value::Uni(y)) => Value::Uni(x.add(y, self.poly_field().expect("poly ring"))),
            (Value::Multi(x), Value::Multi(y)) => Value::Multi(x.add(y, &self.poly_ctx().expect("multivariate"))),
            _ => unreachable!("payload kinds agree within a ring"),
        }
    }

    fn mul_v(&self, a: &Value, b: &Value) -> Value {
        match (a, b) {
            (Value::Int(x), Value::Int(y)) => Value::Int(x * y),
            (Value::Rat(x), Value::Rat(y)) => Value::Rat(x * y),
            (Value::Uni(x), Value::Uni(y)) => Value::Uni(x.mul(y, self.poly_field().expect("poly ring"))),
            (Value::Multi(x), Value::Multi(y)) => Value::Multi(x.mul(y, &self.poly_ctx().expect("multivariate"))),
            _ => unreachable!("payload kinds agree within a ring"),
        }
    }

    fn neg_v(&self, a: &Value) -> Value {
        match a {
            Value::Int(x) => Value::Int(-x),
            Value::Rat(x) => Value::Rat(-x),
            Value::Uni(x) => Value::Uni(x.neg(self.poly_field().expect("poly ring"))),
            Value::Multi(x) => Value::Multi(x.neg(&self.poly_ctx().expect("multivariate"))),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            RingKind::Int => write!(f, "Z"),
            RingKind::IntMod(m) => write!(f, "Zmod {m}"),
            RingKind::PrimeField(p) => write!(f, "Fp {p}"),
            RingKind::Rational => write!(f, "Q"),
            RingKind::UniPoly { coeff, var } => write!(f, "poly {coeff} [{var}]"),
            RingKind::UniQuot { coeff, var, modulus } => {
                write!(f, "polyquot {coeff} [{var}] ({})", modulus.fmt_with(var, coeff))
            }
            RingKind::MultiPoly { coeff, vars, order } => write!(f, "poly {coeff} [{}] {order}", vars.join(",")),
        }
    }
}

impl RingElem {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn value(&self) -> &Value {
        &self.value
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.ring.elem(self.ring.add_v(&self.value, &other.value)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let neg = self.ring.neg_v(&other.value);
        Ok(self.ring.elem(self.ring.add_v(&self.value, &neg)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.ring.elem(self.ring.mul_v(&self.value, &other.value)))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Int(x) => x.is_zero(),
            Value::Rat(x) => x.is_zero(),
            Value::Uni(x) => x.is_zero(),
            Value::Multi(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    pub fn is_unit(&self) -> bool {
        match (self.ring.kind(), &self.value) {
            (RingKind::Int, Value::Int(x)) => x.abs().is_one(),
            (RingKind::IntMod(m), Value::Int(x)) => x.gcd(m).is_one(),
            (RingKind::UniQuot { coeff, modulus, .. }, Value::Uni(x)) => x.gcd(modulus, coeff).is_one(),
            (RingKind::UniPoly { .. }, Value::Uni(x)) => x.degree() == Some(0),
            (RingKind::MultiPoly { .. }, Value::Multi(x)) => x.is_constant() && !x.is_zero(),
            _ => !self.is_zero(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let fail = || Error::NotInvertible(self.to_string());
        match (self.ring.kind(), &self.value) {
            (RingKind::Int, Value::Int(x)) if x.abs().is_one() => Ok(self.clone()),
            (RingKind::IntMod(m), Value::Int(x)) => {
                field::mod_inverse(x, m).map(|i| self.ring.elem(Value::Int(i))).ok_or_else(fail)
            }
            (RingKind::PrimeField(p), Value::Int(x)) => field::mod_inverse(x, &BigInt::from(*p))
                .map(|i| self.ring.elem(Value::Int(i)))
                .ok_or_else(fail),
            (RingKind::Rational, Value::Rat(x)) if !x.is_zero() => Ok(self.ring.elem(Value::Rat(x.recip()))),
            (RingKind::UniPoly { coeff, .. }, Value::Uni(x)) if x.degree() == Some(0) => {
                Ok(self.ring.elem(Value::Uni(UniPoly::constant(coeff.inv(&x.lc())?))))
            }
            (RingKind::UniQuot { coeff, modulus, .. }, Value::Uni(x)) => {
                let (g, s, _) = x.ext_gcd(modulus, coeff);
                if g.is_one() {
                    Ok(self.ring.elem(Value::Uni(s)))
                } else {
                    Err(fail())
                }
            }
            (RingKind::MultiPoly { coeff, .. }, Value::Multi(x)) if x.is_constant() && !x.is_zero() => {
                let ctx = self.ring.poly_ctx().expect("multivariate");
                Ok(self.ring.elem(Value::Multi(MultiPoly::constant(&ctx, coeff.inv(&x.lc())?))))
            }
            _ => Err(fail()),
        }
    }

    pub fn as_bigint(&self) -> Option<&BigInt> {
        match &self.value {
            Value::Int(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_unipoly(&self) -> Option<&UniPoly> {
        match &self.value {
            Value::Uni(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_multipoly(&self) -> Option<&MultiPoly> {
        match &self.value {
            Value::Multi(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.value, self.ring.kind()) {
            (Value::Int(x), _) => write!(f, "{x}"),
            (Value::Rat(x), _) => write!(f, "{}", Field::Rational.fmt_coeff(x)),
            (Value::Uni(p), RingKind::UniPoly { coeff, var } | RingKind::UniQuot { coeff, var, .. }) => {
                f.write_str(&p.fmt_with(var, coeff))
            }
            (Value::Multi(p), RingKind::MultiPoly { coeff, vars, .. }) => f.write_str(&p.fmt_with(vars, coeff)),
            _ => unreachable!("payload kinds agree within a ring"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for &RingElem {
            type Output = RingElem;
            /// Panics on a ring mismatch; use the `checked_*` form to get an error instead.
            fn $m(self, rhs: &RingElem) -> RingElem {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl $tr for RingElem {
            type Output = RingElem;
            fn $m(self, rhs: RingElem) -> RingElem {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        self.ring.elem(self.ring.neg_v(&self.value))
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

pub fn elem_add(a: &RingElem, b: &RingElem) -> Result<RingElem> {
    a.checked_add(b)
}

pub fn elem_mul(a: &RingElem, b: &RingElem) -> Result<RingElem> {
    a.checked_mul(b)
}

pub fn elem_neg(a: &RingElem) -> RingElem {
    -a
}
