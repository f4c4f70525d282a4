//! Ideals of the supported rings.
//!
//! Over ℤ, fields and k[x] every ideal is principal and stored by its
//! normalized generator; in a quotient `D/(m)` the generator is taken in `D`
//! and divides `m`. In k[x₁,…,xₙ] ideals are stored by their reduced
//! Gröbner basis.

pub mod groebner;

use std::fmt;

use crate::limits::RADICAL_POWER_BOUND;
use crate::ring::{MultiPoly, PolyCtx, Ring, RingElem, Tier};
use crate::{Error, Result};

#[derive(Clone, Debug)]
enum Normal {
    /// Normalized generator in the covering ring.
    Principal(RingElem),
    /// Reduced Gröbner basis; empty for the zero ideal.
    Groebner(Vec<MultiPoly>),
}

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<RingElem>,
    normal: Normal,
}

fn check_ring(ring: &Ring, e: &RingElem) -> Result<()> {
    if e.ring() != ring {
        return Err(Error::RingMismatch(e.ring().to_string(), ring.to_string()));
    }
    Ok(())
}

impl Ideal {
    /// The ideal generated by `gens` (zeros are dropped).
    pub fn new(ring: &Ring, gens: Vec<RingElem>) -> Result<Self> {
        for g in &gens {
            check_ring(ring, g)?;
        }
        let mut gens: Vec<RingElem> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let normal = match ring.tier() {
            Tier::Euclidean => {
                let cover = ring.cover();
                let mut g = cover.zero();
                for x in &gens {
                    g = g.gcd(&ring.lift(x))?;
                }
                if let Some(m) = ring.modulus() {
                    g = g.gcd(&m)?;
                }
                Normal::Principal(g)
            }
            Tier::Multivariate => {
                let ctx = ring.poly_ctx().expect("multivariate ring");
                let polys: Vec<MultiPoly> = gens.iter().map(|g| g.as_multipoly().expect("poly").clone()).collect();
                Normal::Groebner(groebner::groebner(&polys, &ctx)?)
            }
        };
        if gens.is_empty() {
            gens.push(ring.zero());
        }
        Ok(Self { ring: ring.clone(), gens, normal })
    }

    pub fn principal(x: &RingElem) -> Result<Self> {
        Self::new(x.ring(), vec![x.clone()])
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, Vec::new()).expect("zero ideal")
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, vec![ring.one()]).expect("unit ideal")
    }

    /// Builds an ideal whose user-facing generators are its normal data.
    fn from_normal(ring: &Ring, normal: Normal) -> Self {
        let gens = match &normal {
            Normal::Principal(g) => vec![ring.reduce(g)],
            Normal::Groebner(b) if b.is_empty() => vec![ring.zero()],
            Normal::Groebner(b) => b.iter().map(|p| ring.from_multipoly(p.clone()).expect("same ring")).collect(),
        };
        Self { ring: ring.clone(), gens, normal }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Generators as given (or as computed, for derived ideals).
    pub fn gens(&self) -> &[RingElem] {
        &self.gens
    }

    /// The normalized generator in the covering ring, for principal-ideal rings.
    pub fn generator(&self) -> Option<&RingElem> {
        match &self.normal {
            Normal::Principal(g) => Some(g),
            Normal::Groebner(_) => None,
        }
    }

    /// The reduced Gröbner basis, for polynomial rings in several variables.
    pub fn groebner_basis(&self) -> Option<&[MultiPoly]> {
        match &self.normal {
            Normal::Groebner(b) => Some(b),
            Normal::Principal(_) => None,
        }
    }

    /// Canonical generators inside the ring: the reduced generator or the reduced basis.
    pub fn normal_gens(&self) -> Vec<RingElem> {
        Self::from_normal(&self.ring, self.normal.clone()).gens
    }

    pub fn is_zero(&self) -> bool {
        match &self.normal {
            Normal::Principal(g) => match self.ring.modulus() {
                Some(m) => g.normalized() == m.normalized(),
                None => g.is_zero(),
            },
            Normal::Groebner(b) => b.is_empty(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match &self.normal {
            Normal::Principal(g) => g.is_one(),
            Normal::Groebner(b) => b.len() == 1 && b[0].is_one(),
        }
    }

    fn ctx(&self) -> PolyCtx {
        self.ring.poly_ctx().expect("multivariate ring")
    }

    pub fn member(&self, f: &RingElem) -> Result<bool> {
        check_ring(&self.ring, f)?;
        match &self.normal {
            Normal::Principal(g) => g.divides(&self.ring.lift(f)),
            Normal::Groebner(b) => {
                let p = f.as_multipoly().expect("poly");
                Ok(groebner::normal_form(p, b, &self.ctx()).is_zero())
            }
        }
    }

    /// Normal form of `f` modulo the ideal (remainder by the generator or the basis).
    pub fn reduce(&self, f: &RingElem) -> Result<RingElem> {
        check_ring(&self.ring, f)?;
        match &self.normal {
            Normal::Principal(g) if g.is_zero() => Ok(f.clone()),
            Normal::Principal(g) => Ok(self.ring.reduce(&self.ring.lift(f).div_rem(g)?.1)),
            Normal::Groebner(b) => {
                let p = f.as_multipoly().expect("poly");
                self.ring.from_multipoly(groebner::normal_form(p, b, &self.ctx()))
            }
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        check_ring(&self.ring, &other.ring.zero())?;
        match (&self.normal, &other.normal) {
            (Normal::Principal(g), Normal::Principal(h)) => g.divides(h),
            _ => {
                for g in other.normal_gens() {
                    if !self.member(&g)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_ring(&self.ring, &other.ring.zero())?;
        match (&self.normal, &other.normal) {
            (Normal::Principal(a), Normal::Principal(b)) => {
                let mut g = (a * b).normalized();
                if let Some(m) = self.ring.modulus() {
                    g = g.gcd(&m)?;
                }
                Ok(Self::from_normal(&self.ring, Normal::Principal(g)))
            }
            (Normal::Groebner(a), Normal::Groebner(b)) => {
                let ctx = self.ctx();
                let prods: Vec<MultiPoly> = a.iter().flat_map(|p| b.iter().map(|q| p.mul(q, &ctx))).collect();
                Ok(Self::from_normal(&self.ring, Normal::Groebner(groebner::groebner(&prods, &ctx)?)))
            }
            _ => unreachable!("tier is a property of the ring"),
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_ring(&self.ring, &other.ring.zero())?;
        let mut gens = self.normal_gens();
        gens.extend(other.normal_gens());
        let s = Self::new(&self.ring, gens)?;
        Ok(Self::from_normal(&self.ring, s.normal))
    }

    /// `Iⁿ`, with `I⁰ = (1)`.
    pub fn pow(&self, n: u32) -> Result<Ideal> {
        if let Normal::Principal(g) = &self.normal {
            let mut p = g.pow(u64::from(n)).normalized();
            if let Some(m) = self.ring.modulus() {
                p = p.gcd(&m)?;
            }
            return Ok(Self::from_normal(&self.ring, Normal::Principal(p)));
        }
        let mut acc = Self::unit(&self.ring);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base)?;
            }
        }
        Ok(acc)
    }

    /// `f ∈ √I`.
    pub fn radical_member(&self, f: &RingElem) -> Result<bool> {
        check_ring(&self.ring, f)?;
        match &self.normal {
            Normal::Principal(g) => {
                let f = self.ring.lift(f);
                if g.is_zero() {
                    // the covering rings here are domains
                    return Ok(f.is_zero());
                }
                let mut h = g.clone();
                loop {
                    if h.is_unit() {
                        return Ok(true);
                    }
                    let d = h.gcd(&f)?;
                    if d.is_unit() {
                        return Ok(false);
                    }
                    h = h.exact_div(&d)?;
                }
            }
            Normal::Groebner(b) => {
                if self.member(f)? {
                    return Ok(true);
                }
                match self.rabinowitsch(f, b) {
                    Ok(v) => Ok(v),
                    Err(Error::BudgetExhausted(..)) => {
                        for k in 2..=RADICAL_POWER_BOUND {
                            if self.member(&f.pow(k as u64))? {
                                return Ok(true);
                            }
                        }
                        Err(Error::PowerBound(RADICAL_POWER_BOUND))
                    }
                    Err(e) => Err(e),
                }
            }
        }
    }

    /// `f ∈ √I` iff `I + (1 − t·f)` is the unit ideal in `k[x, t]`.
    fn rabinowitsch(&self, f: &RingElem, basis: &[MultiPoly]) -> Result<bool> {
        let ctx = self.ctx();
        let big = PolyCtx { field: ctx.field.clone(), nvars: ctx.nvars + 1, order: ctx.order };
        let mut gens: Vec<MultiPoly> = basis.iter().map(|p| p.extend_vars(&big)).collect();
        let t = MultiPoly::var(&big, ctx.nvars);
        let tf = t.mul(&f.as_multipoly().expect("poly").extend_vars(&big), &big);
        gens.push(MultiPoly::one(&big).sub(&tf, &big));
        let g = groebner::groebner(&gens, &big)?;
        Ok(g.len() == 1 && g[0].is_one())
    }

    /// Least `n ≤ max_n` with `Iⁿ = Iⁿ⁺¹`.
    pub fn powers_stabilize(&self, max_n: usize) -> Result<Option<usize>> {
        let mut p = self.clone();
        for n in 1..=max_n {
            let next = p.product(self)?;
            if next.contains(&p)? {
                return Ok(Some(n));
            }
            p = next;
        }
        Ok(None)
    }

    /// Least `k ≤ max_k` with `Iᵏ = 0`.
    pub fn is_nilpotent(&self, max_k: usize) -> Result<Option<usize>> {
        let mut p = self.clone();
        for k in 1..=max_k {
            if p.is_zero() {
                return Ok(Some(k));
            }
            let next = p.product(self)?;
            if next.contains(&p)? {
                return Ok(None);
            }
            p = next;
        }
        Ok(None)
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.equals(other).unwrap_or(false)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.product(b)
}

pub fn ideal_pow(a: &Ideal, n: u32) -> Result<Ideal> {
    a.pow(n)
}

pub fn ideal_member(f: &RingElem, a: &Ideal) -> Result<bool> {
    a.member(f)
}

/// `a ⊆ b`.
pub fn ideal_contains(a: &Ideal, b: &Ideal) -> Result<bool> {
    b.contains(a)
}

pub fn radical_member(f: &RingElem, a: &Ideal) -> Result<bool> {
    a.radical_member(f)
}

pub fn powers_stabilize(a: &Ideal, max_n: usize) -> Result<Option<usize>> {
    a.powers_stabilize(max_n)
}

pub fn is_nilpotent(a: &Ideal, max_k: usize) -> Result<Option<usize>> {
    a.is_nilpotent(max_k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder};

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| r.parse_elem(g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn products_and_powers_mod_12() {
        let r = Ring::int_mod(12).unwrap();
        let two = ideal(&r, &["2"]);
        assert_eq!(two.product(&two).unwrap().to_string(), "(4)");
        assert_eq!(two.pow(3).unwrap().to_string(), "(4)");
        assert_eq!(two.powers_stabilize(10).unwrap(), Some(2));
        assert_eq!(two.is_nilpotent(10).unwrap(), None);
        assert_eq!(ideal(&r, &["8"]), ideal(&r, &["4"]));
    }

    #[test]
    fn nilpotence() {
        let r8 = Ring::int_mod(8).unwrap();
        assert_eq!(ideal(&r8, &["2"]).powers_stabilize(10).unwrap(), Some(3));
        assert_eq!(ideal(&r8, &["2"]).is_nilpotent(10).unwrap(), Some(3));
        let r6 = Ring::int_mod(6).unwrap();
        assert_eq!(ideal(&r6, &["2"]).is_nilpotent(10).unwrap(), None);
        assert_eq!(ideal(&r6, &["2"]).powers_stabilize(10).unwrap(), Some(1));
    }

    #[test]
    fn integers() {
        let z = Ring::integers();
        let i = ideal(&z, &["6", "10"]);
        assert_eq!(i.generator().unwrap(), &z.from_int(2));
        assert!(i.member(&z.from_int(14)).unwrap());
        assert!(!i.member(&z.from_int(3)).unwrap());
        assert!(ideal(&z, &["12"]).radical_member(&z.from_int(6)).unwrap());
        assert!(!ideal(&z, &["12"]).radical_member(&z.from_int(3)).unwrap());
        assert_eq!(ideal(&z, &["2"]).powers_stabilize(8).unwrap(), None);
        assert!(ideal(&z, &["0"]).is_zero());
    }

    #[test]
    fn multivariate_membership() {
        let r = Ring::multipoly(Field::Rational, &["x", "y"], MonomialOrder::Grevlex).unwrap();
        let i = ideal(&r, &["x", "y^2"]);
        assert!(!i.member(&r.parse_elem("y").unwrap()).unwrap());
        assert!(i.radical_member(&r.parse_elem("y").unwrap()).unwrap());
        let j = ideal(&r, &["x^2", "y^2"]);
        assert!(j.radical_member(&r.parse_elem("x + y").unwrap()).unwrap());
        assert!(!j.radical_member(&r.parse_elem("x + 1").unwrap()).unwrap());
        let k = ideal(&r, &["x^2 + y", "x*y"]);
        assert!(k.member(&r.parse_elem("y^2").unwrap()).unwrap());
    }

    #[test]
    fn multivariate_powers() {
        let r = Ring::multipoly(Field::Rational, &["x", "y"], MonomialOrder::Grevlex).unwrap();
        let m = ideal(&r, &["x", "y"]);
        let m2 = m.pow(2).unwrap();
        assert_eq!(m2, ideal(&r, &["x^2", "x*y", "y^2"]));
        assert!(m.contains(&m2).unwrap());
        assert!(!m2.contains(&m).unwrap());
        assert_eq!(m.powers_stabilize(4).unwrap(), None);
        assert!(ideal(&r, &["x", "1 - x"]).is_unit());
    }

    #[test]
    fn quotient_polynomials() {
        let f = Field::Prime(2);
        let r = Ring::uniquot(f.clone(), "x", crate::ring::UniPoly::from_i64s(&f, &[0, 0, 1])).unwrap();
        let x = ideal(&r, &["x"]);
        assert_eq!(x.is_nilpotent(5).unwrap(), Some(2));
        assert!(ideal(&r, &["x + 1"]).is_unit());
    }
}
