//! Factorization of integers and of univariate polynomials.
//!
//! Over `F_p` polynomial factorization is complete (squarefree, distinct-degree
//! and Cantor–Zassenhaus equal-degree splitting with a fixed seed). Over ℚ only
//! the squarefree decomposition and rational linear factors are extracted;
//! leftover squarefree parts of degree ≤ 3 without rational roots are
//! irreducible, anything larger is reported with `complete = false`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Coeff, Field};
use super::unipoly::UniPoly;
use super::{RingElem, RingKind};
use crate::limits::FACTOR_BOUND;
use crate::{Error, Result};

const EDF_SEED: u64 = 0x7468_6963_6b67_656e;

/// Prime factorization by trial division, primes ascending.
pub fn factor_integer(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    if !n.is_positive() {
        return Err(Error::Precondition(format!("factor_integer needs n ≥ 1, got {n}")));
    }
    let mut m = n
        .to_u64()
        .filter(|&m| m <= FACTOR_BOUND)
        .ok_or_else(|| Error::FactorBound(n.to_string(), FACTOR_BOUND.to_string()))?;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            out.push((BigInt::from(d), e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((BigInt::from(m), 1));
    }
    Ok(out)
}

pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    let r = n.sqrt();
    let mut d = BigInt::from(2);
    while d <= r {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

/// Positive divisors of a nonzero integer, ascending.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factor_integer(&n.abs())? {
        let prev = out.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            out.extend(prev.iter().map(|d| d * &pk));
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniFactorization {
    /// Leading coefficient of the input.
    pub unit: Coeff,
    /// Monic factors with multiplicities, sorted by degree then coefficients.
    pub factors: Vec<(UniPoly, u32)>,
    /// False when some factor could not be certified irreducible (ℚ, degree ≥ 4).
    pub complete: bool,
}

impl UniFactorization {
    pub fn expand(&self, f: &Field) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (g, e)| acc.mul(&g.pow(*e as u64, f), f))
    }
}

/// Factors an element of a univariate polynomial ring (or the lift of a quotient element).
pub fn factor_unipoly(f: &RingElem) -> Result<UniFactorization> {
    let field = match f.ring().kind() {
        RingKind::UniPoly { coeff, .. } => coeff.clone(),
        _ => return Err(Error::Unsupported(format!("factor_unipoly over {}", f.ring()))),
    };
    factor_poly(f.as_unipoly().expect("univariate payload"), &field)
}

pub fn factor_poly(p: &UniPoly, f: &Field) -> Result<UniFactorization> {
    if p.is_zero() {
        return Err(Error::Precondition("cannot factor the zero polynomial".into()));
    }
    let (m, unit) = p.monic(f);
    let mut factors = Vec::new();
    let mut complete = true;
    match f {
        Field::Prime(q) => {
            let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
            for (g, e) in squarefree_fp(&m, *q, f) {
                for (h, d) in distinct_degree(&g, *q, f) {
                    for irr in equal_degree(&h, d, *q, f, &mut rng) {
                        factors.push((irr, e));
                    }
                }
            }
        }
        Field::Rational => {
            for (g, e) in squarefree_char0(&m, f) {
                let (linear, rest) = split_rational_roots(&g)?;
                factors.extend(linear.into_iter().map(|l| (l, e)));
                if let Some(rest) = rest {
                    if rest.degree().unwrap_or(0) >= 4 {
                        complete = false;
                    }
                    factors.push((rest, e));
                }
            }
        }
    }
    sort_factors(&mut factors);
    Ok(UniFactorization { unit, factors, complete })
}

fn sort_factors(factors: &mut [(UniPoly, u32)]) {
    factors.sort_by(|a, b| {
        a.0.degree().cmp(&b.0.degree()).then_with(|| {
            let ka: Vec<_> = a.0.coeffs().iter().rev().collect();
            let kb: Vec<_> = b.0.coeffs().iter().rev().collect();
            ka.cmp(&kb)
        })
    });
}

/// `Some(true/false)` when decided; `None` over ℚ in degree ≥ 4 without rational roots.
pub fn is_irreducible(p: &UniPoly, f: &Field) -> Result<Option<bool>> {
    match p.degree() {
        None | Some(0) => return Ok(Some(false)),
        Some(1) => return Ok(Some(true)),
        _ => {}
    }
    let fac = factor_poly(p, f)?;
    let single = fac.factors.len() == 1 && fac.factors[0].1 == 1;
    if !single {
        return Ok(Some(false));
    }
    Ok(if fac.complete { Some(true) } else { None })
}

/// Yun's squarefree decomposition in characteristic zero; input monic.
fn squarefree_char0(p: &UniPoly, f: &Field) -> Vec<(UniPoly, u32)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative(f);
    let mut a = p.gcd(&dp, f);
    let mut b = p.div_rem(&a, f).expect("gcd nonzero").0;
    let mut c = dp.div_rem(&a, f).expect("gcd nonzero").0;
    let mut d = c.sub(&b.derivative(f), f);
    let mut i = 1;
    while !b.is_one() {
        a = b.gcd(&d, f);
        if !a.is_one() {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a, f).expect("nonzero").0;
        c = d.div_rem(&a, f).expect("nonzero").0;
        d = c.sub(&b.derivative(f), f);
        i += 1;
    }
    out
}

/// Squarefree decomposition over `F_q`; input monic.
fn squarefree_fp(p: &UniPoly, q: u64, f: &Field) -> Vec<(UniPoly, u32)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut i = 1;
    let mut c = p.gcd(&p.derivative(f), f);
    let mut w = p.div_rem(&c, f).expect("nonzero").0;
    while !w.is_one() {
        let y = w.gcd(&c, f);
        let z = w.div_rem(&y, f).expect("nonzero").0;
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = c.div_rem(&y, f).expect("nonzero").0;
    }
    if !c.is_one() {
        let root = c.pth_root(q as usize);
        for (g, e) in squarefree_fp(&root, q, f) {
            out.push((g, e * q as u32));
        }
    }
    out
}

/// Products of all irreducible factors of each degree; input squarefree monic.
fn distinct_degree(p: &UniPoly, q: u64, f: &Field) -> Vec<(UniPoly, usize)> {
    let mut out = Vec::new();
    let mut rest = p.clone();
    let x = UniPoly::x();
    let qb = BigInt::from(q);
    let mut h = x.rem(&rest, f).expect("nonzero");
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod(&qb, &rest, f);
        let g = rest.gcd(&h.sub(&x, f), f);
        if !g.is_one() {
            rest = rest.div_rem(&g, f).expect("nonzero").0;
            h = h.rem(&rest, f).expect("nonzero");
            out.push((g, i));
        }
        i += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().expect("nonconstant");
        out.push((rest, d));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `d` into its factors.
fn equal_degree(p: &UniPoly, d: usize, q: u64, f: &Field, rng: &mut ChaCha8Rng) -> Vec<UniPoly> {
    let n = p.degree().expect("nonconstant");
    if n == d {
        return vec![p.clone()];
    }
    loop {
        let a = UniPoly::from_coeffs((0..n).map(|_| f.from_i64(rng.gen_range(0..q) as i64)).collect());
        if a.is_constant() {
            continue;
        }
        let b = if q == 2 {
            let mut t = a.rem(p, f).expect("nonzero");
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t, f).rem(p, f).expect("nonzero");
                acc = acc.add(&t, f);
            }
            acc
        } else {
            let e = (BigInt::from(q).pow(d as u32) - 1u32) / 2u32;
            a.pow_mod(&e, p, f).sub(&UniPoly::one(), f)
        };
        let g = p.gcd(&b, f);
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < n {
                let h = p.div_rem(&g, f).expect("nonzero").0;
                let mut out = equal_degree(&g, d, q, f, rng);
                out.extend(equal_degree(&h, d, q, f, rng));
                return out;
            }
        }
    }
}

/// Pulls out monic linear factors `x - r` for rational roots `r` of a squarefree polynomial.
fn split_rational_roots(p: &UniPoly) -> Result<(Vec<UniPoly>, Option<UniPoly>)> {
    let f = Field::Rational;
    let mut rest = p.clone();
    let mut linear = Vec::new();
    if rest.degree().unwrap_or(0) == 0 {
        return Ok((linear, None));
    }
    // root 0
    if rest.coeff(0).is_zero() {
        let xf = UniPoly::x();
        rest = rest.div_rem(&xf, &f)?.0;
        linear.push(xf);
    }
    if rest.degree().unwrap_or(0) > 0 {
        let den = rest.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = rest.coeffs().iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let (c0, cn) = (ints[0].clone(), ints.last().expect("nonzero").clone());
        let (num_divs, den_divs) = match (divisors(&c0), divisors(&cn)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => {
                let d = rest.degree().unwrap_or(0);
                return Ok((linear, (d > 0).then_some(rest)));
            }
        };
        let mut roots = Vec::new();
        for a in &num_divs {
            for b in &den_divs {
                for sign in [1, -1] {
                    let r = BigRational::new(a * sign, b.clone());
                    if !roots.contains(&r) && rest.eval(&r, &f).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        for r in roots {
            let lin = UniPoly::from_coeffs(vec![-r, Coeff::one()]);
            rest = rest.div_rem(&lin, &f)?.0;
            linear.push(lin);
        }
    }
    let rest = Some(rest).filter(|r| r.degree().unwrap_or(0) > 0);
    Ok((linear, rest))
}
