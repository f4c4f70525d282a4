//! Seeded random complexes and chain maps for property tests.
//!
//! Differentials are built so that `d∘d = 0` holds by construction: each
//! `dⁿ⁺¹` is a random combination of rows from the left kernel of `dⁿ`.
//! Chain maps are lifted degree by degree; when a lift does not exist the
//! attempt is retried, and as a last resort a null-homotopic map is used.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ChainMap, FreeComplex};
use crate::matrix::Matrix;
use crate::ring::{Field, Ring, RingElem, RingKind, UniPoly};
use crate::snf::{kernel_lattice, left_kernel_in_ring, solve_in_ring};
use crate::Result;

/// Size bounds for generated complexes.
#[derive(Clone, Debug)]
pub struct RandomParams {
    /// Lowest degree.
    pub lo: i64,
    /// Number of degrees.
    pub len: usize,
    pub max_rank: usize,
    /// Integer entries are drawn from `[−bound, bound]`.
    pub bound: i64,
    /// Probability that an entry is forced to zero.
    pub sparsity: f64,
}

impl Default for RandomParams {
    fn default() -> Self {
        Self { lo: -2, len: 3, max_rank: 3, bound: 4, sparsity: 0.3 }
    }
}

fn random_coeff(field: &Field, rng: &mut ChaCha8Rng, bound: i64) -> crate::ring::Coeff {
    match field {
        Field::Prime(p) => field.from_int(&BigInt::from(rng.gen_range(0..*p))),
        Field::Rational => field.from_i64(rng.gen_range(-bound..=bound)),
    }
}

/// A random element with small entries.
pub fn random_elem(ring: &Ring, rng: &mut ChaCha8Rng, bound: i64) -> RingElem {
    match ring.kind() {
        RingKind::Int | RingKind::IntMod(_) | RingKind::PrimeField(_) | RingKind::Rational => {
            ring.from_int(rng.gen_range(-bound..=bound))
        }
        RingKind::UniPoly { coeff, .. } | RingKind::UniQuot { coeff, .. } => {
            let deg = rng.gen_range(0..=2usize);
            let cs = (0..=deg).map(|_| random_coeff(coeff, rng, bound.min(3))).collect();
            ring.from_unipoly(UniPoly::from_coeffs(cs)).expect("univariate ring")
        }
        RingKind::MultiPoly { coeff, .. } => {
            let ctx = ring.poly_ctx().expect("multivariate");
            let mut p = crate::ring::MultiPoly::zero();
            for _ in 0..3 {
                let m = crate::ring::Monomial((0..ctx.nvars).map(|_| rng.gen_range(0..=2)).collect());
                p = p.add(&crate::ring::MultiPoly::term(&ctx, m, random_coeff(coeff, rng, bound.min(3))), &ctx);
            }
            ring.from_multipoly(p).expect("multivariate ring")
        }
    }
}

fn random_matrix(ring: &Ring, rng: &mut ChaCha8Rng, rows: usize, cols: usize, p: &RandomParams) -> Matrix {
    let mut m = Matrix::zeros(ring, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if !rng.gen_bool(p.sparsity) {
                m.set(i, j, random_elem(ring, rng, p.bound));
            }
        }
    }
    m
}

/// A random bounded complex over a Tier-1 ring; deterministic in `seed`.
pub fn random_complex(ring: &Ring, seed: u64, params: &RandomParams) -> Result<FreeComplex> {
    ring.require_tier1()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ranks: Vec<usize> = (0..params.len).map(|_| rng.gen_range(1..=params.max_rank.max(1))).collect();
    let mut diffs: Vec<Matrix> = Vec::new();
    for i in 0..params.len.saturating_sub(1) {
        let d = match diffs.last() {
            None => random_matrix(ring, &mut rng, ranks[i + 1], ranks[i], params),
            Some(prev) => {
                let rows = left_kernel_in_ring(prev)?;
                let mix = random_matrix(ring, &mut rng, ranks[i + 1], rows.rows(), params);
                mix.mul(&rows)?
            }
        };
        diffs.push(d);
    }
    FreeComplex::new(ring, params.lo, ranks, diffs)
}

/// Columns spanning `{x : a·x = 0}` in the ring.
fn kernel_in_ring(a: &Matrix) -> Result<Matrix> {
    Ok(kernel_lattice(a)?.reduce_into(a.ring()))
}

fn try_lift(x: &FreeComplex, y: &FreeComplex, rng: &mut ChaCha8Rng, params: &RandomParams) -> Result<Option<ChainMap>> {
    let ring = x.ring().clone();
    let mut comps: BTreeMap<i64, Matrix> = BTreeMap::new();
    for n in x.degrees() {
        let (ry, rx) = (y.rank(n), x.rank(n));
        let prev = comps.get(&(n - 1)).cloned().unwrap_or_else(|| Matrix::zeros(&ring, y.rank(n - 1), x.rank(n - 1)));
        // f·a = b with a = d_X^{n−1}, b = d_Y^{n−1}·f^{n−1}
        let a = x.diff(n - 1);
        let b = y.diff(n - 1).mul(&prev)?;
        let Some(part) = solve_in_ring(&a.transpose(), &b.transpose())? else {
            return Ok(None);
        };
        let mut f = part.transpose();
        let k = kernel_in_ring(&a.transpose())?;
        if k.cols() > 0 {
            let mix = random_matrix(&ring, rng, k.cols(), ry, params);
            f = f.add(&k.mul(&mix)?.transpose())?;
        }
        debug_assert_eq!(f.shape(), (ry, rx));
        comps.insert(n, f);
    }
    Ok(Some(ChainMap::new(x, y, comps)?))
}

/// `d_Y h + h d_X` for a random degree −1 map `h`.
fn null_homotopic(x: &FreeComplex, y: &FreeComplex, rng: &mut ChaCha8Rng, params: &RandomParams) -> Result<ChainMap> {
    let ring = x.ring().clone();
    let mut h: BTreeMap<i64, Matrix> = BTreeMap::new();
    for n in x.degrees() {
        h.insert(n, random_matrix(&ring, rng, y.rank(n - 1), x.rank(n), params));
    }
    let hn = |n: i64| h.get(&n).cloned().unwrap_or_else(|| Matrix::zeros(&ring, y.rank(n - 1), x.rank(n)));
    let mut comps = BTreeMap::new();
    for n in x.degrees() {
        let f = y.diff(n - 1).mul(&hn(n))?.add(&hn(n + 1).mul(&x.diff(n))?)?;
        comps.insert(n, f);
    }
    ChainMap::new(x, y, comps)
}

/// A random chain map `X → Y`; deterministic in `seed`.
pub fn random_chain_map(x: &FreeComplex, y: &FreeComplex, seed: u64, params: &RandomParams) -> Result<ChainMap> {
    x.ring().require_tier1()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        if let Some(f) = try_lift(x, y, &mut rng, params)? {
            if !f.comps().is_empty() || rng.gen_bool(0.5) {
                return f.add(&null_homotopic(x, y, &mut rng, params)?);
            }
        }
    }
    null_homotopic(x, y, &mut rng, params)
}

/// A random complex together with a random chain map out of it into another random complex.
pub fn random_triangle_data(ring: &Ring, seed: u64, params: &RandomParams) -> Result<ChainMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_complex(ring, rng.gen(), params)?;
    let y = random_complex(ring, rng.gen(), params)?;
    random_chain_map(&x, &y, rng.gen(), params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_valid() {
        for ring in [Ring::integers(), Ring::int_mod(12).unwrap(), Ring::prime_field(5).unwrap()] {
            let p = RandomParams::default();
            for seed in 0..20 {
                let a = random_complex(&ring, seed, &p).unwrap();
                assert_eq!(a, random_complex(&ring, seed, &p).unwrap());
                let f = random_triangle_data(&ring, seed, &p).unwrap();
                assert_eq!(f, random_triangle_data(&ring, seed, &p).unwrap());
            }
        }
    }

    #[test]
    fn polynomial_ring_complexes() {
        let r = Ring::unipoly(Field::Rational, "x").unwrap();
        let p = RandomParams { max_rank: 2, ..RandomParams::default() };
        for seed in 0..5 {
            random_triangle_data(&r, seed, &p).unwrap();
        }
    }
}
