//! Smith normal form over Euclidean domains, and the lattice solvers built on it.
//!
//! Pivoting picks the nonzero entry of smallest Euclidean norm in the active
//! submatrix, ties broken by lowest (row, column) index, so transforms are
//! reproducible.

use crate::limits::StepCounter;
use crate::matrix::Matrix;
use crate::ring::RingElem;
use crate::{Error, Result};

/// `u · a · v = d` with `u`, `v` invertible and `d` diagonal, `d₁ | d₂ | ⋯`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl Snf {
    /// The nonzero invariant factors, normalized.
    pub fn diagonal(&self) -> Vec<RingElem> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

fn min_norm_entry(a: &Matrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), num_bigint::BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let e = a.get(i, j);
            if e.is_zero() {
                continue;
            }
            let n = e.norm();
            if best.as_ref().is_none_or(|(_, b)| n < *b) {
                best = Some(((i, j), n));
            }
        }
    }
    best.map(|(p, _)| p)
}

pub fn smith_normal_form(a: &Matrix) -> Result<Snf> {
    let ring = a.ring().clone();
    if !ring.is_euclidean() {
        return Err(Error::Unsupported(format!("Smith normal form over {ring}; lift to the covering ring first")));
    }
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut u = Matrix::identity(&ring, m);
    let mut v = Matrix::identity(&ring, n);
    let mut steps = StepCounter::new("Smith normal form");
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = min_norm_entry(&d, t..m, t..n) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            steps.tick()?;
            let pivot = d.get(t, t).clone();
            for i in t + 1..m {
                if !d.get(i, t).is_zero() {
                    let q = -&d.get(i, t).div_rem(&pivot)?.0;
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
            }
            if let Some((i, _)) = min_norm_entry(&d, t + 1..m, t..t + 1) {
                d.swap_rows(t, i);
                u.swap_rows(t, i);
                continue;
            }
            for j in t + 1..n {
                if !d.get(t, j).is_zero() {
                    let q = -&d.get(t, j).div_rem(&pivot)?.0;
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
            }
            if let Some((_, j)) = min_norm_entry(&d, t..t + 1, t + 1..n) {
                d.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }
            let mut bad_row = None;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !pivot.divides(d.get(i, j))? {
                        bad_row = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad_row {
                Some(i) => {
                    let one = ring.one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        let (_, unit) = d.get(t, t).normalize_associate();
        let inv = unit.inverse()?;
        d.scale_row(t, &inv);
        u.scale_row(t, &inv);
        t += 1;
    }
    Ok(Snf { u, d, v, rank: t })
}

/// Basis of `{x : a·x = 0}` as the columns of the returned matrix.
pub fn kernel_basis(a: &Matrix) -> Result<Matrix> {
    let s = smith_normal_form(a)?;
    Ok(s.v.submatrix(0..a.cols(), s.rank..a.cols()))
}

/// Solves `a · x = b` over a Euclidean domain (all columns of `b` at once).
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!("solve: {} rows vs {} rows", a.rows(), b.rows())));
    }
    let s = smith_normal_form(a)?;
    let ub = s.u.mul(b)?;
    let mut y = Matrix::zeros(a.ring(), a.cols(), b.cols());
    for j in 0..b.cols() {
        for i in 0..a.rows() {
            let rhs = ub.get(i, j);
            if i < s.rank {
                let (q, r) = rhs.div_rem(s.d.get(i, i))?;
                if !r.is_zero() {
                    return Ok(None);
                }
                y.set(i, j, q);
            } else if !rhs.is_zero() {
                return Ok(None);
            }
        }
    }
    Ok(Some(s.v.mul(&y)?))
}

/// Solves `a · x = b` over `a`'s ring, which may be a quotient `D/(m)`:
/// lifts to `D` and solves `a·x + m·w = b`.
pub fn solve_in_ring(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    let ring = a.ring().clone();
    let Some(m) = ring.modulus() else {
        return solve(a, b);
    };
    let cover = ring.cover();
    let rows = a.rows();
    let aug = a.lift().hstack(&Matrix::scalar(&cover, rows, &m))?;
    Ok(solve(&aug, &b.lift())?.map(|x| x.submatrix(0..a.cols(), 0..b.cols()).reduce_into(&ring)))
}

/// Rows spanning `{w : w·a = 0}` over a Euclidean domain.
pub fn left_kernel_basis(a: &Matrix) -> Result<Matrix> {
    Ok(kernel_basis(&a.transpose())?.transpose())
}

/// Kernel of `a` over its ring, as a basis of covering-ring column vectors:
/// every `x` with `a·x ≡ 0` (modulo the ring's modulus, if any) is a
/// combination of the columns, and the columns are independent in the cover.
pub fn kernel_lattice(a: &Matrix) -> Result<Matrix> {
    let ring = a.ring().clone();
    let Some(m) = ring.modulus() else {
        return kernel_basis(a);
    };
    let cover = ring.cover();
    let aug = a.lift().hstack(&Matrix::scalar(&cover, a.rows(), &m))?;
    let k = kernel_basis(&aug)?;
    Ok(k.submatrix(0..a.cols(), 0..k.cols()))
}

/// Rows spanning `{w : w·a = 0}` over `a`'s ring (quotient-aware), reduced into the ring.
pub fn left_kernel_in_ring(a: &Matrix) -> Result<Matrix> {
    let ring = a.ring().clone();
    Ok(kernel_lattice(&a.transpose())?.transpose().reduce_into(&ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, Ring};

    fn check(a: &Matrix) -> Snf {
        let s = smith_normal_form(a).unwrap();
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        s
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        let z = Ring::integers();
        let s = check(&Matrix::from_i64(&z, &[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![z.from_int(1), z.from_int(6)]);
    }

    #[test]
    fn example_2468() {
        let z = Ring::integers();
        let s = check(&Matrix::from_i64(&z, &[&[2, 4], &[6, 8]]));
        assert_eq!(s.diagonal(), vec![z.from_int(2), z.from_int(4)]);
    }

    #[test]
    fn identity_is_fixed() {
        let z = Ring::integers();
        let s = check(&Matrix::identity(&z, 3));
        assert!(s.d.is_identity());
    }

    #[test]
    fn polynomial_entries() {
        let r = Ring::unipoly(Field::Rational, "x").unwrap();
        let e = |s: &str| r.parse_elem(s).unwrap();
        let a = Matrix::from_rows(&r, vec![vec![e("x"), e("0")], vec![e("1"), e("x^2")]], 2).unwrap();
        let s = check(&a);
        assert_eq!(s.diagonal(), vec![e("1"), e("x^3")]);
    }

    #[test]
    fn kernel_and_solve() {
        let z = Ring::integers();
        let a = Matrix::from_i64(&z, &[&[2, 4, 6]]);
        let k = kernel_basis(&a).unwrap();
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());
        let b = Matrix::from_i64(&z, &[&[10]]);
        let x = solve(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), b);
        assert!(solve(&a, &Matrix::from_i64(&z, &[&[3]])).unwrap().is_none());
    }

    #[test]
    fn solve_modulo() {
        let r = Ring::int_mod(12).unwrap();
        let a = Matrix::from_i64(&r, &[&[8]]);
        let x = solve_in_ring(&a, &Matrix::from_i64(&r, &[&[4]])).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), Matrix::from_i64(&r, &[&[4]]));
        assert!(solve_in_ring(&a, &Matrix::from_i64(&r, &[&[2]])).unwrap().is_none());
    }
}
