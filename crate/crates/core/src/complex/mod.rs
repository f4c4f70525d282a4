//! Bounded cochain complexes of finite free modules and chain maps.
//!
//! Grading is cohomological: `dⁿ : Xⁿ → Xⁿ⁺¹` is a `rank(n+1) × rank(n)`
//! matrix acting on column vectors. Sign conventions: `Σᵏ` multiplies the
//! differential by `(−1)ᵏ`, the cone differential is `[[−d, 0], [f, d]]`
//! and the tensor differential is `d⊗1 + (−1)ᵖ 1⊗d`.

pub mod random;

use std::collections::BTreeMap;
use std::fmt;

use crate::homology;
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::ring::{Ring, RingElem};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeComplex {
    ring: Ring,
    lo: i64,
    /// Ranks in degrees `lo, lo+1, …`; first and last entries are nonzero.
    ranks: Vec<usize>,
    /// `diffs[i]` is `d^{lo+i}`.
    diffs: Vec<Matrix>,
}

impl FreeComplex {
    /// Validates shapes and `d∘d = 0`, then trims zero ranks at both ends.
    pub fn new(ring: &Ring, lo: i64, ranks: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        let len = ranks.len();
        if diffs.len() != len.saturating_sub(1) {
            return Err(Error::Dimension(format!("{len} degrees need {} differentials, got {}", len.saturating_sub(1), diffs.len())));
        }
        for (i, d) in diffs.iter().enumerate() {
            let n = lo + i as i64;
            if d.ring() != ring {
                return Err(Error::RingMismatch(d.ring().to_string(), ring.to_string()));
            }
            if d.shape() != (ranks[i + 1], ranks[i]) {
                return Err(Error::Dimension(format!(
                    "d({n}) is {}×{}, expected {}×{}",
                    d.rows(),
                    d.cols(),
                    ranks[i + 1],
                    ranks[i]
                )));
            }
        }
        for i in 1..diffs.len() {
            if !diffs[i].mul(&diffs[i - 1])?.is_zero() {
                return Err(Error::NotAComplex(lo + i as i64 - 1));
            }
        }
        let Some(first) = ranks.iter().position(|&r| r > 0) else {
            return Ok(Self::zero(ring));
        };
        let last = ranks.iter().rposition(|&r| r > 0).expect("nonzero rank");
        Ok(Self {
            ring: ring.clone(),
            lo: lo + first as i64,
            ranks: ranks[first..=last].to_vec(),
            diffs: diffs[first..last].to_vec(),
        })
    }

    /// Builds a complex from its differentials `d^{lo}, …, d^{hi−1}`, inferring ranks.
    pub fn from_diffs(ring: &Ring, lo: i64, hi: i64, diffs: &BTreeMap<i64, Matrix>) -> Result<Self> {
        if hi < lo {
            return Err(Error::Dimension(format!("empty degree range {lo}..{hi}")));
        }
        let len = (hi - lo + 1) as usize;
        let mut ranks: Vec<Option<usize>> = vec![None; len];
        for (&n, d) in diffs {
            if n < lo || n >= hi {
                return Err(Error::Dimension(format!("d({n}) lies outside degrees {lo}..{hi}")));
            }
            let i = (n - lo) as usize;
            for (slot, r) in [(i, d.cols()), (i + 1, d.rows())] {
                match ranks[slot] {
                    Some(old) if old != r => {
                        return Err(Error::Dimension(format!(
                            "d({n}) is {}×{} but degree {} has rank {old}",
                            d.rows(),
                            d.cols(),
                            lo + slot as i64
                        )))
                    }
                    _ => ranks[slot] = Some(r),
                }
            }
        }
        let ranks: Vec<usize> = ranks.into_iter().map(|r| r.unwrap_or(0)).collect();
        Self::from_ranks_and_diffs(ring, lo, ranks, diffs)
    }

    /// Ranks given explicitly; missing differentials are zero.
    pub fn from_ranks_and_diffs(ring: &Ring, lo: i64, ranks: Vec<usize>, diffs: &BTreeMap<i64, Matrix>) -> Result<Self> {
        let mut ds = Vec::new();
        for i in 0..ranks.len().saturating_sub(1) {
            let n = lo + i as i64;
            ds.push(diffs.get(&n).cloned().unwrap_or_else(|| Matrix::zeros(ring, ranks[i + 1], ranks[i])));
        }
        for &n in diffs.keys() {
            if n < lo || n >= lo + ranks.len() as i64 - 1 {
                return Err(Error::Dimension(format!("d({n}) lies outside the degree range")));
            }
        }
        Self::new(ring, lo, ranks, ds)
    }

    pub fn zero(ring: &Ring) -> Self {
        Self { ring: ring.clone(), lo: 0, ranks: Vec::new(), diffs: Vec::new() }
    }

    /// `Rʳ` in degree `deg`.
    pub fn concentrated(ring: &Ring, deg: i64, rank: usize) -> Self {
        Self::new(ring, deg, vec![rank], Vec::new()).expect("one degree")
    }

    /// The unit object: `R` in degree 0.
    pub fn unit(ring: &Ring) -> Self {
        Self::concentrated(ring, 0, 1)
    }

    /// `[R →f→ R]` in degrees −1, 0.
    pub fn two_term(f: &RingElem) -> Self {
        let ring = f.ring();
        Self::new(ring, -1, vec![1, 1], vec![Matrix::scalar(ring, 1, f)]).expect("two-term complex")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Lowest degree with nonzero rank (0 for the zero complex).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest degree with nonzero rank (`lo − 1` for the zero complex).
    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo()..=self.hi()
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, n: i64) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.ranks[(n - self.lo) as usize]
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `dⁿ`, zero outside the stored range.
    pub fn diff(&self, n: i64) -> Matrix {
        if n >= self.lo && n < self.hi() {
            self.diffs[(n - self.lo) as usize].clone()
        } else {
            Matrix::zeros(&self.ring, self.rank(n + 1), self.rank(n))
        }
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// `Σᵏ X`: `(ΣᵏX)ⁿ = Xⁿ⁺ᵏ`, differential `(−1)ᵏ d`.
    pub fn shift(&self, k: i64) -> Self {
        let diffs = if k % 2 == 0 { self.diffs.clone() } else { self.diffs.iter().map(Matrix::neg).collect() };
        Self { ring: self.ring.clone(), lo: self.lo - k, ranks: self.ranks.clone(), diffs }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(())
    }

    /// Degree span covering both complexes, or `None` if both are zero.
    fn span(a: &Self, b: &Self) -> Option<(i64, i64)> {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => None,
            (true, false) => Some((b.lo(), b.hi())),
            (false, true) => Some((a.lo(), a.hi())),
            (false, false) => Some((a.lo().min(b.lo()), a.hi().max(b.hi()))),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let Some((lo, hi)) = Self::span(self, other) else {
            return Ok(Self::zero(&self.ring));
        };
        let ranks = (lo..=hi).map(|n| self.rank(n) + other.rank(n)).collect();
        let diffs = (lo..hi).map(|n| Matrix::block_diag(&self.diff(n), &other.diff(n))).collect::<Result<_>>()?;
        Self::new(&self.ring, lo, ranks, diffs)
    }

    /// Total complex of `X ⊗ Y`; degree-`n` basis ordered by `p` ascending, then by Kronecker index.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let (lo, hi) = (self.lo() + other.lo(), self.hi() + other.hi());
        let layout = |n: i64| -> Vec<(i64, usize, usize)> {
            let mut off = 0;
            let mut out = Vec::new();
            for p in self.degrees() {
                let size = self.rank(p) * other.rank(n - p);
                if size > 0 {
                    out.push((p, off, size));
                    off += size;
                }
            }
            out
        };
        let ranks: Vec<usize> = (lo..=hi).map(|n| layout(n).iter().map(|b| b.2).sum()).collect();
        let mut diffs = Vec::new();
        for n in lo..hi {
            let (src, dst) = (layout(n), layout(n + 1));
            let rows = ranks[(n + 1 - lo) as usize];
            let cols = ranks[(n - lo) as usize];
            let mut d = Matrix::zeros(&self.ring, rows, cols);
            for &(p, coff, _) in &src {
                let q = n - p;
                for &(p2, roff, _) in &dst {
                    let block = if p2 == p + 1 {
                        self.diff(p).kron(&Matrix::identity(&self.ring, other.rank(q)))
                    } else if p2 == p {
                        let b = Matrix::identity(&self.ring, self.rank(p)).kron(&other.diff(q));
                        if p.rem_euclid(2) == 1 {
                            b.neg()
                        } else {
                            b
                        }
                    } else {
                        continue;
                    };
                    for i in 0..block.rows() {
                        for j in 0..block.cols() {
                            d.set(roff + i, coff + j, block.get(i, j).clone());
                        }
                    }
                }
            }
            diffs.push(d);
        }
        Self::new(&self.ring, lo, ranks, diffs)
    }

    /// Homology `Hⁿ`, for Tier-1 rings.
    pub fn homology(&self, n: i64) -> Result<homology::FPModule> {
        homology::homology(self, n)
    }

    /// True iff every homology module vanishes.
    pub fn is_exact(&self) -> Result<bool> {
        for n in self.degrees() {
            if !self.homology(n)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Literal form accepted by the script parser.
    pub fn to_literal(&self) -> String {
        if self.is_zero() {
            return "{ deg 0..0 ; rank(0) = 0 }".to_string();
        }
        let mut parts = vec![format!("deg {}..{}", self.lo(), self.hi())];
        for n in self.degrees() {
            parts.push(format!("rank({n}) = {}", self.rank(n)));
        }
        for n in self.lo()..self.hi() {
            let d = self.diff(n);
            if d.rows() > 0 && d.cols() > 0 {
                parts.push(format!("d({n}) = {}", d.to_literal()));
            }
        }
        format!("{{ {} }}", parts.join(" ; "))
    }
}

impl fmt::Display for FreeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// Koszul complex `⨂ᵢ [R →fᵢ→ R]` on the given generators (tensored left to right).
pub fn koszul_on(ring: &Ring, gens: &[RingElem]) -> Result<FreeComplex> {
    let mut k = FreeComplex::unit(ring);
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch(g.ring().to_string(), ring.to_string()));
        }
        k = k.tensor(&FreeComplex::two_term(g))?;
    }
    Ok(k)
}

/// Koszul complex on the generators of `I` as given.
pub fn koszul(i: &Ideal) -> Result<FreeComplex> {
    koszul_on(i.ring(), i.gens())
}

pub fn shift(x: &FreeComplex, k: i64) -> FreeComplex {
    x.shift(k)
}

pub fn direct_sum(x: &FreeComplex, y: &FreeComplex) -> Result<FreeComplex> {
    x.direct_sum(y)
}

pub fn tensor(x: &FreeComplex, y: &FreeComplex) -> Result<FreeComplex> {
    x.tensor(y)
}

pub fn cone(f: &ChainMap) -> Result<FreeComplex> {
    f.cone()
}

pub fn is_quasi_iso(f: &ChainMap) -> Result<bool> {
    f.is_quasi_iso()
}

/// A morphism of complexes; `comp(n)` is `dst.rank(n) × src.rank(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    src: FreeComplex,
    dst: FreeComplex,
    comps: BTreeMap<i64, Matrix>,
}

impl ChainMap {
    /// Validates shapes and `d_dst ∘ f = f ∘ d_src`; missing components are zero.
    pub fn new(src: &FreeComplex, dst: &FreeComplex, comps: BTreeMap<i64, Matrix>) -> Result<Self> {
        src.check_ring(dst)?;
        let ring = src.ring().clone();
        let mut clean = BTreeMap::new();
        for (n, m) in comps {
            if m.ring() != &ring {
                return Err(Error::RingMismatch(m.ring().to_string(), ring.to_string()));
            }
            if m.shape() != (dst.rank(n), src.rank(n)) {
                return Err(Error::Dimension(format!(
                    "component in degree {n} is {}×{}, expected {}×{}",
                    m.rows(),
                    m.cols(),
                    dst.rank(n),
                    src.rank(n)
                )));
            }
            if !m.is_zero() {
                clean.insert(n, m);
            }
        }
        let f = Self { src: src.clone(), dst: dst.clone(), comps: clean };
        if let Some((lo, hi)) = FreeComplex::span(src, dst) {
            for n in lo - 1..=hi {
                let left = f.dst.diff(n).mul(&f.comp(n))?;
                let right = f.comp(n + 1).mul(&f.src.diff(n))?;
                if left != right {
                    return Err(Error::InvalidChainMap(format!("commutation fails in degree {n}")));
                }
            }
        }
        Ok(f)
    }

    pub fn identity(x: &FreeComplex) -> Self {
        let comps = x.degrees().map(|n| (n, Matrix::identity(x.ring(), x.rank(n)))).collect();
        Self::new(x, x, comps).expect("identity commutes")
    }

    pub fn zero(src: &FreeComplex, dst: &FreeComplex) -> Result<Self> {
        Self::new(src, dst, BTreeMap::new())
    }

    /// Multiplication by a scalar on `X`.
    pub fn scalar(x: &FreeComplex, c: &RingElem) -> Result<Self> {
        let comps = x.degrees().map(|n| (n, Matrix::scalar(x.ring(), x.rank(n), c))).collect();
        Self::new(x, x, comps)
    }

    pub fn src(&self) -> &FreeComplex {
        &self.src
    }

    pub fn dst(&self) -> &FreeComplex {
        &self.dst
    }

    pub fn ring(&self) -> &Ring {
        self.src.ring()
    }

    pub fn comp(&self, n: i64) -> Matrix {
        self.comps.get(&n).cloned().unwrap_or_else(|| Matrix::zeros(self.src.ring(), self.dst.rank(n), self.src.rank(n)))
    }

    /// Nonzero components by degree.
    pub fn comps(&self) -> &BTreeMap<i64, Matrix> {
        &self.comps
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ChainMap) -> Result<Self> {
        if g.dst != self.src {
            return Err(Error::InvalidChainMap("composition: target and source differ".into()));
        }
        let mut comps = BTreeMap::new();
        for n in g.src.degrees() {
            comps.insert(n, self.comp(n).mul(&g.comp(n))?);
        }
        Self::new(&g.src, &self.dst, comps)
    }

    pub fn add(&self, other: &ChainMap) -> Result<Self> {
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::InvalidChainMap("sum of maps with different endpoints".into()));
        }
        let mut comps = BTreeMap::new();
        for n in self.src.degrees() {
            comps.insert(n, self.comp(n).add(&other.comp(n))?);
        }
        Self::new(&self.src, &self.dst, comps)
    }

    /// `Σᵏ f`, components reindexed without sign.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            src: self.src.shift(k),
            dst: self.dst.shift(k),
            comps: self.comps.iter().map(|(n, m)| (n - k, m.clone())).collect(),
        }
    }

    pub fn direct_sum(&self, other: &ChainMap) -> Result<Self> {
        let src = self.src.direct_sum(&other.src)?;
        let dst = self.dst.direct_sum(&other.dst)?;
        let mut comps = BTreeMap::new();
        if let Some((lo, hi)) = FreeComplex::span(&src, &dst) {
            for n in lo..=hi {
                comps.insert(n, Matrix::block_diag(&self.comp(n), &other.comp(n))?);
            }
        }
        Self::new(&src, &dst, comps)
    }

    /// `cone(f)ⁿ = srcⁿ⁺¹ ⊕ dstⁿ` with differential `[[−d_src, 0], [f, d_dst]]`.
    pub fn cone(&self) -> Result<FreeComplex> {
        let ring = self.ring().clone();
        let (x, y) = (&self.src, &self.dst);
        let Some((lo, hi)) = FreeComplex::span(&x.shift(1), y) else {
            return Ok(FreeComplex::zero(&ring));
        };
        let ranks = (lo..=hi).map(|n| x.rank(n + 1) + y.rank(n)).collect();
        let mut diffs = Vec::new();
        for n in lo..hi {
            let d = Matrix::blocks(
                &x.diff(n + 1).neg(),
                &Matrix::zeros(&ring, x.rank(n + 2), y.rank(n)),
                &self.comp(n + 1),
                &y.diff(n),
            )?;
            diffs.push(d);
        }
        FreeComplex::new(&ring, lo, ranks, diffs)
    }

    /// The inclusion `dst → cone(f)`.
    pub fn cone_inclusion(&self) -> Result<ChainMap> {
        let c = self.cone()?;
        let ring = self.ring().clone();
        let mut comps = BTreeMap::new();
        for n in self.dst.degrees() {
            let top = Matrix::zeros(&ring, self.src.rank(n + 1), self.dst.rank(n));
            comps.insert(n, top.vstack(&Matrix::identity(&ring, self.dst.rank(n)))?);
        }
        ChainMap::new(&self.dst, &c, comps)
    }

    /// The projection `cone(f) → Σ src`.
    pub fn cone_projection(&self) -> Result<ChainMap> {
        let c = self.cone()?;
        let ring = self.ring().clone();
        let sx = self.src.shift(1);
        let mut comps = BTreeMap::new();
        for n in sx.degrees() {
            let left = Matrix::identity(&ring, self.src.rank(n + 1));
            comps.insert(n, left.hstack(&Matrix::zeros(&ring, self.src.rank(n + 1), self.dst.rank(n)))?);
        }
        ChainMap::new(&c, &sx, comps)
    }

    /// Quasi-isomorphism test: the cone is exact (Tier-1 rings).
    pub fn is_quasi_iso(&self) -> Result<bool> {
        self.ring().require_tier1()?;
        self.cone()?.is_exact()
    }

    /// True iff `inv` is a two-sided inverse.
    pub fn is_inverse(&self, inv: &ChainMap) -> Result<bool> {
        if inv.src != self.dst || inv.dst != self.src {
            return Ok(false);
        }
        let a = inv.compose(self)?;
        let b = self.compose(inv)?;
        Ok(a == ChainMap::identity(&self.src) && b == ChainMap::identity(&self.dst))
    }
}

impl fmt::Display for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|(n, m)| format!("c({n}) = {}", m.to_literal())).collect();
        write!(f, "{{ {} }}", parts.join(" ; "))
    }
}
