//! Homology of complexes over Euclidean rings and their quotients, via Smith
//! normal form, together with annihilators and homological supports.

use std::fmt;

use crate::complex::FreeComplex;
use crate::ideal::Ideal;
use crate::matrix::Matrix;
use crate::ring::factor::{factor_integer, factor_unipoly};
use crate::ring::{Ring, RingElem, RingKind, Tier};
use crate::snf::{kernel_lattice, smith_normal_form, solve};
use crate::{Error, Result};

/// `R^free_rank ⊕ ⨁ R/(dᵢ)` with `d₁ | d₂ | ⋯` non-units of the covering ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPModule {
    ring: Ring,
    free_rank: usize,
    invariant_factors: Vec<RingElem>,
}

impl FPModule {
    /// Normalizes the given cyclic factors (covering-ring elements) into invariant-factor form.
    pub fn from_cyclic(ring: &Ring, free_rank: usize, factors: &[RingElem]) -> Result<Self> {
        ring.require_tier1()?;
        let cover = ring.cover();
        let m = ring.modulus();
        let mut free = free_rank;
        let mut diag: Vec<RingElem> = Vec::new();
        for f in factors {
            let mut f = f.normalized();
            if let Some(m) = &m {
                f = f.gcd(m)?;
            }
            diag.push(f);
        }
        // Invariant factors of a diagonal matrix
        let n = diag.len();
        let mut d = Matrix::zeros(&cover, n, n);
        for (i, f) in diag.into_iter().enumerate() {
            d.set(i, i, f);
        }
        let s = smith_normal_form(&d)?;
        let mut invariant = Vec::new();
        for i in 0..n {
            let f = s.d.get(i, i).clone();
            let as_free = match &m {
                Some(m) => f.normalized() == m.normalized() || f.is_zero(),
                None => f.is_zero(),
            };
            if as_free {
                free += 1;
            } else if !f.is_unit() {
                invariant.push(f);
            }
        }
        Ok(Self { ring: ring.clone(), free_rank: free, invariant_factors: invariant })
    }

    pub fn zero(ring: &Ring) -> Self {
        Self { ring: ring.clone(), free_rank: 0, invariant_factors: Vec::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors as normalized covering-ring elements.
    pub fn invariant_factors(&self) -> &[RingElem] {
        &self.invariant_factors
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule> {
        let mut f = self.invariant_factors.clone();
        f.extend(other.invariant_factors.iter().cloned());
        Self::from_cyclic(&self.ring, self.free_rank + other.free_rank, &f)
    }

    /// Dimension over a field (free rank, since fields have no torsion).
    pub fn rank(&self) -> usize {
        self.free_rank
    }

    /// Renders like `Z^2 + Z/(2) + Z/(4)`, or `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let r = self.ring.to_string();
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(r.clone()),
            k => parts.push(format!("{r}^{k}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("{r}/({d})"));
        }
        parts.join(" + ")
    }
}

impl fmt::Display for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `Hⁿ(X) = ker dⁿ / im dⁿ⁻¹`.
pub fn homology(x: &FreeComplex, n: i64) -> Result<FPModule> {
    let ring = x.ring().clone();
    ring.require_tier1()?;
    let rn = x.rank(n);
    if rn == 0 {
        return Ok(FPModule::zero(&ring));
    }
    let cover = ring.cover();
    // lattice basis of cycles, independent in the cover
    let k = kernel_lattice(&x.diff(n))?;
    // boundaries plus modulus relations
    let mut im = x.diff(n - 1).lift();
    if let Some(m) = ring.modulus() {
        im = im.hstack(&Matrix::scalar(&cover, rn, &m))?;
    }
    let coords = if im.cols() == 0 {
        Matrix::zeros(&cover, k.cols(), 0)
    } else {
        solve(&k, &im)?.ok_or_else(|| Error::Invariant(format!("boundaries in degree {n} are not cycles")))?
    };
    let s = smith_normal_form(&coords)?;
    let free = k.cols() - s.rank;
    FPModule::from_cyclic(&ring, free, &s.diagonal())
}

/// `ann M`: `(0)` if `M` has a free summand, `(1)` if `M = 0`, else the last invariant factor.
pub fn ann_module(m: &FPModule) -> Ideal {
    let ring = m.ring();
    if m.free_rank > 0 {
        Ideal::zero(ring)
    } else if let Some(d) = m.invariant_factors.last() {
        Ideal::principal(&ring.reduce(d)).expect("same ring")
    } else {
        Ideal::unit(ring)
    }
}

/// `ann H*(X) = ⋂ₙ ann Hⁿ(X)`, an lcm of principal generators.
pub fn ann_total_homology(x: &FreeComplex) -> Result<Ideal> {
    let ring = x.ring().clone();
    ring.require_tier1()?;
    let mut l = ring.cover().one();
    for n in x.degrees() {
        let a = ann_module(&homology(x, n)?);
        l = l.lcm(a.generator().expect("principal"))?;
    }
    Ideal::principal(&ring.reduce(&l))
}

/// A finite union of closed sets `⋃ V(Iⱼ)`.
#[derive(Clone, Debug)]
pub struct SupportSet {
    ring: Ring,
    components: Vec<Ideal>,
    /// The points, when the set is finite and resolvable: normalized prime
    /// generators in the covering ring (`0` for the zero ideal of a field).
    primes: Option<Vec<RingElem>>,
}

/// Normalized primes of the covering ring dividing `g` (nonzero).
fn prime_divisors(g: &RingElem) -> Result<Option<Vec<RingElem>>> {
    let cover = g.ring().clone();
    match cover.kind() {
        RingKind::Int => {
            let fs = factor_integer(g.as_bigint().expect("integer"))?;
            Ok(Some(fs.into_iter().map(|(p, _)| cover.from_bigint(&p)).collect()))
        }
        RingKind::UniPoly { .. } => {
            let f = factor_unipoly(g)?;
            if !f.complete {
                return Ok(None);
            }
            let mut ps: Vec<RingElem> =
                f.factors.into_iter().map(|(p, _)| cover.from_unipoly(p).expect("same ring")).collect();
            ps.dedup();
            Ok(Some(ps))
        }
        _ => Ok(Some(Vec::new())),
    }
}

impl SupportSet {
    pub fn new(ring: &Ring, components: Vec<Ideal>) -> Result<Self> {
        for c in &components {
            if c.ring() != ring {
                return Err(Error::RingMismatch(c.ring().to_string(), ring.to_string()));
            }
        }
        let primes = if ring.tier() == Tier::Euclidean { Self::resolve(ring, &components)? } else { None };
        Ok(Self { ring: ring.clone(), components, primes })
    }

    pub fn empty(ring: &Ring) -> Self {
        Self { ring: ring.clone(), components: Vec::new(), primes: Some(Vec::new()) }
    }

    fn resolve(ring: &Ring, components: &[Ideal]) -> Result<Option<Vec<RingElem>>> {
        let mut all: Vec<RingElem> = Vec::new();
        for c in components {
            let g = c.generator().expect("principal").clone();
            let ps = if g.is_zero() {
                if ring.is_field() {
                    vec![g.clone()]
                } else {
                    return Ok(None);
                }
            } else if g.is_unit() {
                Vec::new()
            } else {
                match prime_divisors(&g) {
                    Ok(Some(ps)) => ps,
                    Ok(None) | Err(Error::FactorBound(..)) => return Ok(None),
                    Err(e) => return Err(e),
                }
            };
            for p in ps {
                if !all.contains(&p) {
                    all.push(p);
                }
            }
        }
        all.sort_by(|a, b| a.norm().cmp(&b.norm()).then_with(|| a.to_string().cmp(&b.to_string())));
        Ok(Some(all))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn components(&self) -> &[Ideal] {
        &self.components
    }

    pub fn primes(&self) -> Option<&[RingElem]> {
        self.primes.as_deref()
    }

    pub fn is_empty(&self) -> Result<bool> {
        if let Some(p) = &self.primes {
            return Ok(p.is_empty());
        }
        Ok(self.components.iter().all(Ideal::is_unit))
    }

    /// Renders the point set `{(2), (3)}` when resolved, else `V(..) ∪ V(..)`.
    pub fn render(&self) -> String {
        match &self.primes {
            Some(ps) => {
                let items: Vec<String> = ps.iter().map(|p| format!("({p})")).collect();
                format!("{{{}}}", items.join(", "))
            }
            None if self.components.is_empty() => "{}".into(),
            None => self.components.iter().map(|c| format!("V{c}")).collect::<Vec<_>>().join(" ∪ "),
        }
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `supph X = ⋃ₙ V(ann Hⁿ(X))` over degrees with nonzero homology.
pub fn supph(x: &FreeComplex) -> Result<SupportSet> {
    let ring = x.ring().clone();
    ring.require_tier1()?;
    let mut comps = Vec::new();
    for n in x.degrees() {
        let h = homology(x, n)?;
        if !h.is_zero() {
            comps.push(ann_module(&h));
        }
    }
    SupportSet::new(&ring, comps)
}

/// `T ⊆ S` as sets of primes.
pub fn support_contains(s: &SupportSet, t: &SupportSet) -> Result<bool> {
    if s.ring != t.ring {
        return Err(Error::RingMismatch(s.ring.to_string(), t.ring.to_string()));
    }
    if let (Some(ps), Some(pt)) = (&s.primes, &t.primes) {
        return Ok(pt.iter().all(|p| ps.contains(p)));
    }
    let ring = &s.ring;
    match ring.tier() {
        Tier::Euclidean => {
            // V(J) ⊆ ⋃ V(Iⱼ) = V(∏ Iⱼ)  iff  ∏ Iⱼ ⊆ √J
            let mut prod = Ideal::unit(ring);
            for c in &s.components {
                prod = prod.product(c)?;
            }
            let g = ring.reduce(prod.generator().expect("principal"));
            for j in &t.components {
                if !j.radical_member(&g)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Tier::Multivariate => {
            let gens = match s.components.as_slice() {
                [] => vec![ring.one()],
                [i] => i.normal_gens(),
                _ => {
                    return Err(Error::Unsupported(
                        "containment in a union of several closed sets over a multivariate ring".into(),
                    ))
                }
            };
            for j in &t.components {
                for g in &gens {
                    if !j.radical_member(g)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
    }
}
