//! Build witnesses: explicit constructions of a complex from shifted copies
//! of a generator by sums, cones and direct summands.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{ChainMap, FreeComplex};
use crate::matrix::Matrix;
use crate::ring::RingElem;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessNode {
    /// `Σ^shift G`; `copy` labels the copy and does not affect the realization.
    Leaf { shift: i64, copy: usize },
    Sum(Vec<WitnessNode>),
    /// `cone(map : left → right)` with `map` given degreewise on the realized children.
    Cone { left: Box<WitnessNode>, right: Box<WitnessNode>, map: BTreeMap<i64, Matrix> },
    /// Realizes `target`, given `iso : child ≅ target ⊕ complement` and its inverse.
    Summand {
        child: Box<WitnessNode>,
        target: FreeComplex,
        complement: FreeComplex,
        iso: BTreeMap<i64, Matrix>,
        inverse: BTreeMap<i64, Matrix>,
    },
}

impl WitnessNode {
    /// Level: leaves 1, sums the maximum, summands that of the child, cones the sum of both sides.
    pub fn level(&self) -> usize {
        match self {
            WitnessNode::Leaf { .. } => 1,
            WitnessNode::Sum(cs) => cs.iter().map(WitnessNode::level).max().unwrap_or(0),
            WitnessNode::Cone { left, right, .. } => left.level() + right.level(),
            WitnessNode::Summand { child, .. } => child.level(),
        }
    }

    pub fn cone_count(&self) -> usize {
        match self {
            WitnessNode::Leaf { .. } => 0,
            WitnessNode::Sum(cs) => cs.iter().map(WitnessNode::cone_count).sum(),
            WitnessNode::Cone { left, right, .. } => 1 + left.cone_count() + right.cone_count(),
            WitnessNode::Summand { child, .. } => child.cone_count(),
        }
    }

    /// The complex this node denotes, checking every node on the way.
    pub fn realize(&self, g: &FreeComplex, path: &str) -> Result<FreeComplex> {
        let fail = |reason: String| Error::Witness { path: path.to_string(), reason };
        match self {
            WitnessNode::Leaf { shift, .. } => Ok(g.shift(*shift)),
            WitnessNode::Sum(cs) => {
                let mut acc = FreeComplex::zero(g.ring());
                for (i, c) in cs.iter().enumerate() {
                    let r = c.realize(g, &format!("{path}.sum[{i}]"))?;
                    acc = acc.direct_sum(&r).map_err(|e| fail(e.to_string()))?;
                }
                Ok(acc)
            }
            WitnessNode::Cone { left, right, map } => {
                let l = left.realize(g, &format!("{path}.left"))?;
                let r = right.realize(g, &format!("{path}.right"))?;
                let f = ChainMap::new(&l, &r, map.clone()).map_err(|e| fail(format!("cone map: {e}")))?;
                f.cone().map_err(|e| fail(e.to_string()))
            }
            WitnessNode::Summand { child, target, complement, iso, inverse } => {
                let c = child.realize(g, &format!("{path}.child"))?;
                let s = target.direct_sum(complement).map_err(|e| fail(e.to_string()))?;
                let phi = ChainMap::new(&c, &s, iso.clone()).map_err(|e| fail(format!("isomorphism: {e}")))?;
                let psi = ChainMap::new(&s, &c, inverse.clone()).map_err(|e| fail(format!("inverse: {e}")))?;
                if !phi.is_inverse(&psi).map_err(|e| fail(e.to_string()))? {
                    return Err(fail("the given maps are not mutually inverse".into()));
                }
                Ok(target.clone())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildWitness {
    pub root: WitnessNode,
    /// Degreewise components of a quasi-isomorphism from the realized root to the target.
    pub comparison: BTreeMap<i64, Matrix>,
    /// Recorded level; must match the recomputed one.
    pub level: usize,
}

impl BuildWitness {
    pub fn new(root: WitnessNode, comparison: BTreeMap<i64, Matrix>) -> Self {
        let level = root.level();
        Self { root, comparison, level }
    }

    pub fn cones(&self) -> usize {
        self.level.saturating_sub(1)
    }
}

/// Checks every node, realizes the root, and verifies the comparison map is
/// a quasi-isomorphism onto `x`. Returns the recomputed level.
pub fn validate_witness(w: &BuildWitness, x: &FreeComplex, g: &FreeComplex) -> Result<usize> {
    g.ring().require_tier1()?;
    let fail = |path: &str, reason: String| Error::Witness { path: path.to_string(), reason };
    let level = w.root.level();
    if level != w.level {
        return Err(fail("root", format!("recorded level {} but the tree has level {level}", w.level)));
    }
    let realized = w.root.realize(g, "root")?;
    let phi = ChainMap::new(&realized, x, w.comparison.clone()).map_err(|e| fail("comparison", e.to_string()))?;
    if !phi.is_quasi_iso()? {
        return Err(fail("comparison", "not a quasi-isomorphism".into()));
    }
    Ok(level)
}

/// Builds `K(xⁿ)` from `G = K(x)` by `n − 1` cones along the triangles
/// `Σ⁻¹K(x) → K(xⁿ⁻¹) → K(xⁿ) → K(x)`.
pub fn principal_power_witness(x: &RingElem, n: usize) -> Result<BuildWitness> {
    if n == 0 {
        return Err(Error::Precondition("the power must be positive".into()));
    }
    let ring = x.ring().clone();
    ring.require_tier1()?;
    let (one, zero) = (ring.one(), ring.zero());
    let mut node = WitnessNode::Leaf { shift: 0, copy: 0 };
    // comparison to K(x^k) in degrees 0 and −1, as row vectors
    let mut psi0 = Matrix::from_rows(&ring, vec![vec![one.clone()]], 1)?;
    let mut psi1 = Matrix::from_rows(&ring, vec![vec![one.clone()]], 1)?;
    for k in 2..=n {
        let width = psi0.cols();
        // v ∈ C⁰ with ψ⁰ v = 1
        let mut v = Matrix::zeros(&ring, width, 1);
        if k == 2 {
            v.set(0, 0, one.clone());
        } else {
            v.set(0, 0, -&one);
        }
        let map = BTreeMap::from([(0, v)]);
        node = WitnessNode::Cone {
            left: Box::new(WitnessNode::Leaf { shift: -1, copy: k - 1 }),
            right: Box::new(node),
            map,
        };
        let head0 = Matrix::from_rows(&ring, vec![vec![-&one]], 1)?;
        let head1 = Matrix::from_rows(&ring, vec![vec![zero.clone()]], 1)?;
        psi0 = head0.hstack(&psi0.scale(x))?;
        psi1 = head1.hstack(&psi1)?;
    }
    let comparison = BTreeMap::from([(0, psi0), (-1, psi1)]);
    Ok(BuildWitness::new(node, comparison))
}

impl fmt::Display for WitnessNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessNode::Leaf { shift: 0, .. } => f.write_str("G"),
            WitnessNode::Leaf { shift, .. } => write!(f, "S^{shift} G"),
            WitnessNode::Sum(cs) => {
                let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "sum({})", parts.join(", "))
            }
            WitnessNode::Cone { left, right, .. } => write!(f, "cone({left} -> {right})"),
            WitnessNode::Summand { child, .. } => write!(f, "summand({child})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::koszul_on;
    use crate::ring::{Field, Ring};

    #[test]
    fn powers_of_two() {
        let z = Ring::integers();
        let two = z.from_int(2);
        let g = FreeComplex::two_term(&two);
        for n in 1..=5 {
            let w = principal_power_witness(&two, n).unwrap();
            let x = FreeComplex::two_term(&two.pow(n as u64));
            assert_eq!(validate_witness(&w, &x, &g).unwrap(), n);
            assert_eq!(w.cones(), n - 1);
        }
    }

    #[test]
    fn powers_of_x() {
        let r = Ring::unipoly(Field::Rational, "x").unwrap();
        let x = r.parse_elem("x").unwrap();
        let g = koszul_on(&r, std::slice::from_ref(&x)).unwrap();
        let w = principal_power_witness(&x, 4).unwrap();
        assert_eq!(validate_witness(&w, &FreeComplex::two_term(&x.pow(4)), &g).unwrap(), 4);
    }

    #[test]
    fn bad_cone_map_reports_path() {
        let z = Ring::integers();
        let g = FreeComplex::two_term(&z.from_int(2));
        // c(0) = 1 does not commute with the differential 2 in degree −1
        let root = WitnessNode::Cone {
            left: Box::new(WitnessNode::Leaf { shift: 0, copy: 0 }),
            right: Box::new(WitnessNode::Leaf { shift: 0, copy: 1 }),
            map: BTreeMap::from([(0, Matrix::from_i64(&z, &[&[1]]))]),
        };
        let bad = BuildWitness::new(root, BTreeMap::new());
        match validate_witness(&bad, &g, &g) {
            Err(Error::Witness { path, .. }) => assert_eq!(path, "root"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn summand_and_sum_have_level_one() {
        let z = Ring::integers();
        let g = FreeComplex::two_term(&z.from_int(3));
        let sum = WitnessNode::Sum(vec![WitnessNode::Leaf { shift: 0, copy: 0 }, WitnessNode::Leaf { shift: 1, copy: 1 }]);
        let gg = g.direct_sum(&g.shift(1)).unwrap();
        let id = ChainMap::identity(&gg);
        let node = WitnessNode::Summand {
            child: Box::new(sum),
            target: g.clone(),
            complement: g.shift(1),
            iso: id.comps().clone(),
            inverse: id.comps().clone(),
        };
        let w = BuildWitness::new(node, ChainMap::identity(&g).comps().clone());
        assert_eq!(validate_witness(&w, &g, &g).unwrap(), 1);
    }
}
