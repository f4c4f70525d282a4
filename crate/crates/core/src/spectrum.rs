//! Prime spectra of the supported rings: idempotents, connectedness, closed
//! sets and the nilpotence dichotomy for stabilizing chains of powers.

use std::fmt;

use num_bigint::BigInt;

use crate::homology::SupportSet;
use crate::ideal::Ideal;
use crate::ring::factor::{factor_integer, factor_poly};
use crate::ring::{Ring, RingElem, RingKind};
use crate::{Error, Result};

/// Idempotents beyond `2^MAX_COMPONENTS` are not enumerated.
const MAX_COMPONENTS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotents {
    pub elements: Vec<RingElem>,
    /// Set for multivariate polynomial rings, where `{0, 1}` follows from being a domain.
    pub assumed_domain: bool,
}

/// Pairwise coprime prime-power pieces of the modulus, in the cover, plus
/// whether each piece is known to be a power of an irreducible.
struct Pieces {
    /// `(prime, prime^e)` pairs.
    pieces: Vec<(RingElem, RingElem)>,
    certified: bool,
}

fn modulus_pieces(ring: &Ring) -> Result<Option<Pieces>> {
    let cover = ring.cover();
    match ring.kind() {
        RingKind::IntMod(m) => {
            let fs = factor_integer(m)?;
            let pieces = fs
                .into_iter()
                .map(|(p, e)| (cover.from_bigint(&p), cover.from_bigint(&num_traits::pow(p, e as usize))))
                .collect();
            Ok(Some(Pieces { pieces, certified: true }))
        }
        RingKind::UniQuot { coeff, modulus, .. } => {
            let f = factor_poly(modulus, coeff)?;
            let pieces = f
                .factors
                .into_iter()
                .map(|(g, e)| {
                    let q = g.pow(u64::from(e), coeff);
                    (cover.from_unipoly(g).expect("cover"), cover.from_unipoly(q).expect("cover"))
                })
                .collect();
            Ok(Some(Pieces { pieces, certified: f.complete }))
        }
        _ => Ok(None),
    }
}

/// `e ↦ 3e² − 2e³` in the quotient until fixed.
fn lift_idempotent(ring: &Ring, e: RingElem) -> Result<RingElem> {
    let (three, two) = (ring.from_int(3), ring.from_int(2));
    let mut e = e;
    for _ in 0..256 {
        let e2 = &e * &e;
        let next = &(&three * &e2) - &(&two * &(&e2 * &e));
        if next == e {
            return Ok(e);
        }
        e = next;
    }
    Err(Error::Invariant("idempotent lifting did not converge".into()))
}

fn idempotents_from_pieces(ring: &Ring, pieces: &[(RingElem, RingElem)]) -> Result<Vec<RingElem>> {
    let k = pieces.len();
    if k > MAX_COMPONENTS {
        return Err(Error::Unsupported(format!("{k} connected components is too many to enumerate")));
    }
    let cover = ring.cover();
    // CRT basis modulo the radical, then lift to the full modulus
    let rad = pieces.iter().fold(cover.one(), |acc, (p, _)| &acc * p);
    let mut basis = Vec::with_capacity(k);
    for (p, _) in pieces {
        let cofactor = rad.exact_div(p)?;
        let (g, s, _) = cofactor.ext_gcd(p)?;
        if !g.is_one() {
            return Err(Error::Invariant("modulus pieces are not coprime".into()));
        }
        let e0 = (&cofactor * &s).div_rem(&rad)?.1;
        basis.push(e0);
    }
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u64..(1u64 << k) {
        let mut e = cover.zero();
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                e = &e + b;
            }
        }
        let e = lift_idempotent(ring, ring.reduce(&e.div_rem(&rad)?.1))?;
        out.push(e);
    }
    out.sort_by(|a, b| {
        let (la, lb) = (ring.lift(a), ring.lift(b));
        la.norm().cmp(&lb.norm()).then_with(|| match (la.as_bigint(), lb.as_bigint()) {
            (Some(x), Some(y)) => x.cmp(y),
            _ => a.to_string().cmp(&b.to_string()),
        })
    });
    out.dedup();
    Ok(out)
}

/// All idempotents of `R`.
pub fn idempotents(ring: &Ring) -> Result<Idempotents> {
    match ring.kind() {
        RingKind::MultiPoly { .. } => Ok(Idempotents { elements: vec![ring.zero(), ring.one()], assumed_domain: true }),
        RingKind::IntMod(m) if *m == BigInt::from(1) => Ok(Idempotents { elements: vec![ring.zero()], assumed_domain: false }),
        _ => match modulus_pieces(ring)? {
            None => Ok(Idempotents { elements: vec![ring.zero(), ring.one()], assumed_domain: false }),
            Some(p) => {
                if !p.certified {
                    return Err(Error::UnknownConnectivity(format!(
                        "{ring}: the modulus has a factor that could not be split"
                    )));
                }
                Ok(Idempotents { elements: idempotents_from_pieces(ring, &p.pieces)?, assumed_domain: false })
            }
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Connectivity {
    Connected,
    /// A nontrivial idempotent.
    Disconnected(RingElem),
    /// The modulus could not be factored far enough to decide.
    Unknown(String),
}

impl Connectivity {
    pub fn is_connected(&self) -> bool {
        matches!(self, Connectivity::Connected)
    }
}

/// Connectedness of `Spec R`, with a nontrivial idempotent when disconnected.
pub fn is_connected_spec(ring: &Ring) -> Result<Connectivity> {
    let Some(p) = modulus_pieces(ring)? else {
        return Ok(Connectivity::Connected);
    };
    match p.pieces.len() {
        0 | 1 if p.certified => Ok(Connectivity::Connected),
        0 | 1 => Ok(Connectivity::Unknown(format!("{ring}: the modulus has a factor that could not be split"))),
        _ => {
            // the CRT idempotent of the first piece is nontrivial whether or not the rest split further
            let cover = ring.cover();
            let rad = p.pieces.iter().fold(cover.one(), |acc, (q, _)| &acc * q);
            let first = &p.pieces[0].0;
            let cofactor = rad.exact_div(first)?;
            let (_, s, _) = cofactor.ext_gcd(first)?;
            let e0 = (&cofactor * &s).div_rem(&rad)?.1;
            let e = lift_idempotent(ring, ring.reduce(&e0))?;
            let other = &ring.one() - &e;
            let smaller = if ring.lift(&other).norm() < ring.lift(&e).norm()
                || (ring.lift(&other).norm() == ring.lift(&e).norm() && other.to_string() < e.to_string())
            {
                other
            } else {
                e
            };
            Ok(Connectivity::Disconnected(smaller))
        }
    }
}

/// `V(I)` as a one-component support set.
pub fn closed_set(i: &Ideal) -> Result<SupportSet> {
    SupportSet::new(i.ring(), vec![i.clone()])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecShape {
    /// Finitely many primes, given as normalized covering-ring generators;
    /// `certified` is false when a factor could not be proved irreducible.
    FinitePrimes { primes: Vec<RingElem>, certified: bool },
    /// ℤ, a field, or k[x]: the generic point and the closed points `(p)`.
    EuclideanDomain,
    /// A polynomial ring in several variables over a field, a domain.
    DomainConnected,
}

#[derive(Clone, Debug)]
pub struct SpecDescription {
    pub ring: Ring,
    pub shape: SpecShape,
}

pub fn describe_spec(ring: &Ring) -> Result<SpecDescription> {
    let shape = match ring.kind() {
        RingKind::MultiPoly { .. } => SpecShape::DomainConnected,
        _ => match modulus_pieces(ring)? {
            Some(p) => SpecShape::FinitePrimes { primes: p.pieces.into_iter().map(|(q, _)| q).collect(), certified: p.certified },
            None => SpecShape::EuclideanDomain,
        },
    };
    Ok(SpecDescription { ring: ring.clone(), shape })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilpotenceOutcome {
    /// The chain stabilized at `n`, Spec is connected, and `Iⁿ = 0`.
    Nilpotent { n: usize },
    /// Spec is disconnected, so the lemma does not apply; records whether `Iⁿ ≠ 0`.
    NegativeControl { n: usize, idempotent: RingElem, power_nonzero: bool },
    /// Connectivity could not be decided.
    UnknownConnectivity { n: usize, power_nonzero: bool },
    /// No stabilization up to `max_n`.
    StrictlyDescending { max_n: usize },
}

#[derive(Clone, Debug)]
pub struct NilpotenceReport {
    pub ideal: Ideal,
    pub outcome: NilpotenceOutcome,
}

/// Runs the stabilization test and checks the nilpotence conclusion on connected spectra.
pub fn nilpotence_lemma_check(ring: &Ring, i: &Ideal, max_n: usize) -> Result<NilpotenceReport> {
    if i.ring() != ring {
        return Err(Error::RingMismatch(i.ring().to_string(), ring.to_string()));
    }
    if i.is_unit() {
        return Err(Error::Precondition("the ideal must be proper".into()));
    }
    let outcome = match i.powers_stabilize(max_n)? {
        None => NilpotenceOutcome::StrictlyDescending { max_n },
        Some(n) => {
            let power_nonzero = !i.pow(n as u32)?.is_zero();
            match is_connected_spec(ring)? {
                Connectivity::Connected => {
                    if power_nonzero {
                        return Err(Error::Invariant(format!(
                            "powers of {i} stabilize at n = {n} on a connected spectrum but are nonzero"
                        )));
                    }
                    NilpotenceOutcome::Nilpotent { n }
                }
                Connectivity::Disconnected(e) => NilpotenceOutcome::NegativeControl { n, idempotent: e, power_nonzero },
                Connectivity::Unknown(_) => NilpotenceOutcome::UnknownConnectivity { n, power_nonzero },
            }
        }
    };
    Ok(NilpotenceReport { ideal: i.clone(), outcome })
}

impl fmt::Display for SpecShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecShape::FinitePrimes { primes, .. } => {
                let ps: Vec<String> = primes.iter().map(|p| format!("({p})")).collect();
                write!(f, "finite: {{{}}}", ps.join(", "))
            }
            SpecShape::EuclideanDomain => f.write_str("euclidean-domain"),
            SpecShape::DomainConnected => f.write_str("polynomial-domain"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, MonomialOrder, UniPoly};

    fn ints(r: &Ring, xs: &[i64]) -> Vec<RingElem> {
        xs.iter().map(|&x| r.from_int(x)).collect()
    }

    #[test]
    fn idempotents_mod_m() {
        let r6 = Ring::int_mod(6).unwrap();
        assert_eq!(idempotents(&r6).unwrap().elements, ints(&r6, &[0, 1, 3, 4]));
        let r4 = Ring::int_mod(4).unwrap();
        assert_eq!(idempotents(&r4).unwrap().elements, ints(&r4, &[0, 1]));
        assert_eq!(idempotents(&Ring::integers()).unwrap().elements, ints(&Ring::integers(), &[0, 1]));
        let r360 = Ring::int_mod(360).unwrap();
        let es = idempotents(&r360).unwrap().elements;
        assert_eq!(es.len(), 8);
        for e in &es {
            assert_eq!(&(e * e), e);
        }
    }

    #[test]
    fn connectivity() {
        assert!(is_connected_spec(&Ring::int_mod(9).unwrap()).unwrap().is_connected());
        let r6 = Ring::int_mod(6).unwrap();
        assert_eq!(is_connected_spec(&r6).unwrap(), Connectivity::Disconnected(r6.from_int(3)));
        let r = Ring::multipoly(Field::Rational, &["x", "y"], MonomialOrder::Grevlex).unwrap();
        assert!(is_connected_spec(&r).unwrap().is_connected());
    }

    #[test]
    fn polynomial_quotient_idempotents() {
        let f = Field::Prime(3);
        // x^2 (x - 1)^2 over F3: lifting needed
        let m = UniPoly::from_i64s(&f, &[0, 0, 1]).mul(&UniPoly::from_i64s(&f, &[1, -2, 1]), &f);
        let r = Ring::uniquot(f, "x", m).unwrap();
        let es = idempotents(&r).unwrap().elements;
        assert_eq!(es.len(), 4);
        for e in &es {
            assert_eq!(&(e * e), e);
        }
    }

    #[test]
    fn closed_sets() {
        let z = Ring::integers();
        let s = closed_set(&Ideal::principal(&z.from_int(6)).unwrap()).unwrap();
        assert_eq!(s.render(), "{(2), (3)}");
        assert!(closed_set(&Ideal::unit(&z)).unwrap().is_empty().unwrap());
        assert!(closed_set(&Ideal::zero(&z)).unwrap().primes().is_none());
    }

    #[test]
    fn nilpotence_reports() {
        let r8 = Ring::int_mod(8).unwrap();
        let rep = nilpotence_lemma_check(&r8, &Ideal::principal(&r8.from_int(2)).unwrap(), 10).unwrap();
        assert_eq!(rep.outcome, NilpotenceOutcome::Nilpotent { n: 3 });
        let r6 = Ring::int_mod(6).unwrap();
        let rep = nilpotence_lemma_check(&r6, &Ideal::principal(&r6.from_int(2)).unwrap(), 10).unwrap();
        assert!(matches!(rep.outcome, NilpotenceOutcome::NegativeControl { power_nonzero: true, .. }));
        let z = Ring::integers();
        let rep = nilpotence_lemma_check(&z, &Ideal::principal(&z.from_int(2)).unwrap(), 10).unwrap();
        assert_eq!(rep.outcome, NilpotenceOutcome::StrictlyDescending { max_n: 10 });
    }
}
