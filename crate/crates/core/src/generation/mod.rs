//! Generation levels: certified lower bounds from annihilator growth, build
//! witnesses as upper bounds, thick-subcategory membership through supports,
//! and the strong-generation obstruction report.

pub mod witness;

use std::fmt;

use rayon::prelude::*;

use crate::complex::{koszul, FreeComplex};
use crate::homology::{ann_total_homology, support_contains, supph, SupportSet};
use crate::ideal::Ideal;
use crate::ring::{Ring, RingElem, RingKind, Tier};
use crate::spectrum::{closed_set, is_connected_spec, nilpotence_lemma_check, Connectivity, NilpotenceOutcome};
use crate::{Error, Result};

pub use witness::{principal_power_witness, validate_witness, BuildWitness, WitnessNode};

/// Safety cap on the search for the least containing power.
const MAX_LEVEL_SEARCH: usize = 4096;

#[derive(Clone, Debug)]
pub enum LevelCertificate {
    /// `ann_g^level ⊆ ann_x` while `evidence ∈ ann_g^(level−1)` is not in `ann_x`.
    LowerBound { level: usize, ann_g: Ideal, ann_x: Ideal, evidence: RingElem },
    /// A validated construction.
    UpperBound { level: usize, witness: BuildWitness },
    /// `supph X ⊄ supph G`: no finite level exists.
    NotInThick { support_x: SupportSet, support_g: SupportSet },
}

impl LevelCertificate {
    pub fn level(&self) -> Option<usize> {
        match self {
            LevelCertificate::LowerBound { level, .. } | LevelCertificate::UpperBound { level, .. } => Some(*level),
            LevelCertificate::NotInThick { .. } => None,
        }
    }

    /// Number of cones, `level − 1`.
    pub fn cones(&self) -> Option<usize> {
        self.level().map(|l| l.saturating_sub(1))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            LevelCertificate::LowerBound { .. } => "lower-bound",
            LevelCertificate::UpperBound { .. } => "upper-bound",
            LevelCertificate::NotInThick { .. } => "not-in-thick",
        }
    }
}

impl fmt::Display for LevelCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelCertificate::LowerBound { level, evidence, .. } => {
                write!(f, "level >= {level} ({} cones), evidence {evidence}", level.saturating_sub(1))
            }
            LevelCertificate::UpperBound { level, .. } => write!(f, "level <= {level}"),
            LevelCertificate::NotInThick { support_x, support_g } => {
                write!(f, "not in thick: support {support_x} not inside {support_g}")
            }
        }
    }
}

/// A generator of `I` that is not in `J`, if any.
fn generator_outside(i: &Ideal, j: &Ideal) -> Result<Option<RingElem>> {
    for g in i.normal_gens() {
        if !j.member(&g)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Least `k` with `ann H*(G)ᵏ ⊆ ann H*(X)`; a lower bound on the level of `X` in `⟨G⟩`.
pub fn level_lower_bound(x: &FreeComplex, g: &FreeComplex) -> Result<LevelCertificate> {
    let ring = g.ring().clone();
    ring.require_tier1()?;
    let ann_g = ann_total_homology(g)?;
    let ann_x = ann_total_homology(x)?;
    if ann_g.is_unit() {
        return Err(Error::Precondition("the generator has zero homology".into()));
    }
    if ann_x.is_unit() {
        return Err(Error::Precondition("the complex has zero homology".into()));
    }
    let support_g = supph(g)?;
    let support_x = supph(x)?;
    if !support_contains(&support_g, &support_x)? {
        return Ok(LevelCertificate::NotInThick { support_x, support_g });
    }
    let mut prev = Ideal::unit(&ring);
    let mut power = ann_g.clone();
    for k in 1..=MAX_LEVEL_SEARCH {
        if ann_x.contains(&power)? {
            let evidence = generator_outside(&prev, &ann_x)?
                .ok_or_else(|| Error::Invariant(format!("ann(G)^{} already lies in ann(X)", k - 1)))?;
            return Ok(LevelCertificate::LowerBound { level: k, ann_g, ann_x, evidence });
        }
        let next = power.product(&ann_g)?;
        if power.contains(&next)? && next.contains(&power)? {
            return Ok(LevelCertificate::NotInThick { support_x, support_g });
        }
        prev = power;
        power = next;
    }
    Err(Error::PowerBound(MAX_LEVEL_SEARCH))
}

/// Certifies `koszul(Iⁿ) ∉ ⟨koszul(I)⟩ₖ` for `k < n`.
///
/// Over Euclidean rings and their quotients the annihilators are computed
/// from homology. Over multivariate rings they are taken to be `I` and `Iⁿ`,
/// which requires the generators of `I` to form a regular sequence.
pub fn koszul_power_obstruction(i: &Ideal, n: usize) -> Result<LevelCertificate> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if i.is_unit() {
        return Err(Error::Precondition("the ideal must be proper".into()));
    }
    if n >= 2 {
        if let Some(s) = i.powers_stabilize(n - 1)? {
            return Err(Error::PowersStabilize(s));
        }
    }
    let ring = i.ring().clone();
    let i_n = i.pow(n as u32)?;
    let (ann_g, ann_x) = match ring.tier() {
        Tier::Euclidean => (ann_total_homology(&koszul(i)?)?, ann_total_homology(&koszul(&i_n)?)?),
        Tier::Multivariate => (i.clone(), i_n),
    };
    let prev = ann_g.pow(n as u32 - 1)?;
    if !ann_x.contains(&ann_g.pow(n as u32)?)? {
        return Err(Error::Invariant(format!("ann(G)^{n} is not contained in ann(X)")));
    }
    let evidence = generator_outside(&prev, &ann_x)?
        .ok_or_else(|| Error::Invariant(format!("ann(G)^{} is contained in ann(X)", n - 1)))?;
    Ok(LevelCertificate::LowerBound { level: n, ann_g, ann_x, evidence })
}

#[derive(Clone, Debug)]
pub struct ThickMembership {
    pub member: bool,
    pub support_x: SupportSet,
    pub support_g: SupportSet,
}

/// `X ∈ thick(G)` iff `supph X ⊆ supph G`.
pub fn thick_member(x: &FreeComplex, g: &FreeComplex) -> Result<ThickMembership> {
    x.ring().require_tier1()?;
    let support_x = supph(x)?;
    let support_g = supph(g)?;
    let member = support_contains(&support_g, &support_x)?;
    Ok(ThickMembership { member, support_x, support_g })
}

/// `koszul(I)`, a generator of the thick subcategory supported on `V(I)`.
pub fn generator_for_closed(i: &Ideal) -> Result<FreeComplex> {
    let k = koszul(i)?;
    if i.ring().tier() == Tier::Euclidean {
        let s = supph(&k)?;
        let v = closed_set(i)?;
        if !(support_contains(&s, &v)? && support_contains(&v, &s)?) {
            return Err(Error::Invariant(format!("support of koszul{i} differs from V{i}")));
        }
    }
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectivityBasis {
    /// Checked via idempotents.
    Checked,
    /// A polynomial ring over a field is a domain.
    AssumedDomain,
}

#[derive(Clone, Debug)]
pub enum ObstructionOutcome {
    /// The chain of powers stabilized at `n`: `V(I) = Spec R` and the argument degenerates.
    Degenerate { n: usize, nilpotent: bool },
    /// Lower bounds for `n = 1, …, maxN`.
    Certificates(Vec<(usize, LevelCertificate)>),
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub ring: Ring,
    pub ideal: Ideal,
    pub connectivity: ConnectivityBasis,
    pub outcome: ObstructionOutcome,
    /// Set when the annihilators were assumed rather than computed.
    pub regular_sequence_assumed: bool,
}

impl ObstructionReport {
    pub fn verdict(&self) -> &'static str {
        match self.outcome {
            ObstructionOutcome::Degenerate { .. } => "degenerate",
            ObstructionOutcome::Certificates(_) => "not-strongly-generated",
        }
    }
}

/// Connectedness check, stabilization test, then one certificate per `n ≤ max_n`.
/// With `jobs > 1` the certificates are computed on a thread pool; the order is unchanged.
pub fn strong_generation_obstruction(ring: &Ring, i: &Ideal, max_n: usize, jobs: usize) -> Result<ObstructionReport> {
    if i.ring() != ring {
        return Err(Error::RingMismatch(i.ring().to_string(), ring.to_string()));
    }
    if i.is_unit() || i.is_zero() {
        return Err(Error::Precondition("the ideal must be proper and nonzero".into()));
    }
    let connectivity = match ring.kind() {
        RingKind::MultiPoly { .. } => ConnectivityBasis::AssumedDomain,
        _ => match is_connected_spec(ring)? {
            Connectivity::Connected => ConnectivityBasis::Checked,
            Connectivity::Disconnected(e) => return Err(Error::DisconnectedSpectrum(e.to_string())),
            Connectivity::Unknown(why) => return Err(Error::UnknownConnectivity(why)),
        },
    };
    let regular_sequence_assumed = ring.tier() == Tier::Multivariate;
    if let Some(n) = i.powers_stabilize(max_n)? {
        let rep = nilpotence_lemma_check(ring, i, max_n)?;
        let nilpotent = matches!(rep.outcome, NilpotenceOutcome::Nilpotent { .. });
        return Ok(ObstructionReport {
            ring: ring.clone(),
            ideal: i.clone(),
            connectivity,
            outcome: ObstructionOutcome::Degenerate { n, nilpotent },
            regular_sequence_assumed,
        });
    }
    let run = |n: usize| koszul_power_obstruction(i, n).map(|c| (n, c));
    let certs: Result<Vec<(usize, LevelCertificate)>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
        pool.install(|| (1..=max_n).into_par_iter().map(run).collect())
    } else {
        (1..=max_n).map(run).collect()
    };
    Ok(ObstructionReport {
        ring: ring.clone(),
        ideal: i.clone(),
        connectivity,
        outcome: ObstructionOutcome::Certificates(certs?),
        regular_sequence_assumed,
    })
}
