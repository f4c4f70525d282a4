//! Exact homological algebra over concrete commutative rings: homology and
//! annihilators of perfect complexes, homological supports, and certified
//! bounds on generation level in thick subcategories.

pub mod complex;
pub mod error;
pub mod generation;
pub mod homology;
pub mod ideal;
pub mod limits;
pub mod matrix;
pub mod ring;
pub mod snf;
pub mod spectrum;

pub use complex::{koszul, ChainMap, FreeComplex};
pub use error::{Error, Result};
pub use generation::{
    koszul_power_obstruction, level_lower_bound, principal_power_witness, strong_generation_obstruction,
    thick_member, validate_witness, BuildWitness, ConnectivityBasis, LevelCertificate, ObstructionOutcome, ObstructionReport,
    WitnessNode,
};
pub use homology::{ann_module, ann_total_homology, homology, support_contains, supph, FPModule, SupportSet};
pub use ideal::Ideal;
pub use matrix::Matrix;
pub use ring::{Field, MonomialOrder, Ring, RingElem, RingKind, Tier, UniPoly};
pub use snf::{smith_normal_form, Snf};
pub use spectrum::{idempotents, is_connected_spec, nilpotence_lemma_check, Connectivity};
