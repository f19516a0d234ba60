//! Arithmetic and factorization over prime fields, and cycle-type evidence
//! for monodromy groups.

mod evidence;
mod factor;
mod polymodp;

pub use evidence::{cycle_type, evidence, CycleTypeSample, EvidenceReport};
pub use factor::{factor_mod_p, ModFactorization};
pub use polymodp::PolyModP;
