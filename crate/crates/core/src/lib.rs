//! Exact algebra over `Q[x]` for deciding when `f(x) = g(y)` has finitely
//! many solutions with bounded denominators.
//!
//! The crate computes critical-value structure, functional decompositions,
//! Dickson normal forms and monodromy certificates exactly, with cycle-type
//! sampling over prime fields as an independent empirical check.

pub mod critical;
pub mod decide;
pub mod decompose;
pub mod dickson;
mod error;
pub mod families;
pub mod ffield;
pub mod monodromy;
pub mod ratpoly;
pub mod shapes;

pub use critical::{collision_poly, critical_report, CollisionClass, CriticalReport};
pub use decide::{
    decide, decide_dem, decide_dem2, Certificate, HypothesisCheck, Outcome, Theorem, Verdict,
};
pub use decompose::{
    full_decomposition, is_indecomposable, linear_equivalence, right_factor, Bidecomposition,
    DecompositionChain,
};
pub use dickson::{dickson, dickson_detect, DicksonForm};
pub use error::{Error, Result};
pub use families::{family_report, generate, FamilyReport, FamilySpec, Prediction};
pub use ffield::{
    cycle_type, evidence, factor_mod_p, CycleTypeSample, EvidenceReport, ModFactorization,
    PolyModP,
};
pub use monodromy::{
    classify, phi_irreducible, Classification, MonodromyCertificate, PhiVerdict, Rule, RuleFiring,
};
pub use ratpoly::{
    compose, gcd, interpolate, resultant, squarefree_decompose, Poly, Rational,
    SquarefreeDecomposition,
};
pub use shapes::{
    detect_poss11, detect_poss21, match_dem22_pair, quadratic_cover, PairCertificate, PairKind,
    ShapeKind, ShapeWitness,
};
