//! Certified lower bounds on the monodromy group `Mon(f)`, the Galois group
//! of `f(x) − t` over `Q(t)` acting on the roots.
//!
//! Every rule is a sufficient condition. Questions stated over the algebraic
//! closure are answered through the rational normal forms of [`decompose`]
//! and [`dickson`], which are rational whenever `f` is.
//!
//! [`decompose`]: crate::decompose
//! [`dickson`]: crate::dickson

use std::fmt;

use crate::critical::{critical_report, CollisionClass, CriticalReport};
use crate::decompose::{is_prime, right_factor, Bidecomposition};
use crate::dickson::{dickson_detect, DicksonForm};
use crate::error::{domain, Result};
use crate::ratpoly::Poly;

/// Ordered strongest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classification {
    Symmetric,
    SymmetricOrAlternating,
    DoublyTransitive,
    PrimitivePhiReducible,
    Imprimitive,
    Unknown,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::Symmetric => "Symmetric",
            Classification::SymmetricOrAlternating => "SymmetricOrAlternating",
            Classification::DoublyTransitive => "DoublyTransitive",
            Classification::PrimitivePhiReducible => "PrimitivePhiReducible",
            Classification::Imprimitive => "Imprimitive",
            Classification::Unknown => "Unknown",
        }
    }

    /// Whether the conclusion forces a doubly transitive action on `n`
    /// points (`A₃` is not doubly transitive).
    pub fn implies_doubly_transitive(self, n: usize) -> bool {
        match self {
            Classification::Symmetric => n >= 2,
            Classification::SymmetricOrAlternating => n >= 4,
            Classification::DoublyTransitive => true,
            _ => false,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// A simple critical point and pairwise distinct critical values.
    R1,
    /// Two distinct critical points and pairwise distinct critical values.
    R2,
    /// Indecomposable with a critical point of multiplicity ≤ 2 whose value
    /// is shared with no other critical point.
    R3,
    /// Indecomposable and `(f(x) − f(y))/(x − y)` absolutely irreducible.
    R4,
    /// Indecomposable of prime degree and linearly related to `xⁿ` or to
    /// `Dₙ(x, β)` with `β ≠ 0`, `n ≥ 5`.
    R5,
    /// A verified decomposition.
    R6,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
            Rule::R6 => "R6",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Rule::R1 => "one simple critical point and distinct critical values give the symmetric group",
            Rule::R2 => "two critical points with distinct critical values give a doubly transitive group",
            Rule::R3 => "a primitive group containing an inertia element of cycle type (2) or (3) contains the alternating group",
            Rule::R4 => "an irreducible difference quotient over the closure gives a doubly transitive group",
            Rule::R5 => "prime-degree cyclic and Dickson polynomials are primitive with reducible difference quotient",
            Rule::R6 => "a decomposition f = g(h) gives a block system",
        }
    }
}

/// One fired rule together with the objects needed to re-verify it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleFiring {
    pub rule: Rule,
    pub conclusion: Classification,
    pub decomposition: Option<Bidecomposition>,
    pub dickson: Option<DicksonForm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyCertificate {
    pub classification: Classification,
    /// The rule that produced `classification`; `None` for `Unknown`.
    pub decisive: Option<Rule>,
    pub rule_chain: Vec<RuleFiring>,
    pub critical: CriticalReport,
}

impl MonodromyCertificate {
    pub fn decomposition(&self) -> Option<&Bidecomposition> {
        self.rule_chain.iter().find_map(|r| r.decomposition.as_ref())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PhiVerdict {
    Irreducible,
    Reducible,
    Unknown,
}

impl PhiVerdict {
    pub fn name(self) -> &'static str {
        match self {
            PhiVerdict::Irreducible => "Irreducible",
            PhiVerdict::Reducible => "Reducible",
            PhiVerdict::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for PhiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First right factor found, smallest inner degree first.
pub(crate) fn find_decomposition(f: &Poly) -> Result<Option<Bidecomposition>> {
    let n = f.degree().unwrap_or(0);
    if n < 4 || is_prime(n) {
        return Ok(None);
    }
    for k in (2..n).filter(|k| n % k == 0) {
        if let Some(b) = right_factor(f, k)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// What the Dickson normal form says about the difference quotient of an
/// indecomposable `f` of degree `n ≥ 3`.
fn phi_from_form(n: usize, form: Option<&DicksonForm>) -> PhiVerdict {
    match form {
        None => PhiVerdict::Irreducible,
        // A cubic's quotient is the conic x² + xy + y² − 3β after a shift.
        Some(d) if n == 3 => {
            if d.is_pure_power() {
                PhiVerdict::Reducible
            } else {
                PhiVerdict::Irreducible
            }
        }
        Some(_) if is_prime(n) => PhiVerdict::Reducible,
        Some(_) => PhiVerdict::Unknown,
    }
}

pub fn phi_irreducible(f: &Poly) -> Result<PhiVerdict> {
    let n = f.degree().unwrap_or(0);
    if n < 3 {
        return domain(format!("difference quotient test needs degree >= 3, got {}", f.degree_i64()));
    }
    if find_decomposition(f)?.is_some() {
        return Ok(PhiVerdict::Reducible);
    }
    Ok(phi_from_form(n, dickson_detect(f)?.as_ref()))
}

pub fn classify(f: &Poly) -> Result<MonodromyCertificate> {
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return domain(format!("classification needs degree >= 2, got {}", f.degree_i64()));
    }
    let critical = critical_report(f)?;
    let decomposition = find_decomposition(f)?;
    let dickson = if n >= 3 { dickson_detect(f)? } else { None };
    let mut chain = Vec::new();
    let mut fire = |rule, conclusion, decomposition, dickson| {
        chain.push(RuleFiring { rule, conclusion, decomposition, dickson });
    };

    let distinct = critical.collision_class == CollisionClass::AllDistinct;
    if distinct && critical.simple_critical_points >= 1 {
        fire(Rule::R1, Classification::Symmetric, None, None);
    }
    if distinct && critical.distinct_critical_points >= 2 {
        fire(Rule::R2, Classification::DoublyTransitive, None, None);
    }
    match decomposition {
        Some(b) => fire(Rule::R6, Classification::Imprimitive, Some(b), None),
        None => {
            if critical.has_low_mult_distinct_witness {
                let c = if critical.has_simple_distinct_witness {
                    Classification::Symmetric
                } else {
                    Classification::SymmetricOrAlternating
                };
                fire(Rule::R3, c, None, None);
            }
            if n >= 3 {
                match phi_from_form(n, dickson.as_ref()) {
                    PhiVerdict::Irreducible => {
                        fire(Rule::R4, Classification::DoublyTransitive, None, dickson.clone())
                    }
                    PhiVerdict::Reducible if n >= 5 => {
                        fire(Rule::R5, Classification::PrimitivePhiReducible, None, dickson.clone())
                    }
                    _ => {}
                }
            }
        }
    }

    let best = chain.iter().min_by_key(|r| r.conclusion);
    let (classification, decisive) = match best {
        Some(r) => (r.conclusion, Some(r.rule)),
        None => (Classification::Unknown, None),
    };
    Ok(MonodromyCertificate { classification, decisive, rule_chain: chain, critical })
}
