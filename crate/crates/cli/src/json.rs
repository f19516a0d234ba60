//! JSON encodings of core results. Rationals are `"p/q"` strings and
//! polynomials use the same syntax the parser accepts.

use serde_json::{json, Value};

use critval_core::{
    Certificate, CriticalReport, DicksonForm, EvidenceReport, HypothesisCheck, MonodromyCertificate,
    PairCertificate, Poly, Rational, ShapeWitness,
};

pub fn rational(q: &Rational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

pub fn poly(p: &Poly) -> Value {
    Value::String(p.to_string())
}

pub fn critical(r: &CriticalReport) -> Value {
    json!({
        "degree": r.degree,
        "distinct_critical_points": r.distinct_critical_points,
        "simple_critical_points": r.simple_critical_points,
        "multiplicity_profile": r.multiplicity_profile,
        "collision_class": r.collision_class.name(),
        "has_low_mult_distinct_witness": r.has_low_mult_distinct_witness,
        "has_simple_distinct_witness": r.has_simple_distinct_witness,
        "collision_poly": poly(&r.collision_poly),
    })
}

pub fn dickson_form(d: &DicksonForm) -> Value {
    json!({
        "n": d.n,
        "gamma": rational(&d.gamma),
        "beta": rational(&d.beta),
        "e0": rational(&d.e0),
        "scale": rational(&d.scale),
    })
}

pub fn bidecomposition(b: &critval_core::Bidecomposition) -> Value {
    json!({ "outer": poly(&b.outer), "inner": poly(&b.inner) })
}

pub fn monodromy(c: &MonodromyCertificate) -> Value {
    let chain: Vec<Value> = c
        .rule_chain
        .iter()
        .map(|r| {
            json!({
                "rule": r.rule.id(),
                "statement": r.rule.statement(),
                "conclusion": r.conclusion.name(),
                "decomposition": r.decomposition.as_ref().map(bidecomposition),
                "dickson": r.dickson.as_ref().map(dickson_form),
            })
        })
        .collect();
    json!({ "decisive": c.decisive.map(|r| r.id()), "rule_chain": chain })
}

pub fn shape(w: &ShapeWitness) -> Value {
    json!({
        "kind": w.kind.name(),
        "t": w.t,
        "inner_decomposition": bidecomposition(&w.inner_decomposition),
        "profile": [w.profile.0, w.profile.1],
    })
}

pub fn pair(c: &PairCertificate) -> Value {
    let (f, g) = c.recompose();
    json!({
        "kind": c.kind.name(),
        "a": rational(&c.a),
        "e1": rational(&c.e1),
        "e0": rational(&c.e0),
        "c1": rational(&c.c1),
        "c0": rational(&c.c0),
        "d1": rational(&c.d1),
        "d0": rational(&c.d0),
        "f_identity": poly(&f),
        "g_identity": poly(&g),
    })
}

pub fn certificate(c: &Certificate) -> Value {
    match c {
        Certificate::Linear { u, v } => json!({
            "type": "linear",
            "mu": poly(&Poly::linear(u.clone(), v.clone())),
            "u": rational(u),
            "v": rational(v),
        }),
        Certificate::Quadratic { nu } => json!({ "type": "quadratic", "nu": poly(nu) }),
        Certificate::Pair(p) => json!({ "type": "pair", "pair": pair(p) }),
    }
}

pub fn reason(r: &HypothesisCheck) -> Value {
    json!({ "subject": r.subject, "check": r.check, "passed": r.passed, "detail": r.detail })
}

pub fn evidence(e: &EvidenceReport) -> Value {
    let table: Vec<Value> = e
        .cycle_types
        .iter()
        .map(|(k, v)| json!({ "partition": k, "count": v }))
        .collect();
    json!({
        "trials": e.trials,
        "seed": e.seed,
        "accepted": e.accepted,
        "rejected": e.rejected,
        "mean_r": e.mean_r,
        "mean_r2": e.mean_r2,
        "rank_estimate": e.rank_estimate,
        "saw_n_cycle": e.saw_n_cycle,
        "saw_transposition": e.saw_transposition,
        "two_transitive_consistent": e.two_transitive_consistent,
        "cycle_types": table,
    })
}
