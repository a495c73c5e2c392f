//! JSON encodings of solver results.

use std::collections::BTreeMap;

use hereditary_core::{
    Cover, CoverEnumeration, CriticalityReport, FactorCriticalCertificate, GallaiCorollaryReport,
    LemmaHypothesisFailure, LemmaReport, Matching, NotApplicable, TheoremClassification, TheoremViolation, VertexSet,
};
use serde_json::{json, Value};

use crate::io::HypergraphFile;

pub fn set(s: VertexSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

pub fn cover(c: &Cover) -> Value {
    Value::Array(c.parts().iter().map(|p| set(*p)).collect())
}

pub fn matching(m: &Matching) -> Value {
    json!(m.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

/// Vertex → list of edge pairs.
pub fn certificate(c: &FactorCriticalCertificate) -> Value {
    let map: BTreeMap<String, Value> = c.near_perfect.iter().map(|(v, m)| (v.to_string(), matching(m))).collect();
    json!(map)
}

pub fn enumeration(e: &CoverEnumeration) -> Value {
    json!({
        "rho": e.rho,
        "covers": e.covers.iter().map(cover).collect::<Vec<_>>(),
        "truncated": e.truncated,
    })
}

pub fn criticality(r: &CriticalityReport) -> Value {
    let after: BTreeMap<String, usize> = r.rho_after_deletion.iter().map(|(v, x)| (v.to_string(), *x)).collect();
    json!({
        "rho": r.rho,
        "is_critical": r.is_critical(),
        "failing_vertices": r.failing_vertices,
        "rho_after_deletion": after,
    })
}

fn not_applicable(reason: &NotApplicable) -> Value {
    match reason {
        NotApplicable::Empty => json!({"reason": "empty"}),
        NotApplicable::NotConnected { components } => json!({
            "reason": "not connected",
            "components": components.iter().map(|c| set(*c)).collect::<Vec<_>>(),
        }),
        NotApplicable::NotCritical { failing_vertices } => json!({
            "reason": "not critical",
            "failing_vertices": failing_vertices,
        }),
    }
}

pub fn classification(c: &TheoremClassification) -> Value {
    match c {
        TheoremClassification::NotApplicable(r) => {
            let mut v = not_applicable(r);
            v["case"] = json!("not-applicable");
            v
        }
        TheoremClassification::Strict { rho, cover: w } => json!({
            "case": "strict",
            "rho": rho,
            "witness": cover(w),
        }),
        TheoremClassification::Equality { rho, certificate: cert, structured_covers } => {
            let covers: BTreeMap<String, Value> =
                structured_covers.iter().map(|(v, c)| (v.to_string(), cover(c))).collect();
            json!({
                "case": "equality",
                "rho": rho,
                "certificate": certificate(cert),
                "structured_covers": covers,
            })
        }
    }
}

pub fn violation(v: &TheoremViolation) -> Value {
    json!({
        "instance": HypergraphFile::from_hypergraph(&v.instance),
        "stage": v.stage,
        "expected": v.expected,
        "got": v.got,
    })
}

pub fn gallai_corollary(r: &GallaiCorollaryReport) -> Value {
    json!({
        "n": r.n,
        "rho": r.rho,
        "condition_met": r.condition_met,
        "not_critical": r.not_critical,
        "not_connected": r.not_connected.as_ref().map(|cs| cs.iter().map(|c| set(*c)).collect::<Vec<_>>()),
        "holds": r.holds(),
    })
}

pub fn lemma(r: &LemmaReport) -> Value {
    match r {
        LemmaReport::Holds { nu, witnesses } => json!({
            "applicable": true,
            "holds": true,
            "nu": nu,
            "witnesses": certificate(witnesses),
        }),
        LemmaReport::Violated { nu, n } => json!({"applicable": true, "holds": false, "nu": nu, "n": n}),
        LemmaReport::NotApplicable { nu, failure } => {
            let why = match failure {
                LemmaHypothesisFailure::Empty => json!({"hypothesis": "nonempty"}),
                LemmaHypothesisFailure::NotConnected { components } => json!({
                    "hypothesis": "connected",
                    "components": components.iter().map(|c| set(*c)).collect::<Vec<_>>(),
                }),
                LemmaHypothesisFailure::DeletionLowersNu { vertex, nu_after } => json!({
                    "hypothesis": "nu(G - v) = nu(G)",
                    "vertex": vertex,
                    "nu_after": nu_after,
                }),
            };
            json!({"applicable": false, "nu": nu, "failure": why})
        }
    }
}
