//! Text and JSON renderings of library reports.

use qtri_core::braiding::{format_matrix, ClassificationReport, Positivity};
use qtri_core::limit::{IntegralPresentation, LieBracketTable, Specializability};
use qtri_core::nichols::{format_word, NicholsReport, TensorVector};
use qtri_core::scalars::Order;
use qtri_core::{DoublePresentation, Scalar, VerificationReport};
use qtri_core::double::ValidationReport;
use serde_json::{json, Value};

pub fn scalar_matrix(m: &[Vec<Scalar>]) -> Value {
    json!(m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn order(o: &Order) -> String {
    match o {
        Order::Finite(n) => n.to_string(),
        Order::Infinite => "infinite".into(),
    }
}

fn positivity(p: &Positivity) -> &'static str {
    match p {
        Positivity::Positive => "positive",
        Positivity::NotPositive => "not positive",
        Positivity::Unknown => "unknown",
    }
}

pub fn classification_text(r: &ClassificationReport) -> String {
    let mut lines = vec![r.summary()];
    lines.push(format!("orders of q_ii: {}", r.orders.iter().map(order).collect::<Vec<_>>().join(", ")));
    lines.push(format!("generic: {}", r.generic));
    lines.push(format!(
        "positive: {} ({})",
        r.positive,
        r.positivity.iter().map(positivity).collect::<Vec<_>>().join(", ")
    ));
    match (&r.cartan, &r.cartan_failure) {
        (Some(c), _) => lines.push(format!("Cartan matrix: {}", format_matrix(&c.a))),
        (None, Some(w)) => lines.push(format!("not Cartan: {w}")),
        (None, None) => {}
    }
    match (&r.dj, &r.dj_failure) {
        (Some(d), _) => {
            let roots = d.roots.iter().map(|x| x.describe()).collect::<Vec<_>>().join(", ");
            lines.push(format!("DJ data: d = {:?}, q_J = {roots}", d.d));
        }
        (None, Some(w)) => lines.push(format!("not DJ-type: {w}")),
        (None, None) => {}
    }
    lines.join("\n")
}

pub fn classification_json(r: &ClassificationReport) -> Value {
    json!({
        "summary": r.summary(),
        "orders": r.orders.iter().map(order).collect::<Vec<_>>(),
        "generic": r.generic,
        "positive": r.positive,
        "positivity": r.positivity.iter().map(positivity).collect::<Vec<_>>(),
        "cartan": r.cartan.as_ref().map(|c| json!(c.a)),
        "cartan_failure": r.cartan_failure,
        "dj": r.dj.as_ref().map(|d| json!({
            "d": d.d,
            "roots": d.roots.iter().map(|x| json!({
                "component": x.component.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "q_j": x.describe(),
            })).collect::<Vec<_>>(),
        })),
        "dj_failure": r.dj_failure,
        "finite_type": r.finite_type.as_ref().and_then(|f| f.name()),
        "finite_gk_predicted": r.finite_gk_predicted,
    })
}

fn vector_json(v: &TensorVector) -> Value {
    json!(v.terms().iter().map(|(w, c)| json!({ "word": format_word(w), "coeff": c.to_string() })).collect::<Vec<_>>())
}

pub fn nichols_text(r: &NicholsReport, relations: bool) -> String {
    let dims = r.hilbert_dims().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    let mut lines = vec![format!("Hilbert dims {dims}")];
    if relations {
        for d in r.degrees.iter().skip(2) {
            let rels: Vec<_> = d.relations().collect();
            lines.push(format!("degree {}: {} relation(s)", d.degree, rels.len()));
            lines.extend(rels.iter().map(|v| format!("  {v}")));
        }
    }
    lines.join("\n")
}

pub fn nichols_json(r: &NicholsReport, relations: bool) -> Value {
    let mut v = json!({ "max_degree": r.max_degree, "hilbert_dims": r.hilbert_dims() });
    if relations {
        v["relations"] = json!(r
            .degrees
            .iter()
            .skip(2)
            .map(|d| json!({ "degree": d.degree, "basis": d.relations().map(vector_json).collect::<Vec<_>>() }))
            .collect::<Vec<_>>());
    }
    v
}

pub fn presentation_json(p: &DoublePresentation) -> Value {
    json!({
        "name": p.name,
        "rank": p.rank,
        "generators": p.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "relations": p.relations.iter().map(|r| json!({
            "kind": r.kind.to_string(),
            "degree": r.degree,
            "lhs": r.lhs.to_string(),
            "rhs": r.rhs.to_string(),
        })).collect::<Vec<_>>(),
        "coproducts": p.coproducts.iter().map(|(g, t)| json!({ "generator": g.to_string(), "value": t.to_string() })).collect::<Vec<_>>(),
        "antipodes": p.antipodes.iter().map(|(g, t)| json!({ "generator": g.to_string(), "value": t.to_string() })).collect::<Vec<_>>(),
        "counits": p.counits.iter().map(|(g, c)| json!({ "generator": g.to_string(), "value": c.to_string() })).collect::<Vec<_>>(),
        "degree_bound": p.meta.degree_bound,
        "positive_counts": p.meta.positive_counts,
        "negative_counts": p.meta.negative_counts,
    })
}

pub fn validation_json(r: &ValidationReport) -> Value {
    json!({
        "passed": r.passed(),
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name, "passed": c.passed, "witness": c.witness, "note": c.note,
        })).collect::<Vec<_>>(),
        "flags": {
            "separable": r.flags.separable,
            "non_degenerate": r.flags.non_degenerate,
            "symmetric": r.flags.symmetric,
            "indecomposable": r.flags.indecomposable,
        },
        "notes": r.notes,
    })
}

pub fn verification_json(r: &VerificationReport) -> Value {
    json!({ "name": r.name, "passed": r.passed, "checked": r.checked, "failure": r.failure })
}

pub fn integral_json(p: &IntegralPresentation) -> Value {
    json!({
        "sqrt": p.sqrt.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "t": p.t.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "verified": p.verified(),
        "relations": p.relations.iter().map(|r| json!({
            "statement": r.statement, "holds": r.holds(), "computed": r.computed.to_string(),
        })).collect::<Vec<_>>(),
        "coproducts": p.coproduct_checks,
    })
}

pub fn specializability_json(s: &Specializability) -> Value {
    match s {
        Specializability::Ok => json!({ "verdict": "ok" }),
        Specializability::CyclotomicObstruction(w) => json!({ "verdict": "cyclotomic obstruction", "witness": w }),
        Specializability::DenominatorObstruction(w) => json!({ "verdict": "denominator obstruction", "witness": w }),
    }
}

pub fn table_json(t: &LieBracketTable) -> Value {
    json!({
        "brackets": t.brackets.iter().filter(|((x, y), _)| x < y).map(|((x, y), c)| json!({
            "left": x.to_string(), "right": y.to_string(), "value": c.to_string(),
        })).collect::<Vec<_>>(),
        "constraints": t.constraints.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}
