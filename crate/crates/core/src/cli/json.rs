use std::fmt::Write as _;

use num_rational::BigRational;
use serde_json::{json, Number, Value};

use crate::recurrence::{
    AsymptoticReport, GeneralSolution, LimitCheck, Orbit, RecurrenceResidual, SignDiagnostics, SignPattern,
    StreamReport,
};
use crate::reduction::{DivisibilityReport, ReducedCoeffs, ReducedEquation};
use crate::spectrum::{Case, RootRef, RootSpectrum, SpectrumEntry, TheoremClassification};

/// A float as a JSON number with 17 significant digits; `null` if not finite.
pub(crate) fn float(v: f64) -> Value {
    if !v.is_finite() {
        return Value::Null;
    }
    let v = if v == 0.0 { 0.0 } else { v };
    let text = format!("{v:.16e}");
    Value::Number(text.parse::<Number>().expect("valid JSON number"))
}

pub(crate) fn rationals(qs: &[BigRational]) -> Value {
    Value::Array(qs.iter().map(|q| Value::String(q.to_string())).collect())
}

pub(crate) fn root_text(e: &SpectrumEntry) -> String {
    match &e.exact {
        Some(q) => q.to_string(),
        None if e.is_real() => format!("{}", e.root.re),
        None => format!(
            "{} {} {}i",
            e.root.re,
            if e.root.im < 0.0 { '-' } else { '+' },
            e.root.im.abs()
        ),
    }
}

fn entry(e: &SpectrumEntry) -> Value {
    json!({
        "re": float(e.root.re),
        "im": float(e.root.im),
        "multiplicity": e.multiplicity,
        "modulus": float(e.modulus()),
        "exact": e.exact.as_ref().map(|q| q.to_string()),
    })
}

pub(crate) fn spectrum(spec: &RootSpectrum) -> Value {
    Value::Array(spec.entries().iter().map(entry).collect())
}

fn root_ref(r: &RootRef) -> Value {
    json!({
        "index": r.index,
        "value": float(r.value),
        "exact": r.exact.as_ref().map(|q| q.to_string()),
    })
}

pub(crate) fn classification(spec: &RootSpectrum, class: &TheoremClassification) -> Value {
    let details = match &class.case {
        Case::NegativePairElimination { r1, r2 } => json!({ "r1": root_ref(r1), "r2": root_ref(r2) }),
        Case::OppositeSignElimination {
            positive,
            negative,
            positive_is_one,
        } => json!({
            "positive": root_ref(positive),
            "negative": root_ref(negative),
            "positive_is_one": positive_is_one,
        }),
        _ => json!({}),
    };
    json!({
        "case": class.case.kind().name(),
        "details": details,
        "applicable": class.applicable.iter().map(|c| c.name()).collect::<Vec<_>>(),
        "margin": class.margin.map_or(Value::Null, float),
        "nonreal_bracketed": class.nonreal_bracketed,
        "roots": spectrum(spec),
        "checks": class.checks.iter().map(|c| json!({
            "case": c.case.name(),
            "status": format!("{:?}", c.status).to_lowercase(),
            "margin": c.margin.map_or(Value::Null, float),
            "note": c.note,
        })).collect::<Vec<_>>(),
    })
}

pub(crate) fn coeffs_text(c: &ReducedCoeffs) -> String {
    let parts: Vec<String> = match c {
        ReducedCoeffs::Exact(p) => p.descending().iter().map(ToString::to_string).collect(),
        ReducedCoeffs::Numeric(p) => p.descending().iter().map(|v| format!("{v}")).collect(),
    };
    format!("[{}]", parts.join(", "))
}

fn coeffs(c: &ReducedCoeffs) -> Value {
    match c {
        ReducedCoeffs::Exact(p) => rationals(&p.descending()),
        ReducedCoeffs::Numeric(p) => Value::Array(p.descending().into_iter().map(float).collect()),
    }
}

pub(crate) fn reduced_equation(eq: &ReducedEquation, div: &DivisibilityReport) -> Value {
    json!({
        "alternative": eq.provenance.alternative,
        "prerequisite": eq.provenance.prerequisite.name(),
        "degree": eq.coeffs.degree(),
        "exact": eq.coeffs.exact().is_some(),
        "coefficients": coeffs(&eq.coeffs),
        "retained": eq.retained.iter().map(entry).collect::<Vec<_>>(),
        "divides_original": div.divides,
        "remainder_norm": float(div.remainder_norm),
    })
}

pub(crate) fn orbit(o: &Orbit) -> Value {
    Value::Array(o.iter().map(|(j, x)| json!({ "j": j, "x": float(x) })).collect())
}

pub(crate) fn residual(r: &RecurrenceResidual) -> Value {
    json!({ "max_abs": float(r.max_abs), "relative": float(r.relative) })
}

fn stream(s: &StreamReport) -> Value {
    let changes = match &s.pattern {
        SignPattern::SignChange(at) => at.clone(),
        _ => Vec::new(),
    };
    json!({
        "pattern": s.pattern.name(),
        "sign_changes": changes,
        "zeros": s.zeros,
        "terms": s.len,
    })
}

pub(crate) fn signs(d: &SignDiagnostics) -> Value {
    json!({
        "alternating_diff": stream(&d.alternating_diff),
        "plain_diff": stream(&d.plain_diff),
        "even_step": stream(&d.even_step),
    })
}

fn stream_text(name: &str, s: &StreamReport) -> String {
    let mut line = format!("  {name}: {}", s.pattern.name());
    if let SignPattern::SignChange(at) = &s.pattern {
        let _ = write!(line, " at j = {at:?}");
    }
    if !s.zeros.is_empty() {
        let _ = write!(line, "; zero at j = {:?}", s.zeros);
    }
    line + "\n"
}

pub(crate) fn signs_text(d: &SignDiagnostics) -> String {
    format!(
        "sign diagnostics:\n{}{}{}",
        stream_text("(-1)^j (x_{j+1} - x_j)", &d.alternating_diff),
        stream_text("x_{j+1} - x_j", &d.plain_diff),
        stream_text("x_{2j+2} - x_{2j}", &d.even_step)
    )
}

fn floats(v: &[f64]) -> Value {
    Value::Array(v.iter().copied().map(float).collect())
}

pub(crate) fn solution(gs: &GeneralSolution) -> Value {
    json!({
        "real_terms": gs.real_terms.iter().map(|t| json!({
            "root": float(t.root),
            "multiplicity": t.multiplicity,
            "coefficients": floats(&t.coeffs),
        })).collect::<Vec<_>>(),
        "complex_terms": gs.complex_terms.iter().map(|t| json!({
            "modulus": float(t.modulus),
            "argument": float(t.argument),
            "multiplicity": t.multiplicity,
            "cos_coefficients": floats(&t.cos_coeffs),
            "sin_coefficients": floats(&t.sin_coeffs),
        })).collect::<Vec<_>>(),
    })
}

fn poly_in_j(c: &[f64]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .map(|(m, v)| match m {
            0 => format!("{v}"),
            1 => format!("{v}*j"),
            _ => format!("{v}*j^{m}"),
        })
        .collect();
    format!("({})", terms.join(" + "))
}

pub(crate) fn solution_text(gs: &GeneralSolution) -> String {
    let mut text = String::from("x_j =\n");
    for t in &gs.real_terms {
        let _ = writeln!(text, "  + {} * ({})^j", poly_in_j(&t.coeffs), t.root);
    }
    for t in &gs.complex_terms {
        let _ = writeln!(
            text,
            "  + ({} cos({phi} j) + {} sin({phi} j)) * {}^j",
            poly_in_j(&t.cos_coeffs),
            poly_in_j(&t.sin_coeffs),
            t.modulus,
            phi = t.argument
        );
    }
    text
}

fn check(c: &Option<LimitCheck>) -> Value {
    match c {
        Some(c) => json!({
            "j": c.index,
            "empirical": float(c.empirical),
            "predicted": float(c.predicted),
            "abs_error": float(c.abs_error()),
        }),
        None => Value::Null,
    }
}

pub(crate) fn limits(r: &AsymptoticReport) -> Value {
    let term = |t: &Option<crate::recurrence::LeadingTerm>| match t {
        Some(t) => json!({ "root": float(t.root), "degree": t.degree, "leading": float(t.leading) }),
        None => Value::Null,
    };
    json!({
        "r1_term": term(&r.r1_term),
        "r2_term": term(&r.r2_term),
        "forward": check(&r.forward),
        "backward": check(&r.backward),
        "even_forward": check(&r.even_forward),
        "even_backward": check(&r.even_backward),
    })
}

pub(crate) fn limits_text(r: &AsymptoticReport) -> String {
    let mut text = String::from("asymptotic ratios (empirical vs predicted):\n");
    for (name, c) in [
        ("forward", &r.forward),
        ("backward", &r.backward),
        ("even forward", &r.even_forward),
        ("even backward", &r.even_backward),
    ] {
        if let Some(c) = c {
            let _ = writeln!(text, "  {name} at j = {}: {} vs {}", c.index, c.empirical, c.predicted);
        }
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(serde_json::to_string(&float(-3.0)).unwrap(), "-3.0000000000000000e+0");
        assert_eq!(serde_json::to_string(&float(0.1)).unwrap(), "1.0000000000000001e-1");
        assert_eq!(serde_json::to_string(&float(-0.0)).unwrap(), "0.0000000000000000e+0");
        assert_eq!(float(f64::NAN), Value::Null);
    }
}
