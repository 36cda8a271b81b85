use crate::error::{Error, Result};

use super::{GeneralSolution, Orbit, RealTerm};

/// Coefficients below this fraction of the largest one do not count toward
/// the degree of a fitted coefficient polynomial.
pub const DEGREE_THRESHOLD: f64 = 1e-9;

/// Sign behaviour of a stream of differences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignPattern {
    ConstantPositive,
    ConstantNegative,
    /// Indices `j` at which the sign differs from the previous nonzero term.
    SignChange(Vec<i64>),
    /// No sign change among the nonzero terms, but some terms are zero.
    Degenerate,
}

impl SignPattern {
    pub fn is_constant(&self) -> bool {
        matches!(self, SignPattern::ConstantPositive | SignPattern::ConstantNegative)
    }

    pub fn name(&self) -> &'static str {
        match self {
            SignPattern::ConstantPositive => "constant_positive",
            SignPattern::ConstantNegative => "constant_negative",
            SignPattern::SignChange(_) => "sign_change",
            SignPattern::Degenerate => "degenerate",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StreamReport {
    pub pattern: SignPattern,
    /// Indices of exactly zero terms.
    pub zeros: Vec<i64>,
    /// Number of terms examined.
    pub len: usize,
}

/// The three difference streams used to tell monotone from anti-monotone
/// orbits.
#[derive(Clone, Debug, PartialEq)]
pub struct SignDiagnostics {
    /// `(-1)^j (x_{j+1} - x_j)`: constant sign for anti-monotone orbits.
    pub alternating_diff: StreamReport,
    /// `x_{j+1} - x_j`: constant sign for monotone orbits.
    pub plain_diff: StreamReport,
    /// `x_{2j+2} - x_{2j}`: constant sign whenever `f^2` is increasing.
    pub even_step: StreamReport,
}

fn sign_of_index(j: i64) -> f64 {
    if j.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Classifies a stream of `(j, value)` terms.
pub fn classify_stream(stream: &[(i64, f64)]) -> StreamReport {
    let zeros: Vec<i64> = stream.iter().filter(|(_, v)| *v == 0.0).map(|(j, _)| *j).collect();
    let mut changes = Vec::new();
    let mut last: Option<bool> = None;
    for &(j, v) in stream.iter().filter(|(_, v)| *v != 0.0) {
        let positive = v > 0.0;
        if last.is_some_and(|p| p != positive) {
            changes.push(j);
        }
        last = Some(positive);
    }
    let pattern = if !changes.is_empty() {
        SignPattern::SignChange(changes)
    } else if !zeros.is_empty() || last.is_none() {
        SignPattern::Degenerate
    } else if last == Some(true) {
        SignPattern::ConstantPositive
    } else {
        SignPattern::ConstantNegative
    };
    StreamReport {
        pattern,
        zeros,
        len: stream.len(),
    }
}

/// Sign pattern of `(-1)^j x_j`; constant when the sequence alternates.
pub fn alternation_pattern(orbit: &Orbit) -> StreamReport {
    let stream: Vec<(i64, f64)> = orbit.iter().map(|(j, x)| (j, sign_of_index(j) * x)).collect();
    classify_stream(&stream)
}

/// Sign pattern of the values themselves.
pub fn value_pattern(orbit: &Orbit) -> StreamReport {
    let stream: Vec<(i64, f64)> = orbit.iter().collect();
    classify_stream(&stream)
}

pub fn sign_diagnostics(orbit: &Orbit) -> Result<SignDiagnostics> {
    if orbit.len() < 3 {
        return Err(Error::domain("sign diagnostics need a window of at least 3 terms"));
    }
    let diffs: Vec<(i64, f64)> = orbit
        .iter()
        .zip(orbit.iter().skip(1))
        .map(|((j, x), (_, y))| (j, y - x))
        .collect();
    let alternating: Vec<(i64, f64)> = diffs.iter().map(|&(j, d)| (j, sign_of_index(j) * d)).collect();
    let (lo, hi) = (orbit.j_min(), orbit.j_max());
    let even: Vec<(i64, f64)> = (lo.div_euclid(2) + lo.rem_euclid(2)..)
        .take_while(|j| 2 * j + 2 <= hi)
        .map(|j| {
            (
                j,
                orbit.get(2 * j + 2).expect("in window") - orbit.get(2 * j).expect("in window"),
            )
        })
        .collect();
    Ok(SignDiagnostics {
        alternating_diff: classify_stream(&alternating),
        plain_diff: classify_stream(&diffs),
        even_step: classify_stream(&even),
    })
}

/// An empirical ratio next to the limit it should approach.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitCheck {
    pub index: i64,
    pub empirical: f64,
    pub predicted: f64,
}

impl LimitCheck {
    pub fn abs_error(&self) -> f64 {
        (self.empirical - self.predicted).abs()
    }
}

/// Degree and leading coefficient of the polynomial attached to one root.
#[derive(Clone, Debug, PartialEq)]
pub struct LeadingTerm {
    pub root: f64,
    pub degree: usize,
    pub leading: f64,
}

/// Ratios of the difference streams against their dominant growth at
/// `j = J` (driven by `r1`) and `j = -J` (driven by `r2`).
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticReport {
    /// Term of `r1`: degree `s`, leading coefficient `a`.
    pub r1_term: Option<LeadingTerm>,
    /// Term of `r2`: degree `t`, leading coefficient `b`.
    pub r2_term: Option<LeadingTerm>,
    /// `(-1)^J (x_{J+1} - x_J) / (J^s |r1|^J)`, predicted `(r1 - 1) a`.
    pub forward: Option<LimitCheck>,
    /// `(-1)^j (x_{j+1} - x_j) / (|j|^t |r2|^j)` at `j = -J`, predicted `(-1)^t (r2 - 1) b`.
    pub backward: Option<LimitCheck>,
    /// `(x_{2J+2} - x_{2J}) / ((2J)^s |r1|^{2J})`, predicted `(r1^2 - 1) a`.
    pub even_forward: Option<LimitCheck>,
    /// `(x_{2j+2} - x_{2j}) / (|2j|^t |r2|^{2j})` at `j = -J`, predicted `(-1)^t (r2^2 - 1) b`.
    pub even_backward: Option<LimitCheck>,
}

fn leading_term(term: &RealTerm) -> Option<LeadingTerm> {
    let max = term.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if max == 0.0 {
        return None;
    }
    let degree = term.coeffs.iter().rposition(|c| c.abs() > DEGREE_THRESHOLD * max)?;
    Some(LeadingTerm {
        root: term.root,
        degree,
        leading: term.coeffs[degree],
    })
}

fn finite(v: f64, j: i64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::numeric(format!(
            "ratio overflows at j = {j}; try a smaller horizon"
        )))
    }
}

fn signed_power(base: f64, j: i64) -> f64 {
    let e = j.unsigned_abs() as i32;
    if j >= 0 {
        base.powi(e)
    } else {
        1.0 / base.powi(e)
    }
}

/// Largest horizon `J <= cap` for which every quantity evaluated by
/// [`asymptotic_limits`] stays below `1e300`.
pub fn limit_horizon(gs: &GeneralSolution, cap: i64) -> i64 {
    let base = gs.growth_base();
    if base <= 1.0 {
        return cap;
    }
    let j = ((300.0 / base.log10() - 2.0) / 2.0).floor() as i64;
    j.clamp(1, cap)
}

/// Empirical versions of the four limits that pin the signs of the leading
/// coefficients of the `r1` and `r2` terms.
pub fn asymptotic_limits(gs: &GeneralSolution, r1: f64, r2: f64, horizon: i64) -> Result<AsymptoticReport> {
    if horizon <= 0 {
        return Err(Error::domain("horizon J must be positive"));
    }
    let r1_term = gs.real_term(r1).and_then(leading_term);
    let r2_term = gs.real_term(r2).and_then(leading_term);
    if r1_term.is_none() && r2_term.is_none() {
        return Err(Error::domain(format!(
            "solution has no nonzero term at r1 = {r1} or r2 = {r2}"
        )));
    }
    let x = |j: i64| gs.eval(j);
    let alt = |j: i64| if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let big_j = horizon;

    let (forward, even_forward) = match &r1_term {
        Some(t) => {
            let s = t.degree as i32;
            let j = big_j;
            let first = alt(j) * (x(j + 1)? - x(j)?) / ((j as f64).powi(s) * signed_power(r1.abs(), j));
            let even = (x(2 * j + 2)? - x(2 * j)?) / ((2.0 * j as f64).powi(s) * signed_power(r1.abs(), 2 * j));
            (
                Some(LimitCheck {
                    index: j,
                    empirical: finite(first, j)?,
                    predicted: (r1 - 1.0) * t.leading,
                }),
                Some(LimitCheck {
                    index: j,
                    empirical: finite(even, j)?,
                    predicted: (r1 * r1 - 1.0) * t.leading,
                }),
            )
        }
        None => (None, None),
    };
    let (backward, even_backward) = match &r2_term {
        Some(t) => {
            let tdeg = t.degree as i32;
            let sign = if t.degree % 2 == 0 { 1.0 } else { -1.0 };
            let j = -big_j;
            let first =
                alt(j) * (x(j + 1)? - x(j)?) / ((j.unsigned_abs() as f64).powi(tdeg) * signed_power(r2.abs(), j));
            let even = (x(2 * j + 2)? - x(2 * j)?)
                / ((2.0 * j.unsigned_abs() as f64).powi(tdeg) * signed_power(r2.abs(), 2 * j));
            (
                Some(LimitCheck {
                    index: j,
                    empirical: finite(first, j)?,
                    predicted: sign * (r2 - 1.0) * t.leading,
                }),
                Some(LimitCheck {
                    index: j,
                    empirical: finite(even, j)?,
                    predicted: sign * (r2 * r2 - 1.0) * t.leading,
                }),
            )
        }
        None => (None, None),
    };
    Ok(AsymptoticReport {
        r1_term,
        r2_term,
        forward,
        backward,
        even_forward,
        even_backward,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::{orbit_from_linear_map, OrbitOrigin};

    fn two_negative_roots() -> GeneralSolution {
        GeneralSolution {
            real_terms: vec![
                RealTerm {
                    root: -2.0,
                    multiplicity: 1,
                    coeffs: vec![1.0],
                },
                RealTerm {
                    root: -0.5,
                    multiplicity: 1,
                    coeffs: vec![1.0],
                },
            ],
            complex_terms: vec![],
        }
    }

    #[test]
    fn anti_monotone_orbit() {
        let o = orbit_from_linear_map(-2.0, 1.0, 0, 3).unwrap();
        let d = sign_diagnostics(&o).unwrap();
        assert_eq!(d.alternating_diff.pattern, SignPattern::ConstantNegative);
        assert!(matches!(d.plain_diff.pattern, SignPattern::SignChange(_)));
    }

    #[test]
    fn increasing_orbit() {
        let o = orbit_from_linear_map(2.0, 1.0, -3, 3).unwrap();
        let d = sign_diagnostics(&o).unwrap();
        assert_eq!(d.plain_diff.pattern, SignPattern::ConstantPositive);
        assert_eq!(d.even_step.pattern, SignPattern::ConstantPositive);
    }

    #[test]
    fn constant_orbit_is_degenerate() {
        let o = orbit_from_linear_map(1.0, 1.0, -3, 3).unwrap();
        let d = sign_diagnostics(&o).unwrap();
        assert_eq!(d.plain_diff.pattern, SignPattern::Degenerate);
        assert_eq!(d.plain_diff.zeros.len(), 6);
    }

    #[test]
    fn mixed_negative_roots_change_even_step_sign() {
        let o = Orbit::from_solution(&two_negative_roots(), -6, 6).unwrap();
        let d = sign_diagnostics(&o).unwrap();
        // 3 * 4^j - (3/4) * 4^-j changes sign between j = -1 and j = 0
        assert_eq!(d.even_step.pattern, SignPattern::SignChange(vec![0]));
        assert_eq!(d.even_step.len, 6);
    }

    #[test]
    fn short_window_rejected() {
        let o = Orbit::new(0, vec![1.0, 2.0], OrbitOrigin::Solution).unwrap();
        assert!(sign_diagnostics(&o).is_err());
    }

    #[test]
    fn limits_of_two_negative_roots() {
        let r = asymptotic_limits(&two_negative_roots(), -2.0, -0.5, 40).unwrap();
        let f = r.forward.unwrap();
        assert_eq!(f.predicted, -3.0);
        assert!(f.abs_error() < 1e-6);
        let b = r.backward.unwrap();
        assert_eq!(b.predicted, -1.5);
        assert!(b.abs_error() < 1e-6);
        let ef = r.even_forward.unwrap();
        let eb = r.even_backward.unwrap();
        assert!((ef.empirical - 3.0).abs() < 1e-6);
        assert!((eb.empirical + 0.75).abs() < 1e-6);
    }

    #[test]
    fn degree_read_with_threshold() {
        let gs = GeneralSolution {
            real_terms: vec![
                RealTerm {
                    root: -2.0,
                    multiplicity: 2,
                    coeffs: vec![1.0, 2.0],
                },
                RealTerm {
                    root: -0.5,
                    multiplicity: 2,
                    coeffs: vec![3.0, 1e-14],
                },
            ],
            complex_terms: vec![],
        };
        let r = asymptotic_limits(&gs, -2.0, -0.5, 30).unwrap();
        assert_eq!(r.r1_term.as_ref().unwrap().degree, 1);
        assert_eq!(r.r2_term.as_ref().unwrap().degree, 0);
        let f = r.forward.unwrap();
        assert_eq!(f.predicted, -6.0);
        // the (j+1)/j drift of a linear coefficient decays like 1/J
        assert!(f.abs_error() < 0.5);
    }

    #[test]
    fn horizon_respects_overflow() {
        let gs = GeneralSolution {
            real_terms: vec![RealTerm {
                root: -1e10,
                multiplicity: 1,
                coeffs: vec![1.0],
            }],
            complex_terms: vec![],
        };
        let j = limit_horizon(&gs, 40);
        assert!(j < 40);
        assert!(asymptotic_limits(&gs, -1e10, -0.5, j).is_ok());
    }
}
