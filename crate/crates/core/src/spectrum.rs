//! Root spectra of characteristic polynomials and the reduction hypotheses
//! they satisfy.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyalg::{
    rational_to_f64, snap_exact_root, sort_roots, squarefree_decompose, squarefree_roots, Polynomial,
};

/// Default relative separation required of every strict modulus inequality.
pub const DEFAULT_SEP_TOL: f64 = 1e-9;

/// A distinct root of the characteristic polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub root: Complex64,
    pub multiplicity: usize,
    /// Exact value when the root is real and rational.
    pub exact: Option<BigRational>,
}

impl SpectrumEntry {
    pub fn is_real(&self) -> bool {
        self.root.im == 0.0
    }

    pub fn modulus(&self) -> f64 {
        self.root.norm()
    }
}

/// The distinct complex roots of a characteristic polynomial with their
/// multiplicities, sorted by modulus (ties by real, then imaginary part).
#[derive(Clone, Debug, PartialEq)]
pub struct RootSpectrum {
    entries: Vec<SpectrumEntry>,
    source: Polynomial,
}

impl RootSpectrum {
    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn source(&self) -> &Polynomial {
        &self.source
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Builds a spectrum from prescribed rational real roots and rational
    /// conjugate pairs `re ± i·im` (give each pair once, `im > 0`). The source
    /// polynomial is the exact primitive product of the corresponding factors.
    pub fn from_exact_roots(
        real: &[(BigRational, usize)],
        pairs: &[((BigRational, BigRational), usize)],
    ) -> Result<Self> {
        let mut source = Polynomial::one();
        let mut entries = Vec::new();
        for (r, m) in real {
            if r.is_zero() {
                return Err(Error::domain("zero root: the constant coefficient must be nonzero"));
            }
            if *m == 0 {
                return Err(Error::domain("multiplicities must be positive"));
            }
            source = &source * &Polynomial::linear_factor(r).pow(*m);
            entries.push(SpectrumEntry {
                root: Complex64::new(rational_to_f64(r), 0.0),
                multiplicity: *m,
                exact: Some(r.clone()),
            });
        }
        for ((re, im), m) in pairs {
            if !im.is_positive() {
                return Err(Error::domain("conjugate pairs are given by their upper member"));
            }
            if *m == 0 {
                return Err(Error::domain("multiplicities must be positive"));
            }
            let two = BigRational::from_integer(2.into());
            let quad = Polynomial::new(vec![re * re + im * im, -(two * re), BigRational::one()]);
            source = &source * &quad.pow(*m);
            let (fre, fim) = (rational_to_f64(re), rational_to_f64(im));
            for sign in [1.0, -1.0] {
                entries.push(SpectrumEntry {
                    root: Complex64::new(fre, sign * fim),
                    multiplicity: *m,
                    exact: None,
                });
            }
        }
        if entries.is_empty() {
            return Err(Error::domain("a spectrum needs at least one root"));
        }
        let mut roots: Vec<Complex64> = entries.iter().map(|e| e.root).collect();
        sort_roots(&mut roots);
        if roots.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("roots must be pairwise distinct"));
        }
        sort_entries(&mut entries);
        Ok(RootSpectrum {
            entries,
            source: source.primitive(),
        })
    }

    /// Distinct real roots in spectrum order, with their entry indices.
    fn real_indices(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&i| self.entries[i].is_real()).collect()
    }
}

fn sort_entries(entries: &mut [SpectrumEntry]) {
    entries.sort_by(|a, b| {
        a.modulus()
            .total_cmp(&b.modulus())
            .then(a.root.re.total_cmp(&b.root.re))
            .then(a.root.im.total_cmp(&b.root.im))
    });
}

/// Computes the root spectrum of the characteristic polynomial `coeffs`.
///
/// Multiplicities come from the exact square-free decomposition; root values
/// from [`squarefree_roots`] on each square-free factor. Real roots that are exact
/// small-denominator rationals carry their exact value.
pub fn characteristic_spectrum(coeffs: &Polynomial, tol: f64) -> Result<RootSpectrum> {
    match coeffs.degree() {
        None | Some(0) => {
            return Err(Error::domain(format!(
                "characteristic polynomial {coeffs} must have degree at least 1"
            )))
        }
        Some(_) => {}
    }
    if coeffs.constant_term().is_zero() {
        return Err(Error::domain(format!(
            "constant coefficient a_0 of {coeffs} must be nonzero (the equation requires a_0 != 0)"
        )));
    }
    let mut entries = Vec::new();
    for part in squarefree_decompose(coeffs)? {
        for root in squarefree_roots(&part.factor, tol)? {
            let exact = snap_exact_root(&part.factor, root);
            let root = match &exact {
                Some(q) => Complex64::new(rational_to_f64(q), 0.0),
                None => root,
            };
            entries.push(SpectrumEntry {
                root,
                multiplicity: part.multiplicity,
                exact,
            });
        }
    }
    sort_entries(&mut entries);
    Ok(RootSpectrum {
        entries,
        source: coeffs.clone(),
    })
}

/// The three order-reduction patterns recognised by [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseKind {
    /// Every real root is strictly smaller in modulus than every non-real
    /// root; the non-real roots can be dropped for any continuous solution.
    NonRealElimination,
    /// A positive and a negative real root bracket all other roots in
    /// modulus; which one survives depends on the monotonicity of `f`.
    OppositeSignElimination,
    /// Two negative real roots `r1 < -1 < r2 < 0` bracket all other roots in
    /// modulus; a surjective solution satisfies one of two reduced equations.
    NegativePairElimination,
    NoneApplicable,
    Inconclusive,
}

impl CaseKind {
    pub fn name(self) -> &'static str {
        match self {
            CaseKind::NonRealElimination => "non_real_elimination",
            CaseKind::OppositeSignElimination => "opposite_sign_elimination",
            CaseKind::NegativePairElimination => "negative_pair_elimination",
            CaseKind::NoneApplicable => "none_applicable",
            CaseKind::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A reference to one spectrum entry.
#[derive(Clone, Debug, PartialEq)]
pub struct RootRef {
    pub index: usize,
    pub value: f64,
    pub exact: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Case {
    NonRealElimination,
    OppositeSignElimination {
        /// The positive root.
        positive: RootRef,
        /// The negative root.
        negative: RootRef,
        /// Decided on the exact rational value, never on the float.
        positive_is_one: bool,
    },
    NegativePairElimination {
        /// Real root of largest modulus, `r1 < -1`.
        r1: RootRef,
        /// Real root of smallest modulus, `-1 < r2 < 0`.
        r2: RootRef,
    },
    NoneApplicable,
    Inconclusive,
}

impl Case {
    pub fn kind(&self) -> CaseKind {
        match self {
            Case::NonRealElimination => CaseKind::NonRealElimination,
            Case::OppositeSignElimination { .. } => CaseKind::OppositeSignElimination,
            Case::NegativePairElimination { .. } => CaseKind::NegativePairElimination,
            Case::NoneApplicable => CaseKind::NoneApplicable,
            Case::Inconclusive => CaseKind::Inconclusive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypothesisStatus {
    Holds,
    /// No inequality is violated, but at least one holds only within `sep_tol`.
    Borderline,
    Fails,
}

/// Outcome of testing one pattern's hypotheses.
#[derive(Clone, Debug, PartialEq)]
pub struct HypothesisCheck {
    pub case: CaseKind,
    pub status: HypothesisStatus,
    /// Smallest relative gap over the strict inequalities that were evaluated.
    pub margin: Option<f64>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremClassification {
    pub case: Case,
    /// Every pattern whose hypotheses hold.
    pub applicable: Vec<CaseKind>,
    /// Margin of the primary case (or of the borderline checks when inconclusive).
    pub margin: Option<f64>,
    pub checks: Vec<HypothesisCheck>,
    /// Set when a bracketed root of the primary case is non-real.
    pub nonreal_bracketed: bool,
}

#[derive(Clone, Debug)]
struct Quantity {
    value: f64,
    exact: Option<BigRational>,
}

impl Quantity {
    fn modulus_of(e: &SpectrumEntry) -> Self {
        Quantity {
            value: e.modulus(),
            exact: e.exact.as_ref().map(|q| q.abs()),
        }
    }

    fn one() -> Self {
        Quantity {
            value: 1.0,
            exact: Some(BigRational::one()),
        }
    }
}

/// Accumulates strict inequalities `lhs < rhs` between nonnegative
/// quantities and decides the overall status.
struct Hypotheses {
    margin: Option<f64>,
    certified_false: bool,
    violated: bool,
    borderline: bool,
    note: String,
    sep_tol: f64,
}

impl Hypotheses {
    fn new(sep_tol: f64) -> Self {
        Hypotheses {
            margin: None,
            certified_false: false,
            violated: false,
            borderline: false,
            note: String::new(),
            sep_tol,
        }
    }

    fn fail(mut self, note: impl Into<String>) -> HypothesisOutcome {
        self.certified_false = true;
        self.note = note.into();
        self.finish()
    }

    fn less(&mut self, lhs: &Quantity, rhs: &Quantity, what: &str) {
        let denom = lhs.value.abs().max(rhs.value.abs());
        let margin = if denom > 0.0 {
            (rhs.value - lhs.value) / denom
        } else {
            0.0
        };
        self.margin = Some(self.margin.map_or(margin, |m: f64| m.min(margin)));
        let exact = match (&lhs.exact, &rhs.exact) {
            (Some(a), Some(b)) => Some(a.cmp(b)),
            _ => None,
        };
        match exact {
            Some(Ordering::Less) => {}
            Some(_) => {
                self.certified_false = true;
                self.note_once(what);
            }
            None if margin < -self.sep_tol => {
                self.violated = true;
                self.note_once(what);
            }
            None if margin <= self.sep_tol => {
                self.borderline = true;
                self.note_once(what);
            }
            None => {}
        }
    }

    fn note_once(&mut self, what: &str) {
        if self.note.is_empty() {
            self.note = what.to_string();
        }
    }

    fn finish(self) -> HypothesisOutcome {
        let status = if self.certified_false || self.violated {
            HypothesisStatus::Fails
        } else if self.borderline {
            HypothesisStatus::Borderline
        } else {
            HypothesisStatus::Holds
        };
        HypothesisOutcome {
            status,
            margin: self.margin,
            note: self.note,
        }
    }
}

struct HypothesisOutcome {
    status: HypothesisStatus,
    margin: Option<f64>,
    note: String,
}

fn root_ref(spec: &RootSpectrum, index: usize) -> RootRef {
    let e = &spec.entries[index];
    RootRef {
        index,
        value: e.root.re,
        exact: e.exact.clone(),
    }
}

fn check_nonreal_elimination(spec: &RootSpectrum, sep_tol: f64) -> HypothesisOutcome {
    let h = Hypotheses::new(sep_tol);
    let entries = &spec.entries;
    let real: Vec<&SpectrumEntry> = entries.iter().filter(|e| e.is_real()).collect();
    let nonreal: Vec<&SpectrumEntry> = entries.iter().filter(|e| !e.is_real()).collect();
    if nonreal.is_empty() {
        return h.fail("no non-real roots");
    }
    if real.is_empty() {
        return h.fail("no real roots to retain");
    }
    let mut h = h;
    let big_real = real
        .iter()
        .max_by(|a, b| a.modulus().total_cmp(&b.modulus()))
        .expect("nonempty");
    let small_pair = nonreal
        .iter()
        .min_by(|a, b| a.modulus().total_cmp(&b.modulus()))
        .expect("nonempty");
    h.less(
        &Quantity::modulus_of(big_real),
        &Quantity::modulus_of(small_pair),
        "a real root is not smaller in modulus than every non-real root",
    );
    h.finish()
}

/// Indices of the real roots of smallest and largest modulus, plus the rest.
fn bracket(spec: &RootSpectrum) -> Option<(usize, usize, Vec<usize>)> {
    let real = spec.real_indices();
    if real.len() < 2 {
        return None;
    }
    // entries are sorted by modulus, so the first and last real entries bracket
    let small = real[0];
    let big = *real.last().expect("two real roots");
    let rest = (0..spec.entries.len()).filter(|&i| i != small && i != big).collect();
    Some((small, big, rest))
}

fn check_bracket_moduli(h: &mut Hypotheses, spec: &RootSpectrum, small: usize, big: usize, rest: &[usize]) {
    let qs = Quantity::modulus_of(&spec.entries[small]);
    let qb = Quantity::modulus_of(&spec.entries[big]);
    h.less(&qs, &qb, "the bracketing roots have equal modulus");
    for &i in rest {
        let ql = Quantity::modulus_of(&spec.entries[i]);
        h.less(
            &qs,
            &ql,
            "the smallest real root does not strictly undercut every other root",
        );
        h.less(
            &ql,
            &qb,
            "the largest real root does not strictly exceed every other root",
        );
    }
}

fn check_opposite_sign(spec: &RootSpectrum, sep_tol: f64) -> (HypothesisOutcome, Option<(usize, usize)>) {
    let h = Hypotheses::new(sep_tol);
    let Some((small, big, rest)) = bracket(spec) else {
        return (h.fail("fewer than two real roots"), None);
    };
    let (rs, rb) = (spec.entries[small].root.re, spec.entries[big].root.re);
    if rs * rb >= 0.0 {
        return (h.fail("bracketing real roots have the same sign"), None);
    }
    let mut h = h;
    check_bracket_moduli(&mut h, spec, small, big, &rest);
    (h.finish(), Some((small, big)))
}

fn check_negative_pair(spec: &RootSpectrum, sep_tol: f64) -> (HypothesisOutcome, Option<(usize, usize)>) {
    let h = Hypotheses::new(sep_tol);
    let Some((small, big, rest)) = bracket(spec) else {
        return (h.fail("fewer than two real roots"), None);
    };
    let (rs, rb) = (spec.entries[small].root.re, spec.entries[big].root.re);
    if rs >= 0.0 || rb >= 0.0 {
        return (h.fail("bracketing real roots are not both negative"), None);
    }
    let mut h = h;
    let one = Quantity::one();
    h.less(&one, &Quantity::modulus_of(&spec.entries[big]), "r1 < -1 does not hold");
    h.less(
        &Quantity::modulus_of(&spec.entries[small]),
        &one,
        "-1 < r2 does not hold",
    );
    check_bracket_moduli(&mut h, spec, small, big, &rest);
    (h.finish(), Some((small, big)))
}

/// Tests the spectrum against the three reduction patterns.
///
/// Each strict inequality between moduli must hold with a relative gap above
/// `sep_tol`; gaps inside the tolerance give `Inconclusive` rather than a
/// guess. Comparisons between exact rational roots are decided exactly.
pub fn classify(spec: &RootSpectrum, sep_tol: f64) -> TheoremClassification {
    let nonreal = check_nonreal_elimination(spec, sep_tol);
    let (opposite, opposite_roots) = check_opposite_sign(spec, sep_tol);
    let (negative, negative_roots) = check_negative_pair(spec, sep_tol);

    let has_nonreal_rest = |a: usize, b: usize| {
        spec.entries
            .iter()
            .enumerate()
            .any(|(i, e)| i != a && i != b && !e.is_real())
    };

    let mut applicable = Vec::new();
    let mut primary: Option<(Case, Option<f64>, bool)> = None;
    if nonreal.status == HypothesisStatus::Holds {
        applicable.push(CaseKind::NonRealElimination);
        primary.get_or_insert((Case::NonRealElimination, nonreal.margin, false));
    }
    if opposite.status == HypothesisStatus::Holds {
        applicable.push(CaseKind::OppositeSignElimination);
        let (small, big) = opposite_roots.expect("roots recorded when the check holds");
        let (pos, neg) = if spec.entries[small].root.re > 0.0 {
            (small, big)
        } else {
            (big, small)
        };
        let positive = root_ref(spec, pos);
        let positive_is_one = positive.exact.as_ref().is_some_and(One::is_one);
        primary.get_or_insert((
            Case::OppositeSignElimination {
                positive,
                negative: root_ref(spec, neg),
                positive_is_one,
            },
            opposite.margin,
            has_nonreal_rest(small, big),
        ));
    }
    if negative.status == HypothesisStatus::Holds {
        applicable.push(CaseKind::NegativePairElimination);
        let (small, big) = negative_roots.expect("roots recorded when the check holds");
        primary.get_or_insert((
            Case::NegativePairElimination {
                r1: root_ref(spec, big),
                r2: root_ref(spec, small),
            },
            negative.margin,
            has_nonreal_rest(small, big),
        ));
    }

    let outcomes = [
        (CaseKind::NonRealElimination, &nonreal),
        (CaseKind::OppositeSignElimination, &opposite),
        (CaseKind::NegativePairElimination, &negative),
    ];
    let (case, margin, nonreal_bracketed) = primary.unwrap_or_else(|| {
        let borderline: Vec<f64> = outcomes
            .iter()
            .filter(|(_, o)| o.status == HypothesisStatus::Borderline)
            .filter_map(|(_, o)| o.margin)
            .collect();
        if borderline.is_empty() {
            (Case::NoneApplicable, None, false)
        } else {
            let m = borderline.into_iter().fold(f64::INFINITY, f64::min);
            (Case::Inconclusive, Some(m), false)
        }
    });
    let checks = outcomes
        .into_iter()
        .map(|(case, o)| HypothesisCheck {
            case,
            status: o.status,
            margin: o.margin,
            note: o.note.clone(),
        })
        .collect();
    TheoremClassification {
        case,
        applicable,
        margin,
        checks,
        nonreal_bracketed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn spectrum(desc: &[i64]) -> RootSpectrum {
        characteristic_spectrum(&Polynomial::from_i64_descending(desc), 1e-9).unwrap()
    }

    fn exact_roots(s: &RootSpectrum) -> Vec<(Option<BigRational>, usize)> {
        s.entries().iter().map(|e| (e.exact.clone(), e.multiplicity)).collect()
    }

    #[test]
    fn quadratic_spectrum() {
        let s = spectrum(&[2, 5, 2]);
        assert_eq!(exact_roots(&s), vec![(Some(q(-1, 2)), 1), (Some(q(-2, 1)), 1)]);
        assert_eq!(s.degree(), 2);
    }

    #[test]
    fn linear_and_cubic_spectra() {
        assert_eq!(exact_roots(&spectrum(&[1, -1])), vec![(Some(q(1, 1)), 1)]);
        let s = spectrum(&[2, 3, -3, -2]);
        assert_eq!(
            exact_roots(&s),
            vec![(Some(q(-1, 2)), 1), (Some(q(1, 1)), 1), (Some(q(-2, 1)), 1)]
        );
    }

    #[test]
    fn repeated_and_complex_roots() {
        // (r - 1)^2 (r^2 - 2r + 2)
        let p = &Polynomial::from_i64_descending(&[1, -1]).pow(2) * &Polynomial::from_i64_descending(&[1, -2, 2]);
        let s = characteristic_spectrum(&p, 1e-9).unwrap();
        assert_eq!(s.entries().len(), 3);
        assert_eq!(s.entries()[0].exact, Some(q(1, 1)));
        assert_eq!(s.entries()[0].multiplicity, 2);
        assert!((s.entries()[1].root - Complex64::new(1.0, -1.0)).norm() < 1e-12);
        assert_eq!(s.degree(), 4);
    }

    #[test]
    fn zero_constant_and_constant_rejected() {
        let err = characteristic_spectrum(&Polynomial::from_i64_descending(&[1, 1, 0]), 1e-9).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("a_0")));
        assert!(characteristic_spectrum(&Polynomial::from_i64(&[4]), 1e-9).is_err());
    }

    #[test]
    fn cubic_is_negative_pair() {
        let c = classify(&spectrum(&[2, 3, -3, -2]), DEFAULT_SEP_TOL);
        match &c.case {
            Case::NegativePairElimination { r1, r2 } => {
                assert_eq!(r1.exact, Some(q(-2, 1)));
                assert_eq!(r2.exact, Some(q(-1, 2)));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(c.applicable, vec![CaseKind::NegativePairElimination]);
        assert!(c.margin.unwrap() > 0.49);
    }

    #[test]
    fn dominant_pair_is_nonreal_elimination() {
        // 2 (r - 1/2)(r^2 - 2r + 2)
        let c = classify(&spectrum(&[2, -5, 6, -2]), DEFAULT_SEP_TOL);
        assert_eq!(c.case, Case::NonRealElimination);
        let m = c.margin.unwrap();
        assert!((m - (2f64.sqrt() - 0.5) / 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn quadratic_without_inner_roots() {
        let c = classify(&spectrum(&[2, 5, 2]), DEFAULT_SEP_TOL);
        assert_eq!(c.case.kind(), CaseKind::NegativePairElimination);
        assert!(!c.nonreal_bracketed);
    }

    #[test]
    fn opposite_sign_with_unit_positive_root() {
        // roots 1, -3, 3/2
        let s = RootSpectrum::from_exact_roots(&[(q(1, 1), 1), (q(-3, 1), 2), (q(3, 2), 1)], &[]).unwrap();
        let c = classify(&s, DEFAULT_SEP_TOL);
        match c.case {
            Case::OppositeSignElimination {
                positive,
                negative,
                positive_is_one,
            } => {
                assert_eq!(positive.exact, Some(q(1, 1)));
                assert_eq!(negative.exact, Some(q(-3, 1)));
                assert!(positive_is_one);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn equal_moduli_fail_exactly() {
        // roots -2, 2, -1/2: the bracketing moduli tie exactly
        let s = RootSpectrum::from_exact_roots(&[(q(-2, 1), 1), (q(2, 1), 1), (q(-1, 2), 1)], &[]).unwrap();
        assert_eq!(classify(&s, DEFAULT_SEP_TOL).case, Case::NoneApplicable);
        // r2 = -1 violates -1 < r2 exactly
        let s = RootSpectrum::from_exact_roots(&[(q(-3, 1), 1), (q(-1, 1), 1)], &[]).unwrap();
        assert_eq!(classify(&s, DEFAULT_SEP_TOL).case, Case::NoneApplicable);
    }

    #[test]
    fn near_tie_is_inconclusive() {
        // r2 = -1/2, r1 = -2, non-real pair of modulus just below 2
        let s = RootSpectrum::from_exact_roots(
            &[(q(-2, 1), 1), (q(-1, 2), 1)],
            &[((q(0, 1), q(1_999_999_999_999, 1_000_000_000_000)), 1)],
        )
        .unwrap();
        let c = classify(&s, DEFAULT_SEP_TOL);
        assert_eq!(c.case, Case::Inconclusive);
        assert!(c.margin.unwrap().abs() <= DEFAULT_SEP_TOL);
    }

    #[test]
    fn only_complex_roots_is_none() {
        let c = classify(&spectrum(&[1, 0, 1]), DEFAULT_SEP_TOL);
        assert_eq!(c.case, Case::NoneApplicable);
    }

    #[test]
    fn scaling_does_not_change_classification() {
        let a = classify(&spectrum(&[2, 3, -3, -2]), DEFAULT_SEP_TOL);
        let b = classify(&spectrum(&[-6, -9, 9, 6]), DEFAULT_SEP_TOL);
        assert_eq!(a, b);
    }

    #[test]
    fn nearly_coincident_real_roots_stay_real() {
        // (10^10 r + 10^10 + 1)(r + 1)(2r + 1)
        let s = spectrum(&[20_000_000_000, 50_000_000_002, 40_000_000_003, 10_000_000_001]);
        assert!(s.entries().iter().all(SpectrumEntry::is_real));
        assert_eq!(s.entries().len(), 3);
        assert_eq!(classify(&s, DEFAULT_SEP_TOL).case, Case::Inconclusive);
    }
}
