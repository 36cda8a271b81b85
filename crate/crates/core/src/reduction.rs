//! Reduced equations for each applicable reduction pattern, the
//! divisibility check behind them and the dual equation.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polyalg::{rational_to_f64, reconstruct_from_roots, Polynomial, RealPolynomial};
use crate::spectrum::{Case, CaseKind, RootSpectrum, SpectrumEntry, TheoremClassification};

/// What must be known about a continuous solution `f` for a reduced
/// equation to be equivalent to the original one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prerequisite {
    AnyContinuous,
    IncreasingSurjection,
    DecreasingSurjection,
    Surjection,
}

impl Prerequisite {
    pub fn name(self) -> &'static str {
        match self {
            Prerequisite::AnyContinuous => "any_continuous",
            Prerequisite::IncreasingSurjection => "increasing_surjection",
            Prerequisite::DecreasingSurjection => "decreasing_surjection",
            Prerequisite::Surjection => "surjection",
        }
    }
}

impl fmt::Display for Prerequisite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub case: CaseKind,
    /// Zero-based index among the alternatives of the report.
    pub alternative: usize,
    pub prerequisite: Prerequisite,
}

/// Characteristic coefficients of a reduced equation.
#[derive(Clone, Debug, PartialEq)]
pub enum ReducedCoeffs {
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    Exact(Polynomial),
    /// Monic floating coefficients.
    Numeric(RealPolynomial),
}

impl ReducedCoeffs {
    pub fn degree(&self) -> usize {
        match self {
            ReducedCoeffs::Exact(p) => p.degree(),
            ReducedCoeffs::Numeric(p) => p.degree(),
        }
        .unwrap_or(0)
    }

    /// Coefficients as floats, ascending.
    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            ReducedCoeffs::Exact(p) => p.to_f64(),
            ReducedCoeffs::Numeric(p) => p.coeffs().to_vec(),
        }
    }

    pub fn exact(&self) -> Option<&Polynomial> {
        match self {
            ReducedCoeffs::Exact(p) => Some(p),
            ReducedCoeffs::Numeric(_) => None,
        }
    }
}

/// Real polynomials that can be evaluated at a floating point.
pub trait EvalReal {
    fn eval_f64(&self, x: f64) -> f64;
    /// Coefficients as floats, ascending.
    fn coeffs_f64(&self) -> Vec<f64>;
}

impl EvalReal for Polynomial {
    fn eval_f64(&self, x: f64) -> f64 {
        self.to_f64().iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
    fn coeffs_f64(&self) -> Vec<f64> {
        self.to_f64()
    }
}

impl EvalReal for RealPolynomial {
    fn eval_f64(&self, x: f64) -> f64 {
        self.eval(x)
    }
    fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs().to_vec()
    }
}

impl EvalReal for ReducedCoeffs {
    fn eval_f64(&self, x: f64) -> f64 {
        match self {
            ReducedCoeffs::Exact(p) => p.eval_f64(x),
            ReducedCoeffs::Numeric(p) => p.eval(x),
        }
    }
    fn coeffs_f64(&self) -> Vec<f64> {
        self.to_f64()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReducedEquation {
    /// Retained roots with the multiplicities they keep in the reduced equation.
    pub retained: Vec<SpectrumEntry>,
    pub coeffs: ReducedCoeffs,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    pub classification: TheoremClassification,
    pub alternatives: Vec<ReducedEquation>,
    /// True when which alternative holds depends on the particular solution.
    pub exclusive_alternatives: bool,
}

/// Builds the reduced equations for the primary case of `classification`.
///
/// Coefficients are exact whenever the retained roots are all rational, or
/// the eliminated roots are all rational (then the retained polynomial is an
/// exact quotient of the original); otherwise they are rebuilt numerically
/// from the retained roots and made monic.
pub fn reduce(spec: &RootSpectrum, classification: &TheoremClassification) -> Result<ReductionReport> {
    let n = spec.entries().len();
    let all_but = |skip: &[usize]| -> Vec<(usize, usize)> {
        (0..n)
            .filter(|i| !skip.contains(i))
            .map(|i| (i, spec.entries()[i].multiplicity))
            .collect()
    };
    let kind = classification.case.kind();
    let plans: Vec<(Vec<(usize, usize)>, Prerequisite)> = match &classification.case {
        Case::NonRealElimination => {
            let real: Vec<(usize, usize)> = (0..n)
                .filter(|&i| spec.entries()[i].is_real())
                .map(|i| (i, spec.entries()[i].multiplicity))
                .collect();
            vec![(real, Prerequisite::AnyContinuous)]
        }
        Case::OppositeSignElimination {
            positive,
            negative,
            positive_is_one,
        } => {
            let increasing = all_but(&[negative.index]);
            let decreasing = if *positive_is_one {
                // the unit root stays, but only simply
                let mut plan = all_but(&[positive.index]);
                plan.push((positive.index, 1));
                plan.sort();
                plan
            } else {
                all_but(&[positive.index])
            };
            vec![
                (increasing, Prerequisite::IncreasingSurjection),
                (decreasing, Prerequisite::DecreasingSurjection),
            ]
        }
        Case::NegativePairElimination { r1, r2 } => vec![
            (all_but(&[r2.index]), Prerequisite::Surjection),
            (all_but(&[r1.index]), Prerequisite::Surjection),
        ],
        Case::NoneApplicable | Case::Inconclusive => {
            return Err(Error::domain(format!(
                "no reduction available: classification is {kind}"
            )))
        }
    };

    let alternatives = plans
        .into_iter()
        .enumerate()
        .map(|(alternative, (plan, prerequisite))| {
            Ok(ReducedEquation {
                retained: plan
                    .iter()
                    .map(|&(i, m)| SpectrumEntry {
                        multiplicity: m,
                        ..spec.entries()[i].clone()
                    })
                    .collect(),
                coeffs: retained_coeffs(spec, &plan)?,
                provenance: Provenance {
                    case: kind,
                    alternative,
                    prerequisite,
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ReductionReport {
        classification: classification.clone(),
        alternatives,
        exclusive_alternatives: matches!(
            kind,
            CaseKind::NegativePairElimination | CaseKind::OppositeSignElimination
        ),
    })
}

fn retained_coeffs(spec: &RootSpectrum, plan: &[(usize, usize)]) -> Result<ReducedCoeffs> {
    let entries = spec.entries();
    let exact_product = |items: &[(usize, usize)]| -> Option<Polynomial> {
        items.iter().try_fold(Polynomial::one(), |acc, &(i, m)| {
            let q = entries[i].exact.as_ref()?;
            Some(&acc * &Polynomial::linear_factor(q).pow(m))
        })
    };
    if let Some(p) = exact_product(plan) {
        return Ok(ReducedCoeffs::Exact(p.primitive()));
    }

    let eliminated: Vec<(usize, usize)> = (0..entries.len())
        .filter_map(|i| {
            let kept = plan.iter().find(|(j, _)| *j == i).map_or(0, |&(_, m)| m);
            let gone = entries[i].multiplicity - kept;
            (gone > 0).then_some((i, gone))
        })
        .collect();
    if let Some(divisor) = exact_product(&eliminated) {
        let (quotient, remainder) = spec.source().div_rem(&divisor)?;
        if remainder.is_zero() {
            return Ok(ReducedCoeffs::Exact(quotient.primitive()));
        }
    }

    let roots: Vec<_> = plan.iter().map(|&(i, m)| (entries[i].root, m)).collect();
    Ok(ReducedCoeffs::Numeric(reconstruct_from_roots(&roots, 1.0)?))
}

/// Result of testing whether a reduced characteristic polynomial divides the original.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisibilityReport {
    pub divides: bool,
    /// Largest absolute remainder coefficient.
    pub remainder_norm: f64,
    /// Whether the decision was made in exact arithmetic.
    pub exact: bool,
}

/// Checks that `reduced` divides `original`, so that every solution of the
/// reduced equation also solves the original one.
///
/// Exact inputs are divided exactly; numeric ones pass when the remainder
/// norm is at most `tol` times the original's coefficient norm.
pub fn check_divisibility(reduced: &ReducedCoeffs, original: &Polynomial, tol: f64) -> Result<DivisibilityReport> {
    match reduced {
        ReducedCoeffs::Exact(b) => {
            let (_, rem) = original.div_rem(b)?;
            let norm = rem
                .coeffs()
                .iter()
                .map(|c| rational_to_f64(&c.abs()))
                .fold(0.0, f64::max);
            Ok(DivisibilityReport {
                divides: rem.is_zero(),
                remainder_norm: norm,
                exact: true,
            })
        }
        ReducedCoeffs::Numeric(b) => {
            let a = RealPolynomial::new(original.to_f64());
            let (_, rem) = a.div_rem(b)?;
            let norm = rem.max_norm();
            Ok(DivisibilityReport {
                divides: norm <= tol * a.max_norm(),
                remainder_norm: norm,
                exact: false,
            })
        }
    }
}

/// Reverses the characteristic coefficients. A bijective `f` solves the
/// original equation exactly when `f^-1` solves this one.
pub fn dual_equation(coeffs: &Polynomial) -> Result<Polynomial> {
    if coeffs.is_zero() || coeffs.constant_term().is_zero() {
        return Err(Error::domain(format!(
            "dual equation of {coeffs} needs nonzero a_0 and a_n"
        )));
    }
    Ok(coeffs.reversed())
}

/// Largest `|sum_k a_k slope^k x|` over the sample points, that is the
/// residual of `f(x) = slope * x` in the equation.
pub fn linear_solution_residual<P: EvalReal + ?Sized>(coeffs: &P, slope: f64, points: &[f64]) -> f64 {
    let value = coeffs.eval_f64(slope).abs();
    points.iter().map(|x| value * x.abs()).fold(0.0, f64::max)
}

/// Magnitude against which [`linear_solution_residual`] is judged zero:
/// `max|a_k| * max(1, |slope|)^n * max|x|`.
pub fn linear_solution_scale<P: EvalReal + ?Sized>(coeffs: &P, slope: f64, points: &[f64]) -> f64 {
    let c = coeffs.coeffs_f64();
    let max_a = c.iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let max_x = points.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let n = c.len().saturating_sub(1) as i32;
    max_a * slope.abs().max(1.0).powi(n) * max_x
}

/// Exact counterpart of [`linear_solution_residual`].
pub fn linear_solution_residual_exact(coeffs: &Polynomial, slope: &BigRational, points: &[BigRational]) -> BigRational {
    let value = coeffs.eval(slope).abs();
    points
        .iter()
        .map(|x| &value * x.abs())
        .fold(BigRational::zero(), |m, r| if r > m { r } else { m })
}
