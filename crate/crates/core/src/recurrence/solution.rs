use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::spectrum::RootSpectrum;

/// Reciprocal condition number below which the fitting system is rejected.
pub const RCOND_THRESHOLD: f64 = 1e-10;

/// Contribution `A(j) λ^j` of a real root `λ` of multiplicity `l`,
/// with `deg A <= l - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealTerm {
    pub root: f64,
    pub multiplicity: usize,
    /// Coefficients of `A`, ascending in `j`.
    pub coeffs: Vec<f64>,
}

/// Contribution `(B(j) cos jφ + C(j) sin jφ) ρ^j` of a conjugate pair
/// `ρ e^{±iφ}` of multiplicity `m`, with `deg B, deg C <= m - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct OscillatingTerm {
    pub modulus: f64,
    /// Argument in `(0, π)`.
    pub argument: f64,
    pub multiplicity: usize,
    pub cos_coeffs: Vec<f64>,
    pub sin_coeffs: Vec<f64>,
}

/// Closed form of a real solution of the linear recurrence whose
/// characteristic roots are given by a spectrum. Valid for every integer `j`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct GeneralSolution {
    pub real_terms: Vec<RealTerm>,
    pub complex_terms: Vec<OscillatingTerm>,
}

fn power(base: f64, j: i64) -> f64 {
    let e = j.unsigned_abs().min(i32::MAX as u64) as i32;
    if j >= 0 {
        base.powi(e)
    } else {
        1.0 / base.powi(e)
    }
}

fn jpow(j: i64, m: usize) -> f64 {
    (j as f64).powi(m as i32)
}

/// Evaluates a coefficient polynomial (ascending) at `j`.
pub(crate) fn poly_at(coeffs: &[f64], j: i64) -> f64 {
    let x = j as f64;
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

impl GeneralSolution {
    /// All-zero solution over the basis determined by `spec`.
    pub fn zero_for(spec: &RootSpectrum) -> Result<Self> {
        let mut gs = GeneralSolution::default();
        for e in spec.entries() {
            if e.root.norm() == 0.0 {
                return Err(Error::domain("zero root in spectrum"));
            }
            if e.is_real() {
                gs.real_terms.push(RealTerm {
                    root: e.root.re,
                    multiplicity: e.multiplicity,
                    coeffs: vec![0.0; e.multiplicity],
                });
            } else if e.root.im > 0.0 {
                gs.complex_terms.push(OscillatingTerm {
                    modulus: e.root.norm(),
                    argument: e.root.arg(),
                    multiplicity: e.multiplicity,
                    cos_coeffs: vec![0.0; e.multiplicity],
                    sin_coeffs: vec![0.0; e.multiplicity],
                });
            }
        }
        Ok(gs)
    }

    /// Number of free coefficients, equal to the recurrence order.
    pub fn dimension(&self) -> usize {
        self.real_terms.iter().map(|t| t.multiplicity).sum::<usize>()
            + 2 * self.complex_terms.iter().map(|t| t.multiplicity).sum::<usize>()
    }

    /// Basis functions `j^m λ^j`, `j^m ρ^j cos jφ`, `j^m ρ^j sin jφ` at `j`,
    /// in the order used by [`Self::coefficients`].
    pub fn basis_at(&self, j: i64) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dimension());
        for t in &self.real_terms {
            let base = power(t.root, j);
            out.extend((0..t.multiplicity).map(|m| jpow(j, m) * base));
        }
        for t in &self.complex_terms {
            let base = power(t.modulus, j);
            let angle = j as f64 * t.argument;
            let (s, c) = angle.sin_cos();
            out.extend((0..t.multiplicity).map(|m| jpow(j, m) * base * c));
            out.extend((0..t.multiplicity).map(|m| jpow(j, m) * base * s));
        }
        out
    }

    /// Flattened coefficient vector.
    pub fn coefficients(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dimension());
        for t in &self.real_terms {
            out.extend(&t.coeffs);
        }
        for t in &self.complex_terms {
            out.extend(&t.cos_coeffs);
            out.extend(&t.sin_coeffs);
        }
        out
    }

    /// Overwrites the coefficients from a flattened vector.
    pub fn set_coefficients(&mut self, c: &[f64]) -> Result<()> {
        if c.len() != self.dimension() {
            return Err(Error::domain(format!(
                "expected {} coefficients, got {}",
                self.dimension(),
                c.len()
            )));
        }
        let mut it = c.iter().copied();
        for t in &mut self.real_terms {
            t.coeffs = it.by_ref().take(t.multiplicity).collect();
        }
        for t in &mut self.complex_terms {
            t.cos_coeffs = it.by_ref().take(t.multiplicity).collect();
            t.sin_coeffs = it.by_ref().take(t.multiplicity).collect();
        }
        Ok(())
    }

    /// Real term whose root lies within `1e-9` relative of `root`.
    pub fn real_term(&self, root: f64) -> Option<&RealTerm> {
        self.real_terms
            .iter()
            .find(|t| (t.root - root).abs() <= 1e-9 * root.abs().max(1.0))
    }

    /// Largest of `|λ|` and `1/|λ|` over all roots; orbit values over
    /// `[-J, J]` grow at most like this to the power `J`.
    pub fn growth_base(&self) -> f64 {
        self.real_terms
            .iter()
            .map(|t| t.root.abs())
            .chain(self.complex_terms.iter().map(|t| t.modulus))
            .map(|m| m.max(1.0 / m))
            .fold(1.0, f64::max)
    }

    pub fn eval(&self, j: i64) -> Result<f64> {
        eval_general_solution(self, j)
    }
}

/// Evaluates the closed form at any integer `j`; negative powers are taken
/// as reciprocals of positive ones.
pub fn eval_general_solution(gs: &GeneralSolution, j: i64) -> Result<f64> {
    let mut x = 0.0;
    for t in &gs.real_terms {
        x += poly_at(&t.coeffs, j) * power(t.root, j);
    }
    for t in &gs.complex_terms {
        let (s, c) = (j as f64 * t.argument).sin_cos();
        x += (poly_at(&t.cos_coeffs, j) * c + poly_at(&t.sin_coeffs, j) * s) * power(t.modulus, j);
    }
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::numeric(format!("general solution is not finite at j = {j}")))
    }
}

/// Solves for the unique solution taking the values `initial` at
/// `j = 0, ..., n-1`.
pub fn fit_general_solution(spec: &RootSpectrum, initial: &[f64]) -> Result<GeneralSolution> {
    let n = spec.degree();
    if initial.len() != n {
        return Err(Error::domain(format!(
            "{} initial values given for a recurrence of order {n}",
            initial.len()
        )));
    }
    let mut gs = GeneralSolution::zero_for(spec)?;
    let mut m = DMatrix::from_fn(n, n, |_, _| 0.0);
    for j in 0..n {
        for (col, v) in gs.basis_at(j as i64).into_iter().enumerate() {
            m[(j, col)] = v;
        }
    }
    let col_scale: Vec<f64> = (0..n)
        .map(|c| m.column(c).amax())
        .map(|s| if s > 0.0 { s } else { 1.0 })
        .collect();
    for (c, s) in col_scale.iter().enumerate() {
        m.column_mut(c).scale_mut(1.0 / s);
    }

    let sv = m.clone().singular_values();
    let (smin, smax) = (sv.min(), sv.max());
    if !(smax > 0.0 && smin / smax >= RCOND_THRESHOLD) {
        return Err(Error::numeric(format!(
            "fitting system is numerically singular (reciprocal condition {:e})",
            if smax > 0.0 { smin / smax } else { 0.0 }
        )));
    }
    let rhs = DVector::from_column_slice(initial);
    let sol = m
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::numeric("fitting system is singular"))?;
    let coeffs: Vec<f64> = sol.iter().zip(&col_scale).map(|(c, s)| c / s).collect();
    gs.set_coefficients(&coeffs)?;

    let scale = initial
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    for (j, v) in initial.iter().enumerate() {
        let got = gs.eval(j as i64)?;
        if (got - v).abs() > 1e-9 * scale {
            return Err(Error::numeric(format!(
                "fitted solution misses x_{j} = {v} (got {got})"
            )));
        }
    }
    Ok(gs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn real_spec(roots: &[(i64, i64, usize)]) -> RootSpectrum {
        let r: Vec<_> = roots.iter().map(|&(n, d, m)| (q(n, d), m)).collect();
        RootSpectrum::from_exact_roots(&r, &[]).unwrap()
    }

    #[test]
    fn two_distinct_roots() {
        let gs = fit_general_solution(&real_spec(&[(2, 1, 1), (3, 1, 1)]), &[2.0, 5.0]).unwrap();
        assert!((gs.real_term(2.0).unwrap().coeffs[0] - 1.0).abs() < 1e-12);
        assert!((gs.real_term(3.0).unwrap().coeffs[0] - 1.0).abs() < 1e-12);
        assert!((gs.eval(2).unwrap() - 13.0).abs() < 1e-12);
        assert!((gs.eval(-1).unwrap() - 5.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn repeated_unit_root() {
        let gs = fit_general_solution(&real_spec(&[(1, 1, 2)]), &[0.0, 1.0]).unwrap();
        let t = &gs.real_terms[0];
        assert!(t.coeffs[0].abs() < 1e-12 && (t.coeffs[1] - 1.0).abs() < 1e-12);
        assert!((gs.eval(-7).unwrap() + 7.0).abs() < 1e-12);
    }

    #[test]
    fn rotation_by_quarter_turn() {
        let spec = RootSpectrum::from_exact_roots(&[], &[((q(0, 1), q(1, 1)), 1)]).unwrap();
        let gs = fit_general_solution(&spec, &[1.0, 0.0]).unwrap();
        let t = &gs.complex_terms[0];
        assert!((t.modulus - 1.0).abs() < 1e-15);
        assert!((t.argument - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!((t.cos_coeffs[0] - 1.0).abs() < 1e-12 && t.sin_coeffs[0].abs() < 1e-12);
        assert!((gs.eval(4).unwrap() - 1.0).abs() < 1e-12);
        assert!((gs.eval(2).unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn wrong_initial_length() {
        let err = fit_general_solution(&real_spec(&[(2, 1, 1)]), &[1.0, 2.0]).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn overflow_is_reported() {
        let mut gs = GeneralSolution::zero_for(&real_spec(&[(1, 1000, 1)])).unwrap();
        gs.set_coefficients(&[1.0]).unwrap();
        assert!(matches!(gs.eval(-400), Err(Error::Numeric(m)) if m.contains("-400")));
    }
}
