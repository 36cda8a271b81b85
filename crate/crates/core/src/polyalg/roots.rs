use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::{Polynomial, RealPolynomial};

/// Iteration cap for the simultaneous root iteration.
pub const MAX_ITERATIONS: usize = 200;

/// Roots with `|im| < SNAP_REAL * |z|` are moved onto the real axis.
pub const SNAP_REAL: f64 = 1e-10;

/// Largest denominator tried when snapping a real root to a rational.
pub const SNAP_MAX_DENOMINATOR: i64 = 1000;

/// Distance within which a real root is replaced by a nearby rational.
pub const SNAP_RATIONAL_TOL: f64 = 1e-10;

/// Finds all complex roots of a square-free polynomial with Aberth's method.
///
/// Initial guesses sit on a circle whose radius is the Cauchy bound. Roots
/// that come back with negligible imaginary part are snapped onto the real
/// axis and the rest are matched into exact conjugate pairs. Every returned
/// root satisfies `|p(z)| <= tol * max|c_k| * max(1, |z|)^deg`.
///
/// The result is sorted by modulus, then by real and imaginary part.
pub fn find_roots(p: &Polynomial, tol: f64) -> Result<Vec<Complex64>> {
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::domain(format!("cannot find roots of constant polynomial {p}"))),
    };
    let coeffs = p.to_f64();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::numeric(format!("coefficients of {p} overflow f64")));
    }

    let raw = if degree == 1 {
        vec![Complex64::new(-coeffs[0] / coeffs[1], 0.0)]
    } else {
        aberth(&coeffs).ok_or_else(|| {
            Error::numeric(format!(
                "root iteration for {p} did not converge within {MAX_ITERATIONS} iterations"
            ))
        })?
    };
    let mut roots = pair_conjugates(raw)
        .ok_or_else(|| Error::numeric(format!("roots of {p} could not be matched into conjugate pairs")))?;

    let max_coeff = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let poly = RealPolynomial::new(coeffs);
    for z in &roots {
        let scale = max_coeff * z.norm().max(1.0).powi(degree as i32);
        let residual = poly.eval_complex(*z).norm();
        if residual.is_nan() || residual > tol * scale {
            return Err(Error::numeric(format!(
                "root {z} of {p} has residual {residual:e} above tolerance"
            )));
        }
    }
    sort_roots(&mut roots);
    Ok(roots)
}

/// Sort key shared by every root listing: modulus, then real, then imaginary part.
pub fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| {
        a.norm()
            .total_cmp(&b.norm())
            .then(a.re.total_cmp(&b.re))
            .then(a.im.total_cmp(&b.im))
    });
}

fn horner_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut value = Complex64::zero();
    let mut deriv = Complex64::zero();
    let mut bound = 0.0;
    let az = z.norm();
    for &c in coeffs.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + c;
        bound = bound * az + c.abs();
    }
    (value, deriv, bound)
}

fn aberth(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    // the offset keeps the starting set off any symmetry of the real axis
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();
    let mut done = vec![false; n];

    for _ in 0..MAX_ITERATIONS {
        for k in 0..n {
            let (value, deriv, bound) = horner_with_derivative(&monic, z[k]);
            if value.norm() <= 4.0 * f64::EPSILON * bound {
                done[k] = true;
                continue;
            }
            let ratio = value / deriv;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[k] -= step;
            done[k] = step.norm() <= 2.0 * f64::EPSILON * z[k].norm();
        }
        if done.iter().all(|&d| d) {
            return Some(z);
        }
    }
    // accept a stalled iteration only if every root is already at roundoff level
    z.iter()
        .all(|&zk| {
            let (value, _, bound) = horner_with_derivative(&monic, zk);
            value.norm() <= 64.0 * f64::EPSILON * bound
        })
        .then_some(z)
}

/// Snaps near-real roots onto the axis and greedily pairs the rest into
/// exact conjugates. Returns `None` when the non-real roots cannot be paired.
pub fn pair_conjugates(roots: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let mut out = Vec::with_capacity(roots.len());
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for z in roots {
        if z.im.abs() < SNAP_REAL * z.norm() || z.im == 0.0 {
            out.push(Complex64::new(z.re, 0.0));
        } else if z.im > 0.0 {
            upper.push(z);
        } else {
            lower.push(z);
        }
    }
    if upper.len() != lower.len() {
        return None;
    }
    for u in upper {
        let (idx, _) = lower
            .iter()
            .enumerate()
            .map(|(i, l)| (i, (u - l.conj()).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))?;
        let l = lower.swap_remove(idx);
        let re = 0.5 * (u.re + l.re);
        let im = 0.5 * (u.im - l.im);
        out.push(Complex64::new(re, im));
        out.push(Complex64::new(re, -im));
    }
    Some(out)
}

/// Best rational approximation `p/q` with `q <= max_den` lying within `tol`
/// of `x`, found by walking the continued-fraction convergents.
pub fn rational_snap(x: f64, max_den: i64, tol: f64) -> Option<BigRational> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let (mut h_prev, mut h) = (1i128, x.floor() as i128);
    let (mut k_prev, mut k) = (0i128, 1i128);
    let mut frac = x - x.floor();
    loop {
        let approx = h as f64 / k as f64;
        if (x - approx).abs() <= tol {
            return Some(BigRational::new(h.into(), k.into()));
        }
        if frac.abs() < 1e-300 {
            return None;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        let a = a as i128;
        let h_next = a.checked_mul(h)?.checked_add(h_prev)?;
        let k_next = a.checked_mul(k)?.checked_add(k_prev)?;
        if k_next > max_den as i128 {
            return None;
        }
        (h_prev, h, k_prev, k) = (h, h_next, k, k_next);
    }
}

/// Expands `leading * prod (r - z)^m` over a conjugate-closed root multiset
/// and returns the real coefficients.
pub fn reconstruct_from_roots(roots: &[(Complex64, usize)], leading: f64) -> Result<RealPolynomial> {
    check_conjugate_closed(roots)?;
    let mut prod = vec![Complex64::new(1.0, 0.0)];
    for &(z, m) in roots {
        for _ in 0..m {
            let mut next = vec![Complex64::zero(); prod.len() + 1];
            for (k, c) in prod.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * z;
            }
            prod = next;
        }
    }
    let scale = prod.iter().fold(0.0f64, |m, c| m.max(c.re.abs()));
    if let Some(bad) = prod.iter().find(|c| c.im.abs() > 1e-10 * scale) {
        return Err(Error::numeric(format!(
            "reconstructed coefficient {bad} keeps an imaginary part"
        )));
    }
    Ok(RealPolynomial::new(prod.iter().map(|c| c.re * leading).collect()))
}

fn check_conjugate_closed(roots: &[(Complex64, usize)]) -> Result<()> {
    let mut used = vec![false; roots.len()];
    for (i, &(z, m)) in roots.iter().enumerate() {
        if z.im == 0.0 || used[i] {
            continue;
        }
        let tol = 1e-9 * z.norm().max(1.0);
        let partner = roots.iter().enumerate().position(|(j, &(w, mw))| {
            j != i && !used[j] && mw == m && (w - z.conj()).norm() <= tol && w.im * z.im < 0.0
        });
        match partner {
            Some(j) => {
                used[i] = true;
                used[j] = true;
            }
            None => {
                return Err(Error::domain(format!(
                    "root {z} (multiplicity {m}) has no conjugate partner"
                )))
            }
        }
    }
    Ok(())
}
