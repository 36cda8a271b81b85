//! Exact rational polynomial arithmetic and floating root isolation.
//!
//! Everything that decides multiplicities or divisibility runs on
//! [`Polynomial`] with exact rational coefficients. Only root values and
//! polynomials rebuilt from them are floating point.

mod poly;
mod real;
mod roots;
mod squarefree;
mod sturm;

pub(crate) use poly::rational_to_f64;
pub use poly::{poly_divrem, poly_eval, Polynomial};
pub use real::RealPolynomial;
pub use roots::{
    find_roots, pair_conjugates, rational_snap, reconstruct_from_roots, sort_roots, MAX_ITERATIONS,
    SNAP_MAX_DENOMINATOR, SNAP_RATIONAL_TOL, SNAP_REAL,
};
pub use squarefree::{squarefree_decompose, SquarefreePart};
pub use sturm::{count_real_roots, isolate_real_roots, sturm_sequence};

use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Roots of a square-free polynomial, with the number of real roots
/// certified by a Sturm sequence.
///
/// When the floating iteration merges nearly coincident real roots into a
/// spurious conjugate pair, the real roots are recomputed by exact bisection
/// and the pairs closest to the real axis are dropped.
pub fn squarefree_roots(factor: &Polynomial, tol: f64) -> Result<Vec<Complex64>> {
    let roots = find_roots(factor, tol)?;
    let certified = count_real_roots(factor);
    let numeric = roots.iter().filter(|z| z.im == 0.0).count();
    match numeric.cmp(&certified) {
        std::cmp::Ordering::Equal => Ok(roots),
        std::cmp::Ordering::Greater => Err(Error::numeric(format!(
            "{factor} has {certified} real roots but {numeric} were found; \
             a complex pair lies too close to the real axis to resolve"
        ))),
        std::cmp::Ordering::Less => {
            let mut upper: Vec<Complex64> = roots.into_iter().filter(|z| z.im > 0.0).collect();
            upper.sort_by(|a, b| b.im.total_cmp(&a.im));
            upper.truncate((factor.degree().unwrap_or(0) - certified) / 2);
            let mut out: Vec<Complex64> = isolate_real_roots(factor)
                .into_iter()
                .map(|x| Complex64::new(x, 0.0))
                .collect();
            out.extend(upper.iter().flat_map(|z| [*z, z.conj()]));
            sort_roots(&mut out);
            Ok(out)
        }
    }
}

/// Replaces a real floating root of `factor` by an exact rational when a
/// small-denominator candidate is within tolerance and vanishes exactly.
pub fn snap_exact_root(factor: &Polynomial, z: Complex64) -> Option<BigRational> {
    if z.im != 0.0 {
        return None;
    }
    let candidate = rational_snap(z.re, SNAP_MAX_DENOMINATOR, SNAP_RATIONAL_TOL)?;
    factor
        .eval(&candidate)
        .eq(&num_traits::Zero::zero())
        .then_some(candidate)
}
