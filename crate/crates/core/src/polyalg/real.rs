use num_complex::Complex64;

use crate::error::{Error, Result};

/// Polynomial with floating-point real coefficients, ascending order.
///
/// Produced when a reduced equation has to be rebuilt from numeric roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        RealPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<f64> {
        self.coeffs.iter().rev().copied().collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<f64> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Largest absolute coefficient.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Floating long division.
    pub fn div_rem(&self, divisor: &RealPolynomial) -> Result<(RealPolynomial, RealPolynomial)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let Some(nd) = self.degree() else {
            return Ok((Self::new(vec![]), Self::new(vec![])));
        };
        if nd < dd {
            return Ok((Self::new(vec![]), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0.0; nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = rem[shift + dd] / divisor.coeffs[dd];
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_division() {
        let p = RealPolynomial::new(vec![2.0, 5.0, 2.0]);
        let (q, r) = p.div_rem(&RealPolynomial::new(vec![2.0, 1.0])).unwrap();
        assert_eq!(q.coeffs(), &[1.0, 2.0]);
        assert!(r.coeffs().iter().all(|c| *c == 0.0));
        let (_, r) = p.div_rem(&RealPolynomial::new(vec![-1.0, 1.0])).unwrap();
        assert_eq!(r.coeffs(), &[9.0]);
    }
}
