use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact univariate polynomial with rational coefficients.
///
/// Coefficients are stored in ascending order: `coeffs[k]` multiplies `r^k`.
/// Trailing zeros are always stripped, so the zero polynomial is the empty
/// vector and the last stored coefficient is the nonzero leading one.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from coefficients listed highest power first,
    /// the order in which equations are written (`a_n, ..., a_0`).
    pub fn from_descending(mut coeffs: Vec<BigRational>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Ascending integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Integer coefficients listed highest power first.
    pub fn from_i64_descending(coeffs: &[i64]) -> Self {
        let mut v = coeffs.to_vec();
        v.reverse();
        Self::from_i64(&v)
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The primitive integer linear factor `q r - p` vanishing at `p/q`.
    pub fn linear_factor(root: &BigRational) -> Self {
        let num = root.numer().clone();
        let den = root.denom().clone();
        Self::new(vec![BigRational::from_integer(-num), BigRational::from_integer(den)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficients highest power first.
    pub fn descending(&self) -> Vec<BigRational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Coefficient of `r^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(0)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients rounded to `f64`, ascending.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Scales to integer coefficients with gcd 1 and a positive leading
    /// coefficient. The zero polynomial maps to itself.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        Self::new(ints.into_iter().map(|c| BigRational::from_integer(c / &g)).collect())
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Long division. Errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = &rem[shift + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            // keep intermediate sizes in check
            x = y;
            y = r.primitive();
        }
        x.monic()
    }

    /// Reverses the coefficient vector: `r^n p(1/r)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.descending())
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator beyond f64 range
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Horner evaluation of `p` at a complex point, in floating point.
pub fn poly_eval(p: &Polynomial, z: Complex64) -> Complex64 {
    p.to_f64()
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Exact division with remainder; see [`Polynomial::div_rem`].
pub fn poly_divrem(dividend: &Polynomial, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    dividend.div_rem(divisor)
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Prints e.g. `2*r^2 + 5*r + 2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "r")?,
                _ => write!(f, "r^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn divrem_negative_quadratic() {
        let p = Polynomial::from_i64_descending(&[2, 5, 2]);
        let d = Polynomial::from_i64_descending(&[1, 2]);
        let (quo, rem) = poly_divrem(&p, &d).unwrap();
        assert_eq!(quo, Polynomial::from_i64_descending(&[2, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divrem_by_unit_and_with_remainder() {
        let p = Polynomial::from_i64_descending(&[3, 0, -7, 1]);
        let (quo, rem) = p.div_rem(&Polynomial::one()).unwrap();
        assert_eq!(quo, p);
        assert!(rem.is_zero());

        let (quo, rem) = Polynomial::from_i64_descending(&[1, 0, 1])
            .div_rem(&Polynomial::from_i64_descending(&[1, -1]))
            .unwrap();
        assert_eq!(quo, Polynomial::from_i64_descending(&[1, 1]));
        assert_eq!(rem, Polynomial::from_i64(&[2]));
    }

    #[test]
    fn divrem_zero_divisor_is_domain_error() {
        let p = Polynomial::from_i64(&[1, 1]);
        assert!(matches!(p.div_rem(&Polynomial::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn eval_exact_and_complex() {
        let p = Polynomial::from_i64_descending(&[2, 5, 2]);
        assert!(p.eval(&q(-2, 1)).is_zero());
        assert!(p.eval(&q(-1, 2)).is_zero());
        assert_eq!(p.eval(&q(1, 1)), q(9, 1));
        assert_eq!(p.eval(&q(0, 1)), p.constant_term());
        assert_eq!(poly_eval(&p, Complex64::new(-2.0, 0.0)), Complex64::new(0.0, 0.0));
        assert_eq!(poly_eval(&p, Complex64::new(1.0, 0.0)), Complex64::new(9.0, 0.0));
    }

    #[test]
    fn primitive_normalization() {
        let p = Polynomial::new(vec![q(-1, 2), q(-1, 4), q(-3, 2)]);
        assert_eq!(p.primitive(), Polynomial::from_i64(&[2, 1, 6]));
        assert_eq!(Polynomial::linear_factor(&q(-1, 2)), Polynomial::from_i64(&[1, 2]));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let a = Polynomial::from_i64_descending(&[2, 5, 2]);
        let b = &Polynomial::from_i64_descending(&[1, 2]) * &Polynomial::from_i64_descending(&[1, -3]);
        assert_eq!(Polynomial::gcd(&a, &b), Polynomial::from_i64_descending(&[1, 2]));
    }

    #[test]
    fn display() {
        let p = Polynomial::from_i64_descending(&[2, -1, 0, -1]);
        assert_eq!(p.to_string(), "2*r^3 - r^2 - 1");
        assert_eq!(Polynomial::new(vec![q(1, 2), q(-1, 1)]).to_string(), "-r + 1/2");
    }
}
