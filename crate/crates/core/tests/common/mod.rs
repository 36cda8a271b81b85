//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use polylike::polyalg::Polynomial;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.numer().to_string().parse::<f64>().unwrap() / x.denom().to_string().parse::<f64>().unwrap()
}

/// Rational `p/d` with `d <= max_den` and `lo <= |p/d| <= hi`, random sign.
pub fn rational_in(rng: &mut impl Rng, lo: f64, hi: f64, max_den: i64) -> BigRational {
    loop {
        let d = rng.gen_range(1..=max_den);
        let p = rng.gen_range(1..=(hi * d as f64).floor() as i64);
        let v = p as f64 / d as f64;
        if v >= lo && v <= hi {
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            return q(sign * p, d);
        }
    }
}

/// A conjugate-closed spectrum with rational real roots and rational
/// `a ± bi` pairs.
#[derive(Clone, Debug)]
pub struct TestSpectrum {
    pub real: Vec<(BigRational, usize)>,
    pub pairs: Vec<((BigRational, BigRational), usize)>,
}

impl TestSpectrum {
    pub fn degree(&self) -> usize {
        self.real.iter().map(|r| r.1).sum::<usize>() + 2 * self.pairs.iter().map(|p| p.1).sum::<usize>()
    }

    /// Every distinct root as a complex number with its multiplicity.
    pub fn roots(&self) -> Vec<(Complex64, usize)> {
        let mut out: Vec<_> = self
            .real
            .iter()
            .map(|(r, m)| (Complex64::new(to_f64(r), 0.0), *m))
            .collect();
        for ((a, b), m) in &self.pairs {
            let z = Complex64::new(to_f64(a), to_f64(b));
            out.push((z, *m));
            out.push((z.conj(), *m));
        }
        out
    }

    /// Product of `(r - λ)^m` and `(r^2 - 2a r + a^2 + b^2)^m`.
    pub fn polynomial(&self) -> Polynomial {
        let mut p = Polynomial::one();
        for (r, m) in &self.real {
            let f = Polynomial::from_descending(vec![BigRational::one(), -r.clone()]);
            for _ in 0..*m {
                p = &p * &f;
            }
        }
        for ((a, b), m) in &self.pairs {
            let two = q(2, 1);
            let f = Polynomial::from_descending(vec![BigRational::one(), -(&two * a), a * a + b * b]);
            for _ in 0..*m {
                p = &p * &f;
            }
        }
        p
    }
}

/// Random spectrum of degree `1..=max_degree` with moduli in `[lo, hi]`,
/// multiplicities up to `max_mult` and pairwise root distance at least `sep`.
pub fn random_spectrum(
    rng: &mut impl Rng,
    max_degree: usize,
    lo: f64,
    hi: f64,
    max_mult: usize,
    sep: f64,
) -> TestSpectrum {
    loop {
        let target = rng.gen_range(1..=max_degree);
        let mut s = TestSpectrum {
            real: Vec::new(),
            pairs: Vec::new(),
        };
        let mut taken: Vec<Complex64> = Vec::new();
        let mut attempts = 0;
        while s.degree() < target && attempts < 50 {
            attempts += 1;
            let room = target - s.degree();
            let m = rng.gen_range(1..=max_mult.min(room));
            if room >= 2 * m && rng.gen_bool(0.4) {
                let rho = rng.gen_range(lo..hi);
                let phi = rng.gen_range(0.2..std::f64::consts::PI - 0.2);
                let a = snap(rho * phi.cos(), 12);
                let b = snap(rho * phi.sin(), 12).max(q(1, 12));
                let z = Complex64::new(to_f64(&a), to_f64(&b));
                if z.norm() < lo
                    || z.norm() > hi
                    || taken
                        .iter()
                        .any(|w| (w - z).norm() < sep || (w - z.conj()).norm() < sep)
                {
                    continue;
                }
                taken.push(z);
                taken.push(z.conj());
                s.pairs.push(((a, b), m));
            } else {
                let r = rational_in(rng, lo, hi, 12);
                let z = Complex64::new(to_f64(&r), 0.0);
                if taken.iter().any(|w| (w - z).norm() < sep) {
                    continue;
                }
                taken.push(z);
                s.real.push((r, m));
            }
        }
        if s.degree() >= 1 {
            return s;
        }
    }
}

/// Nearest rational with denominator `den`.
pub fn snap(x: f64, den: i64) -> BigRational {
    q((x * den as f64).round() as i64, den)
}

/// Closed form evaluated straight from the roots: for each root `z` of
/// multiplicity `m`, `sum_k c_k j^k z^j` with complex `c_k`. The conjugate
/// root gets the conjugate coefficients so the sum is real.
pub struct ClosedForm {
    pub terms: Vec<(Complex64, Vec<Complex64>)>,
}

impl ClosedForm {
    pub fn random(rng: &mut impl Rng, s: &TestSpectrum) -> Self {
        let mut terms = Vec::new();
        for (r, m) in &s.real {
            let c = (0..*m).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), 0.0)).collect();
            terms.push((Complex64::new(to_f64(r), 0.0), c));
        }
        for ((a, b), m) in &s.pairs {
            let z = Complex64::new(to_f64(a), to_f64(b));
            let c: Vec<Complex64> = (0..*m)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            terms.push((z.conj(), c.iter().map(|c| c.conj()).collect()));
            terms.push((z, c));
        }
        ClosedForm { terms }
    }

    pub fn eval(&self, j: i64) -> f64 {
        let mut sum = Complex64::zero();
        for (z, c) in &self.terms {
            let zj = z.powi(j as i32);
            for (k, ck) in c.iter().enumerate() {
                sum += ck * (j as f64).powi(k as i32) * zj;
            }
        }
        sum.re
    }
}

/// Random monic irreducible quadratic `r^2 + b r + c` with `b^2 < 4c`.
pub fn irreducible_quadratic(rng: &mut impl Rng) -> Polynomial {
    let b = q(rng.gen_range(-6..=6), rng.gen_range(1..=3));
    loop {
        let c = q(rng.gen_range(1..=20), rng.gen_range(1..=3));
        if &b * &b < q(4, 1) * &c {
            return Polynomial::from_descending(vec![BigRational::one(), b, c]);
        }
    }
}

/// Distinct nonzero rationals `p/d` with `|p| <= max_num`, `d <= max_den`.
pub fn distinct_rationals(rng: &mut impl Rng, count: usize, max_num: i64, max_den: i64) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::new();
    while out.len() < count {
        let mut p = rng.gen_range(-max_num..=max_num);
        if p == 0 {
            p = 1;
        }
        let r = q(p, rng.gen_range(1..=max_den));
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out.shuffle(rng);
    out
}

/// Random integer polynomial of the given degree with nonzero leading and
/// constant coefficients.
pub fn random_integer_poly(rng: &mut impl Rng, degree: usize, bound: i64) -> Polynomial {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    for k in [0, degree] {
        while c[k] == 0 {
            c[k] = rng.gen_range(-bound..=bound);
        }
    }
    Polynomial::from_i64(&c)
}

/// Steps `sum_k a_k x_{j+k} = 0` exactly, forward and backward, from the
/// values `x_0 .. x_{n-1}`; returns `x_{lo} .. x_{hi}`.
pub fn step_exact(a: &Polynomial, initial: &[BigRational], lo: i64, hi: i64) -> Vec<BigRational> {
    let c = a.coeffs();
    let n = c.len() - 1;
    let mut fwd: Vec<BigRational> = initial.to_vec();
    while (fwd.len() as i64) <= hi {
        let s = fwd.len() - n;
        let acc: BigRational = (0..n).map(|k| &c[k] * &fwd[s + k]).sum();
        fwd.push(-acc / &c[n]);
    }
    // backward: a_0 x_j = -(a_1 x_{j+1} + ... + a_n x_{j+n})
    let mut back: Vec<BigRational> = initial.to_vec();
    let mut before = Vec::new();
    for _ in 0..(-lo).max(0) {
        let acc: BigRational = (1..=n).map(|k| &c[k] * &back[k - 1]).sum();
        let x = -acc / &c[0];
        back.insert(0, x.clone());
        before.push(x);
    }
    before.reverse();
    before.into_iter().chain(fwd).take((hi - lo + 1) as usize).collect()
}
