use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::rational_to_f64;
use super::Polynomial;

/// Bisection cap when narrowing an isolating interval.
const MAX_REFINE_STEPS: usize = 400;

/// Sturm sequence `p, p', -rem(p, p'), ...`, each term rescaled by a positive
/// constant to keep coefficients small.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = Vec::new();
    if p.is_zero() {
        return seq;
    }
    seq.push(positive_primitive(p));
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(positive_primitive(&d));
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(positive_primitive(&-&r));
    }
    seq
}

/// `primitive()` up to sign: the factor applied is always positive.
fn positive_primitive(p: &Polynomial) -> Polynomial {
    let q = p.primitive();
    if q.leading().map(Signed::is_positive) == p.leading().map(Signed::is_positive) {
        q
    } else {
        -&q
    }
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(seq: &[Polynomial], x: &BigRational) -> usize {
    variations(seq.iter().map(|q| q.eval(x).cmp(&BigRational::zero())))
}

fn variations_at_infinity(seq: &[Polynomial], positive: bool) -> usize {
    variations(seq.iter().map(|q| {
        let lead = q.leading().expect("nonzero").cmp(&BigRational::zero());
        if positive || q.degree().unwrap_or(0) % 2 == 0 {
            lead
        } else {
            lead.reverse()
        }
    }))
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots(p: &Polynomial) -> usize {
    let seq = sturm_sequence(p);
    if seq.is_empty() {
        return 0;
    }
    variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true)
}

/// Real roots of a square-free `p` in increasing order, each accurate to
/// about one unit in the last place. Decided by exact sign computations, so
/// roots closer together than floating-point iteration can resolve are still
/// separated.
pub fn isolate_real_roots(p: &Polynomial) -> Vec<f64> {
    let seq = sturm_sequence(p);
    let Some(lead) = p.leading() else {
        return Vec::new();
    };
    // every root lies strictly inside (-bound, bound)
    let bound = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| (c / lead).abs())
        .fold(BigRational::zero(), |m, c| if c > m { c } else { m })
        + BigRational::one();

    let mut isolated = Vec::new();
    let lo = -bound.clone();
    let count = variations_at(&seq, &lo) - variations_at(&seq, &bound);
    let mut stack = vec![(lo, bound, count)];
    while let Some((a, b, n)) = stack.pop() {
        match n {
            0 => {}
            1 => isolated.push(refine(p, a, b)),
            _ => {
                let m = split_point(p, &a, &b);
                let va = variations_at(&seq, &a);
                let vm = variations_at(&seq, &m);
                let vb = variations_at(&seq, &b);
                stack.push((a, m.clone(), va - vm));
                stack.push((m, b, vm - vb));
            }
        }
    }
    isolated.sort_by(f64::total_cmp);
    isolated
}

/// A point inside `(a, b)`, as close to the middle as possible, at which
/// `p` does not vanish.
fn split_point(p: &Polynomial, a: &BigRational, b: &BigRational) -> BigRational {
    let width = b - a;
    for n in 2i64.. {
        for i in 1..n {
            let m = a + &width * BigRational::new(i.into(), n.into());
            if !p.eval(&m).is_zero() {
                return m;
            }
        }
    }
    unreachable!("a nonzero polynomial has finitely many roots")
}

/// Narrows `(a, b]`, which holds exactly one root and has `p(a) != 0`,
/// until its endpoints agree to floating-point precision.
fn refine(p: &Polynomial, mut a: BigRational, mut b: BigRational) -> f64 {
    let zero = BigRational::zero();
    if p.eval(&b).is_zero() {
        return rational_to_f64(&b);
    }
    let sa = p.eval(&a).cmp(&zero);
    let two = BigRational::from_integer(2.into());
    for _ in 0..MAX_REFINE_STEPS {
        let (fa, fb) = (rational_to_f64(&a), rational_to_f64(&b));
        if fa == fb || (fb - fa).abs() <= f64::EPSILON * fa.abs().max(fb.abs()) {
            break;
        }
        let m = (&a + &b) / &two;
        match p.eval(&m).cmp(&zero) {
            Ordering::Equal => return rational_to_f64(&m),
            s if s == sa => a = m,
            _ => b = m,
        }
    }
    // the float nearest the root is among these; pick the smallest exact residual
    let mid = rational_to_f64(&((&a + &b) / &two));
    [rational_to_f64(&a), mid, rational_to_f64(&b)]
        .into_iter()
        .filter_map(|x| BigRational::from_float(x).map(|q| (x, p.eval(&q).abs())))
        .min_by(|u, v| u.1.cmp(&v.1))
        .map_or(mid, |(x, _)| x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(count_real_roots(&Polynomial::from_i64_descending(&[2, 5, 2])), 2);
        assert_eq!(count_real_roots(&Polynomial::from_i64_descending(&[1, 0, 1])), 0);
        assert_eq!(count_real_roots(&Polynomial::from_i64_descending(&[2, -5, 6, -2])), 1);
        assert_eq!(count_real_roots(&Polynomial::from_i64_descending(&[1, 0, -3])), 2);
    }

    #[test]
    fn separates_nearly_coincident_roots() {
        // (10^10 r + 10^10 + 1)(r + 1)
        let p = &Polynomial::from_i64_descending(&[10_000_000_000, 10_000_000_001])
            * &Polynomial::from_i64_descending(&[1, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[1], -1.0);
        assert!((roots[0] + 1.0000000001).abs() < 1e-15);
    }

    #[test]
    fn irrational_and_exact_roots() {
        let roots = isolate_real_roots(&Polynomial::from_i64_descending(&[1, 0, -3]));
        assert_eq!(roots, vec![-3f64.sqrt(), 3f64.sqrt()]);
        let roots = isolate_real_roots(&Polynomial::from_i64_descending(&[2, 3, -3, -2]));
        assert_eq!(roots, vec![-2.0, -0.5, 1.0]);
    }
}
