use crate::error::{Error, Result};

use super::Polynomial;

/// One factor of a square-free decomposition together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreePart {
    pub factor: Polynomial,
    pub multiplicity: usize,
}

/// Yun's square-free decomposition over the rationals.
///
/// Returns pairwise coprime square-free factors in primitive integer form,
/// ordered by multiplicity. Their product, each raised to its multiplicity,
/// equals `p` up to a nonzero rational scalar. A constant `p` yields no parts.
pub fn squarefree_decompose(p: &Polynomial) -> Result<Vec<SquarefreePart>> {
    if p.is_zero() {
        return Err(Error::domain("square-free decomposition of the zero polynomial"));
    }
    let mut parts = Vec::new();
    if p.degree() == Some(0) {
        return Ok(parts);
    }

    let dp = p.derivative();
    let g = Polynomial::gcd(p, &dp);
    let mut b = p.div_rem(&g)?.0;
    let c = dp.div_rem(&g)?.0;
    let mut d = &c - &b.derivative();
    let mut multiplicity = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = Polynomial::gcd(&b, &d);
        if a.degree().is_some_and(|deg| deg > 0) {
            parts.push(SquarefreePart {
                factor: a.primitive(),
                multiplicity,
            });
        }
        b = b.div_rem(&a)?.0;
        let c = d.div_rem(&a)?.0;
        d = &c - &b.derivative();
        multiplicity += 1;
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_root_times_simple_root() {
        // (r - 1)^2 (r + 3)
        let p = Polynomial::from_i64_descending(&[1, 1, -5, 3]);
        let parts = squarefree_decompose(&p).unwrap();
        assert_eq!(
            parts,
            vec![
                SquarefreePart {
                    factor: Polynomial::from_i64_descending(&[1, 3]),
                    multiplicity: 1
                },
                SquarefreePart {
                    factor: Polynomial::from_i64_descending(&[1, -1]),
                    multiplicity: 2
                },
            ]
        );
    }

    #[test]
    fn squarefree_input_is_returned_whole() {
        let p = Polynomial::from_i64_descending(&[2, 5, 2]);
        let parts = squarefree_decompose(&p).unwrap();
        assert_eq!(
            parts,
            vec![SquarefreePart {
                factor: p,
                multiplicity: 1
            }]
        );
    }

    #[test]
    fn pure_power() {
        let p = Polynomial::from_i64_descending(&[1, -1]).pow(5);
        assert_eq!(p, Polynomial::from_i64_descending(&[1, -5, 10, -10, 5, -1]));
        let parts = squarefree_decompose(&p).unwrap();
        assert_eq!(
            parts,
            vec![SquarefreePart {
                factor: Polynomial::from_i64_descending(&[1, -1]),
                multiplicity: 5
            }]
        );
    }

    #[test]
    fn nonmonic_scalar_is_absorbed() {
        // 6 (r^2 + 1)^2 (2r - 1)^3
        let a = Polynomial::from_i64_descending(&[1, 0, 1]).pow(2);
        let b = Polynomial::from_i64_descending(&[2, -1]).pow(3);
        let p = (&a * &b).scale(&num_rational::BigRational::from_integer(6.into()));
        let parts = squarefree_decompose(&p).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].factor, Polynomial::from_i64_descending(&[1, 0, 1]));
        assert_eq!(parts[0].multiplicity, 2);
        assert_eq!(parts[1].factor, Polynomial::from_i64_descending(&[2, -1]));
        assert_eq!(parts[1].multiplicity, 3);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(squarefree_decompose(&Polynomial::zero()).is_err());
    }
}
