//! Reduced equations for each pattern, with a divisibility check against
//! the original; the last equation has irrational retained roots and falls
//! back to numeric coefficients.

use polylike::polyalg::Polynomial;
use polylike::reduction::{check_divisibility, reduce, ReducedCoeffs};
use polylike::spectrum::{characteristic_spectrum, classify, DEFAULT_SEP_TOL};

fn main() -> polylike::Result<()> {
    let equations = [
        Polynomial::from_i64_descending(&[2, 5, 2]),
        Polynomial::from_i64_descending(&[2, 3, -3, -2]),
        Polynomial::from_i64_descending(&[2, -5, 6, -2]),
        Polynomial::from_i64_descending(&[2, 1, -12, 9]),
        // (r^2 - 3)(r^2 + 9): irrational real roots outside a complex pair
        Polynomial::from_i64_descending(&[1, 0, 6, 0, -27]),
    ];
    for p in &equations {
        let spec = characteristic_spectrum(p, 1e-9)?;
        let class = classify(&spec, DEFAULT_SEP_TOL);
        println!("{p}: {}", class.case.kind());
        let Ok(report) = reduce(&spec, &class) else {
            println!("  no reduction");
            continue;
        };
        if report.exclusive_alternatives {
            println!("  exactly one alternative holds for a given solution:");
        }
        for eq in &report.alternatives {
            let div = check_divisibility(&eq.coeffs, p, 1e-9)?;
            let coeffs = match &eq.coeffs {
                ReducedCoeffs::Exact(q) => format!("{q}"),
                ReducedCoeffs::Numeric(q) => format!("{:?} (numeric, highest first)", q.descending()),
            };
            println!(
                "  #{} requires {}: {coeffs}; divides original: {} (remainder {:.1e})",
                eq.provenance.alternative, eq.provenance.prerequisite, div.divides, div.remainder_norm
            );
        }
    }
    Ok(())
}
