//! One equation per reduction pattern, plus one that fits none and one
//! whose moduli tie too closely to decide.

use polylike::polyalg::Polynomial;
use polylike::spectrum::{characteristic_spectrum, classify, DEFAULT_SEP_TOL};

fn main() -> polylike::Result<()> {
    let cases: [(&str, Polynomial); 5] = [
        ("two negative roots", Polynomial::from_i64_descending(&[2, 3, -3, -2])),
        (
            "non-real roots inside",
            Polynomial::from_i64_descending(&[2, -5, 6, -2]),
        ),
        // (r + 3)(r - 1)(2r - 3)
        ("opposite signs", Polynomial::from_i64_descending(&[2, 1, -12, 9])),
        (
            "complex roots outermost",
            Polynomial::from_i64_descending(&[1, 0, 4, 0, 3]),
        ),
        // (r + 1.0000000001)(r + 1)(r + 1/2)
        (
            "near tie",
            &(&Polynomial::from_i64_descending(&[10_000_000_000, 10_000_000_001])
                * &Polynomial::from_i64_descending(&[1, 1]))
                * &Polynomial::from_i64_descending(&[2, 1]),
        ),
    ];
    for (label, p) in &cases {
        let spec = characteristic_spectrum(p, 1e-9)?;
        let class = classify(&spec, DEFAULT_SEP_TOL);
        println!("{label}: {p}");
        println!("  case: {}", class.case.kind());
        for c in &class.checks {
            let margin = c.margin.map_or(String::from("n/a"), |m| format!("{m:.3e}"));
            println!(
                "    {:<28} {:<10} margin {margin}",
                c.case.name(),
                format!("{:?}", c.status)
            );
        }
    }
    Ok(())
}
