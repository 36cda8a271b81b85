//! Characteristic roots of a few equations, including repeated and
//! non-real roots, and the square-free factors they come from.

use polylike::polyalg::{squarefree_decompose, Polynomial};
use polylike::spectrum::characteristic_spectrum;

fn show(label: &str, p: &Polynomial) -> polylike::Result<()> {
    println!("{label}: {p}");
    for part in squarefree_decompose(p)? {
        println!(
            "  square-free factor ({}) with multiplicity {}",
            part.factor, part.multiplicity
        );
    }
    let spec = characteristic_spectrum(p, 1e-9)?;
    for e in spec.entries() {
        let exact = e.exact.as_ref().map_or(String::from("-"), ToString::to_string);
        println!(
            "  {:>24} x{}  |r| = {:.6}  exact: {exact}",
            format!("{:.6}{:+.6}i", e.root.re, e.root.im),
            e.multiplicity,
            e.modulus()
        );
    }
    Ok(())
}

fn main() -> polylike::Result<()> {
    show("quadratic", &Polynomial::from_i64_descending(&[2, 5, 2]))?;
    show(
        "cubic with a complex pair",
        &Polynomial::from_i64_descending(&[2, -5, 6, -2]),
    )?;
    // (r + 2)^2 (r - 1)^3 (r^2 + 1)
    let p = &(&Polynomial::from_i64_descending(&[1, 2]).pow(2) * &Polynomial::from_i64_descending(&[1, -1]).pow(3))
        * &Polynomial::from_i64_descending(&[1, 0, 1]);
    show("repeated roots", &p)?;
    Ok(())
}
