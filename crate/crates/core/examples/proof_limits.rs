//! Asymptotic ratios of the difference streams for a two-negative-root
//! spectrum: the forward and backward limits have opposite signs, which is
//! what rules out a monotone solution involving both roots.

use polylike::polyalg::Polynomial;
use polylike::recurrence::{asymptotic_limits, fit_general_solution, limit_horizon};
use polylike::spectrum::{characteristic_spectrum, classify, Case, DEFAULT_SEP_TOL};

fn main() -> polylike::Result<()> {
    // (r + 2)(2r + 1): x_j = (-2)^j + (-1/2)^j
    let p = Polynomial::from_i64_descending(&[2, 5, 2]);
    let spec = characteristic_spectrum(&p, 1e-9)?;
    let Case::NegativePairElimination { r1, r2 } = classify(&spec, DEFAULT_SEP_TOL).case else {
        unreachable!("two negative roots straddling -1");
    };
    let gs = fit_general_solution(&spec, &[2.0, -2.5])?;
    let horizon = limit_horizon(&gs, 40);
    let report = asymptotic_limits(&gs, r1.value, r2.value, horizon)?;
    println!("r1 = {}, r2 = {}, horizon J = {horizon}", r1.value, r2.value);
    for (name, check) in [
        ("(-1)^j dx, j = +J", &report.forward),
        ("(-1)^j dx, j = -J", &report.backward),
        ("even step, j = +J", &report.even_forward),
        ("even step, j = -J", &report.even_backward),
    ] {
        if let Some(c) = check {
            println!(
                "{name}: {:>12.8} -> {:>12.8} (error {:.1e})",
                c.empirical,
                c.predicted,
                c.abs_error()
            );
        }
    }
    Ok(())
}
