//! Sign diagnostics along linear-map orbits: a decreasing map gives an
//! alternating orbit whose differences have constant sign after the
//! `(-1)^j` correction, and the difference of two orbits alternates too.

use polylike::polyalg::Polynomial;
use polylike::recurrence::{alternation_pattern, orbit_from_linear_map, recurrence_residual, sign_diagnostics};

fn main() -> polylike::Result<()> {
    let p = Polynomial::from_i64_descending(&[2, 5, 2]);
    for slope in [-2.0, -0.5, 1.5] {
        let orbit = orbit_from_linear_map(slope, 1.0, -12, 12)?;
        let r = recurrence_residual(&p, &orbit)?;
        let d = sign_diagnostics(&orbit)?;
        println!("f(x) = {slope} x: residual in 2r^2+5r+2 = {:.1e}", r.max_abs);
        println!("  (-1)^j dx:  {:?}", d.alternating_diff.pattern);
        println!("  dx:         {:?}", d.plain_diff.pattern);
        println!("  even step:  {:?}", d.even_step.pattern);
    }

    // two orbits of the same decreasing map: their difference alternates
    let x = orbit_from_linear_map(-2.0, 3.0, -10, 10)?;
    let y = orbit_from_linear_map(-2.0, 1.0, -10, 10)?;
    let diff = x.difference(&y)?;
    println!("x - y: {:?}", alternation_pattern(&diff).pattern);
    Ok(())
}
