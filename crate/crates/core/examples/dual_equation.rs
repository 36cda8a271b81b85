//! The dual equation, satisfied by the inverse of a solution: its orbits are
//! the original orbits read backwards.

use polylike::polyalg::Polynomial;
use polylike::recurrence::{orbit_from_linear_map, recurrence_residual};
use polylike::reduction::dual_equation;

fn main() -> polylike::Result<()> {
    let p = Polynomial::from_i64_descending(&[2, 3, -3, -2]);
    let dual = dual_equation(&p)?;
    println!("equation: {p}\ndual:     {dual}");

    let orbit = orbit_from_linear_map(-2.0, 1.0, -15, 15)?;
    let forward = recurrence_residual(&p, &orbit)?;
    let backward = recurrence_residual(&dual, &orbit.reversed())?;
    println!("orbit of f(x) = -2x in the equation:      {:.1e}", forward.relative);
    println!("reversed orbit in the dual equation:     {:.1e}", backward.relative);
    Ok(())
}
