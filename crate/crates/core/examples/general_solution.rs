//! Fits the closed-form recurrence solution to initial values and checks
//! that it reproduces the sequence generated step by step.

use polylike::polyalg::Polynomial;
use polylike::recurrence::{fit_general_solution, recurrence_residual, Orbit};
use polylike::spectrum::characteristic_spectrum;

fn main() -> polylike::Result<()> {
    // (r - 2)^2 (r^2 + 1): a double root and a rotating pair
    let p = &Polynomial::from_i64_descending(&[1, -2]).pow(2) * &Polynomial::from_i64_descending(&[1, 0, 1]);
    let spec = characteristic_spectrum(&p, 1e-9)?;
    let initial = [1.0, 0.0, -1.0, 2.0];
    let gs = fit_general_solution(&spec, &initial)?;

    for t in &gs.real_terms {
        println!(
            "root {} (multiplicity {}): coefficients {:?}",
            t.root, t.multiplicity, t.coeffs
        );
    }
    for t in &gs.complex_terms {
        println!(
            "modulus {} argument {:.6}: cos {:?} sin {:?}",
            t.modulus, t.argument, t.cos_coeffs, t.sin_coeffs
        );
    }

    // step the recurrence forward: x_{j+4} = -(a_3 x_{j+3} + ... + a_0 x_j) / a_4
    let a: Vec<f64> = p.to_f64();
    let mut x = initial.to_vec();
    for j in 0..8 {
        let next = -(0..4).map(|k| a[k] * x[j + k]).sum::<f64>() / a[4];
        x.push(next);
    }
    for (j, v) in x.iter().enumerate() {
        println!("x_{j}: stepped {v:>10}  closed form {:>14.9}", gs.eval(j as i64)?);
    }

    let orbit = Orbit::from_solution(&gs, -10, 10)?;
    let r = recurrence_residual(&p, &orbit)?;
    println!("recurrence residual over [-10, 10]: {:.2e} relative", r.relative);
    Ok(())
}
