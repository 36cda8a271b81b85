//! End to end on `2 f^2(x) + 5 f(x) + 2x = 0`: roots, classification,
//! reduction, and a check that `f(x) = -x/2` solves the reduced equation
//! while `f(x) = -2x` solves the other alternative.

use num_rational::BigRational;
use polylike::cli::parse_equation;
use polylike::reduction::{linear_solution_residual_exact, reduce};
use polylike::spectrum::{characteristic_spectrum, classify, DEFAULT_SEP_TOL};

fn main() -> polylike::Result<()> {
    let input = parse_equation("2*f^2(x)+5*f(x)+2*x=0")?;
    println!("equation: {input}");
    println!("characteristic polynomial: {}", input.coeffs);

    let spec = characteristic_spectrum(&input.coeffs, 1e-9)?;
    for e in spec.entries() {
        println!("  root {} (multiplicity {})", e.exact.as_ref().unwrap(), e.multiplicity);
    }

    let class = classify(&spec, DEFAULT_SEP_TOL);
    println!(
        "case: {} (margin {:.3e})",
        class.case.kind(),
        class.margin.unwrap_or(0.0)
    );

    let report = reduce(&spec, &class)?;
    let one = [BigRational::from_integer(1.into())];
    for eq in &report.alternatives {
        let p = eq.coeffs.exact().expect("rational roots give exact coefficients");
        println!(
            "alternative {} [{}]: {p} = 0",
            eq.provenance.alternative, eq.provenance.prerequisite
        );
        for slope in [
            BigRational::new((-1).into(), 2.into()),
            BigRational::from_integer((-2).into()),
        ] {
            let r = linear_solution_residual_exact(p, &slope, &one);
            println!("  f(x) = {slope}*x -> residual {r}");
        }
    }
    Ok(())
}
