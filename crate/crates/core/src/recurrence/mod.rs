//! Closed-form solutions of the linear recurrence
//! `a_n x_{j+n} + ... + a_1 x_{j+1} + a_0 x_j = 0` over all integers `j`,
//! orbits of linear maps, and the sign and asymptotic diagnostics used to
//! tell which roots an orbit of a monotone solution can involve.

mod diagnostics;
mod orbit;
mod solution;

pub use diagnostics::{
    alternation_pattern, asymptotic_limits, classify_stream, limit_horizon, sign_diagnostics, value_pattern,
    AsymptoticReport, LeadingTerm, LimitCheck, SignDiagnostics, SignPattern, StreamReport, DEGREE_THRESHOLD,
};
pub use orbit::{orbit_from_linear_map, recurrence_residual, Orbit, OrbitOrigin, RecurrenceResidual};
pub use solution::{
    eval_general_solution, fit_general_solution, GeneralSolution, OscillatingTerm, RealTerm, RCOND_THRESHOLD,
};

/// Default half-width of diagnostic windows.
pub const DEFAULT_HALF_WINDOW: i64 = 40;

/// Symmetric window `[-J, J]` with `J <= DEFAULT_HALF_WINDOW` and
/// `base^J < 1e300`, where `base` bounds the growth of the sequence in
/// either direction (see [`GeneralSolution::growth_base`]).
pub fn diagnostics_window(base: f64) -> (i64, i64) {
    let j = if base <= 1.0 {
        DEFAULT_HALF_WINDOW
    } else {
        ((300.0 / base.log10()).ceil() as i64 - 1).clamp(1, DEFAULT_HALF_WINDOW)
    };
    (-j, j)
}
