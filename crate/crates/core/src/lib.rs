//! Analysis of polynomial-like iterative equations
//!
//! ```text
//! a_n f^n(x) + ... + a_1 f(x) + a_0 x = 0,    a_0 != 0
//! ```
//!
//! where `f^k` is the `k`-fold iterate of an unknown continuous self-map `f`.
//! Trying `f(x) = r x` gives the characteristic polynomial
//! `a_n r^n + ... + a_0`, which is also the characteristic polynomial of the
//! linear recurrence `a_n x_{j+n} + ... + a_0 x_j = 0` satisfied by every orbit
//! `x_j = f^j(x_0)`.
//!
//! The crate
//!
//! * computes the root spectrum of the characteristic polynomial with exact
//!   multiplicities ([`spectrum::characteristic_spectrum`]),
//! * decides which order-reduction pattern the spectrum satisfies
//!   ([`spectrum::classify`]) and emits the reduced equations
//!   ([`reduction::reduce`]),
//! * solves the recurrence in closed form over all integers, simulates orbits
//!   and computes the sign and asymptotic diagnostics that separate
//!   increasing from decreasing solutions ([`recurrence`]).
//!
//! ```
//! use polylike::polyalg::Polynomial;
//! use polylike::spectrum::{characteristic_spectrum, classify, CaseKind, DEFAULT_SEP_TOL};
//! use polylike::reduction::reduce;
//!
//! // 2 f^2(x) + 5 f(x) + 2 x = 0
//! let p = Polynomial::from_i64_descending(&[2, 5, 2]);
//! let spec = characteristic_spectrum(&p, 1e-9).unwrap();
//! let class = classify(&spec, DEFAULT_SEP_TOL);
//! assert_eq!(class.case.kind(), CaseKind::NegativePairElimination);
//!
//! let report = reduce(&spec, &class).unwrap();
//! assert_eq!(report.alternatives.len(), 2);
//! ```

pub mod cli;
pub mod error;
pub mod polyalg;
pub mod recurrence;
pub mod reduction;
pub mod spectrum;

pub use error::{Error, Result};
