//! Terwilliger algebras `T(x)` over `Q`, `Z` and prime fields.

mod checks;
mod closure;
mod corners;
mod field;
mod generators;
mod integral;
mod johnson;
mod radical;
mod report;

use thiserror::Error;

pub use checks::{
    all_ones_corners, char_zero_check, char_zero_check_lattice, check_corner_implication, check_tactical_configurations,
    check_valency_criterion, corner_implication, valency_criterion, CharZeroCheck, CornerImplication,
};
pub use closure::{close_over_field, close_vectors, AlgebraBasis};
pub use corners::{all_ones_corner, corner_algebra, corner_radical_dim, AllOnesCorner};
pub use field::{BinaryMatrices, MatrixField, ModularField, PrimeMatrices, RationalMatrices};
pub use generators::{generators, Generator, GeneratorSet};
pub use integral::{close_over_integers, generator_lattice, is_ring};
pub use johnson::{verify_johnson_products, JohnsonM, JohnsonProducts};
pub use radical::{is_semisimple, jacobson_radical, radical_of_span, verify_radical, RadicalVerification};
pub use report::{
    dimension_report, dimension_report_with, table_report, CornerReport, PrimeReport, ReportOptions,
    SchemeJob, SchemeTable, TAlgebraReport,
};

/// A failed cross-check. Each variant indicates a bug, not bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TAlgebraError {
    #[error("dimension oracles disagree at p = {p}: lattice rank mod p {lattice}, field closure {closure}, divisor count {divisors}")]
    OracleMismatch { p: u32, lattice: usize, closure: usize, divisors: usize },
    #[error("point {point}, p = {p}: the algebra is semisimple but a corner is not")]
    ImplicationViolated { p: u32, point: usize },
    #[error("point {point}: p = {p} divides the valency of relation {s} but the algebra is semisimple")]
    CriterionViolated { p: u32, s: usize, point: usize },
    #[error("point {point}, p = {p}: the all-ones element of corner {s} misbehaves")]
    AllOnesCornerFailed { s: usize, p: u32, point: usize },
    #[error("point {point}: block ({s},{t},{u}) is not a tactical configuration")]
    NotTactical { s: usize, t: usize, u: usize, point: usize },
    #[error("J({n},2): {which} does not hold")]
    IdentityFailed { which: String, n: usize },
}
