//! Exact rational and integer linear algebra.

mod lp;
mod matrix;
mod rational;
mod snf;

pub use lp::feasible_strict;
pub use matrix::{kernel_basis, min_norm_solution, solve_linear, LinearSolution, QMatrix, ZMatrix};
pub use rational::{
    common_denominator, format_rational, frac, int, one, parse_rational, serde_rational, serde_rational_vec, zero,
    Rational,
};
pub use snf::{homology_of_complex, invariant_factors, smith_normal_form, HomologyGroup, SmithForm};
