//! Chern cocycles of simplicial circle bundles and the Pontrjagin cycles built from them.

mod bundle;
mod cocycle;
mod fixing;
mod generate;
mod series;

pub use bundle::{cycle_chain, BundleJson, CircleBundle};
pub use cocycle::{chern_number, fiber_theta, omega, theta, LiftSpread, OmegaReport};
pub use fixing::{
    find_fixing_cycle, pontrjagin_cycle, twisted_system, verify_fixing_cycle, FixingProblem, FixingReport,
    FixingSolution, PontrjaginCycle,
};
pub use generate::{generate_circle_bundle, GeneratedBundle};
pub use series::{invert_pontrjagin_series, GradedSeries, Polynomial};
