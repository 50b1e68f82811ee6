//! Oriented matroids in the covector formulation, their realizations by rational
//! vectors, rank-one quotient circles and finite posets.

mod oriented;
mod poset;
mod quotient;
mod realize;
mod sign;

pub use oriented::{check_axioms, AxiomReport, MatroidJson, OrientedMatroid};
pub use poset::{order_complex, order_complex_limited, Poset};
pub use quotient::{fiber_circle, rank1_strong_quotients, FiberCircle};
pub use realize::{from_vectors, RationalRow, VectorConfiguration, VectorsJson, DEFAULT_ENUMERATION_BUDGET};
pub use sign::{Sign, SignVector};

