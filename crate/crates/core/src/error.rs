use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("linear system is infeasible")]
    Infeasible,
    #[error("boundary maps do not compose to zero at degree {0}")]
    NotAComplex(usize),
    #[error("sign vectors have different ground sets")]
    GroundSetMismatch,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("oriented matroid is not of rank two (rank {0})")]
    NotRankTwo(usize),
    #[error("relation is not a strict partial order: {0}")]
    NotAPoset(String),
    #[error("chains or cochains live on different complexes: {0}")]
    ComplexMismatch(String),
    #[error("degree error: {0}")]
    DegreeError(String),
    #[error("local systems do not match: {0}")]
    SystemMismatch(String),
    #[error("not a pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("complex is not orientable")]
    NotOrientable,
    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),
    #[error("invalid local system: {0}")]
    InvalidLocalSystem(String),
    #[error("invalid glued image: {0}")]
    InvalidImage(String),
    #[error("fiber over {0} is not a circle")]
    FiberNotCircle(String),
    #[error("cocycle constraints over edge {0} are infeasible")]
    InfeasibleCocycle(String),
    #[error("2-simplex {0} has no lift")]
    NoLift(String),
    #[error("lifts of 2-simplex {0} disagree")]
    InconsistentLifts(String),
    #[error("no fixing cycle exists in the assembled complex")]
    NotFound,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Stable identifier used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "DimensionMismatch",
            Error::Infeasible => "Infeasible",
            Error::NotAComplex(_) => "NotAComplex",
            Error::GroundSetMismatch => "GroundSetMismatch",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NotRankTwo(_) => "NotRankTwo",
            Error::NotAPoset(_) => "NotAPoset",
            Error::ComplexMismatch(_) => "ComplexMismatch",
            Error::DegreeError(_) => "DegreeError",
            Error::SystemMismatch(_) => "SystemMismatch",
            Error::NotPseudomanifold(_) => "NotPseudomanifold",
            Error::NotOrientable => "NotOrientable",
            Error::InvalidMap(_) => "InvalidMap",
            Error::InvalidLocalSystem(_) => "InvalidLocalSystem",
            Error::InvalidImage(_) => "InvalidImage",
            Error::FiberNotCircle(_) => "FiberNotCircle",
            Error::InfeasibleCocycle(_) => "InfeasibleCocycle",
            Error::NoLift(_) => "NoLift",
            Error::InconsistentLifts(_) => "InconsistentLifts",
            Error::NotFound => "NotFound",
            Error::Parse(_) => "ParseError",
            Error::Invalid(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
