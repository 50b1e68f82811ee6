use std::path::{Path, PathBuf};

use clap::Subcommand;
use pontrjagin::matroid::{
    fiber_circle, from_vectors, rank1_strong_quotients, MatroidJson, OrientedMatroid, VectorConfiguration,
    DEFAULT_ENUMERATION_BUDGET,
};
use serde_json::{json, Value};

use crate::io::{read_json, to_value, CliError};
use crate::Global;

#[derive(Subcommand)]
pub enum MatroidCmd {
    /// Check the covector axioms.
    Check { matroid: PathBuf },
    /// The oriented matroid of a vector configuration.
    Realize { vectors: PathBuf },
    Rank { matroid: PathBuf },
    /// Rank-1 strong quotients.
    Quotients { matroid: PathBuf },
    /// Specialization graph on the rank-1 quotients of a rank-2 matroid.
    FiberCircle { matroid: PathBuf },
}

fn load(path: &Path) -> Result<OrientedMatroid, CliError> {
    Ok(OrientedMatroid::from_json(&read_json::<MatroidJson>(path)?)?)
}

pub fn run(cmd: &MatroidCmd, g: &Global) -> Result<Value, CliError> {
    Ok(match cmd {
        MatroidCmd::Check { matroid } => {
            let m = load(matroid)?;
            to_value(&m.check_axioms())
        }
        MatroidCmd::Realize { vectors } => {
            let config = VectorConfiguration::from_json(&read_json(vectors)?)?;
            to_value(&from_vectors(&config, g.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET))?.to_json())
        }
        MatroidCmd::Rank { matroid } => json!({ "rank": load(matroid)?.rank() }),
        MatroidCmd::Quotients { matroid } => {
            let q: Vec<MatroidJson> = rank1_strong_quotients(&load(matroid)?).iter().map(|q| q.to_json()).collect();
            json!({ "quotients": q })
        }
        MatroidCmd::FiberCircle { matroid } => {
            let c = fiber_circle(&load(matroid)?)?;
            let vertices: Vec<MatroidJson> = c.vertices.iter().map(|q| q.to_json()).collect();
            json!({ "single_cycle": c.is_single_cycle(), "vertices": vertices, "edges": c.edges })
        }
    })
}
