use std::path::{Path, PathBuf};

use clap::{Args, Subcommand};
use pontrjagin::assoc::Associated;
use pontrjagin::chern::{
    find_fixing_cycle, omega, pontrjagin_cycle, theta, twisted_system, verify_fixing_cycle, CircleBundle,
    FixingProblem,
};
use pontrjagin::topology::{fundamental_class, orientation_system, Chain, ChainJson, Cochain, LocalSystem};
use serde_json::{json, Value};

use crate::io::{assemble_from, read_json, to_value, CliError};
use crate::Global;

#[derive(Args)]
pub struct Pipeline {
    #[arg(long)]
    complex: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Subcommand)]
pub enum PontCmd {
    /// Check a candidate fixing cycle read from a chain file.
    VerifyFixing {
        #[command(flatten)]
        pipeline: Pipeline,
        phi: PathBuf,
    },
    /// Solve for a fixing cycle.
    FindFixing(#[command(flatten)] Pipeline),
    /// The Pontrjagin cycle ζ_i, from a given fixing cycle or the computed one.
    Evaluate {
        #[command(flatten)]
        pipeline: Pipeline,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        phi: Option<PathBuf>,
    },
}

/// Everything downstream of assembling `Y → X̃` and the bundle `Z → Y`.
struct Data {
    a: Associated,
    omega: Cochain,
    /// Orientation system of `X̃`.
    dx: LocalSystem,
    fundamental: Chain,
    /// Coefficients of a fixing cycle.
    system: LocalSystem,
}

impl Data {
    fn build(p: &Pipeline, g: &Global) -> Result<Data, CliError> {
        let a = assemble_from(&p.complex, p.n, g, p.samples)?;
        let b = CircleBundle::new(a.y.complex.clone(), a.z.complex.clone(), a.z.rho.clone())?;
        let omega = omega(&b, &theta(&b)?, g.strict())?.omega;
        let xt = a.y.subdivision.subdivision();
        let dx = orientation_system(xt)?;
        let fundamental = fundamental_class(xt, Some(&dx))?;
        let system = twisted_system(&a.y.complex, p.n, &dx.pullback(&a.y.complex, &a.y.pi), &b.orientation)?;
        Ok(Data { a, omega, dx, fundamental, system })
    }

    fn problem(&self) -> FixingProblem<'_> {
        FixingProblem {
            y: &self.a.y.complex,
            subdivision: self.a.y.subdivision.subdivision(),
            pi: &self.a.y.pi,
            omega: &self.omega,
            fundamental: &self.fundamental,
        }
    }

    fn read_phi(&self, path: &Path) -> Result<Chain, CliError> {
        Ok(Chain::from_json(&self.a.y.complex, &read_json::<ChainJson>(path)?)?)
    }
}

pub fn run(cmd: &PontCmd, g: &Global) -> Result<Value, CliError> {
    Ok(match cmd {
        PontCmd::VerifyFixing { pipeline, phi } => {
            let d = Data::build(pipeline, g)?;
            to_value(&verify_fixing_cycle(&d.problem(), &d.read_phi(phi)?)?)
        }
        PontCmd::FindFixing(pipeline) => {
            let d = Data::build(pipeline, g)?;
            let sol = find_fixing_cycle(&d.problem(), &d.system)?;
            json!({
                "status": "pass",
                "dimension": sol.dimension,
                "phi": to_value(&sol.phi.to_json(&d.a.y.complex)),
            })
        }
        PontCmd::Evaluate { pipeline, index, phi } => {
            let d = Data::build(pipeline, g)?;
            let phi = match phi {
                Some(p) => d.read_phi(p)?,
                None => find_fixing_cycle(&d.problem(), &d.system)?.phi,
            };
            let xt = d.a.y.subdivision.subdivision();
            let z = pontrjagin_cycle(&d.a.y.complex, xt, &d.a.y.pi, &d.dx, &d.omega, &phi, *index)?;
            json!({ "index": z.index, "is_cycle": z.is_cycle, "chain": to_value(&z.chain.to_json(xt)) })
        }
    })
}
