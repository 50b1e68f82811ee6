use std::path::PathBuf;

use clap::{Args, Subcommand};
use pontrjagin::chern::{chern_number, generate_circle_bundle, omega, theta, BundleJson, CircleBundle};
use pontrjagin::linalg::format_rational;
use pontrjagin::topology::{fundamental_class, Chain};
use serde_json::{json, Value};

use crate::io::{read_json, to_value, CliError};
use crate::Global;

pub const DEFAULT_FIBER: usize = 3;

/// A bundle read from a file, or generated over the 2-sphere with the given Euler number.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    bundle: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    euler: Option<i64>,
    #[arg(long, requires = "euler")]
    fiber: Option<usize>,
}

impl Source {
    /// The bundle and the class its Euler number is measured on.
    fn load(&self) -> Result<(CircleBundle, Chain), CliError> {
        if let Some(p) = self.euler {
            let g = generate_circle_bundle(p, self.fiber.unwrap_or(DEFAULT_FIBER))?;
            return Ok((g.bundle, g.base_class));
        }
        let path = self.bundle.as_ref().expect("clap enforces a source");
        let b = CircleBundle::from_json(&read_json::<BundleJson>(path)?)?;
        let c = fundamental_class(&b.y, Some(&b.orientation))?;
        Ok((b, c))
    }
}

#[derive(Subcommand)]
pub enum BundleCmd {
    /// A circle bundle over the 2-sphere with Euler number `p`.
    Generate {
        #[arg(long, allow_hyphen_values = true)]
        euler: i64,
        /// Vertices per fiber (an odd prime).
        #[arg(long, default_value_t = DEFAULT_FIBER)]
        fiber: usize,
    },
    /// The connection cochain Θ on Z.
    Theta(Source),
    /// The Chern cocycle Ω on Y.
    Omega(Source),
    /// ⟨Ω, [Y]⟩.
    ChernNumber(Source),
}

pub fn run(cmd: &BundleCmd, g: &Global) -> Result<Value, CliError> {
    Ok(match cmd {
        BundleCmd::Generate { euler, fiber } => to_value(&generate_circle_bundle(*euler, *fiber)?.bundle.to_json()),
        BundleCmd::Theta(s) => {
            let (b, _) = s.load()?;
            to_value(&theta(&b)?.to_json(&b.z))
        }
        BundleCmd::Omega(s) => {
            let (b, _) = s.load()?;
            let r = omega(&b, &theta(&b)?, g.strict())?;
            json!({
                "status": if r.inconsistent.is_empty() && r.unlifted.is_empty() { "pass" } else { "fail" },
                "omega": to_value(&r.omega.to_json(&b.y)),
                "inconsistent": to_value(&r.inconsistent),
                "unlifted": r.unlifted,
            })
        }
        BundleCmd::ChernNumber(s) => {
            let (b, c) = s.load()?;
            let r = omega(&b, &theta(&b)?, g.strict())?;
            json!({ "chern_number": format_rational(&chern_number(&r.omega, &c)?) })
        }
    })
}
