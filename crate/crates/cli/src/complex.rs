use std::path::PathBuf;

use clap::{Args, Subcommand};
use pontrjagin::topology::{
    barycentric_subdivision, fundamental_class, homology_groups, orientation_system, LocalSystem, SimplicialComplex,
    SystemJson,
};
use serde_json::{json, Map, Value};

use crate::io::{read_complex, read_json, to_value, CliError};
use crate::Global;

#[derive(Args)]
pub struct Coefficients {
    /// Use the orientation system of the complex as coefficients.
    #[arg(long, conflicts_with = "system")]
    twisted: bool,
    /// Read the coefficient system from a file.
    #[arg(long)]
    system: Option<PathBuf>,
}

impl Coefficients {
    fn resolve(&self, x: &SimplicialComplex) -> Result<LocalSystem, CliError> {
        if self.twisted {
            return Ok(orientation_system(x)?);
        }
        match &self.system {
            Some(p) => Ok(LocalSystem::from_json(x, &read_json::<SystemJson>(p)?)?),
            None => Ok(LocalSystem::trivial()),
        }
    }
}

#[derive(Subcommand)]
pub enum ComplexCmd {
    /// Barycentric subdivision, with the simplex each new vertex is the barycenter of.
    Subdivide { complex: PathBuf },
    /// Integral homology in every degree.
    Homology {
        complex: PathBuf,
        #[command(flatten)]
        coefficients: Coefficients,
    },
    /// Fundamental class of a closed pseudomanifold.
    FundamentalClass {
        complex: PathBuf,
        #[command(flatten)]
        coefficients: Coefficients,
    },
}

pub fn run(cmd: &ComplexCmd, _g: &Global) -> Result<Value, CliError> {
    Ok(match cmd {
        ComplexCmd::Subdivide { complex } => {
            let x = read_complex(complex)?;
            let d = barycentric_subdivision(&x);
            let mut cells = Map::new();
            for (v, s) in d.cells().iter().enumerate() {
                let names: Vec<&str> = s.iter().map(|&u| x.label(u)).collect();
                cells.insert(d.subdivision().label(v).to_string(), json!(names));
            }
            json!({ "subdivision": to_value(&d.subdivision().to_json()), "cells": cells })
        }
        ComplexCmd::Homology { complex, coefficients } => {
            let x = read_complex(complex)?;
            let system = coefficients.resolve(&x)?;
            let groups: Vec<Value> = homology_groups(&x, &system)?
                .iter()
                .enumerate()
                .map(|(k, h)| {
                    let torsion: Vec<String> = h.torsion.iter().map(|t| t.to_string()).collect();
                    json!({ "degree": k, "betti": h.betti, "torsion": torsion })
                })
                .collect();
            json!({ "system": to_value(&system.to_json(&x)), "groups": groups })
        }
        ComplexCmd::FundamentalClass { complex, coefficients } => {
            let x = read_complex(complex)?;
            let system = coefficients.resolve(&x)?;
            to_value(&fundamental_class(&x, Some(&system))?.to_json(&x))
        }
    })
}
