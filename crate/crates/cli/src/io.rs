use std::fs;
use std::path::Path;

use pontrjagin::assoc::{assemble, Associated, AssemblyOptions};
use pontrjagin::topology::SimplicialComplex;
use pontrjagin::Error;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::Global;

/// A domain failure, reported as `{"status": "error", "error": kind, "message": ...}`.
#[derive(Debug)]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        CliError { kind: kind.into(), message: message.into() }
    }

    pub fn to_json(&self) -> Value {
        json!({"status": "error", "error": self.kind, "message": self.message})
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::new(e.kind(), e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::new("ParseError", e.to_string())
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::new("IoError", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::new("ParseError", format!("{}: {e}", path.display())))
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    Ok(SimplicialComplex::from_json(&read_json(path)?)?)
}

pub fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Vertex indices of a simplex given by labels.
pub fn parse_simplex(x: &SimplicialComplex, labels: &[String]) -> Result<Vec<usize>, CliError> {
    let mut s = labels
        .iter()
        .map(|l| x.vertex_index(l).ok_or_else(|| CliError::new("InvalidInput", format!("unknown vertex {l:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    s.sort();
    s.dedup();
    Ok(s)
}

pub fn assembly_options(g: &Global, samples: Option<usize>) -> AssemblyOptions {
    let mut o = AssemblyOptions::default();
    if let Some(b) = g.budget {
        o.max_simplices = b;
    }
    if let Some(s) = samples {
        o.samples = s;
    }
    o
}

pub fn assemble_from(path: &Path, n: usize, g: &Global, samples: Option<usize>) -> Result<Associated, CliError> {
    Ok(assemble(&read_complex(path)?, n, &assembly_options(g, samples))?)
}

/// Pretty JSON with a trailing newline, to `path` or standard output.
pub fn emit(v: &Value, path: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::new("IoError", format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
