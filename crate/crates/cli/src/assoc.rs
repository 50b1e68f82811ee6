use std::path::PathBuf;

use clap::{Args, Subcommand};
use pontrjagin::assoc::{
    build_local_y, build_u_delta_seeded, validate_y_vertex, validate_z_vertex, VertexJson, YVertex, ZVertex,
    DEFAULT_SAMPLES, DEFAULT_SEED,
};
use pontrjagin::topology::SimplicialComplex;
use serde_json::{json, Value};

use crate::io::{assemble_from, parse_simplex, read_complex, read_json, to_value, CliError};
use crate::Global;

/// The triangulation `X` and the rank `n`.
#[derive(Args)]
pub struct Base {
    #[arg(long)]
    complex: PathBuf,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
pub struct Local {
    #[command(flatten)]
    base: Base,
    /// Vertex labels of the simplex Δ, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    delta: Vec<String>,
    /// Embeddings to sample.
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Subcommand)]
pub enum AssocCmd {
    /// Run the vertex validators on a Y vertex, or a Z vertex when `z` is present.
    ValidateVertex {
        #[command(flatten)]
        base: Base,
        vertex: PathBuf,
    },
    /// The realizable part of the poset U_Δ.
    UDelta(Local),
    /// The local model of Y over the star of Δ.
    LocalY(Local),
    /// Assemble Y and Z with their projections.
    Assemble {
        #[command(flatten)]
        base: Base,
        #[arg(long)]
        samples: Option<usize>,
    },
}

fn names(x: &SimplicialComplex, s: &[usize]) -> Vec<String> {
    s.iter().map(|&v| x.label(v).to_string()).collect()
}

pub fn run(cmd: &AssocCmd, g: &Global) -> Result<Value, CliError> {
    Ok(match cmd {
        AssocCmd::ValidateVertex { base, vertex } => {
            let x = read_complex(&base.complex)?;
            let j: VertexJson = read_json(vertex)?;
            let report = if j.z.is_some() {
                validate_z_vertex(&x, base.n, &ZVertex::from_json(&x, &j)?)
            } else {
                validate_y_vertex(&x, base.n, &YVertex::from_json(&x, &j)?)
            };
            to_value(&report)
        }
        AssocCmd::UDelta(l) => {
            let x = read_complex(&l.base.complex)?;
            let delta = parse_simplex(&x, &l.delta)?;
            let u = build_u_delta_seeded(&x, l.base.n, &delta, l.samples.unwrap_or(DEFAULT_SAMPLES), DEFAULT_SEED)?;
            let elements: Vec<Value> = u
                .elements
                .iter()
                .map(|(t, y)| json!({ "t": to_value(&t.to_json()), "y": to_value(&y.to_json()) }))
                .collect();
            json!({
                "delta": names(&x, &u.delta),
                "incomplete": u.incomplete,
                "samples_drawn": u.samples_drawn,
                "samples_accepted": u.samples_accepted,
                "elements": elements,
                "order": u.poset.relations(),
            })
        }
        AssocCmd::LocalY(l) => {
            let x = read_complex(&l.base.complex)?;
            let delta = parse_simplex(&x, &l.delta)?;
            let local = build_local_y(&x, l.base.n, &delta, l.samples.unwrap_or(DEFAULT_SAMPLES))?;
            let vertices: Vec<Value> =
                local.vertices.iter().map(|(i, c)| json!({ "element": i, "coface": names(&x, c) })).collect();
            json!({
                "delta": names(&x, &delta),
                "f_vector": local.complex.f_vector(),
                "vertices": vertices,
                "complex": to_value(&local.complex.to_json()),
            })
        }
        AssocCmd::Assemble { base, samples } => to_value(&assemble_from(&base.complex, base.n, g, *samples)?.to_json()),
    })
}
