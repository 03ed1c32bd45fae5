//! JSON payloads. Every command wraps its result in a [`RunReport`]; only
//! `timing_ms` varies between identical runs.

use serde::{Deserialize, Serialize};

use esbss::oracle::ExactResult;
use esbss::testkit::GenSpec;
use esbss::{ApproxTrace, ArcId, BoundReport, SbcCheckReport, Vertex};

#[derive(Debug, Serialize, Deserialize)]
pub struct RunReport<T> {
    pub command: String,
    pub input: Option<InputInfo>,
    pub result: T,
    pub timing_ms: f64,
    pub provenance: Provenance,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct InputInfo {
    pub path: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Provenance {
    pub tool_version: String,
    pub seed: Option<u64>,
}

impl Provenance {
    pub fn new(seed: Option<u64>) -> Self {
        Provenance {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckResult {
    #[serde(flatten)]
    pub report: SbcCheckReport,
    /// Witness rendered with the requested label offset.
    pub witness_text: Option<String>,
}

/// Vertex ids here are internal (0-based) regardless of `--label-offset`.
#[derive(Debug, Serialize, Deserialize)]
pub struct ComponentsResult {
    pub sccs: Vec<Vec<Vertex>>,
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    pub sbcs: Vec<Vec<Vertex>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ArcInfo {
    pub arc: ArcId,
    pub tail: Vertex,
    pub head: Vertex,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BBridgesResult {
    pub b_bridges: Vec<ArcInfo>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum MinimizeResult {
    Approx {
        trace: ApproxTrace,
        bound: BoundReport,
    },
    Exact(ExactResult),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GenResult {
    pub spec: GenSpec,
    pub m: usize,
    pub out: Option<String>,
}
