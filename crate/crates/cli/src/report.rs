use mvcut::graph::CutsetCertificate;
use mvcut::io::LabeledGraph;
use mvcut::{classify_special, Graph, Matching, Vertex};
use serde::Serialize;
use serde_json::{json, Value};

/// Exit status contract of every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    InputError,
    NoSolution,
    NotACutset,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::InputError => 1,
            Status::NoSolution => 2,
            Status::NotACutset => 3,
        }
    }
}

#[derive(Serialize)]
pub struct InputSummary {
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub class: String,
}

impl InputSummary {
    pub fn new(source: String, g: &Graph) -> Self {
        Self {
            source,
            n: g.vertex_count(),
            m: g.edge_count(),
            min_degree: g.min_degree(),
            class: classify_special(g).to_string(),
        }
    }
}

/// The single JSON object written to stdout.
#[derive(Serialize)]
pub struct ResultDocument {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputSummary>,
    pub result: Value,
    pub status: Status,
    pub exit_code: u8,
}

impl ResultDocument {
    pub fn new(input: Option<InputSummary>, result: Value, status: Status) -> Self {
        Self {
            command: std::env::args().skip(1).collect(),
            input,
            result,
            status,
            exit_code: status.code(),
        }
    }

    pub fn error(message: String) -> Self {
        Self::new(None, json!({ "error": message }), Status::InputError)
    }
}

/// Matching and certificate fields, with labels when the input had any.
pub fn cutset_fields(lg: &LabeledGraph, m: &Matching, cert: &CutsetCertificate) -> Value {
    let mut out = json!({
        "matching": m.edges(),
        "size": m.len(),
        "verdict": cert.verdict,
        "components_after": cert.components_after,
    });
    if !lg.has_identity_labels() {
        let name = |v: Vertex| lg.labels[v].clone();
        let labeled: Vec<[String; 2]> = m.edges().iter().map(|&(u, v)| [name(u), name(v)]).collect();
        out["matching_labels"] = json!(labeled);
    }
    out
}
