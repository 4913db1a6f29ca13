use permgraph::graph::io::{encode_dot, encode_edge_list, encode_graph6};
use permgraph::Graph;
use serde_json::{json, Value};

use crate::Format;

/// A command's result: text for humans, JSON for machines, and the verdict
/// that picks the exit status.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub affirmative: bool,
}

impl Outcome {
    pub fn new(command: &str, text: String, mut json: Value) -> Self {
        json.as_object_mut()
            .expect("command JSON is an object")
            .insert(
                "schema".into(),
                Value::String(format!("permgraph/{command}/v1")),
            );
        Outcome {
            text,
            json,
            affirmative: true,
        }
    }

    pub fn verdict(mut self, affirmative: bool) -> Self {
        self.affirmative = affirmative;
        self
    }
}

/// One graph in the chosen text format, newline-terminated.
pub fn graph_text(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 | Format::Json => format!("{}\n", encode_graph6(g)),
        Format::Edgelist => encode_edge_list(g),
        Format::Dot => encode_dot(g),
    }
}

/// Several graphs: one graph6 line each, or blocks separated by blank lines.
pub fn graphs_text(graphs: &[Graph], format: Format) -> String {
    let sep = if matches!(format, Format::Graph6 | Format::Json) {
        ""
    } else {
        "\n"
    };
    graphs
        .iter()
        .map(|g| graph_text(g, format))
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect();
    json!({
        "order": g.order(),
        "size": g.size(),
        "graph6": encode_graph6(g),
        "edges": edges,
    })
}

/// 0-based vertex list shown 1-based and space-separated.
pub fn one_based(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
