//! WebAssembly bindings for the demo page in `www/`. Each export returns a
//! JSON string; the `*_json` functions behind them are plain Rust so they
//! can be tested natively.

use permgraph::blowup::{is_blowup_of_path, twin_partition, PartKind};
use permgraph::boxcar::{
    boxcar_blowup_spec, boxcar_certificate, boxcar_graph, boxcar_hamiltonian_path, classify_cubic,
};
use permgraph::enumeration::{count_compositions_23, count_cubic, generate_sequences};
use permgraph::graph::planar::is_planar;
use permgraph::{BoxcarSequence, CubicClassification, Graph, Permutation};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest order the count table will go to.
pub const TABLE_MAX_ORDER: usize = 400;

/// Orders up to this also list their sequences.
const LIST_SEQUENCES_UP_TO: usize = 40;

fn edges_1(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect()
}

fn kind_letter(k: PartKind) -> &'static str {
    match k {
        PartKind::Clique => "K",
        PartKind::Independent => "I",
    }
}

/// Boxcar graph of `seq` laid out block by block along its path.
pub fn boxcar_layout_json(seq: &str) -> Result<String, String> {
    let seq: BoxcarSequence = seq.parse().map_err(|e| format!("{e}"))?;
    let g = boxcar_graph(&seq);
    let spec = boxcar_blowup_spec(&seq);
    let mut vertices = Vec::with_capacity(g.order());
    for (block, part) in spec.parts().iter().enumerate() {
        for m in 0..part.size() {
            vertices.push(json!({
                "id": vertices.len() + 1,
                "x": block,
                "y": m as f64 - (part.size() - 1) as f64 / 2.0,
                "block": block,
                "part": part.to_string(),
            }));
        }
    }
    let path: Vec<usize> = boxcar_hamiltonian_path(&seq)
        .iter()
        .map(|v| v + 1)
        .collect();
    let out = json!({
        "sequence": seq.to_string(),
        "order": g.order(),
        "vertices": vertices,
        "edges": edges_1(&g),
        "realizer": boxcar_certificate(&seq).pi.values(),
        "hamiltonian_path": path,
        "planar": is_planar(&g),
        "spec": spec.to_string(),
    });
    Ok(out.to_string())
}

/// Inversion graph of a permutation with its twin classes and, for
/// connected cubic graphs, the classification.
pub fn permutation_json(text: &str) -> Result<String, String> {
    let pi: Permutation = text.parse().map_err(|e| format!("{e}"))?;
    let g = pi.graph();
    let tp = twin_partition(&g);
    let classes: Vec<Value> = tp
        .classes
        .iter()
        .zip(&tp.kinds)
        .map(|(c, &k)| {
            json!({
                "vertices": c.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "kind": kind_letter(k),
            })
        })
        .collect();
    let classification = (g.is_regular(3) && g.is_connected())
        .then(|| classify_cubic(&g).ok())
        .flatten()
        .map(|c| match c {
            CubicClassification::IsK4 => "K4".to_string(),
            CubicClassification::IsK33 => "K3,3".to_string(),
            CubicClassification::Boxcar(s) => format!("boxcar {s}"),
            CubicClassification::NotPermutationGraph { .. } => {
                "not a permutation graph".to_string()
            }
        });
    let out = json!({
        "permutation": pi.values(),
        "order": g.order(),
        "edges": edges_1(&g),
        "degrees": g.degrees(),
        "twin_classes": classes,
        "quotient_order": tp.classes.len(),
        "path_blowup": is_blowup_of_path(&g).map(|(k, spec)| json!({ "path_order": k, "spec": spec.to_string() })),
        "cubic_class": classification,
    });
    Ok(out.to_string())
}

/// `a(n)` for even `n` in `4..=n_max` and `t(x)` alongside.
pub fn count_table_json(n_max: usize) -> Result<String, String> {
    if n_max > TABLE_MAX_ORDER {
        return Err(format!("table is limited to n <= {TABLE_MAX_ORDER}"));
    }
    let rows: Vec<Value> = (4..=n_max)
        .step_by(2)
        .map(|n| {
            let sequences = (10..=LIST_SEQUENCES_UP_TO).contains(&n).then(|| {
                generate_sequences(n)
                    .map(|v| v.iter().map(|s| s.to_string()).collect::<Vec<_>>())
                    .unwrap_or_default()
            });
            json!({ "n": n, "count": count_cubic(n).to_string(), "sequences": sequences })
        })
        .collect();
    let t: Vec<String> = (0..=n_max / 4)
        .map(|x| count_compositions_23(x as i64).to_string())
        .collect();
    Ok(json!({ "rows": rows, "t": t }).to_string())
}

#[wasm_bindgen(js_name = boxcarLayout)]
pub fn boxcar_layout(seq: &str) -> Result<String, JsError> {
    boxcar_layout_json(seq).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = permutationGraph)]
pub fn permutation_graph(text: &str) -> Result<String, JsError> {
    permutation_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = countTable)]
pub fn count_table(n_max: usize) -> Result<String, JsError> {
    count_table_json(n_max).map_err(|e| JsError::new(&e))
}
