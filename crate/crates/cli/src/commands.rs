use std::error::Error as StdError;
use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use permgraph::blowup::apply_blowup;
use permgraph::boxcar::{
    boxcar_blowup_spec, boxcar_certificate, boxcar_graph, boxcar_hamiltonian_path, classify_cubic,
    regular_family, regular_family_certificate,
};
use permgraph::enumeration::{
    census_cubic, count_compositions_23, count_cubic, crosscheck, generate_graphs,
    generate_sequences, Recognizer,
};
use permgraph::graph::io::{encode_graph6, read_graph};
use permgraph::permutation::{
    derive_forbidden_catalog, find_realizer, find_realizer_bounded, ForbiddenCatalog, Obstruction,
    REALIZER_MAX_ORDER,
};
use permgraph::{BlowupSpec, BoxcarSequence, CubicClassification, Error, Graph, Permutation};
use serde_json::{json, Value};

use crate::output::{graph_json, graph_text, graphs_text, one_based, Outcome};
use crate::{CensusFilter, Command, Global, RecognizerArg};

type CmdResult = Result<Outcome, Box<dyn StdError>>;

/// Largest order `enumerate --list` builds unless `--max-n` says otherwise.
const LIST_MAX_ORDER: usize = 60;

fn read_input(path: &Option<PathBuf>) -> io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_input_graph(path: &Option<PathBuf>) -> Result<Graph, Box<dyn StdError>> {
    Ok(read_graph(&read_input(path)?)?)
}

/// `N` or an inclusive `A..B`.
fn parse_range(s: &str) -> Result<(usize, usize), Box<dyn StdError>> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad range bound {t:?}"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if a > b {
        return Err(format!("empty range {s:?}").into());
    }
    Ok((a, b))
}

fn graph_outcome(command: &str, global: &Global, g: &Graph, extra: Value) -> Outcome {
    let mut j = json!({ "graph": graph_json(g) });
    if let (Some(obj), Value::Object(more)) = (j.as_object_mut(), extra) {
        obj.extend(more);
    }
    Outcome::new(command, graph_text(g, global.format), j)
}

pub fn run(global: &Global, command: &Command) -> CmdResult {
    match command {
        Command::Check { input, certificate } => check(global, input, *certificate),
        Command::FromPerm { permutation } => {
            let pi: Permutation = permutation.parse()?;
            Ok(graph_outcome(
                "from-perm",
                global,
                &pi.graph(),
                json!({ "permutation": pi.values() }),
            ))
        }
        Command::Boxcar {
            sequence,
            realizer,
            hamiltonian_path,
            spec,
        } => boxcar(global, sequence, *realizer, *hamiltonian_path, *spec),
        Command::Classify { input } => classify(&read_input_graph(input)?),
        Command::Family { r, n, realizer } => {
            let g = regular_family(*r, *n)?;
            let cert = regular_family_certificate(*r, *n)?;
            let mut out = graph_outcome(
                "family",
                global,
                &g,
                json!({ "r": r, "n": n, "realizer": cert.pi.values() }),
            );
            if *realizer {
                out.text = format!("{}\n", cert.pi);
            }
            Ok(out)
        }
        Command::Enumerate {
            range,
            list,
            sequences,
            compositions,
            ..
        } => enumerate(global, range, *list, *sequences, *compositions),
        Command::Census { n, filter } => census(global, *n, *filter),
        Command::Crosscheck { n_max, recognizer } => {
            let recognizer = match recognizer {
                RecognizerArg::Realizer => Recognizer::Realizer,
                RecognizerArg::Catalog => Recognizer::Catalog,
            };
            let report = crosscheck(*n_max, recognizer)?;
            let ok = report.all_ok();
            Ok(Outcome::new(
                "crosscheck",
                report.to_string(),
                serde_json::to_value(&report)?,
            )
            .verdict(ok))
        }
        Command::Catalog { max_order } => {
            let cat = derive_forbidden_catalog(*max_order)?;
            let g6: Vec<String> = cat.graphs.iter().map(encode_graph6).collect();
            Ok(Outcome::new(
                "catalog",
                cat.to_text(),
                json!({ "max_order_searched": cat.max_order_searched, "graphs": g6 }),
            ))
        }
        Command::Blowup { input } => {
            let text = read_input(input)?;
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .ok_or_else(|| Error::parse(0, "no blow-up spec in input"))?;
            let spec: BlowupSpec = line.parse()?;
            Ok(graph_outcome(
                "blowup",
                global,
                &apply_blowup(&spec),
                json!({ "spec": spec.to_string() }),
            ))
        }
    }
}

fn check(global: &Global, input: &Option<PathBuf>, certificate: bool) -> CmdResult {
    let g = read_input_graph(input)?;
    let cert = find_realizer_bounded(&g, global.max_n(REALIZER_MAX_ORDER))?;
    let mut text = format!(
        "permutation-graph: {}\n",
        if cert.is_some() { "yes" } else { "no" }
    );
    let mut j = json!({ "order": g.order(), "permutation_graph": cert.is_some() });
    if let (true, Some(c)) = (certificate, &cert) {
        text.push_str(&format!("realizer: {}\n", c.pi));
        text.push_str(&format!(
            "vertex-to-position: {}\n",
            one_based(&c.vertex_to_position)
        ));
    }
    if let Some(c) = &cert {
        let positions: Vec<usize> = c.vertex_to_position.iter().map(|p| p + 1).collect();
        j["realizer"] = json!(c.pi.values());
        j["vertex_to_position"] = json!(positions);
    }
    Ok(Outcome::new("check", text, j).verdict(cert.is_some()))
}

fn boxcar(global: &Global, sequence: &str, realizer: bool, path: bool, spec: bool) -> CmdResult {
    let seq: BoxcarSequence = sequence.parse()?;
    let g = boxcar_graph(&seq);
    let cert = boxcar_certificate(&seq);
    let ham = boxcar_hamiltonian_path(&seq);
    let blowup = boxcar_blowup_spec(&seq);
    let ham_1: Vec<usize> = ham.iter().map(|v| v + 1).collect();
    let mut out = graph_outcome(
        "boxcar",
        global,
        &g,
        json!({
            "sequence": seq.to_string(),
            "realizer": cert.pi.values(),
            "hamiltonian_path": ham_1,
            "spec": blowup.to_string(),
        }),
    );
    if realizer {
        out.text = format!("{}\n", cert.pi);
    } else if path {
        out.text = format!("{}\n", one_based(&ham));
    } else if spec {
        out.text = format!("{blowup}\n");
    }
    Ok(out)
}

fn obstruction_text(o: &Obstruction) -> String {
    match o {
        Obstruction::LargeHole(cycle) => format!("large hole {}", one_based(cycle)),
        Obstruction::Forbidden { index, vertices } => {
            format!(
                "forbidden subgraph {} on {}",
                index + 1,
                one_based(vertices)
            )
        }
    }
}

fn classify(g: &Graph) -> CmdResult {
    let class = classify_cubic(g)?;
    let (text, j, ok) = match &class {
        CubicClassification::IsK4 => ("k4".to_string(), json!({ "class": "k4" }), true),
        CubicClassification::IsK33 => ("k33".to_string(), json!({ "class": "k33" }), true),
        CubicClassification::Boxcar(s) => (
            format!("boxcar {s}"),
            json!({ "class": "boxcar", "sequence": s.to_string() }),
            true,
        ),
        CubicClassification::NotPermutationGraph { witness } => {
            let text = match witness {
                Some(o) => format!("not-permutation-graph: {}", obstruction_text(o)),
                None => "not-permutation-graph".to_string(),
            };
            let catalog = ForbiddenCatalog::builtin();
            let w = witness.as_ref().map(|o| match o {
                Obstruction::LargeHole(c) => json!({ "kind": "large_hole", "vertices": c.iter().map(|v| v + 1).collect::<Vec<_>>() }),
                Obstruction::Forbidden { index, vertices } => json!({
                    "kind": "forbidden",
                    "catalog_index": index + 1,
                    "graph6": encode_graph6(&catalog.graphs[*index]),
                    "vertices": vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                }),
            });
            (
                text,
                json!({ "class": "not_permutation_graph", "witness": w }),
                false,
            )
        }
    };
    Ok(Outcome::new("classify", format!("{text}\n"), j).verdict(ok))
}

fn enumerate(
    global: &Global,
    range: &str,
    list: bool,
    sequences: bool,
    compositions: bool,
) -> CmdResult {
    let (lo, hi) = parse_range(range)?;
    if compositions {
        let rows: Vec<Value> = (lo..=hi)
            .map(|x| json!({ "x": x, "t": count_compositions_23(x as i64).to_string() }))
            .collect();
        let mut text = String::from("x\tt(x)\n");
        for x in lo..=hi {
            text.push_str(&format!("{x}\t{}\n", count_compositions_23(x as i64)));
        }
        return Ok(Outcome::new(
            "enumerate",
            text,
            json!({ "compositions": rows }),
        ));
    }
    if sequences {
        let mut text = String::from("n\tsequence\n");
        let mut rows = Vec::new();
        for n in (lo..=hi).filter(|n| n % 2 == 0 && *n >= 10) {
            for s in generate_sequences(n)? {
                text.push_str(&format!("{n}\t{s}\n"));
                rows.push(json!({ "n": n, "sequence": s.to_string() }));
            }
        }
        return Ok(Outcome::new(
            "enumerate",
            text,
            json!({ "sequences": rows }),
        ));
    }
    if list {
        let limit = global.max_n(LIST_MAX_ORDER);
        if hi > limit {
            return Err(Error::capacity("graph listing order", hi, limit).into());
        }
        let mut graphs = Vec::new();
        let mut rows = Vec::new();
        for n in lo..=hi {
            for g in generate_graphs(n) {
                rows.push(json!({ "n": n, "graph6": encode_graph6(&g) }));
                graphs.push(g);
            }
        }
        return Ok(Outcome::new(
            "enumerate",
            graphs_text(&graphs, global.format),
            json!({ "graphs": rows }),
        ));
    }
    let mut text = String::from("n\ta(n)\n");
    let mut rows = Vec::new();
    for n in lo..=hi {
        let a = count_cubic(n.max(1));
        text.push_str(&format!("{n}\t{a}\n"));
        rows.push(json!({ "n": n, "count": a.to_string() }));
    }
    Ok(Outcome::new("enumerate", text, json!({ "counts": rows })))
}

fn census(global: &Global, n: usize, filter: Option<CensusFilter>) -> CmdResult {
    let limit = global.max_n(permgraph::enumeration::CENSUS_MAX_ORDER);
    if n > limit {
        return Err(Error::capacity("cubic census order", n, limit).into());
    }
    let mut graphs = census_cubic(n)?;
    let total = graphs.len();
    if filter == Some(CensusFilter::Permutation) {
        let mut kept = Vec::new();
        for g in graphs {
            if find_realizer(&g)?.is_some() {
                kept.push(g);
            }
        }
        graphs = kept;
    }
    let g6: Vec<String> = graphs.iter().map(encode_graph6).collect();
    Ok(Outcome::new(
        "census",
        graphs_text(&graphs, global.format),
        json!({ "n": n, "total": total, "graphs": g6 }),
    ))
}
