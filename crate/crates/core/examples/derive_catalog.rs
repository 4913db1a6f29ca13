//! Regenerates `data/forbidden_catalog.g6`:
//! `cargo run --release --example derive_catalog > data/forbidden_catalog.g6`

fn main() {
    let catalog = permgraph::permutation::derive_forbidden_catalog(
        permgraph::permutation::catalog::CATALOG_MAX_ORDER,
    )
    .expect("ceiling is within bounds");
    print!("{}", catalog.to_text());
}
