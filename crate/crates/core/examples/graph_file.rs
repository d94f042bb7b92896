//! Reads a graph of groups in the text format and prints its invariants.
//!
//! `cargo run --example graph_file -- crates/core/examples/graphs/mixed_tree.gog`
use gogchi::calculus::InvariantReport;
use gogchi::gogfile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graphs/mixed_tree.gog").to_string());
    let g = gogfile::parse(&std::fs::read_to_string(&path)?)?;
    let report = g.validate();
    for issue in &report.issues {
        eprintln!("{issue}");
    }
    println!("{} vertices, {} edges, norm {}", g.vertices.len(), g.edges.len(), g.norm());
    for (name, value) in InvariantReport::compute(&g)?.entries() {
        println!("{name} = {value}");
    }
    Ok(())
}
