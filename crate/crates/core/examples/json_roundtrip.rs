//! Parses the irrint table document, re-emits it canonically and audits the
//! layer labels it declares against a fresh layering.
//!
//!     cargo run --example json_roundtrip

use glover::io::json::fixture_document;
use glover::io::{audit_labels, from_json, to_json};
use glover::{build_layering, Fixture, NodeId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let source = fixture_document(Fixture::Irrint);
    let parsed = from_json(&source)?;
    let canonical = to_json(&parsed.graph, None);
    println!("source    {} bytes, {} declared labels", source.len(), parsed.declared_labels.len());
    println!("canonical {canonical}");
    assert_eq!(from_json(&canonical)?.graph, parsed.graph);

    let l = build_layering(&parsed.graph, NodeId(0))?;
    for m in audit_labels(&parsed.declared_labels, &l) {
        println!("node {:>2}: declared {}, computed {}", m.node, m.declared, m.computed);
    }
    println!("labelled  {}", to_json(&parsed.graph, Some(&l)));
    Ok(())
}
