//! Layers a graph from a root and prints every arc with its class.
//!
//!     cargo run --example layering -- furtherex 0
//!     cargo run --example layering -- irrint min

use glover::{build_layering, min_out_degree_node, NodeId, TieBreak};

fn ids(nodes: &[NodeId]) -> String {
    nodes.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let g = glover::fixture(&args.next().unwrap_or_else(|| "furtherex".into()))?;
    let root = match args.next().as_deref() {
        Some("min") => min_out_degree_node(&g, TieBreak::LowestId)?,
        Some(r) => NodeId(r.parse()?),
        None => NodeId(0),
    };
    let l = build_layering(&g, root)?;
    for (i, layer) in l.layers().iter().enumerate() {
        println!("R_{i}: {}", ids(layer));
    }
    if !l.unreachable().is_empty() {
        println!("unreachable: {}", ids(l.unreachable()));
    }
    for (u, v) in g.arcs() {
        println!("{u} -> {v}  {}", l.arc_class(u, v)?);
    }
    for (u, v) in l.parent_child_arcs() {
        let p = l.neighbor_partition(u, v)?;
        println!("({u},{v}) int {{{}}} ext {{{}}} back {{{}}}", ids(p.interior.as_slice()), ids(p.exterior.as_slice()), ids(p.back.as_slice()));
    }
    let sizes = l.layer_size_sequence();
    println!("layer sizes {:?}, d+(root) = {}", sizes.sizes, sizes.delta);
    Ok(())
}
