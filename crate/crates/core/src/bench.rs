//! Timing of layering plus the DNSA scan on sparse random graphs, reported
//! per element (|V| + |E|) so the rows of a size sweep can be compared.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::digraph::{NodeId, OrientedGraph};
use crate::dnsa::{run_dnsa, HaltReason};
use crate::generate::gen_sparse_random_oriented;
use crate::layering::build_layering;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub root: NodeId,
    pub layers: usize,
    pub halt_reason: HaltReason,
    /// Fastest of the repeats, layering and DNSA together.
    pub best_ns: u128,
    pub ns_per_element: f64,
}

/// Highest out-degree node, lowest id on ties. Rooting there makes the
/// breadth-first pass cover most of a random graph.
pub fn max_out_degree_node(g: &OrientedGraph) -> Option<NodeId> {
    g.nodes().max_by_key(|&v| (g.out_degree(v), std::cmp::Reverse(v)))
}

/// Times `build_layering` + `run_dnsa` on `g`, best of `repeats`.
pub fn time_graph(g: &OrientedGraph, repeats: usize) -> Option<BenchRow> {
    let root = max_out_degree_node(g)?;
    let mut best = Duration::MAX;
    let mut outcome = None;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let layering = build_layering(g, root).expect("root is in range");
        let result = run_dnsa(g, Some(root)).expect("root is in range");
        let elapsed = start.elapsed();
        best = best.min(elapsed);
        outcome = Some((layering.layer_count(), result.halt_reason));
    }
    let (layers, halt_reason) = outcome?;
    let elements = (g.node_count() + g.arc_count()) as f64;
    Some(BenchRow {
        n: g.node_count(),
        m: g.arc_count(),
        root,
        layers,
        halt_reason,
        best_ns: best.as_nanos(),
        ns_per_element: best.as_nanos() as f64 / elements,
    })
}

/// Generates a sparse graph with average total degree `avg_degree` and times it.
pub fn bench_size(n: usize, avg_degree: f64, seed: u64, repeats: usize) -> Option<BenchRow> {
    let p = if n > 1 { (avg_degree / (n - 1) as f64).min(1.0) } else { 0.0 };
    let g = gen_sparse_random_oriented(n, p, seed);
    time_graph(&g, repeats)
}

/// Largest over smallest per-element time across rows.
pub fn spread(rows: &[BenchRow]) -> f64 {
    let per: Vec<f64> = rows.iter().map(|r| r.ns_per_element).collect();
    let max = per.iter().copied().fold(f64::MIN, f64::max);
    let min = per.iter().copied().fold(f64::MAX, f64::min);
    max / min
}
