//! Circulant interior-degree assignment and the decreasing neighborhood
//! sequence search (DNSA), plus its cross-check against the oracle.

use serde::{Deserialize, Serialize};

use crate::digraph::{sorted_intersection_len, NeighborSet, NodeId, OrientedGraph};
use crate::error::{GraphError, Result};
use crate::layering::{build_layering, min_out_degree_node, RootedLayering, TieBreak};
use crate::seymour::{seymour_oracle, SeymourReport};

/// Each layer node mapped to `i` targets inside the layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InteriorAssignment {
    pub layer: Vec<NodeId>,
    pub i: usize,
    /// `assigned[j]` are the targets of `layer[j]`, in step order.
    pub assigned: Vec<Vec<NodeId>>,
}

impl InteriorAssignment {
    /// The assignment as an oriented graph on local indices 0..n.
    pub fn as_graph(&self) -> Result<OrientedGraph> {
        let n = self.layer.len();
        let arcs: Vec<(u32, u32)> = (0..n)
            .flat_map(|j| (1..=self.i).map(move |s| (j as u32, ((j + s) % n) as u32)))
            .collect();
        OrientedGraph::from_arcs(n, &arcs)
    }

    /// (|N⁺_int|, |N⁺⁺_int|) of each layer node under the assignment.
    pub fn degree_profile(&self) -> Result<Vec<(usize, usize)>> {
        let g = self.as_graph()?;
        g.nodes().map(|v| Ok((g.out_degree(v), g.second_out_neighbors(v)?.len()))).collect()
    }
}

/// Node at index j targets indices j+1..=j+i (mod n).
pub fn map_interior_degrees(layer: &[NodeId], i: usize) -> Result<InteriorAssignment> {
    let n = layer.len();
    if n <= i {
        return Err(GraphError::LayerTooSmall { layer_size: n, degree: i });
    }
    if n <= 2 * i {
        return Err(GraphError::OrientationInfeasible { layer_size: n, degree: i });
    }
    let assigned = (0..n).map(|j| (1..=i).map(|s| layer[(j + s) % n]).collect()).collect();
    Ok(InteriorAssignment { layer: layer.to_vec(), i, assigned })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HaltReason {
    Back,
    Dense,
    Size,
    LowDegreePrecheck,
    Exhausted,
}

impl HaltReason {
    pub fn as_str(self) -> &'static str {
        match self {
            HaltReason::Back => "back",
            HaltReason::Dense => "dense",
            HaltReason::Size => "size",
            HaltReason::LowDegreePrecheck => "low_degree_precheck",
            HaltReason::Exhausted => "exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    BackArc { tail: NodeId, head: NodeId, layer: usize, head_layer: usize },
    Dense { parent: NodeId, child: NodeId, interior: usize, required: usize },
    Size { layer: usize, size: usize },
    LowDegree { out_degree: usize },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DnsaResult {
    pub root: NodeId,
    pub halt_reason: HaltReason,
    pub marked_node: Option<NodeId>,
    /// Layer index being scanned when the search halted.
    pub layer: Option<usize>,
    pub evidence: Evidence,
    pub path_from_root: Vec<NodeId>,
}

/// Runs the search, defaulting the root to the lowest-id minimum out-degree node.
pub fn run_dnsa(g: &OrientedGraph, root: Option<NodeId>) -> Result<DnsaResult> {
    run_dnsa_with(g, root, TieBreak::LowestId)
}

/// The low-degree precheck only applies to a defaulted root: an explicit
/// root is scanned as given.
pub fn run_dnsa_with(g: &OrientedGraph, root: Option<NodeId>, tie_break: TieBreak) -> Result<DnsaResult> {
    let root = match root {
        Some(r) => {
            g.check_node(r)?;
            r
        }
        None => {
            let r = min_out_degree_node(g, tie_break)?;
            let d = g.out_degree(r);
            if d <= 2 {
                return Ok(DnsaResult {
                    root: r,
                    halt_reason: HaltReason::LowDegreePrecheck,
                    marked_node: Some(r),
                    layer: Some(0),
                    evidence: Evidence::LowDegree { out_degree: d },
                    path_from_root: vec![r],
                });
            }
            r
        }
    };
    let layering = build_layering(g, root)?;
    Ok(scan_layers(g, &layering))
}

/// The layer scan itself, on an already built layering.
pub fn scan_layers(g: &OrientedGraph, l: &RootedLayering<'_>) -> DnsaResult {
    let halt = |reason, marked: NodeId, layer, evidence| DnsaResult {
        root: l.root(),
        halt_reason: reason,
        marked_node: Some(marked),
        layer: Some(layer),
        evidence,
        path_from_root: l.path_from_root(marked),
    };
    for (i, layer) in l.layers().iter().enumerate() {
        for &u in layer {
            let back = g.out_slice(u).iter().copied().find(|&w| l.dist(w).is_some_and(|dw| dw < i));
            if let Some(w) = back {
                let head_layer = l.dist(w).unwrap_or_default();
                return halt(HaltReason::Back, u, i, Evidence::BackArc { tail: u, head: w, layer: i, head_layer });
            }
            if i > 0 {
                let parent = l.representative_parent(u).expect("layered nodes below R_0 have a parent");
                let interior = sorted_intersection_len(g.out_slice(parent), g.out_slice(u));
                if interior < i {
                    let evidence = Evidence::Dense { parent, child: u, interior, required: i };
                    return halt(HaltReason::Dense, parent, i, evidence);
                }
            }
        }
        if i > 0 && layer.len() <= 2 {
            let parent = l
                .layer(i - 1)
                .iter()
                .copied()
                .find(|&p| g.out_slice(p).iter().any(|&w| l.dist(w) == Some(i)))
                .expect("every layer past R_0 has a parent in the previous one");
            return halt(HaltReason::Size, parent, i, Evidence::Size { layer: i, size: layer.len() });
        }
    }
    DnsaResult {
        root: l.root(),
        halt_reason: HaltReason::Exhausted,
        marked_node: None,
        layer: None,
        evidence: Evidence::None,
        path_from_root: vec![l.root()],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    NotApplicable,
}

impl Verdict {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Confirmed => Some(true),
            Verdict::Refuted => Some(false),
            Verdict::NotApplicable => None,
        }
    }
}

/// A search outcome compared with the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub root: NodeId,
    pub halt_reason: HaltReason,
    pub marked_node: Option<NodeId>,
    /// (|N⁺|, |N⁺⁺|) of the marked node.
    pub marked_sizes: Option<(usize, usize)>,
    /// Whether the marked node is a Seymour vertex; null when nothing was marked.
    pub oracle_confirms: Option<bool>,
    pub verdict: Verdict,
    pub oracle_seymour_set: NeighborSet,
    pub result: DnsaResult,
}

impl VerificationRecord {
    pub fn is_disagreement(&self) -> bool {
        self.verdict == Verdict::Refuted
    }
}

pub fn verify_dnsa(g: &OrientedGraph, root: Option<NodeId>) -> Result<VerificationRecord> {
    verify_dnsa_with(g, root, TieBreak::LowestId)
}

pub fn verify_dnsa_with(g: &OrientedGraph, root: Option<NodeId>, tie_break: TieBreak) -> Result<VerificationRecord> {
    let result = run_dnsa_with(g, root, tie_break)?;
    let report = seymour_oracle(g);
    Ok(verification_from(result, &report))
}

pub(crate) fn verification_from(result: DnsaResult, report: &SeymourReport) -> VerificationRecord {
    let marked_sizes = result.marked_node.map(|m| {
        let r = report.record(m);
        (r.first_size, r.second_size)
    });
    let verdict = match marked_sizes {
        None => Verdict::NotApplicable,
        Some((first, second)) if second >= first => Verdict::Confirmed,
        Some(_) => Verdict::Refuted,
    };
    VerificationRecord {
        root: result.root,
        halt_reason: result.halt_reason,
        marked_node: result.marked_node,
        marked_sizes,
        oracle_confirms: verdict.as_bool(),
        verdict,
        oracle_seymour_set: report.seymour_set.clone(),
        result,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerDensity {
    pub layer: usize,
    pub nodes: usize,
    pub arcs: usize,
    /// arcs / (n(n-1)/2), 0 for layers of fewer than two nodes.
    pub density: f64,
    pub seymour_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseReport {
    pub layers: Vec<LayerDensity>,
    /// First layer of maximal density.
    pub densest: Option<usize>,
}

pub fn dense_report(l: &RootedLayering<'_>, g: &OrientedGraph) -> DenseReport {
    let report = seymour_oracle(g);
    let layers: Vec<LayerDensity> = l
        .layers()
        .iter()
        .enumerate()
        .map(|(i, layer)| {
            let arcs: usize = layer
                .iter()
                .map(|&u| g.out_slice(u).iter().filter(|&&w| l.dist(w) == Some(i)).count())
                .sum();
            let n = layer.len();
            let max = n * n.saturating_sub(1) / 2;
            let density = if max == 0 { 0.0 } else { arcs as f64 / max as f64 };
            let seymour_count = layer.iter().filter(|&&v| report.is_seymour(v)).count();
            LayerDensity { layer: i, nodes: n, arcs, density, seymour_count }
        })
        .collect();
    let mut densest: Option<usize> = None;
    for d in &layers {
        if densest.map_or(true, |b| d.density > layers[b].density) {
            densest = Some(d.layer);
        }
    }
    DenseReport { layers, densest }
}
