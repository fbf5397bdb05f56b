//! Breadth-first layering of an oriented graph from a root ("rooted
//! neighborhoods" R₀..R_k), arc classes relative to the layering, the
//! interior/exterior/back split of a child's out-neighbors, and the A/B split.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::{sorted_intersection_len, NeighborSet, NodeId, OrientedGraph};
use crate::error::{GraphError, Result};

const UNREACHED: u32 = u32::MAX;

/// Which minimum out-degree node to root at when several tie.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    #[default]
    LowestId,
    /// Largest in-degree first, then lowest id.
    HighestInDegree,
}

impl FromStr for TieBreak {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lowest-id" => Ok(TieBreak::LowestId),
            "highest-in-degree" => Ok(TieBreak::HighestInDegree),
            other => Err(format!("unknown tie-break `{other}` (expected lowest-id or highest-in-degree)")),
        }
    }
}

pub fn min_out_degree_node(g: &OrientedGraph, tie_break: TieBreak) -> Result<NodeId> {
    let best = match tie_break {
        TieBreak::LowestId => g.nodes().min_by_key(|&v| (g.out_degree(v), v)),
        TieBreak::HighestInDegree => {
            g.nodes().min_by_key(|&v| (g.out_degree(v), std::cmp::Reverse(g.in_degree(v)), v))
        }
    };
    best.ok_or(GraphError::EmptyGraph)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcClass {
    /// Head one layer further out than the tail.
    Forward,
    /// Head and tail in the same layer.
    Lateral,
    /// Head in a strictly earlier layer.
    Back,
    /// Tail not reachable from the root.
    FromUnreachable,
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArcClass::Forward => "forward",
            ArcClass::Lateral => "lateral",
            ArcClass::Back => "back",
            ArcClass::FromUnreachable => "from_unreachable",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BackArc {
    pub tail: NodeId,
    pub head: NodeId,
    /// dist(tail) - dist(head), always at least 1.
    pub delta: u32,
}

/// Layers R₀..R_k of the nodes reachable from `root`, by shortest distance.
///
/// Within a layer nodes are ordered by out-degree descending, then id
/// ascending; [`RootedLayering::rank`] is a node's position in that order.
#[derive(Debug, Clone)]
pub struct RootedLayering<'g> {
    graph: &'g OrientedGraph,
    root: NodeId,
    dist: Vec<u32>,
    rank: Vec<u32>,
    layers: Vec<Vec<NodeId>>,
    back_arcs: Vec<BackArc>,
    unreachable: Vec<NodeId>,
}

pub fn build_layering(g: &OrientedGraph, root: NodeId) -> Result<RootedLayering<'_>> {
    g.check_node(root)?;
    let n = g.node_count();
    let mut dist = vec![UNREACHED; n];
    let mut layers: Vec<Vec<NodeId>> = Vec::new();
    let mut queue = VecDeque::new();
    dist[root.index()] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let d = dist[u.index()];
        if layers.len() <= d as usize {
            layers.push(Vec::new());
        }
        layers[d as usize].push(u);
        for &w in g.out_slice(u) {
            if dist[w.index()] == UNREACHED {
                dist[w.index()] = d + 1;
                queue.push_back(w);
            }
        }
    }

    let mut rank = vec![UNREACHED; n];
    for layer in &mut layers {
        layer.sort_unstable_by_key(|&v| (std::cmp::Reverse(g.out_degree(v)), v));
        for (r, &v) in layer.iter().enumerate() {
            rank[v.index()] = r as u32;
        }
    }

    let mut back_arcs = Vec::new();
    let mut unreachable = Vec::new();
    for u in g.nodes() {
        let du = dist[u.index()];
        if du == UNREACHED {
            unreachable.push(u);
            continue;
        }
        for &w in g.out_slice(u) {
            let dw = dist[w.index()];
            if dw < du {
                back_arcs.push(BackArc { tail: u, head: w, delta: du - dw });
            }
        }
    }

    Ok(RootedLayering { graph: g, root, dist, rank, layers, back_arcs, unreachable })
}

impl<'g> RootedLayering<'g> {
    pub fn graph(&self) -> &'g OrientedGraph {
        self.graph
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    /// Index k of the last layer.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    /// R_i in intra-layer order; empty past the last layer.
    pub fn layer(&self, i: usize) -> &[NodeId] {
        self.layers.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    /// R_i as a sorted set.
    pub fn layer_set(&self, i: usize) -> NeighborSet {
        NeighborSet::from_nodes(self.layer(i).to_vec())
    }

    pub fn layers(&self) -> &[Vec<NodeId>] {
        &self.layers
    }

    pub fn dist(&self, v: NodeId) -> Option<usize> {
        match self.dist[v.index()] {
            UNREACHED => None,
            d => Some(d as usize),
        }
    }

    pub fn is_reachable(&self, v: NodeId) -> bool {
        self.dist[v.index()] != UNREACHED
    }

    /// Position of `v` within its layer.
    pub fn rank(&self, v: NodeId) -> Option<usize> {
        match self.rank[v.index()] {
            UNREACHED => None,
            r => Some(r as usize),
        }
    }

    pub fn back_arcs(&self) -> &[BackArc] {
        &self.back_arcs
    }

    pub fn has_back_arcs(&self) -> bool {
        !self.back_arcs.is_empty()
    }

    pub fn unreachable(&self) -> &[NodeId] {
        &self.unreachable
    }

    /// "R_i" for reachable nodes, "unreachable" otherwise.
    pub fn label(&self, v: NodeId) -> String {
        match self.dist(v) {
            Some(d) => format!("R_{d}"),
            None => "unreachable".to_string(),
        }
    }

    pub fn arc_class(&self, tail: NodeId, head: NodeId) -> Result<ArcClass> {
        self.graph.check_node(tail)?;
        self.graph.check_node(head)?;
        if !self.graph.has_arc(tail, head) {
            return Err(GraphError::NotAnArc(tail, head));
        }
        Ok(self.arc_class_unchecked(tail, head))
    }

    pub(crate) fn arc_class_unchecked(&self, tail: NodeId, head: NodeId) -> ArcClass {
        let dt = self.dist[tail.index()];
        if dt == UNREACHED {
            return ArcClass::FromUnreachable;
        }
        let dh = self.dist[head.index()];
        if dh == dt + 1 {
            ArcClass::Forward
        } else if dh == dt {
            ArcClass::Lateral
        } else {
            debug_assert!(dh < dt, "breadth-first layers never skip forward");
            ArcClass::Back
        }
    }

    /// In-neighbors of `v` in the previous layer, in intra-layer order.
    pub fn parents(&self, v: NodeId) -> Vec<NodeId> {
        let Some(d) = self.dist(v) else { return Vec::new() };
        if d == 0 {
            return Vec::new();
        }
        let mut ps: Vec<NodeId> =
            self.graph.in_slice(v).iter().copied().filter(|&p| self.dist(p) == Some(d - 1)).collect();
        ps.sort_unstable_by_key(|&p| self.rank[p.index()]);
        ps
    }

    /// The first parent of `v` by intra-layer order.
    pub fn representative_parent(&self, v: NodeId) -> Option<NodeId> {
        let d = self.dist(v)?;
        if d == 0 {
            return None;
        }
        self.graph
            .in_slice(v)
            .iter()
            .copied()
            .filter(|&p| self.dist[p.index()] as usize == d - 1)
            .min_by_key(|&p| self.rank[p.index()])
    }

    /// Root-to-`v` path following representative parents.
    pub fn path_from_root(&self, v: NodeId) -> Vec<NodeId> {
        if !self.is_reachable(v) {
            return Vec::new();
        }
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.representative_parent(cur) {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Every arc (u, v) with v one layer below u, ordered by (u, v).
    pub fn parent_child_arcs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.graph.arcs().filter(|&(u, v)| self.arc_class_unchecked(u, v) == ArcClass::Forward)
    }

    /// Splits N⁺(child) into interior, exterior and back neighbors relative
    /// to `parent`.
    pub fn neighbor_partition(&self, parent: NodeId, child: NodeId) -> Result<NeighborPartition> {
        self.graph.check_node(parent)?;
        self.graph.check_node(child)?;
        if !self.graph.has_arc(parent, child) || self.arc_class_unchecked(parent, child) != ArcClass::Forward {
            return Err(GraphError::NotParentChild(parent, child));
        }
        Ok(self.partition_unchecked(parent, child))
    }

    /// Case rule for w ∈ N⁺(child): back if dist(w) < dist(child); interior
    /// if w shares child's layer and parent -> w; exterior otherwise.
    pub(crate) fn partition_unchecked(&self, parent: NodeId, child: NodeId) -> NeighborPartition {
        let dc = self.dist[child.index()];
        let (mut interior, mut exterior, mut back) = (Vec::new(), Vec::new(), Vec::new());
        for &w in self.graph.out_slice(child) {
            let dw = self.dist[w.index()];
            if dw < dc {
                back.push(w);
            } else if dw == dc && self.graph.has_arc(parent, w) {
                interior.push(w);
            } else {
                exterior.push(w);
            }
        }
        NeighborPartition {
            parent,
            child,
            interior: NeighborSet::from_sorted(interior),
            exterior: NeighborSet::from_sorted(exterior),
            back: NeighborSet::from_sorted(back),
        }
    }

    /// Out-neighbors of `v` inside its own layer.
    pub fn layer_interior_first(&self, v: NodeId) -> NeighborSet {
        let d = self.dist[v.index()];
        NeighborSet::from_sorted(self.graph.out_slice(v).iter().copied().filter(|w| self.dist[w.index()] == d).collect())
    }

    /// Nodes of v's layer two lateral steps away, excluding v and its lateral
    /// out-neighbors.
    pub fn layer_interior_second(&self, v: NodeId) -> NeighborSet {
        let first = self.layer_interior_first(v);
        let mut out = Vec::new();
        for w in first.iter() {
            out.extend(self.layer_interior_first(w).iter().filter(|&x| x != v && !first.contains(x)));
        }
        NeighborSet::from_nodes(out)
    }

    /// True when v's lateral out-degree at least doubles inside its layer.
    pub fn layer_interior_doubles(&self, v: NodeId) -> bool {
        self.layer_interior_second(v).len() >= self.layer_interior_first(v).len()
    }

    pub fn layer_size_sequence(&self) -> LayerSizes {
        let sizes: Vec<usize> = self.layers.iter().map(Vec::len).collect();
        let delta = self.graph.out_degree(self.root);
        let bounds = sizes
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &size)| {
                let bound = delta as i64 - (i as i64 - 1);
                BoundCheck { layer: i, size, bound, pass: size as i64 <= bound }
            })
            .collect();
        LayerSizes { sizes, delta, bounds }
    }

    /// A = R₀..R_{b-1}, buffer = R_b, B = R_{b+1}..R_k plus unreachable nodes.
    pub fn split_layers(&self, boundary: usize) -> Result<LayerSplit> {
        let k = self.depth();
        if boundary < 1 || boundary > k {
            return Err(GraphError::BoundaryOutOfRange { boundary, last_layer: k });
        }
        let group_a = NeighborSet::from_nodes(self.layers[..boundary].concat());
        let buffer = self.layer_set(boundary);
        let mut b_nodes = self.layers[boundary + 1..].concat();
        b_nodes.extend_from_slice(&self.unreachable);
        let group_b = NeighborSet::from_nodes(b_nodes);
        let side = |v: NodeId| match self.dist(v) {
            Some(d) if d < boundary => 0,
            Some(d) if d == boundary => 1,
            _ => 2,
        };
        let crossing: Vec<(NodeId, NodeId)> = self
            .graph
            .arcs()
            .filter(|&(u, v)| {
                let (su, sv) = (side(u), side(v));
                (su == 0 && sv == 2) || (su == 2 && sv == 0)
            })
            .collect();
        Ok(LayerSplit { boundary, interference: crossing.len(), group_a, buffer, group_b, crossing })
    }

    /// Checks the structural invariants of the layering against its graph.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let g = self.graph;
        if self.layers.first().map(Vec::as_slice) != Some(&[self.root][..]) {
            return Err("R_0 is not {root}".into());
        }
        let mut seen = vec![false; g.node_count()];
        for (i, layer) in self.layers.iter().enumerate() {
            if layer.is_empty() {
                return Err(format!("layer {i} is empty"));
            }
            for (r, &v) in layer.iter().enumerate() {
                if std::mem::replace(&mut seen[v.index()], true) {
                    return Err(format!("node {v} appears twice"));
                }
                if self.dist(v) != Some(i) || self.rank(v) != Some(r) {
                    return Err(format!("node {v} has inconsistent dist/rank"));
                }
            }
            let ordered = layer
                .windows(2)
                .all(|w| (std::cmp::Reverse(g.out_degree(w[0])), w[0]) < (std::cmp::Reverse(g.out_degree(w[1])), w[1]));
            if !ordered {
                return Err(format!("layer {i} is not in intra-layer order"));
            }
            if i > 0 && layer.iter().any(|&v| self.representative_parent(v).is_none()) {
                return Err(format!("a node of layer {i} has no parent"));
            }
        }
        for &v in &self.unreachable {
            if std::mem::replace(&mut seen[v.index()], true) {
                return Err(format!("unreachable node {v} also layered"));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err("layers and unreachable set do not cover all nodes".into());
        }
        let mut expected_back = Vec::new();
        for (u, v) in g.arcs() {
            match (self.dist(u), self.dist(v)) {
                (Some(du), Some(dv)) if dv > du + 1 => return Err(format!("arc {u}->{v} skips forward")),
                (Some(_), None) => return Err(format!("arc {u}->{v} leaves the reachable set")),
                (Some(du), Some(dv)) if dv < du => {
                    expected_back.push(BackArc { tail: u, head: v, delta: (du - dv) as u32 })
                }
                _ => {}
            }
        }
        if expected_back != self.back_arcs {
            return Err("back-arc list mismatch".into());
        }
        Ok(())
    }

    pub fn summary(&self) -> LayeringSummary {
        let g = self.graph;
        LayeringSummary {
            root: self.root,
            layers: self.layers.clone(),
            back_arcs: self.back_arcs.clone(),
            unreachable: self.unreachable.clone(),
            arcs: g
                .arcs()
                .map(|(u, v)| ClassifiedArc { tail: u, head: v, class: self.arc_class_unchecked(u, v) })
                .collect(),
        }
    }
}

/// N⁺⁺(u) ∩ N⁺(v), computed without any layering.
pub fn exterior_set_definitional(g: &OrientedGraph, u: NodeId, v: NodeId) -> Result<NeighborSet> {
    g.check_node(u)?;
    g.check_node(v)?;
    if !g.has_arc(u, v) {
        return Err(GraphError::NotAnArc(u, v));
    }
    Ok(g.second_out_neighbors(u)?.intersection(&g.out_neighbors(v)?))
}

/// |N⁺(parent) ∩ N⁺(child)|, independent of any layering.
pub fn interior_count(g: &OrientedGraph, parent: NodeId, child: NodeId) -> usize {
    sorted_intersection_len(g.out_slice(parent), g.out_slice(child))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborPartition {
    pub parent: NodeId,
    pub child: NodeId,
    pub interior: NeighborSet,
    pub exterior: NeighborSet,
    pub back: NeighborSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub layer: usize,
    pub size: usize,
    /// d⁺(root) - (layer - 1); may be negative.
    pub bound: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerSizes {
    pub sizes: Vec<usize>,
    /// Out-degree of the root.
    pub delta: usize,
    pub bounds: Vec<BoundCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerSplit {
    pub boundary: usize,
    pub group_a: NeighborSet,
    pub buffer: NeighborSet,
    pub group_b: NeighborSet,
    /// Arcs joining A and B directly, in either direction.
    pub crossing: Vec<(NodeId, NodeId)>,
    pub interference: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedArc {
    pub tail: NodeId,
    pub head: NodeId,
    pub class: ArcClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayeringSummary {
    pub root: NodeId,
    pub layers: Vec<Vec<NodeId>>,
    pub back_arcs: Vec<BackArc>,
    pub unreachable: Vec<NodeId>,
    pub arcs: Vec<ClassifiedArc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::Fixture;

    fn ids(v: &[u32]) -> Vec<NodeId> {
        v.iter().copied().map(NodeId).collect()
    }

    fn set(v: &[u32]) -> NeighborSet {
        NeighborSet::from_nodes(ids(v))
    }

    fn sorted_layers(l: &RootedLayering) -> Vec<Vec<u32>> {
        l.layers()
            .iter()
            .map(|layer| {
                let mut v: Vec<u32> = layer.iter().map(|n| n.0).collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    #[test]
    fn min_degree_roots() {
        let lowest = |f: Fixture| min_out_degree_node(&f.graph(), TieBreak::LowestId).unwrap();
        assert_eq!(lowest(Fixture::Cycle5), NodeId(0));
        assert_eq!(lowest(Fixture::Furtherex), NodeId(6));
        assert_eq!(lowest(Fixture::Nbr0ex), NodeId(4));
        assert_eq!(min_out_degree_node(&OrientedGraph::empty(0), TieBreak::LowestId), Err(GraphError::EmptyGraph));
        // Sinks 1 and 2; 2 has the larger in-degree.
        let g = crate::build_graph(4, &[(0, 1), (0, 2), (3, 2)]).unwrap();
        assert_eq!(min_out_degree_node(&g, TieBreak::LowestId).unwrap(), NodeId(1));
        assert_eq!(min_out_degree_node(&g, TieBreak::HighestInDegree).unwrap(), NodeId(2));
    }

    #[test]
    fn furtherex_layers() {
        let g = Fixture::Furtherex.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        assert_eq!(sorted_layers(&l), vec![vec![0], vec![1, 2, 3], vec![4, 5], vec![6, 7, 8]]);
        assert!(l.back_arcs().is_empty());
        assert!(l.unreachable().is_empty());
        l.validate().unwrap();
    }

    #[test]
    fn nbr0ex_layers_and_order() {
        let g = Fixture::Nbr0ex.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        assert_eq!(sorted_layers(&l), vec![vec![0], vec![1, 2, 3], vec![4, 5, 6]]);
        // out-degrees 3:4, 1:3, 2:3
        assert_eq!(l.layer(1), &ids(&[3, 1, 2])[..]);
        assert!(l.back_arcs().is_empty());
    }

    #[test]
    fn backtri_has_one_back_arc() {
        let g = Fixture::Backtri.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        assert_eq!(sorted_layers(&l), vec![vec![0], vec![1, 2], vec![3]]);
        assert_eq!(l.back_arcs(), &[BackArc { tail: NodeId(3), head: NodeId(2), delta: 1 }]);
        assert_eq!(l.unreachable(), &ids(&[4])[..]);
        l.validate().unwrap();
    }

    #[test]
    fn arc_classes() {
        let g = Fixture::Furtherex.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        assert_eq!(l.arc_class(NodeId(1), NodeId(4)), Ok(ArcClass::Forward));
        assert_eq!(l.arc_class(NodeId(1), NodeId(2)), Ok(ArcClass::Lateral));
        assert_eq!(l.arc_class(NodeId(4), NodeId(1)), Err(GraphError::NotAnArc(NodeId(4), NodeId(1))));
        let b = Fixture::Backtri.graph();
        let lb = build_layering(&b, NodeId(0)).unwrap();
        assert_eq!(lb.arc_class(NodeId(3), NodeId(2)), Ok(ArcClass::Back));
        let lb1 = build_layering(&b, NodeId(1)).unwrap();
        assert_eq!(lb1.arc_class(NodeId(0), NodeId(2)), Ok(ArcClass::FromUnreachable));
    }

    #[test]
    fn partitions() {
        let g = Fixture::Furtherex.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        let p = l.neighbor_partition(NodeId(0), NodeId(1)).unwrap();
        assert_eq!((p.interior, p.exterior, p.back), (set(&[2]), set(&[4, 5]), set(&[])));
        assert_eq!(l.neighbor_partition(NodeId(1), NodeId(2)), Err(GraphError::NotParentChild(NodeId(1), NodeId(2))));

        let n = Fixture::Nbr0ex.graph();
        let ln = build_layering(&n, NodeId(0)).unwrap();
        let p = ln.neighbor_partition(NodeId(0), NodeId(1)).unwrap();
        assert_eq!((p.interior, p.exterior, p.back), (set(&[]), set(&[4, 5, 6]), set(&[])));

        let b = Fixture::Backtri.graph();
        let lb = build_layering(&b, NodeId(0)).unwrap();
        let p = lb.neighbor_partition(NodeId(1), NodeId(3)).unwrap();
        assert_eq!((p.interior, p.exterior, p.back), (set(&[]), set(&[]), set(&[2])));
    }

    #[test]
    fn definitional_exterior() {
        let g = Fixture::Furtherex.graph();
        assert_eq!(exterior_set_definitional(&g, NodeId(0), NodeId(1)).unwrap(), set(&[4, 5]));
        let c = Fixture::Cycle5.graph();
        assert_eq!(exterior_set_definitional(&c, NodeId(0), NodeId(1)).unwrap(), set(&[2]));
        let single = crate::build_graph(2, &[(0, 1)]).unwrap();
        assert!(exterior_set_definitional(&single, NodeId(0), NodeId(1)).unwrap().is_empty());
        assert_eq!(exterior_set_definitional(&single, NodeId(1), NodeId(0)), Err(GraphError::NotAnArc(NodeId(1), NodeId(0))));
    }

    #[test]
    fn layer_sizes_and_bounds() {
        let g = Fixture::Furtherex.graph();
        let s = build_layering(&g, NodeId(0)).unwrap().layer_size_sequence();
        assert_eq!(s.sizes, vec![1, 3, 2, 3]);
        assert_eq!(s.delta, 3);
        assert_eq!(s.bounds.iter().map(|b| b.pass).collect::<Vec<_>>(), vec![true, true, false]);
        assert_eq!(s.bounds[2].bound, 1);

        let c = Fixture::Cycle5.graph();
        assert_eq!(build_layering(&c, NodeId(0)).unwrap().layer_size_sequence().sizes, vec![1; 5]);
        let one = OrientedGraph::empty(1);
        assert_eq!(build_layering(&one, NodeId(0)).unwrap().layer_size_sequence().sizes, vec![1]);
    }

    #[test]
    fn splits() {
        let g = Fixture::Furtherex.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        let s = l.split_layers(2).unwrap();
        assert_eq!((s.group_a, s.buffer, s.group_b), (set(&[0, 1, 2, 3]), set(&[4, 5]), set(&[6, 7, 8])));
        assert!(s.crossing.is_empty());

        let c = Fixture::Cycle5.graph();
        let l = build_layering(&c, NodeId(0)).unwrap();
        let s = l.split_layers(2).unwrap();
        assert_eq!((s.group_a, s.buffer, s.group_b), (set(&[0, 1]), set(&[2]), set(&[3, 4])));
        assert_eq!(s.crossing, vec![(NodeId(4), NodeId(0))]);
        assert_eq!(s.interference, 1);
        let last = l.split_layers(4).unwrap();
        assert!(last.group_b.is_empty());
        assert_eq!(l.split_layers(0), Err(GraphError::BoundaryOutOfRange { boundary: 0, last_layer: 4 }));
        assert_eq!(l.split_layers(5), Err(GraphError::BoundaryOutOfRange { boundary: 5, last_layer: 4 }));
    }

    #[test]
    fn paths_and_parents() {
        let g = Fixture::Furtherex.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        assert_eq!(l.parents(NodeId(4)), ids(&[1, 2, 3]));
        assert_eq!(l.representative_parent(NodeId(6)), Some(NodeId(4)));
        assert_eq!(l.path_from_root(NodeId(6)), ids(&[0, 1, 4, 6]));
        assert_eq!(l.label(NodeId(6)), "R_3");
    }

    #[test]
    fn lateral_degree_doubling() {
        let g = Fixture::Furtherex.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        // R₁ is the 3-cycle 1 -> 2 -> 3 -> 1.
        assert_eq!(l.layer_interior_first(NodeId(1)), set(&[2]));
        assert_eq!(l.layer_interior_second(NodeId(1)), set(&[3]));
        assert!(l.layer_interior_doubles(NodeId(1)));
        // R₂ = {4, 5} with 4 -> 5.
        assert!(!l.layer_interior_doubles(NodeId(4)));
    }
}
