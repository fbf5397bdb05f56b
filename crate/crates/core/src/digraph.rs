//! Oriented graphs stored as compressed adjacency rows.
//!
//! Node ids are dense indices in `0..node_count`. Both the out- and the
//! in-adjacency of every node are kept sorted and duplicate-free, so arc
//! lookups are binary searches and neighborhood intersections are merges.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for NodeId {
    fn from(v: u32) -> Self {
        NodeId(v)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A sorted, duplicate-free set of nodes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NeighborSet(Vec<NodeId>);

impl NeighborSet {
    pub fn new() -> Self {
        NeighborSet(Vec::new())
    }

    /// Sorts and deduplicates `nodes`.
    pub fn from_nodes(mut nodes: Vec<NodeId>) -> Self {
        nodes.sort_unstable();
        nodes.dedup();
        NeighborSet(nodes)
    }

    pub(crate) fn from_sorted(nodes: Vec<NodeId>) -> Self {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        NeighborSet(nodes)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[NodeId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<NodeId> {
        self.0
    }

    pub fn intersection(&self, other: &NeighborSet) -> NeighborSet {
        NeighborSet(sorted_intersection(&self.0, &other.0))
    }

    pub fn union(&self, other: &NeighborSet) -> NeighborSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        NeighborSet(out)
    }

    pub fn difference(&self, other: &NeighborSet) -> NeighborSet {
        NeighborSet(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn is_disjoint(&self, other: &NeighborSet) -> bool {
        sorted_intersection_len(&self.0, &other.0) == 0
    }
}

impl FromIterator<NodeId> for NeighborSet {
    fn from_iter<I: IntoIterator<Item = NodeId>>(iter: I) -> Self {
        NeighborSet::from_nodes(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a NeighborSet {
    type Item = &'a NodeId;
    type IntoIter = std::slice::Iter<'a, NodeId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

pub(crate) fn sorted_intersection(a: &[NodeId], b: &[NodeId]) -> Vec<NodeId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn sorted_intersection_len(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Epoch-stamped node marker, reusable across many neighborhood expansions.
pub(crate) struct Marker {
    stamp: Vec<u32>,
    epoch: u32,
}

impl Marker {
    pub(crate) fn new(node_count: usize) -> Self {
        Marker { stamp: vec![0; node_count], epoch: 1 }
    }

    pub(crate) fn clear(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    /// Marks `v`; returns true when it was not yet marked.
    #[inline]
    pub(crate) fn mark(&mut self, v: NodeId) -> bool {
        let slot = &mut self.stamp[v.index()];
        if *slot == self.epoch {
            false
        } else {
            *slot = self.epoch;
            true
        }
    }
}

/// A loop-free directed graph without parallel arcs. Symmetric pairs are
/// allowed here; [`OrientedGraph`] adds the antisymmetry guarantee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out_offsets: Vec<usize>,
    out_targets: Vec<NodeId>,
    in_offsets: Vec<usize>,
    in_sources: Vec<NodeId>,
}

impl Digraph {
    /// Builds from arcs already known to be loop-free and duplicate-free.
    fn from_clean_arcs(node_count: usize, arcs: &[(NodeId, NodeId)]) -> Self {
        let (out_offsets, out_targets) = compress(node_count, arcs.iter().map(|&(t, h)| (t, h)), arcs.len());
        let (in_offsets, in_sources) = compress(node_count, arcs.iter().map(|&(t, h)| (h, t)), arcs.len());
        Digraph { out_offsets, out_targets, in_offsets, in_sources }
    }

    pub fn node_count(&self) -> usize {
        self.out_offsets.len() - 1
    }

    pub fn arc_count(&self) -> usize {
        self.out_targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node_count() == 0
    }

    pub fn nodes(&self) -> impl DoubleEndedIterator<Item = NodeId> + ExactSizeIterator {
        (0..self.node_count() as u32).map(NodeId)
    }

    /// All arcs, ordered by (tail, head).
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.nodes().flat_map(move |u| self.out_slice(u).iter().map(move |&v| (u, v)))
    }

    pub fn check_node(&self, v: NodeId) -> Result<()> {
        if v.index() < self.node_count() {
            Ok(())
        } else {
            Err(GraphError::IdOutOfRange { id: v.0 as u64, node_count: self.node_count() })
        }
    }

    #[inline]
    pub fn out_slice(&self, v: NodeId) -> &[NodeId] {
        let i = v.index();
        &self.out_targets[self.out_offsets[i]..self.out_offsets[i + 1]]
    }

    #[inline]
    pub fn in_slice(&self, v: NodeId) -> &[NodeId] {
        let i = v.index();
        &self.in_sources[self.in_offsets[i]..self.in_offsets[i + 1]]
    }

    #[inline]
    pub fn out_degree(&self, v: NodeId) -> usize {
        let i = v.index();
        self.out_offsets[i + 1] - self.out_offsets[i]
    }

    #[inline]
    pub fn in_degree(&self, v: NodeId) -> usize {
        let i = v.index();
        self.in_offsets[i + 1] - self.in_offsets[i]
    }

    #[inline]
    pub fn has_arc(&self, tail: NodeId, head: NodeId) -> bool {
        self.out_slice(tail).binary_search(&head).is_ok()
    }

    /// Arcs as raw `(tail, head)` pairs, ordered by tail then head.
    pub fn arc_list(&self) -> Vec<(u32, u32)> {
        self.arcs().map(|(u, v)| (u.0, v.0)).collect()
    }

    /// True when no pair of opposite arcs exists.
    pub fn is_antisymmetric(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }
}

/// Counting-sort `pairs` into offset/target rows with sorted rows.
fn compress(
    node_count: usize,
    pairs: impl Iterator<Item = (NodeId, NodeId)> + Clone,
    len: usize,
) -> (Vec<usize>, Vec<NodeId>) {
    let mut offsets = vec![0usize; node_count + 1];
    for (k, _) in pairs.clone() {
        offsets[k.index() + 1] += 1;
    }
    for i in 0..node_count {
        offsets[i + 1] += offsets[i];
    }
    let mut cursor = offsets.clone();
    let mut targets = vec![NodeId(0); len];
    for (k, v) in pairs {
        targets[cursor[k.index()]] = v;
        cursor[k.index()] += 1;
    }
    for i in 0..node_count {
        targets[offsets[i]..offsets[i + 1]].sort_unstable();
    }
    (offsets, targets)
}

/// A validated oriented graph: no self-loops, no parallel arcs and no
/// symmetric pairs. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    inner: Digraph,
}

impl Deref for OrientedGraph {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.inner
    }
}

impl OrientedGraph {
    /// Validates and builds an oriented graph. Input arc order does not
    /// affect the result; when several arcs are invalid the one reported is
    /// the first in (tail, head) order.
    pub fn from_arcs(node_count: usize, arcs: &[(u32, u32)]) -> Result<Self> {
        assert!(node_count <= u32::MAX as usize, "node ids are 32-bit");
        for &(t, h) in arcs {
            for id in [t, h] {
                if id as usize >= node_count {
                    return Err(GraphError::IdOutOfRange { id: id as u64, node_count });
                }
            }
        }
        let pairs: Vec<(NodeId, NodeId)> = arcs.iter().map(|&(t, h)| (NodeId(t), NodeId(h))).collect();
        let (offsets, targets) = compress(node_count, pairs.iter().copied(), pairs.len());
        let row = |u: usize| &targets[offsets[u]..offsets[u + 1]];
        for u in 0..node_count {
            let tail = NodeId(u as u32);
            let heads = row(u);
            for (k, &head) in heads.iter().enumerate() {
                if head == tail {
                    return Err(GraphError::SelfLoop(tail));
                }
                if k > 0 && heads[k - 1] == head {
                    return Err(GraphError::DuplicateArc(tail, head));
                }
                if row(head.index()).binary_search(&tail).is_ok() {
                    return Err(GraphError::SymmetricPair(tail.min(head), tail.max(head)));
                }
            }
        }
        Ok(OrientedGraph { inner: Digraph::from_clean_arcs(node_count, &pairs) })
    }

    /// A graph with `node_count` nodes and no arcs.
    pub fn empty(node_count: usize) -> Self {
        OrientedGraph { inner: Digraph::from_clean_arcs(node_count, &[]) }
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.inner
    }

    /// N⁺(v): the heads of arcs leaving `v`.
    pub fn out_neighbors(&self, v: NodeId) -> Result<NeighborSet> {
        self.check_node(v)?;
        Ok(NeighborSet::from_sorted(self.out_slice(v).to_vec()))
    }

    /// N⁺⁺(v): nodes at directed distance exactly two from `v`.
    pub fn second_out_neighbors(&self, v: NodeId) -> Result<NeighborSet> {
        self.check_node(v)?;
        let mut marker = Marker::new(self.node_count());
        Ok(self.second_out_neighbors_with(v, &mut marker))
    }

    pub(crate) fn second_out_neighbors_with(&self, v: NodeId, marker: &mut Marker) -> NeighborSet {
        let mut found = Vec::new();
        self.for_each_second_out_neighbor(v, marker, |x| found.push(x));
        NeighborSet::from_nodes(found)
    }

    /// Visits every node at distance exactly two from `v`, once each.
    pub(crate) fn for_each_second_out_neighbor(&self, v: NodeId, marker: &mut Marker, mut visit: impl FnMut(NodeId)) {
        marker.clear();
        marker.mark(v);
        for &w in self.out_slice(v) {
            marker.mark(w);
        }
        for &w in self.out_slice(v) {
            for &x in self.out_slice(w) {
                if marker.mark(x) {
                    visit(x);
                }
            }
        }
    }

    /// G[S], re-indexed densely in ascending order of the original ids.
    pub fn induced_subgraph(&self, subset: &[NodeId]) -> Result<InducedSubgraph> {
        for &v in subset {
            self.check_node(v)?;
        }
        let members = NeighborSet::from_nodes(subset.to_vec()).into_vec();
        let mut local = vec![u32::MAX; self.node_count()];
        for (i, v) in members.iter().enumerate() {
            local[v.index()] = i as u32;
        }
        let mut arcs = Vec::new();
        for (i, &v) in members.iter().enumerate() {
            for &w in self.out_slice(v) {
                let j = local[w.index()];
                if j != u32::MAX {
                    arcs.push((NodeId(i as u32), NodeId(j)));
                }
            }
        }
        let graph = OrientedGraph { inner: Digraph::from_clean_arcs(members.len(), &arcs) };
        Ok(InducedSubgraph { graph, original_ids: members })
    }

    /// G²: an arc u -> v whenever v is at distance one or two from u.
    /// The result can contain symmetric pairs, so it is a plain [`Digraph`].
    pub fn square_graph(&self) -> Digraph {
        let mut marker = Marker::new(self.node_count());
        let mut arcs = Vec::with_capacity(self.arc_count() * 2);
        for u in self.nodes() {
            arcs.extend(self.out_slice(u).iter().map(|&v| (u, v)));
            self.for_each_second_out_neighbor(u, &mut marker, |x| arcs.push((u, x)));
        }
        Digraph::from_clean_arcs(self.node_count(), &arcs)
    }

    /// Out-degree of `v` inside G[N⁺(owner)], i.e. |N⁺(v) ∩ N⁺(owner)|.
    pub fn interior_degree(&self, owner: NodeId, v: NodeId) -> usize {
        sorted_intersection_len(self.out_slice(owner), self.out_slice(v))
    }

    pub fn min_out_degree(&self) -> Option<usize> {
        self.nodes().map(|v| self.out_degree(v)).min()
    }
}

/// Free-function form of [`OrientedGraph::from_arcs`].
pub fn build_graph(node_count: usize, arcs: &[(u32, u32)]) -> Result<OrientedGraph> {
    OrientedGraph::from_arcs(node_count, arcs)
}

/// An induced subgraph together with the original id of each of its nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: OrientedGraph,
    /// `original_ids[local]` is the id of local node `local` in the parent graph.
    pub original_ids: Vec<NodeId>,
}

impl InducedSubgraph {
    pub fn original(&self, local: NodeId) -> NodeId {
        self.original_ids[local.index()]
    }

    pub fn local(&self, original: NodeId) -> Option<NodeId> {
        self.original_ids.binary_search(&original).ok().map(|i| NodeId(i as u32))
    }
}
