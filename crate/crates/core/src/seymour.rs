//! Brute-force Seymour-vertex oracle and the small lemmas that can be
//! checked node by node.

use serde::{Deserialize, Serialize};

use crate::digraph::{sorted_intersection_len, Marker, NeighborSet, NodeId, OrientedGraph};
use crate::error::Result;
use crate::layering::{min_out_degree_node, TieBreak};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeymourRecord {
    pub node: NodeId,
    pub first_size: usize,
    pub second_size: usize,
    pub is_seymour: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeymourReport {
    pub records: Vec<SeymourRecord>,
    pub seymour_set: NeighborSet,
}

impl SeymourReport {
    pub fn record(&self, v: NodeId) -> &SeymourRecord {
        &self.records[v.index()]
    }

    pub fn is_seymour(&self, v: NodeId) -> bool {
        self.records[v.index()].is_seymour
    }

    /// Nodes where |N⁺⁺| < |N⁺|.
    pub fn dnsp_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.records.iter().filter(|r| !r.is_seymour).map(|r| r.node)
    }

    pub fn all_dnsp(&self) -> bool {
        self.seymour_set.is_empty()
    }
}

/// |N⁺(v)| and |N⁺⁺(v)| for every node, by two-level expansion.
pub fn seymour_oracle(g: &OrientedGraph) -> SeymourReport {
    let mut marker = Marker::new(g.node_count());
    let mut records = Vec::with_capacity(g.node_count());
    let mut seymour = Vec::new();
    for v in g.nodes() {
        let mut second = 0;
        g.for_each_second_out_neighbor(v, &mut marker, |_| second += 1);
        let first = g.out_degree(v);
        let is_seymour = second >= first;
        if is_seymour {
            seymour.push(v);
        }
        records.push(SeymourRecord { node: v, first_size: first, second_size: second, is_seymour });
    }
    SeymourReport { records, seymour_set: NeighborSet::from_sorted(seymour) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DnspStatus {
    pub node: NodeId,
    pub holds: bool,
}

pub fn dnsp_holds(g: &OrientedGraph, v: NodeId) -> Result<DnspStatus> {
    let second = g.second_out_neighbors(v)?;
    Ok(DnspStatus { node: v, holds: second.len() < g.out_degree(v) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCheck {
    pub node: NodeId,
    /// Every target node has an in-neighbor inside N⁺(node).
    pub covered: bool,
    /// The union of the per-neighbor sets equals the target set. Only
    /// meaningful when `covered` is true.
    pub union_equal: bool,
    pub witness: Option<NodeId>,
}

/// N⁺(u) = ⋃_{v ∈ N⁺(u)} int(u, v): every out-neighbor of u is hit from another.
pub fn interior_cover_holds(g: &OrientedGraph, u: NodeId) -> Result<CoverCheck> {
    let out = g.out_neighbors(u)?;
    let witness = out.iter().find(|&x| sorted_intersection_len(g.in_slice(x), out.as_slice()) == 0);
    let mut union = NeighborSet::new();
    for v in out.iter() {
        union = union.union(&out.intersection(&g.out_neighbors(v)?));
    }
    Ok(CoverCheck { node: u, covered: witness.is_none(), union_equal: union == out, witness })
}

/// N⁺⁺(u) = ⋃_{v ∈ N⁺(u)} (N⁺⁺(u) ∩ N⁺(v)).
pub fn exterior_cover_holds(g: &OrientedGraph, u: NodeId) -> Result<CoverCheck> {
    let out = g.out_neighbors(u)?;
    let second = g.second_out_neighbors(u)?;
    let witness = second.iter().find(|&x| sorted_intersection_len(g.in_slice(x), out.as_slice()) == 0);
    let mut union = NeighborSet::new();
    for v in out.iter() {
        union = union.union(&second.intersection(&g.out_neighbors(v)?));
    }
    Ok(CoverCheck { node: u, covered: witness.is_none(), union_equal: union == second, witness })
}

/// The out-degree-doubling set in G² equals the oracle's Seymour set.
pub fn square_equivalence_check(g: &OrientedGraph) -> bool {
    let sq = g.square_graph();
    let doubling: NeighborSet = g.nodes().filter(|&v| sq.out_degree(v) >= 2 * g.out_degree(v)).collect();
    doubling == seymour_oracle(g).seymour_set
}

/// Outcome of a lemma whose premise may not apply to a given graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub applicable: bool,
    pub holds: bool,
}

impl LemmaCheck {
    fn vacuous() -> Self {
        LemmaCheck { applicable: false, holds: true }
    }

    pub fn violated(&self) -> bool {
        self.applicable && !self.holds
    }
}

fn min_root(g: &OrientedGraph) -> Option<NodeId> {
    min_out_degree_node(g, TieBreak::LowestId).ok()
}

/// δ ≤ 2 implies the minimum out-degree node is a Seymour vertex.
pub fn low_degree_lemma(g: &OrientedGraph, report: &SeymourReport) -> LemmaCheck {
    match min_root(g) {
        Some(v0) if g.out_degree(v0) <= 2 => LemmaCheck { applicable: true, holds: report.is_seymour(v0) },
        _ => LemmaCheck::vacuous(),
    }
}

/// δ = 3 and some x ∈ N⁺(v₀) with no out-neighbor inside N⁺(v₀) implies v₀
/// is a Seymour vertex.
pub fn neighbor_out_degree_zero_lemma(g: &OrientedGraph, report: &SeymourReport) -> LemmaCheck {
    let Some(v0) = min_root(g) else { return LemmaCheck::vacuous() };
    if g.out_degree(v0) != 3 {
        return LemmaCheck::vacuous();
    }
    let out = g.out_slice(v0);
    if !out.iter().any(|&x| sorted_intersection_len(g.out_slice(x), out) == 0) {
        return LemmaCheck::vacuous();
    }
    LemmaCheck { applicable: true, holds: report.is_seymour(v0) }
}

/// δ = 3 and every x ∈ N⁺(v₀) has exactly one out-neighbor inside N⁺(v₀)
/// implies v₀ or one of its out-neighbors is a Seymour vertex.
pub fn neighbors_one_lemma(g: &OrientedGraph, report: &SeymourReport) -> LemmaCheck {
    let Some(v0) = min_root(g) else { return LemmaCheck::vacuous() };
    if g.out_degree(v0) != 3 {
        return LemmaCheck::vacuous();
    }
    let out = g.out_slice(v0);
    if !out.iter().all(|&x| sorted_intersection_len(g.out_slice(x), out) == 1) {
        return LemmaCheck::vacuous();
    }
    let holds = report.is_seymour(v0) || out.iter().any(|&x| report.is_seymour(x));
    LemmaCheck { applicable: true, holds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::Fixture;

    #[test]
    fn oracle_on_fixtures() {
        let c = seymour_oracle(&Fixture::Cycle5.graph());
        assert_eq!(c.seymour_set.len(), 5);

        let n = seymour_oracle(&Fixture::Nbr0ex.graph());
        let r0 = n.record(NodeId(0));
        assert_eq!((r0.first_size, r0.second_size, r0.is_seymour), (3, 3, true));

        let f = seymour_oracle(&Fixture::Furtherex.graph());
        let r0 = f.record(NodeId(0));
        assert_eq!((r0.first_size, r0.second_size, r0.is_seymour), (3, 2, false));
        let r1 = f.record(NodeId(1));
        assert_eq!((r1.first_size, r1.second_size, r1.is_seymour), (3, 4, true));
        assert!(f.seymour_set.contains(NodeId(1)) && !f.seymour_set.contains(NodeId(0)));
    }

    #[test]
    fn dnsp() {
        let f = Fixture::Furtherex.graph();
        assert!(dnsp_holds(&f, NodeId(0)).unwrap().holds);
        assert!(!dnsp_holds(&f, NodeId(6)).unwrap().holds);
        assert!(!dnsp_holds(&Fixture::Cycle5.graph(), NodeId(0)).unwrap().holds);
        assert!(dnsp_holds(&f, NodeId(9)).is_err());
    }

    #[test]
    fn covers() {
        let f = Fixture::Furtherex.graph();
        let ic = interior_cover_holds(&f, NodeId(0)).unwrap();
        assert!(ic.covered && ic.union_equal && ic.witness.is_none());
        let ec = exterior_cover_holds(&f, NodeId(0)).unwrap();
        assert!(ec.covered && ec.union_equal);

        let n = Fixture::Nbr0ex.graph();
        let ic = interior_cover_holds(&n, NodeId(0)).unwrap();
        assert!(!ic.covered);
        // v₃ has no in-neighbor among {v₁, v₂, v₃}; v₁ and v₂ are both hit.
        assert_eq!(ic.witness, Some(NodeId(3)));

        let c = Fixture::Cycle5.graph();
        assert!(exterior_cover_holds(&c, NodeId(0)).unwrap().covered);
        let sink = interior_cover_holds(&f, NodeId(6)).unwrap();
        assert!(sink.covered && sink.union_equal);
        assert!(exterior_cover_holds(&f, NodeId(6)).unwrap().covered);
    }

    #[test]
    fn square_equivalence() {
        assert!(square_equivalence_check(&Fixture::Cycle5.graph()));
        assert!(square_equivalence_check(&Fixture::Furtherex.graph()));
        let empty = OrientedGraph::empty(3);
        assert!(square_equivalence_check(&empty));
        assert_eq!(seymour_oracle(&empty).seymour_set.len(), 3);
    }

    #[test]
    fn small_lemmas_on_fixtures() {
        let f = Fixture::Furtherex.graph();
        let rf = seymour_oracle(&f);
        // δ = 0 at the sinks
        assert_eq!(low_degree_lemma(&f, &rf), LemmaCheck { applicable: true, holds: true });
        let c = Fixture::Cycle5.graph();
        assert!(!low_degree_lemma(&c, &seymour_oracle(&c)).violated());

        // 3-regular-ish out-degree graph: K_7 rotational tournament has δ = 3.
        let arcs: Vec<(u32, u32)> = (0..7).flat_map(|i| [1, 2, 4].map(|s| (i, (i + s) % 7))).collect();
        let t = crate::build_graph(7, &arcs).unwrap();
        let rt = seymour_oracle(&t);
        assert!(!neighbor_out_degree_zero_lemma(&t, &rt).violated());
        assert!(!neighbors_one_lemma(&t, &rt).violated());
    }
}
