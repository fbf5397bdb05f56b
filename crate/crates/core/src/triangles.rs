//! Transitive triangles, their classification against a layering, and
//! Seymour diamonds (two distinct 2-paths between the same ends).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::digraph::{sorted_intersection, NodeId, OrientedGraph};
use crate::error::{GraphError, Result};
use crate::layering::{ArcClass, RootedLayering};

/// Arcs x -> y, x -> z and y -> z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TransitiveTriangle {
    pub x: NodeId,
    pub y: NodeId,
    pub z: NodeId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleType {
    /// All three nodes in one layer.
    InteriorTriangle,
    /// Two back arcs and a lateral arc.
    BackArcI,
    /// Source one layer above the other two.
    InteriorExterior,
    /// One forward, one back and one lateral arc.
    BackArcII,
    /// One forward arc and two back arcs across three layers.
    BackArcIII,
    /// Source and middle share a layer, sink one layer further out.
    ExteriorTriangle,
}

impl TriangleType {
    pub const ALL: [TriangleType; 6] = [
        TriangleType::InteriorTriangle,
        TriangleType::BackArcI,
        TriangleType::InteriorExterior,
        TriangleType::BackArcII,
        TriangleType::BackArcIII,
        TriangleType::ExteriorTriangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangleType::InteriorTriangle => "interior_triangle",
            TriangleType::BackArcI => "back_arc_i",
            TriangleType::InteriorExterior => "interior_exterior",
            TriangleType::BackArcII => "back_arc_ii",
            TriangleType::BackArcIII => "back_arc_iii",
            TriangleType::ExteriorTriangle => "exterior_triangle",
        }
    }
}

/// Triangles sorted by (x, y, z), found by intersecting N⁺(x) with N⁺(y)
/// for every arc x -> y.
pub fn enumerate_transitive_triangles(g: &OrientedGraph) -> Vec<TransitiveTriangle> {
    let mut out = Vec::new();
    for x in g.nodes() {
        let nx = g.out_slice(x);
        for &y in nx {
            for z in sorted_intersection(nx, g.out_slice(y)) {
                out.push(TransitiveTriangle { x, y, z });
            }
        }
    }
    out
}

/// Classifies by the forward/back/lateral counts of the three arcs; the two
/// patterns with two forward arcs are told apart by where the lateral arc sits.
pub fn classify_triangle(l: &RootedLayering<'_>, t: TransitiveTriangle) -> Result<TriangleType> {
    for v in [t.x, t.y, t.z] {
        l.graph().check_node(v)?;
        if !l.is_reachable(v) {
            return Err(GraphError::UnreachableNode(v));
        }
    }
    let g = l.graph();
    if !(g.has_arc(t.x, t.y) && g.has_arc(t.x, t.z) && g.has_arc(t.y, t.z)) {
        let (a, b) = if !g.has_arc(t.x, t.y) {
            (t.x, t.y)
        } else if !g.has_arc(t.x, t.z) {
            (t.x, t.z)
        } else {
            (t.y, t.z)
        };
        return Err(GraphError::NotAnArc(a, b));
    }
    let classes = [(t.x, t.y), (t.x, t.z), (t.y, t.z)].map(|(a, b)| l.arc_class_unchecked(a, b));
    let count = |c: ArcClass| classes.iter().filter(|&&k| k == c).count();
    let (f, b, lat) = (count(ArcClass::Forward), count(ArcClass::Back), count(ArcClass::Lateral));
    let ty = match (f, b, lat) {
        (0, 0, 3) => TriangleType::InteriorTriangle,
        (2, 0, 1) if classes[2] == ArcClass::Lateral => TriangleType::InteriorExterior,
        (2, 0, 1) => TriangleType::ExteriorTriangle,
        (0, 2, 1) => TriangleType::BackArcI,
        (1, 1, 1) => TriangleType::BackArcII,
        (1, 2, 0) => TriangleType::BackArcIII,
        _ => return Err(GraphError::UnclassifiableTriangle(t.x, t.y, t.z)),
    };
    Ok(ty)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCensus {
    pub total: usize,
    pub counts: BTreeMap<TriangleType, usize>,
    pub unclassifiable: usize,
    /// Triangles touching a node the root cannot reach; not classified.
    pub unreachable: usize,
    /// The unclassifiable triangles themselves, kept as findings.
    pub unclassified: Vec<TransitiveTriangle>,
}

impl TriangleCensus {
    pub fn classified(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn count(&self, ty: TriangleType) -> usize {
        self.counts.get(&ty).copied().unwrap_or(0)
    }
}

pub fn triangle_census(g: &OrientedGraph, l: &RootedLayering<'_>) -> TriangleCensus {
    let mut counts: BTreeMap<TriangleType, usize> = TriangleType::ALL.iter().map(|&t| (t, 0)).collect();
    let mut census = TriangleCensus {
        total: 0,
        counts: BTreeMap::new(),
        unclassifiable: 0,
        unreachable: 0,
        unclassified: Vec::new(),
    };
    for t in enumerate_transitive_triangles(g) {
        census.total += 1;
        match classify_triangle(l, t) {
            Ok(ty) => *counts.get_mut(&ty).expect("all types present") += 1,
            Err(GraphError::UnreachableNode(_)) => census.unreachable += 1,
            Err(_) => {
                census.unclassifiable += 1;
                census.unclassified.push(t);
            }
        }
    }
    census.counts = counts;
    census
}

/// Arcs x -> y1, x -> y2, y1 -> z, y2 -> z with y1 < y2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeymourDiamond {
    pub x: NodeId,
    pub y1: NodeId,
    pub y2: NodeId,
    pub z: NodeId,
}

/// All diamonds, sorted by (x, y1, y2, z).
pub fn enumerate_seymour_diamonds(g: &OrientedGraph) -> Vec<SeymourDiamond> {
    let mut out = Vec::new();
    let mut via: Vec<Vec<NodeId>> = vec![Vec::new(); g.node_count()];
    let mut touched = Vec::new();
    for x in g.nodes() {
        for &y in g.out_slice(x) {
            for &z in g.out_slice(y) {
                if via[z.index()].is_empty() {
                    touched.push(z);
                }
                via[z.index()].push(y);
            }
        }
        for z in touched.drain(..) {
            let ys = std::mem::take(&mut via[z.index()]);
            for (a, &y1) in ys.iter().enumerate() {
                for &y2 in &ys[a + 1..] {
                    out.push(SeymourDiamond { x, y1, y2, z });
                }
            }
        }
    }
    out.sort_unstable();
    out
}
