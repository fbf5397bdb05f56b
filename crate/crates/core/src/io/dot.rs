//! Graphviz DOT output. With a layering, each layer becomes a cluster and
//! arcs are styled by class: lateral solid, forward solid gray, back
//! dashed, from-unreachable dotted.

use std::fmt::Write;

use crate::digraph::OrientedGraph;
use crate::layering::{ArcClass, RootedLayering};

fn style(class: ArcClass) -> &'static str {
    match class {
        ArcClass::Lateral => "style=solid",
        ArcClass::Forward => "style=solid, color=gray",
        ArcClass::Back => "style=dashed",
        ArcClass::FromUnreachable => "style=dotted",
    }
}

pub fn to_dot(g: &OrientedGraph, l: Option<&RootedLayering<'_>>) -> String {
    let mut out = String::from("digraph G {\n");
    if g.node_count() > 0 {
        out.push_str("  node [shape=circle];\n");
    }
    match l {
        Some(l) => {
            for (i, layer) in l.layers().iter().enumerate() {
                let _ = writeln!(out, "  subgraph cluster_R{i} {{");
                let _ = writeln!(out, "    label=\"R_{i}\";");
                for v in layer {
                    let _ = writeln!(out, "    {v};");
                }
                out.push_str("  }\n");
            }
            for v in l.unreachable() {
                let _ = writeln!(out, "  {v} [style=dashed];");
            }
            for (u, v) in g.arcs() {
                let class = l.arc_class_unchecked(u, v);
                let _ = writeln!(out, "  {u} -> {v} [{}, class=\"{class}\"];", style(class));
            }
        }
        None => {
            for v in g.nodes() {
                let _ = writeln!(out, "  {v};");
            }
            for (u, v) in g.arcs() {
                let _ = writeln!(out, "  {u} -> {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::NodeId;
    use crate::generate::Fixture;
    use crate::layering::build_layering;

    #[test]
    fn back_arc_is_dashed() {
        let g = Fixture::Backtri.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        let dot = to_dot(&g, Some(&l));
        assert!(dot.contains("  3 -> 2 [style=dashed, class=\"back\"];"));
        assert!(dot.contains("  4 [style=dashed];"));
    }

    #[test]
    fn clusters_per_layer() {
        let g = Fixture::Furtherex.graph();
        let l = build_layering(&g, NodeId(0)).unwrap();
        assert_eq!(to_dot(&g, Some(&l)).matches("subgraph cluster_").count(), 4);
        assert_eq!(to_dot(&g, None).matches("->").count(), 18);
    }

    #[test]
    fn empty_graph() {
        assert_eq!(to_dot(&OrientedGraph::empty(0), None), "digraph G {\n}\n");
    }
}
