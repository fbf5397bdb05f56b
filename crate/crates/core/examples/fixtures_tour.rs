//! Prints each built-in graph with its Seymour vertices.
//!
//!     cargo run --example fixtures_tour

use glover::{seymour_oracle, Fixture};

fn main() {
    for f in Fixture::ALL {
        let g = f.graph();
        let report = seymour_oracle(&g);
        println!("{f}: {} nodes, {} arcs", g.node_count(), g.arc_count());
        for r in &report.records {
            let mark = if r.is_seymour { "seymour" } else { "dnsp" };
            println!("  {:>2}  |N+| {}  |N++| {}  {mark}", r.node, r.first_size, r.second_size);
        }
    }
}
