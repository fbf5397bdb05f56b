//! Transitive-triangle census of a random graph, including the triangles
//! no pattern covers.
//!
//!     cargo run --example triangle_census -- 24 0.3 5

use glover::bench::max_out_degree_node;
use glover::triangles::{enumerate_seymour_diamonds, triangle_census, TriangleType};
use glover::{build_layering, gen_random_oriented};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().map(|s| s.parse()).transpose()?.unwrap_or(24);
    let p = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(0.3);
    let seed = args.get(2).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let g = gen_random_oriented(n, p, seed);
    let l = build_layering(&g, max_out_degree_node(&g).ok_or("empty graph")?)?;
    let census = triangle_census(&g, &l);
    println!("root {}  transitive triangles {}", l.root(), census.total);
    for ty in TriangleType::ALL {
        println!("  {:<18} {}", ty.name(), census.count(ty));
    }
    println!("  unreachable        {}", census.unreachable);
    println!("  unclassifiable     {}", census.unclassifiable);
    for t in &census.unclassified {
        let layer = |v| l.dist(v).unwrap();
        println!("    ({}, {}, {}) in layers {} {} {}", t.x, t.y, t.z, layer(t.x), layer(t.y), layer(t.z));
    }
    println!("seymour diamonds {}", enumerate_seymour_diamonds(&g).len());
    Ok(())
}
