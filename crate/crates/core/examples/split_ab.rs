//! Splits the layers of a random graph at each boundary and counts the arcs
//! that jump straight from group A to group B.
//!
//!     cargo run --example split_ab -- 40 0.08 3

use glover::bench::max_out_degree_node;
use glover::{build_layering, gen_random_oriented};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().map(|s| s.parse()).transpose()?.unwrap_or(40);
    let p = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(0.08);
    let seed = args.get(2).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let g = gen_random_oriented(n, p, seed);
    let l = build_layering(&g, max_out_degree_node(&g).ok_or("empty graph")?)?;
    println!("root {}  layer sizes {:?}", l.root(), l.layer_size_sequence().sizes);
    for b in 1..=l.depth() {
        let s = l.split_layers(b)?;
        println!(
            "boundary {b}: |A| {:>3}  |buffer| {:>3}  |B| {:>3}  crossing {}",
            s.group_a.len(),
            s.buffer.len(),
            s.group_b.len(),
            s.interference
        );
    }
    Ok(())
}
