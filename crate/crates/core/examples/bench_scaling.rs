//! Per-element cost of layering plus search across graph sizes.
//!
//!     cargo run --release --example bench_scaling -- 10000,100000,1000000

use glover::bench::{bench_size, spread};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sizes: Vec<usize> = match std::env::args().nth(1) {
        Some(s) => s.split(',').map(str::parse).collect::<Result<_, _>>()?,
        None => vec![10_000, 100_000, 1_000_000],
    };
    let rows: Vec<_> = sizes.iter().filter_map(|&n| bench_size(n, 10.0, 1, 3)).collect();
    for r in &rows {
        println!(
            "n {:>8}  m {:>9}  layers {:>3}  {:>9.3} ms  {:>6.1} ns/elem  {}",
            r.n,
            r.m,
            r.layers,
            r.best_ns as f64 / 1e6,
            r.ns_per_element,
            r.halt_reason.as_str()
        );
    }
    println!("spread {:.2}x", spread(&rows));
    Ok(())
}
