//! Circulant interior-degree assignment: layer node j points at the next i
//! nodes, which doubles every node's interior out-degree.
//!
//!     cargo run --example interior_assignment -- 7 3

use glover::{map_interior_degrees, NodeId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let n = args.first().copied().unwrap_or(7);
    let i = args.get(1).copied().unwrap_or(3);
    let layer: Vec<NodeId> = (0..n as u32).map(NodeId).collect();
    match map_interior_degrees(&layer, i) {
        Ok(a) => {
            for ((v, targets), (first, second)) in a.layer.iter().zip(&a.assigned).zip(a.degree_profile()?) {
                let t: Vec<u32> = targets.iter().map(|t| t.0).collect();
                println!("{v} -> {t:?}  |N+| {first}  |N++| {second}");
            }
        }
        Err(e) => println!("n = {n}, i = {i}: {e}"),
    }
    Ok(())
}
