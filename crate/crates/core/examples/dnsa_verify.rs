//! Runs the decreasing-neighborhood search on every fixture and on a batch
//! of random graphs, and counts how often the oracle refutes the marked node.
//!
//!     cargo run --release --example dnsa_verify -- 2000

use std::collections::BTreeMap;

use glover::{gen_random_oriented, verify_dnsa, Fixture, NodeId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1000);
    for f in Fixture::ALL {
        let g = f.graph();
        let root = if f == Fixture::Furtherex || f == Fixture::Backtri { Some(NodeId(0)) } else { None };
        let r = verify_dnsa(&g, root)?;
        println!(
            "{f:<10} root {} halt {:<20} marked {:?} confirms {:?}",
            r.root,
            r.halt_reason.as_str(),
            r.marked_node.map(|m| m.0),
            r.oracle_confirms
        );
    }
    let mut tally: BTreeMap<(&str, Option<bool>), usize> = BTreeMap::new();
    for seed in 0..count {
        let g = gen_random_oriented(10 + (seed % 30) as usize, 0.6, seed);
        let r = verify_dnsa(&g, None)?;
        *tally.entry((r.halt_reason.as_str(), r.oracle_confirms)).or_default() += 1;
    }
    println!("\n{count} random graphs (n 10..40, p 0.6):");
    for ((halt, confirms), n) in tally {
        println!("  {halt:<20} confirms {confirms:?}: {n}");
    }
    Ok(())
}
