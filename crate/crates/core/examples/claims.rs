//! Evaluates the structural claims on a fixture or on random graphs and
//! reports each claim's status.
//!
//!     cargo run --example claims -- backtri
//!     cargo run --release --example claims -- random 500

use std::collections::BTreeMap;

use glover::claims::{check_claims, ClaimStatus};
use glover::{gen_random_oriented, NodeId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map(String::as_str).unwrap_or("backtri");
    if name != "random" {
        let g = glover::fixture(name)?;
        let report = check_claims(&g, Some(NodeId(0)))?;
        for r in &report.records {
            println!("{:<12} {:?} ({} violations)", r.claim.name(), r.status, r.violation_count);
            for w in &r.witnesses {
                println!("    {:?} {}", w.nodes.iter().map(|v| v.0).collect::<Vec<_>>(), w.detail);
            }
        }
        return Ok(());
    }
    let count: u64 = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(200);
    let mut tally: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    for seed in 0..count {
        let g = gen_random_oriented(10 + (seed % 25) as usize, 0.6, seed);
        for r in check_claims(&g, None)?.records {
            let slot = match r.status {
                ClaimStatus::Holds => 0,
                ClaimStatus::Violated => 1,
                ClaimStatus::NotApplicable => 2,
            };
            tally.entry(r.claim.name()).or_default()[slot] += 1;
        }
    }
    println!("{:<12} {:>6} {:>9} {:>15}", "claim", "holds", "violated", "not applicable");
    for (claim, [h, v, n]) in tally {
        println!("{claim:<12} {h:>6} {v:>9} {n:>15}");
    }
    Ok(())
}
