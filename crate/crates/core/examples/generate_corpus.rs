//! Writes a small seeded corpus of JSON graph documents to a directory.
//!
//!     cargo run --example generate_corpus -- /tmp/corpus 42

use glover::generate::{GenKind, GenSpec};
use glover::io::to_json;
use glover::Fixture;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dir = std::path::PathBuf::from(args.next().unwrap_or_else(|| "corpus".into()));
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0);
    std::fs::create_dir_all(&dir)?;
    let mut specs = vec![
        GenSpec { kind: GenKind::Cycle { n: 7 }, seed },
        GenSpec { kind: GenKind::Fixture { name: Fixture::Irrint }, seed },
    ];
    for k in 0..4 {
        specs.push(GenSpec { kind: GenKind::Tournament { n: 8 + 4 * k }, seed: seed + k as u64 });
        specs.push(GenSpec { kind: GenKind::RandomOriented { n: 20 + 10 * k, p: 0.2 }, seed: seed + k as u64 });
    }
    for (i, spec) in specs.iter().enumerate() {
        let g = spec.generate()?;
        let path = dir.join(format!("{i:02}.json"));
        std::fs::write(&path, to_json(&g, None))?;
        println!("{} {} ({} nodes, {} arcs)", path.display(), serde_json::to_string(spec)?, g.node_count(), g.arc_count());
    }
    Ok(())
}
