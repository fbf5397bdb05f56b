//! Writes a layered DOT rendering; pipe into `dot -Tsvg`.
//!
//!     cargo run --example dot_export -- backtri 0 > backtri.dot

use glover::io::to_dot;
use glover::{build_layering, NodeId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let g = glover::fixture(&args.next().unwrap_or_else(|| "backtri".into()))?;
    let root = NodeId(args.next().map(|s| s.parse()).transpose()?.unwrap_or(0));
    let l = build_layering(&g, root)?;
    print!("{}", to_dot(&g, Some(&l)));
    Ok(())
}
