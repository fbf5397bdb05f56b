//! Seeded graph generators and the hand-transcribed fixture graphs.
//!
//! Random streams come from ChaCha8 seeded with a `u64`. The dense generators
//! walk unordered pairs `(u, v)`, `u < v`, in lexicographic order; each pair
//! consumes one inclusion draw and, when included, one orientation draw right
//! after it. The same `(n, p, seed)` therefore always yields the same graph.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::digraph::OrientedGraph;
use crate::error::{GraphError, Result};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[inline]
fn orient(rng: &mut ChaCha8Rng, u: u32, v: u32) -> (u32, u32) {
    if rng.gen::<bool>() {
        (u, v)
    } else {
        (v, u)
    }
}

/// Each unordered pair is kept with probability `p`, then oriented by a fair coin.
pub fn gen_random_oriented(n: usize, p: f64, seed: u64) -> OrientedGraph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = rng(seed);
    let mut arcs = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen::<f64>() < p {
                arcs.push(orient(&mut rng, u, v));
            }
        }
    }
    OrientedGraph::from_arcs(n, &arcs).expect("generated arcs are oriented")
}

/// Same distribution as [`gen_random_oriented`] but skips over absent pairs
/// with geometric jumps, so the cost is O(n + m) instead of O(n²). It draws
/// from a different stream, so graphs differ from the dense generator's for
/// the same seed.
pub fn gen_sparse_random_oriented(n: usize, p: f64, seed: u64) -> OrientedGraph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    if p == 0.0 || n < 2 {
        return OrientedGraph::empty(n);
    }
    if p == 1.0 {
        return gen_tournament(n, seed);
    }
    let mut rng = rng(seed);
    let log_q = (1.0 - p).ln();
    let expected = (p * n as f64 * (n as f64 - 1.0) / 2.0) as usize;
    let mut arcs = Vec::with_capacity(expected + expected / 8 + 16);
    let n = n as i64;
    let (mut v, mut w) = (1i64, -1i64);
    while v < n {
        let r: f64 = rng.gen();
        w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while w >= v && v < n {
            w -= v;
            v += 1;
        }
        if v < n {
            arcs.push(orient(&mut rng, w as u32, v as u32));
        }
    }
    OrientedGraph::from_arcs(n as usize, &arcs).expect("generated arcs are oriented")
}

/// Every unordered pair oriented by one fair coin.
pub fn gen_tournament(n: usize, seed: u64) -> OrientedGraph {
    let mut rng = rng(seed);
    let mut arcs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            arcs.push(orient(&mut rng, u, v));
        }
    }
    OrientedGraph::from_arcs(n, &arcs).expect("tournaments are oriented")
}

/// The directed cycle 0 -> 1 -> ... -> n-1 -> 0.
pub fn gen_cycle(n: usize) -> Result<OrientedGraph> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    let arcs: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    OrientedGraph::from_arcs(n, &arcs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Fixture {
    /// Minimum out-degree 3 where one neighbor has no arcs inside N⁺(v₀).
    Nbr0ex,
    /// Minimum out-degree 3 with a directed triangle on N⁺(v₀).
    Furtherex,
    /// Irregular interior degrees in R₁; the source table skips id 12.
    Irrint,
    Cycle5,
    /// Small graph with one back arc, 3 -> 2, plus an isolated node 4.
    Backtri,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [Fixture::Nbr0ex, Fixture::Furtherex, Fixture::Irrint, Fixture::Cycle5, Fixture::Backtri];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Nbr0ex => "nbr0ex",
            Fixture::Furtherex => "furtherex",
            Fixture::Irrint => "irrint",
            Fixture::Cycle5 => "cycle5",
            Fixture::Backtri => "backtri",
        }
    }

    pub fn node_count(self) -> usize {
        match self {
            Fixture::Nbr0ex => 7,
            Fixture::Furtherex => 9,
            Fixture::Irrint => 17,
            Fixture::Cycle5 => 5,
            Fixture::Backtri => 5,
        }
    }

    /// Out-neighbor rows `(tail, heads)`.
    pub fn rows(self) -> &'static [(u32, &'static [u32])] {
        match self {
            Fixture::Nbr0ex => &[(0, &[1, 2, 3]), (1, &[4, 5, 6]), (2, &[1, 4, 5]), (3, &[1, 2, 4, 5])],
            Fixture::Furtherex => &[
                (0, &[1, 2, 3]),
                (1, &[2, 4, 5]),
                (2, &[3, 4, 5]),
                (3, &[1, 4, 5]),
                (4, &[5, 6, 7]),
                (5, &[6, 7, 8]),
            ],
            Fixture::Irrint => &[
                (0, &[1, 2, 3, 4, 5, 6]),
                (1, &[2, 3, 4, 8, 9, 10]),
                (2, &[3, 7, 8, 9, 10, 11]),
                (3, &[4, 7, 8, 9, 10, 11]),
                (4, &[5, 7, 8, 9, 10, 11]),
                (5, &[6, 7, 8, 9, 10, 11]),
                (6, &[1, 7, 8, 9, 10, 11]),
                (7, &[8, 13, 14, 15, 16]),
                (8, &[9, 13, 14, 15, 16]),
                (9, &[10, 13, 14, 15, 16]),
                (10, &[11, 13, 14, 15, 16]),
                (11, &[8, 13, 14, 15, 16]),
            ],
            Fixture::Cycle5 => &[(0, &[1]), (1, &[2]), (2, &[3]), (3, &[4]), (4, &[0])],
            Fixture::Backtri => &[(0, &[1, 2]), (1, &[2, 3]), (3, &[2])],
        }
    }

    pub fn arcs(self) -> Vec<(u32, u32)> {
        self.rows().iter().flat_map(|&(t, heads)| heads.iter().map(move |&h| (t, h))).collect()
    }

    pub fn graph(self) -> OrientedGraph {
        OrientedGraph::from_arcs(self.node_count(), &self.arcs()).expect("fixtures are oriented")
    }

    /// Layer labels exactly as printed next to the irrint table rows. They
    /// disagree with breadth-first distances for several nodes.
    pub fn declared_labels(self) -> &'static [(u32, &'static str)] {
        match self {
            Fixture::Irrint => &[
                (0, "R_0"),
                (1, "R_1"),
                (2, "R_1"),
                (3, "R_1"),
                (4, "R_2"),
                (5, "R_2"),
                (6, "R_3"),
                (7, "R_3"),
                (8, "R_3"),
                (9, "R_3"),
                (10, "R_3"),
                (11, "R_3"),
            ],
            _ => &[],
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GraphError::UnknownFixture(s.to_string()))
    }
}

/// Looks a fixture up by name.
pub fn fixture(name: &str) -> Result<OrientedGraph> {
    Ok(name.parse::<Fixture>()?.graph())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenKind {
    RandomOriented { n: usize, p: f64 },
    Tournament { n: usize },
    Cycle { n: usize },
    Fixture { name: Fixture },
}

/// A reproducible recipe for one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<OrientedGraph> {
        match self.kind {
            GenKind::RandomOriented { n, p } => Ok(gen_random_oriented(n, p, self.seed)),
            GenKind::Tournament { n } => Ok(gen_tournament(n, self.seed)),
            GenKind::Cycle { n } => gen_cycle(n),
            GenKind::Fixture { name } => Ok(name.graph()),
        }
    }
}
