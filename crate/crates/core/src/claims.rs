//! Evaluates a catalogue of structural claims about layered graphs.
//!
//! Every claim is a material conditional: it is violated only when its
//! premise holds on the graph and its conclusion fails, and each violation
//! carries a concrete witness.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::{sorted_intersection_len, NodeId, OrientedGraph};
use crate::error::Result;
use crate::layering::{build_layering, exterior_set_definitional, min_out_degree_node, RootedLayering, TieBreak};
use crate::seymour::{seymour_oracle, SeymourReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    /// Every R₁ node shares an out-neighbor with a DNSP minimum-degree root.
    IntMin1,
    /// A DNSP node x has |ext(x, y)| < d⁺(x) for every y ∈ N⁺(x).
    ExtBd1,
    /// Exteriors shrink from one parent-child pair to the next.
    Del,
    /// Parent-child pairs at layer i share at least i out-neighbors.
    Genloadbal,
    /// The part of ext(u, v) two layers below u has at most d⁺(v₀) - i nodes.
    Nbhsize,
    /// |R₀| = 1, |R₁| = δ and |R_i| ≤ δ - (i - 1).
    Nbhsizefmla,
    /// A lateral-doubling node with a back arc is a Seymour vertex.
    Nbacase1,
    /// One failing parent means every parent fails and R_{i-1} is all Seymour.
    Prop1,
    /// One succeeding parent means every parent succeeds and R_{i-1} has no Seymour vertex.
    Prop2,
    /// A lateral-doubling node whose exterior is the next layer is a Seymour vertex.
    Edd,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        ClaimId::IntMin1,
        ClaimId::ExtBd1,
        ClaimId::Del,
        ClaimId::Genloadbal,
        ClaimId::Nbhsize,
        ClaimId::Nbhsizefmla,
        ClaimId::Nbacase1,
        ClaimId::Prop1,
        ClaimId::Prop2,
        ClaimId::Edd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::IntMin1 => "int_min1",
            ClaimId::ExtBd1 => "ext_bd1",
            ClaimId::Del => "del",
            ClaimId::Genloadbal => "genloadbal",
            ClaimId::Nbhsize => "nbhsize",
            ClaimId::Nbhsizefmla => "nbhsizefmla",
            ClaimId::Nbacase1 => "nbacase1",
            ClaimId::Prop1 => "prop1",
            ClaimId::Prop2 => "prop2",
            ClaimId::Edd => "edd",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Holds,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub nodes: Vec<NodeId>,
    pub detail: String,
}

impl Witness {
    fn new(nodes: &[NodeId], detail: impl Into<String>) -> Self {
        Witness { nodes: nodes.to_vec(), detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim: ClaimId,
    pub premise_holds: bool,
    pub conclusion_holds: bool,
    pub status: ClaimStatus,
    /// Number of violations found; only the first few are kept as witnesses.
    pub violation_count: usize,
    /// Violation witnesses; empty unless the claim is violated.
    pub witnesses: Vec<Witness>,
}

const MAX_WITNESSES: usize = 32;

impl ClaimRecord {
    fn evaluate(claim: ClaimId, premise_holds: bool, witnesses: Vec<Witness>) -> Self {
        let conclusion_holds = witnesses.is_empty();
        let status = match (premise_holds, conclusion_holds) {
            (false, _) => ClaimStatus::NotApplicable,
            (true, true) => ClaimStatus::Holds,
            (true, false) => ClaimStatus::Violated,
        };
        let mut witnesses = if premise_holds { witnesses } else { Vec::new() };
        let violation_count = witnesses.len();
        witnesses.truncate(MAX_WITNESSES);
        ClaimRecord { claim, premise_holds, conclusion_holds, status, violation_count, witnesses }
    }

    pub fn violated(&self) -> bool {
        self.status == ClaimStatus::Violated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub root: NodeId,
    pub records: Vec<ClaimRecord>,
}

impl ClaimReport {
    pub fn get(&self, claim: ClaimId) -> &ClaimRecord {
        self.records.iter().find(|r| r.claim == claim).expect("every claim is evaluated")
    }
}

/// Evaluates every claim on `g`, rooted at `root` or at the lowest-id
/// minimum out-degree node.
pub fn check_claims(g: &OrientedGraph, root: Option<NodeId>) -> Result<ClaimReport> {
    let root = match root {
        Some(r) => {
            g.check_node(r)?;
            r
        }
        None => min_out_degree_node(g, TieBreak::LowestId)?,
    };
    let l = build_layering(g, root)?;
    let oracle = seymour_oracle(g);
    let ctx = Ctx { g, l: &l, oracle: &oracle };
    let records = ClaimId::ALL.iter().map(|&c| ctx.check(c)).collect();
    Ok(ClaimReport { root, records })
}

struct Ctx<'a, 'g> {
    g: &'g OrientedGraph,
    l: &'a RootedLayering<'g>,
    oracle: &'a SeymourReport,
}

impl Ctx<'_, '_> {
    fn check(&self, claim: ClaimId) -> ClaimRecord {
        let (premise, witnesses) = match claim {
            ClaimId::IntMin1 => self.int_min1(),
            ClaimId::ExtBd1 => self.ext_bd1(),
            ClaimId::Del => self.del(),
            ClaimId::Genloadbal => self.genloadbal(),
            ClaimId::Nbhsize => self.nbhsize(),
            ClaimId::Nbhsizefmla => self.nbhsizefmla(),
            ClaimId::Nbacase1 => self.nbacase1(),
            ClaimId::Prop1 => self.prop1(),
            ClaimId::Prop2 => self.prop2(),
            ClaimId::Edd => self.edd(),
        };
        ClaimRecord::evaluate(claim, premise, witnesses)
    }

    fn dnsp(&self, v: NodeId) -> bool {
        !self.oracle.is_seymour(v)
    }

    fn int(&self, p: NodeId, c: NodeId) -> usize {
        sorted_intersection_len(self.g.out_slice(p), self.g.out_slice(c))
    }

    fn dist(&self, v: NodeId) -> usize {
        self.l.dist(v).expect("only reachable nodes are inspected")
    }

    fn int_min1(&self) -> (bool, Vec<Witness>) {
        let root = self.l.root();
        let global_min = self.g.min_out_degree().unwrap_or(0);
        let premise = self.g.out_degree(root) == global_min && self.dnsp(root);
        let witnesses = self
            .l
            .layer(1)
            .iter()
            .filter(|&&x| self.int(root, x) == 0)
            .map(|&x| Witness::new(&[root, x], format!("int({root}, {x}) is empty")))
            .collect();
        (premise, witnesses)
    }

    fn ext_bd1(&self) -> (bool, Vec<Witness>) {
        let premise = self.oracle.dnsp_nodes().next().is_some();
        let mut witnesses = Vec::new();
        for x in self.oracle.dnsp_nodes() {
            let d = self.g.out_degree(x);
            for &y in self.g.out_slice(x) {
                let ext = exterior_set_definitional(self.g, x, y).expect("y is an out-neighbor of x").len();
                if ext >= d {
                    witnesses.push(Witness::new(&[x, y], format!("|ext({x}, {y})| = {ext} >= d+({x}) = {d}")));
                }
            }
        }
        (premise, witnesses)
    }

    /// Pairs (u, v) where both are DNSP and v doubles inside its layer. For
    /// each exterior node z one layer further out, |ext(v, z)| < |ext(u, v)|.
    fn del(&self) -> (bool, Vec<Witness>) {
        let pairs: Vec<(NodeId, NodeId)> = self
            .l
            .parent_child_arcs()
            .filter(|&(u, v)| self.dnsp(u) && self.dnsp(v) && self.l.layer_interior_doubles(v))
            .collect();
        let premise = !self.l.has_back_arcs() && !pairs.is_empty();
        let mut witnesses = Vec::new();
        for (u, v) in pairs {
            let ext_uv = self.l.partition_unchecked(u, v).exterior;
            let dv = self.dist(v);
            for z in ext_uv.iter().filter(|&z| self.l.dist(z) == Some(dv + 1)) {
                let ext_vz = self.l.partition_unchecked(v, z).exterior.len();
                if ext_vz >= ext_uv.len() {
                    witnesses.push(Witness::new(
                        &[u, v, z],
                        format!("|ext({v}, {z})| = {ext_vz} >= |ext({u}, {v})| = {}", ext_uv.len()),
                    ));
                }
            }
        }
        (premise, witnesses)
    }

    fn genloadbal(&self) -> (bool, Vec<Witness>) {
        let premise = self.oracle.all_dnsp() && !self.l.has_back_arcs();
        let witnesses = self
            .l
            .parent_child_arcs()
            .filter_map(|(u, v)| {
                let i = self.dist(v);
                let k = self.int(u, v);
                (k < i).then(|| Witness::new(&[u, v], format!("|int({u}, {v})| = {k} < {i}")))
            })
            .collect();
        (premise, witnesses)
    }

    fn nbhsize(&self) -> (bool, Vec<Witness>) {
        let premise = self.oracle.all_dnsp() && !self.l.has_back_arcs();
        let delta = self.g.out_degree(self.l.root()) as i64;
        let witnesses = self
            .l
            .parent_child_arcs()
            .filter_map(|(u, v)| {
                let i = self.dist(u);
                let ext = self.l.partition_unchecked(u, v).exterior;
                let far = ext.iter().filter(|&z| self.l.dist(z) == Some(i + 2)).count() as i64;
                (far > delta - i as i64).then(|| {
                    Witness::new(&[u, v], format!("{far} exterior nodes in R_{} exceed {}", i + 2, delta - i as i64))
                })
            })
            .collect();
        (premise, witnesses)
    }

    fn nbhsizefmla(&self) -> (bool, Vec<Witness>) {
        let premise = self.oracle.all_dnsp();
        let sizes = self.l.layer_size_sequence();
        let mut witnesses = Vec::new();
        if sizes.sizes[0] != 1 {
            witnesses.push(Witness::new(&[], format!("|R_0| = {}", sizes.sizes[0])));
        }
        if let Some(&r1) = sizes.sizes.get(1) {
            if r1 != sizes.delta {
                witnesses.push(Witness::new(&[], format!("|R_1| = {r1} != {}", sizes.delta)));
            }
        }
        for b in sizes.bounds.iter().filter(|b| !b.pass) {
            witnesses.push(Witness::new(self.l.layer(b.layer), format!("|R_{}| = {} > {}", b.layer, b.size, b.bound)));
        }
        (premise, witnesses)
    }

    /// For a lateral-doubling node u with back arcs, the back arc into the
    /// latest layer reaches v_k; then |N⁺⁺(u)| ≥ d⁺(v_k) and u is Seymour.
    fn nbacase1(&self) -> (bool, Vec<Witness>) {
        let mut premise = false;
        let mut witnesses = Vec::new();
        let mut seen = Vec::new();
        for b in self.l.back_arcs() {
            if seen.contains(&b.tail) {
                continue;
            }
            seen.push(b.tail);
            let u = b.tail;
            if !self.l.layer_interior_doubles(u) {
                continue;
            }
            premise = true;
            let vk = self
                .l
                .back_arcs()
                .iter()
                .filter(|a| a.tail == u)
                .min_by_key(|a| (a.delta, a.head))
                .map(|a| a.head)
                .expect("u has a back arc");
            let rec = self.oracle.record(u);
            let dvk = self.g.out_degree(vk);
            if rec.second_size < dvk || !rec.is_seymour {
                witnesses.push(Witness::new(
                    &[u, vk],
                    format!(
                        "back arc {u}->{vk}: |N++({u})| = {}, d+({vk}) = {dvk}, |N+({u})| = {}",
                        rec.second_size, rec.first_size
                    ),
                ));
            }
        }
        (premise, witnesses)
    }

    fn failing_pairs(&self) -> Vec<(NodeId, NodeId, usize)> {
        self.l
            .parent_child_arcs()
            .filter_map(|(p, u)| {
                let i = self.dist(u);
                (self.int(p, u) < i).then_some((p, u, i))
            })
            .collect()
    }

    fn prop1(&self) -> (bool, Vec<Witness>) {
        let failing = self.failing_pairs();
        let mut witnesses = Vec::new();
        for &(p1, u, i) in &failing {
            for p in self.l.parents(u) {
                let k = self.int(p, u);
                if k >= i {
                    witnesses.push(Witness::new(
                        &[p1, u, p],
                        format!("|int({p1}, {u})| < {i} but |int({p}, {u})| = {k}"),
                    ));
                }
            }
            for &w in self.l.layer(i - 1) {
                if !self.oracle.is_seymour(w) {
                    witnesses.push(Witness::new(
                        &[p1, u, w],
                        format!("|int({p1}, {u})| < {i} but {w} in R_{} is not Seymour", i - 1),
                    ));
                }
            }
        }
        witnesses.dedup();
        (!failing.is_empty(), witnesses)
    }

    fn prop2(&self) -> (bool, Vec<Witness>) {
        let mut premise = false;
        let mut witnesses = Vec::new();
        for i in 1..self.l.layer_count() {
            for &p1 in self.l.layer(i - 1) {
                let children: Vec<NodeId> =
                    self.g.out_slice(p1).iter().copied().filter(|&c| self.l.dist(c) == Some(i)).collect();
                if children.is_empty() || children.iter().any(|&c| self.int(p1, c) < i) {
                    continue;
                }
                premise = true;
                for &u in self.l.layer(i) {
                    for p in self.l.parents(u) {
                        let k = self.int(p, u);
                        if k < i {
                            witnesses.push(Witness::new(
                                &[p1, p, u],
                                format!("{p1} succeeds at R_{i} but |int({p}, {u})| = {k} < {i}"),
                            ));
                        }
                    }
                }
                for &w in self.l.layer(i - 1) {
                    if self.oracle.is_seymour(w) {
                        witnesses.push(Witness::new(
                            &[p1, w],
                            format!("{p1} succeeds at R_{i} but {w} in R_{} is Seymour", i - 1),
                        ));
                    }
                }
            }
        }
        (premise, witnesses)
    }

    /// u_i doubles inside R_i, ext(parent, u_i) = R_{i+1} and
    /// |R_{i+1}| ≥ |R_{i+2}|, all without back arcs; then u_i is Seymour.
    fn edd(&self) -> (bool, Vec<Witness>) {
        if self.l.has_back_arcs() {
            return (false, Vec::new());
        }
        let mut premise = false;
        let mut witnesses = Vec::new();
        for i in 1..self.l.layer_count() {
            let next = self.l.layer_set(i + 1);
            if next.len() < self.l.layer(i + 2).len() {
                continue;
            }
            for &u in self.l.layer(i) {
                let parent = self.l.representative_parent(u).expect("layered nodes have parents");
                if !self.l.layer_interior_doubles(u) || self.l.partition_unchecked(parent, u).exterior != next {
                    continue;
                }
                premise = true;
                if !self.oracle.is_seymour(u) {
                    let r = self.oracle.record(u);
                    witnesses.push(Witness::new(
                        &[parent, u],
                        format!("|N++({u})| = {} < |N+({u})| = {}", r.second_size, r.first_size),
                    ));
                }
            }
        }
        (premise, witnesses)
    }
}
