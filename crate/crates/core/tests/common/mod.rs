//! Independent reference computations used by the integration tests. Nothing
//! here calls into the crate's algorithms; graphs are read only through their
//! arc lists.

#![allow(dead_code)]

use std::collections::VecDeque;

use glover::OrientedGraph;

/// Adjacency matrix plus plain adjacency lists.
pub struct Dense {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
    pub out: Vec<Vec<usize>>,
}

impl Dense {
    pub fn new(g: &OrientedGraph) -> Self {
        Self::from_arcs(g.node_count(), g.arcs().map(|(u, v)| (u.index(), v.index())))
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![vec![false; n]; n];
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            adj[u][v] = true;
            out[u].push(v);
        }
        for o in &mut out {
            o.sort_unstable();
        }
        Dense { n, adj, out }
    }

    /// Shortest-path distances from `s`; `None` when unreachable.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.out[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Nodes at distance exactly 2 from `v`.
    pub fn second(&self, v: usize) -> Vec<usize> {
        let dist = self.bfs(v);
        (0..self.n).filter(|&w| dist[w] == Some(2)).collect()
    }

    pub fn seymour_set(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.second(v).len() >= self.out[v].len()).collect()
    }

    /// Out-degree of each node in the square graph (distance 1 or 2).
    pub fn square_out_degrees(&self) -> Vec<usize> {
        (0..self.n)
            .map(|v| {
                let dist = self.bfs(v);
                dist.iter().filter(|d| matches!(d, Some(1) | Some(2))).count()
            })
            .collect()
    }

    pub fn min_out_degree_lowest_id(&self) -> Option<usize> {
        (0..self.n).min_by_key(|&v| (self.out[v].len(), v))
    }

    /// Transitive triangles (x, y, z) by brute force over all ordered triples.
    pub fn transitive_triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if !self.adj[x][y] {
                    continue;
                }
                for z in 0..self.n {
                    if self.adj[x][z] && self.adj[y][z] {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }
}

/// Arc class names from distances alone.
pub fn class_of(dist: &[Option<usize>], u: usize, v: usize) -> &'static str {
    match (dist[u], dist[v]) {
        (Some(du), Some(dv)) if dv == du + 1 => "forward",
        (Some(du), Some(dv)) if dv == du => "lateral",
        (Some(du), Some(dv)) if dv < du => "back",
        (None, _) => "from_unreachable",
        _ => "invalid",
    }
}

/// Triangle type from the arc classes, following the six-pattern table
/// (all-back triangles come back as `None`).
pub fn triangle_type(dist: &[Option<usize>], x: usize, y: usize, z: usize) -> Option<&'static str> {
    let classes = [class_of(dist, x, y), class_of(dist, x, z), class_of(dist, y, z)];
    let count = |c: &str| classes.iter().filter(|&&k| k == c).count();
    match (count("forward"), count("back"), count("lateral")) {
        (0, 0, 3) => Some("interior_triangle"),
        (2, 0, 1) if classes[2] == "lateral" => Some("interior_exterior"),
        (2, 0, 1) => Some("exterior_triangle"),
        (0, 2, 1) => Some("back_arc_i"),
        (1, 1, 1) => Some("back_arc_ii"),
        (1, 2, 0) => Some("back_arc_iii"),
        _ => None,
    }
}

/// Minimal recursive-descent check of the DOT subset the exporter may use:
/// `digraph ID { stmt* }` with node, edge, attribute and subgraph statements.
pub fn validate_dot(text: &str) -> Result<(), String> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    p.expect("digraph")?;
    if p.peek() != Some("{") {
        p.id()?;
    }
    p.block()?;
    if p.pos != p.tokens.len() {
        return Err(format!("trailing tokens after graph: {:?}", &p.tokens[p.pos..]));
    }
    Ok(())
}

fn tokenize(text: &str) -> Result<Vec<String>, String> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if "{}[];,=".contains(c) {
            tokens.push(c.to_string());
            i += 1;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            tokens.push("->".into());
            i += 2;
        } else if c == '"' {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i] != '"' {
                if chars[i] == '\\' {
                    i += 1;
                }
                i += 1;
            }
            if i >= chars.len() {
                return Err("unterminated string".into());
            }
            i += 1;
            tokens.push(chars[start..i].iter().collect());
        } else if c.is_alphanumeric() || c == '_' || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                i += 1;
            }
            tokens.push(chars[start..i].iter().collect());
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<String>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&str> {
        self.tokens.get(self.pos).map(String::as_str)
    }

    fn next(&mut self) -> Option<String> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &str) -> Result<(), String> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            other => Err(format!("expected {want}, found {other:?}")),
        }
    }

    fn id(&mut self) -> Result<String, String> {
        match self.next() {
            Some(t) if !"{}[];,=".contains(t.as_str()) && t != "->" => Ok(t),
            other => Err(format!("expected identifier, found {other:?}")),
        }
    }

    fn block(&mut self) -> Result<(), String> {
        self.expect("{")?;
        while self.peek() != Some("}") {
            if self.peek().is_none() {
                return Err("unclosed block".into());
            }
            self.stmt()?;
        }
        self.expect("}")
    }

    fn stmt(&mut self) -> Result<(), String> {
        if self.peek() == Some("subgraph") {
            self.next();
            if self.peek() != Some("{") {
                self.id()?;
            }
            return self.block();
        }
        let first = self.id()?;
        match self.peek() {
            Some("=") => {
                self.next();
                self.id()?;
            }
            Some("->") => {
                while self.peek() == Some("->") {
                    self.next();
                    self.id()?;
                }
                self.attrs()?;
            }
            _ => {
                if matches!(first.as_str(), "node" | "edge" | "graph") && self.peek() != Some("[") {
                    return Err(format!("{first} statement needs attributes"));
                }
                self.attrs()?;
            }
        }
        if self.peek() == Some(";") {
            self.next();
        }
        Ok(())
    }

    fn attrs(&mut self) -> Result<(), String> {
        if self.peek() != Some("[") {
            return Ok(());
        }
        self.next();
        while self.peek() != Some("]") {
            self.id()?;
            self.expect("=")?;
            self.id()?;
            if matches!(self.peek(), Some(",") | Some(";")) {
                self.next();
            }
        }
        self.expect("]")
    }
}
