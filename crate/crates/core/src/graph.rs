//! Simple undirected graphs, corpus formats, standard families and the
//! degree/degeneracy invariants.
//!
//! Vertices are stored 0-based. Everything that faces a user (display,
//! edge-list files, JSON, variable names) is 1-based.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count accepted by the single-byte graph6 size field.
pub const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("graph6 supports at most {GRAPH6_MAX_N} vertices, got {0}")]
    TooLarge(usize),
    #[error("unknown family or bad parameters: {0}")]
    BadFamily(String),
}

/// An undirected edge `{u, v}` on 0-based vertices with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }

    /// 1-based endpoints.
    pub fn one_based(&self) -> (usize, usize) {
        (self.0 + 1, self.1 + 1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0 + 1, self.1 + 1)
    }
}

/// Simple graph on vertices `0..n`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

/// Witness for the degeneracy: the removal order and the largest degree seen
/// at removal time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationOrder {
    /// 0-based vertices in removal order.
    pub order: Vec<usize>,
    pub peak: usize,
}

impl Graph {
    /// Builds a graph from 0-based edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v + 1, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a + 1));
            }
            let e = Edge::new(a, b);
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0 + 1, e.1 + 1));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    fn from_edge_set(n: usize, set: BTreeSet<Edge>) -> Self {
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edge_set(n, BTreeSet::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Δ(G); 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degeneracy by repeated removal of a minimum-degree vertex, breaking
    /// ties by smallest index.
    pub fn degeneracy(&self) -> (usize, EliminationOrder) {
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut peak = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("a vertex remains");
            peak = peak.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        (peak, EliminationOrder { order, peak })
    }

    /// α(G) = Δ(G) + k(G) − 1. Edgeless graphs give −1.
    pub fn alpha(&self) -> i64 {
        self.max_degree() as i64 + self.degeneracy().0 as i64 - 1
    }

    /// Removes vertex `v`; remaining vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Induced subgraph on `vertices`, relabeled in ascending order of the
    /// original labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut keep: Vec<usize> = vertices.iter().copied().filter(|&v| v < self.n).collect();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let set = self
            .edges
            .iter()
            .filter(|e| index[e.0] != usize::MAX && index[e.1] != usize::MAX)
            .map(|e| Edge::new(index[e.0], index[e.1]))
            .collect();
        Self::from_edge_set(keep.len(), set)
    }

    /// The spanning subgraph `(V, edges)` for a subset of this graph's edges.
    pub fn with_edges(&self, edges: &[Edge]) -> Graph {
        Self::from_edge_set(self.n, edges.iter().copied().collect())
    }

    /// Applies `perm` (old vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let set = self.edges.iter().map(|e| Edge::new(perm[e.0], perm[e.1])).collect();
        Self::from_edge_set(self.n, set)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    /// Degree-respecting brute-force canonical form. Only meant for corpus
    /// generation on small graphs; cost grows with the factorials of the
    /// degree classes.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut comps: Vec<Vec<u8>> = self
            .components()
            .iter()
            .map(|c| self.induced_subgraph(c).connected_canonical_key())
            .collect();
        comps.sort();
        let mut key = Vec::new();
        for c in comps {
            key.push(c.len() as u8);
            key.extend(c);
        }
        key
    }

    fn connected_canonical_key(&self) -> Vec<u8> {
        // cells of equal degree, placed by decreasing degree
        let mut verts: Vec<usize> = (0..self.n).collect();
        verts.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for v in verts {
            match cells.last_mut() {
                Some(c) if self.degree(c[0]) == self.degree(v) => c.push(v),
                _ => cells.push(vec![v]),
            }
        }
        let mut best: Option<Vec<u8>> = None;
        let mut order = Vec::with_capacity(self.n);
        self.canon_rec(&cells, 0, &mut order, &mut best);
        let mut key = vec![self.n as u8];
        key.extend(best.unwrap_or_default());
        key
    }

    fn canon_rec(&self, cells: &[Vec<usize>], ci: usize, order: &mut Vec<usize>, best: &mut Option<Vec<u8>>) {
        if ci == cells.len() {
            let mut bits = Vec::with_capacity(self.n * self.n / 2);
            for j in 1..self.n {
                for i in 0..j {
                    bits.push(self.has_edge(order[i], order[j]) as u8);
                }
            }
            if best.as_ref().is_none_or(|b| bits > *b) {
                *best = Some(bits);
            }
            return;
        }
        let mut cell = cells[ci].clone();
        permute(&mut cell, 0, &mut |p| {
            let len = order.len();
            order.extend_from_slice(p);
            self.canon_rec(cells, ci + 1, order, best);
            order.truncate(len);
        });
    }

    /// graph6 encoding (n ≤ 62).
    pub fn to_graph6(&self) -> Result<String, GraphError> {
        if self.n > GRAPH6_MAX_N {
            return Err(GraphError::TooLarge(self.n));
        }
        let mut out = String::new();
        out.push((self.n as u8 + 63) as char);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((acc << (6 - filled)) + 63) as char);
        }
        Ok(out)
    }

    /// Edge-list text: first line `n`, then one `i j` line per edge (1-based).
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for e in &self.edges {
            let (a, b) = e.one_based();
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} E={{", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), 10),
        None => (line.as_bytes(), 0),
    };
    let err = |offset: usize, reason: &str| GraphError::Graph6 { offset: offset + base, reason: reason.to_string() };
    let first = *body.first().ok_or_else(|| err(0, "empty input"))?;
    if first == 126 {
        return Err(err(0, "multi-byte size field (n > 62) is not supported"));
    }
    if !(63..=125).contains(&first) {
        return Err(err(0, "size byte out of range"));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &body[1..];
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + i, "character out of graph6 range"));
        }
    }
    if data.len() < nbytes {
        return Err(err(body.len(), "truncated adjacency data"));
    }
    if data.len() > nbytes {
        return Err(err(1 + nbytes, "trailing bytes after adjacency data"));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for &b in data {
        let v = b - 63;
        for s in (0..6).rev() {
            bits.push((v >> s) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(err(body.len() - 1, "nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Parses all graph6 lines of a corpus, skipping blank and `#` lines. Each
/// entry carries the 1-based line number.
pub fn parse_graph6_corpus(text: &str) -> Vec<(usize, String, Result<Graph, GraphError>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let l = l.trim();
            (i + 1, l.to_string(), parse_graph6(l))
        })
        .collect()
}

/// Parses the `n\ni j\n...` edge-list format (1-based vertices). Blank lines
/// and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(GraphError::EdgeList { line: 1, reason: "missing vertex count".into() })?;
    let n: usize = header
        .parse()
        .map_err(|_| GraphError::EdgeList { line: hline, reason: format!("bad vertex count {header:?}") })?;
    let mut edges = Vec::new();
    for (lineno, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(GraphError::EdgeList { line: lineno, reason: "expected two vertices".into() });
        }
        let mut ends = [0usize; 2];
        for (slot, p) in ends.iter_mut().zip(&parts) {
            let v: usize = p
                .parse()
                .map_err(|_| GraphError::EdgeList { line: lineno, reason: format!("bad vertex {p:?}") })?;
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            *slot = v - 1;
        }
        edges.push((ends[0], ends[1]));
    }
    Graph::new(n, edges)
}

/// Named graph families with their canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `leaves` leaves around a center, which is the last vertex.
    Star { leaves: usize },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `K_n` with `n − 2` pendant vertices glued to its first vertex.
    Gapped { n: usize },
    /// The four-vertex graph with edges 12, 23, 24, 34 (pmd 3, α 4).
    Example,
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        let bad = |s: &str| Err(GraphError::BadFamily(s.to_string()));
        match *self {
            Family::Star { leaves } => {
                let c = leaves;
                Graph::new(leaves + 1, (0..leaves).map(|i| (i, c)))
            }
            Family::Path { n } => {
                if n == 0 {
                    return bad("path needs n >= 1");
                }
                Graph::new(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle { n } => {
                if n < 3 {
                    return bad("cycle needs n >= 3");
                }
                Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::Complete { n } => Graph::new(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))),
            Family::CompleteBipartite { a, b } => {
                Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))))
            }
            Family::Gapped { n } => {
                if n < 2 {
                    return bad("gapped needs n >= 2");
                }
                let clique = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
                let pendants = (0..n - 2).map(|p| (0, n + p));
                Graph::new(2 * n - 2, clique.chain(pendants))
            }
            Family::Example => Graph::new(4, [(0, 1), (1, 2), (1, 3), (2, 3)]),
        }
    }

    /// Parses `star:5`, `path:4`, `cycle:6`, `complete:4`, `kbip:2,3`,
    /// `gapped:4` or `example`.
    pub fn parse(spec: &str) -> Result<Family, GraphError> {
        let bad = || GraphError::BadFamily(spec.to_string());
        let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        Ok(match name.trim() {
            "star" => Family::Star { leaves: num(arg)? },
            "path" => Family::Path { n: num(arg)? },
            "cycle" => Family::Cycle { n: num(arg)? },
            "complete" => Family::Complete { n: num(arg)? },
            "kbip" | "complete_bipartite" => {
                let (a, b) = arg.split_once(',').ok_or_else(bad)?;
                Family::CompleteBipartite { a: num(a)?, b: num(b)? }
            }
            "gapped" => Family::Gapped { n: num(arg)? },
            "example" => Family::Example,
            _ => return Err(bad()),
        })
    }
}

/// Builds a member of a named family.
pub fn family(kind: Family) -> Result<Graph, GraphError> {
    kind.build()
}

/// All labeled trees on `n` vertices, decoded from Prüfer sequences in
/// lexicographic order (`n^(n-2)` trees for `n ≥ 2`).
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let total: u64 = if n <= 1 { 1 } else { (n as u64).pow(len as u32) };
    (0..total).map(move |mut idx| {
        if n <= 1 {
            return Graph::empty(n);
        }
        let mut seq = vec![0usize; len];
        for slot in seq.iter_mut().rev() {
            *slot = (idx % n as u64) as usize;
            idx /= n as u64;
        }
        prufer_decode(n, &seq)
    })
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, optionally restricted to connected graphs. Classes are grown one
/// edge at a time from the edgeless graph; every graph with `m + 1` edges is a
/// one-edge extension of some class with `m` edges. Keep `n ≤ 7`.
pub fn graphs_up_to_iso(n: usize, connected_only: bool) -> Vec<Graph> {
    let mut layer = vec![Graph::empty(n)];
    let mut all = layer.clone();
    while !layer.is_empty() {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for j in 0..n {
                for i in 0..j {
                    if g.has_edge(i, j) {
                        continue;
                    }
                    let edges = g.edges().iter().map(|e| (e.0, e.1)).chain([(i, j)]);
                    let h = Graph::new(n, edges).expect("new pair keeps the graph simple");
                    if seen.insert(h.canonical_key()) {
                        next.push(h);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    if connected_only {
        all.retain(|g| g.is_connected());
    }
    all
}

/// One representative per isomorphism class of graphs with at most
/// `max_edges` edges and no isolated vertices (the edgeless graph on zero
/// vertices included), grown by single-edge augmentation.
pub fn graphs_by_edge_count(max_edges: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::empty(0)];
    let mut all = layer.clone();
    for _ in 0..max_edges {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            let n = g.n();
            let mut candidates = Vec::new();
            for j in 0..n {
                for i in 0..j {
                    if !g.has_edge(i, j) {
                        candidates.push((n, (i, j)));
                    }
                }
                candidates.push((n + 1, (j, n)));
            }
            candidates.push((n + 2, (n, n + 1)));
            for (new_n, (a, b)) in candidates {
                let edges = g.edges().iter().map(|e| (e.0, e.1)).chain([(a, b)]);
                let h = Graph::new(new_n, edges).expect("augmentation keeps the graph simple");
                if seen.insert(h.canonical_key()) {
                    next.push(h);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent reference encoder: writes the upper triangle column by
    /// column as a bit string, then packs it.
    fn reference_graph6(n: usize, adj: &dyn Fn(usize, usize) -> bool) -> String {
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(if adj(i, j) { '1' } else { '0' });
            }
        }
        while bits.len() % 6 != 0 {
            bits.push('0');
        }
        let mut s = String::new();
        s.push(char::from(63 + n as u8));
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push(char::from(63 + v));
        }
        s
    }

    #[test]
    fn graph6_small_cases() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.num_edges()), (1, 0));

        assert_eq!(reference_graph6(2, &|_, _| true), "A_");
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2, Family::Complete { n: 2 }.build().unwrap());

        assert_eq!(reference_graph6(4, &|_, _| true), "C~");
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, Family::Complete { n: 4 }.build().unwrap());
    }

    #[test]
    fn graph6_round_trip_all_small_graphs() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u64..(1 << pairs.len()) {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
                let g = Graph::new(n, edges.clone()).unwrap();
                let reference = reference_graph6(n, &|i, j| edges.contains(&(i, j)));
                assert_eq!(g.to_graph6().unwrap(), reference);
                assert_eq!(parse_graph6(&reference).unwrap(), g);
            }
        }
    }

    #[test]
    fn graph6_errors_name_offsets() {
        match parse_graph6("C~~") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("C") {
            Err(GraphError::Graph6 { .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("C }") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph6("~?@?"), Err(GraphError::Graph6 { offset: 0, .. })));
        // K2 with a stray padding bit
        assert!(parse_graph6("A`").is_err());
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().num_edges(), 1);
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("4\n1 2\n2 3\n2 4\n3 4").unwrap();
        assert_eq!(g, Family::Example.build().unwrap());
        let k2 = parse_edge_list("2\n1 2").unwrap();
        assert_eq!(k2.edges(), &[Edge(0, 1)]);
        assert_eq!(parse_edge_list("3\n1 1"), Err(GraphError::SelfLoop(1)));
        assert_eq!(parse_edge_list("3\n1 2\n2 1"), Err(GraphError::DuplicateEdge(1, 2)));
        assert!(matches!(parse_edge_list("3\n1 4"), Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })));
        assert!(parse_edge_list("x").is_err());
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(Family::Complete { n: 5 }.build().unwrap().degeneracy().0, 4);
        assert_eq!(Family::Path { n: 4 }.build().unwrap().degeneracy().0, 1);
        let ex = Family::Example.build().unwrap();
        let (k, order) = ex.degeneracy();
        assert_eq!(k, 2);
        // vertex 1 (degree 1) goes first, then ties broken by index
        assert_eq!(order.order, vec![0, 1, 2, 3]);
        assert_eq!(order.peak, 2);
    }

    #[test]
    fn degree_and_alpha() {
        assert_eq!(Family::Star { leaves: 5 }.build().unwrap().max_degree(), 5);
        assert_eq!(Family::Complete { n: 4 }.build().unwrap().max_degree(), 3);
        let ex = Family::Example.build().unwrap();
        assert_eq!(ex.max_degree(), 3);
        assert_eq!(ex.degree(1), 3);
        assert_eq!(ex.alpha(), 4);
        // spider with three legs of length 2
        let tree = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(tree.alpha(), 3);
        let gapped = Family::Gapped { n: 4 }.build().unwrap();
        assert_eq!(gapped.alpha(), 7);
    }

    #[test]
    fn families() {
        let star = Family::Star { leaves: 4 }.build().unwrap();
        assert_eq!((star.n(), star.num_edges()), (5, 4));
        assert_eq!(star.degree(4), 4);
        let gapped = Family::Gapped { n: 4 }.build().unwrap();
        assert_eq!((gapped.n(), gapped.max_degree()), (6, 5));
        assert_eq!(gapped.degeneracy().0, 3);
        let c4 = Family::Cycle { n: 4 }.build().unwrap();
        assert_eq!(c4.edges(), &[Edge(0, 1), Edge(0, 3), Edge(1, 2), Edge(2, 3)]);
        let path = Family::Path { n: 3 }.build().unwrap();
        assert_eq!(path.edges(), &[Edge(0, 1), Edge(1, 2)]);
        assert_eq!(Family::parse("kbip:2,3").unwrap().build().unwrap().num_edges(), 6);
        assert!(Family::parse("wheel:4").is_err());
    }

    #[test]
    fn vertex_deletion() {
        let star = Family::Star { leaves: 4 }.build().unwrap();
        assert_eq!(star.delete_vertex(0), Family::Star { leaves: 3 }.build().unwrap());
        let centerless = star.delete_vertex(4);
        assert_eq!((centerless.n(), centerless.num_edges()), (4, 0));
        let none = star.induced_subgraph(&[]);
        assert_eq!((none.n(), none.num_edges()), (0, 0));
    }

    #[test]
    fn structure_predicates() {
        assert!(Family::Cycle { n: 4 }.build().unwrap().is_bipartite());
        assert!(!Family::Cycle { n: 5 }.build().unwrap().is_bipartite());
        assert!(Family::Path { n: 5 }.build().unwrap().is_forest());
        assert!(!Family::Example.build().unwrap().is_forest());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(2).is_forest());
    }

    #[test]
    fn tree_enumeration_counts() {
        assert_eq!(labeled_trees(2).count(), 1);
        assert_eq!(labeled_trees(3).count(), 3);
        assert_eq!(labeled_trees(4).count(), 16);
        let mut keys = std::collections::HashSet::new();
        for t in labeled_trees(5) {
            assert!(t.is_forest() && t.is_connected());
            assert!(keys.insert(t.edges().to_vec()));
        }
        assert_eq!(keys.len(), 125);
    }

    #[test]
    fn isomorphism_class_counts() {
        // OEIS A001349 (connected) and A000088 (all)
        let connected: Vec<usize> = (1..=6).map(|n| graphs_up_to_iso(n, true).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(graphs_up_to_iso(5, false).len(), 34);
        // graphs without isolated vertices by edge count: 1, 1, 2, 5, 11, 26, 68 (A000664)
        let by_edges = graphs_by_edge_count(6);
        let counts: Vec<usize> = (0..=6).map(|m| by_edges.iter().filter(|g| g.num_edges() == m).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 11, 26, 68]);
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=7).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let all: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
                Graph::new(n, all.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn degeneracy_bounded_by_max_degree(g in arb_graph()) {
            prop_assert!(g.degeneracy().0 <= g.max_degree());
        }

        #[test]
        fn degeneracy_is_label_invariant(g in arb_graph(), seed in any::<u64>()) {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            let mut s = seed;
            for i in (1..perm.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(g.relabel(&perm).degeneracy().0, g.degeneracy().0);
        }

        #[test]
        fn deleting_a_vertex_never_raises_degeneracy(g in arb_graph(), v in any::<usize>()) {
            let v = v % g.n();
            prop_assert!(g.delete_vertex(v).degeneracy().0 <= g.degeneracy().0);
        }

        #[test]
        fn elimination_order_witnesses_peak(g in arb_graph()) {
            let (k, order) = g.degeneracy();
            let mut sorted = order.order.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (0..g.n()).collect::<Vec<_>>());
            let mut removed = vec![false; g.n()];
            let mut peak = 0;
            for &v in &order.order {
                let d = g.neighbors(v).iter().filter(|&&u| !removed[u]).count();
                peak = peak.max(d);
                removed[v] = true;
            }
            prop_assert_eq!(peak, k);
        }
    }
}
