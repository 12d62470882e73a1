//! Exact positive matching decomposition numbers.
//!
//! The solver searches stage by stage: a decomposition of the remaining edge
//! set `R` into at most `b` parts starts with a positive matching `M` of
//! `(V, R)` followed by a decomposition of `R ∖ M` into at most `b − 1`
//! parts. Because pmd is monotone under taking edge subsets, only
//! inclusion-maximal positive matchings need to be tried. Failed
//! `(R, b)` pairs are memoized for the whole solve.

use std::collections::HashMap;
#[cfg(not(target_arch = "wasm32"))]
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::lp::LinearSystem;
use crate::matching::{self, CertificateJson, WeightCertificate};

/// Edge sets are bitmasks over `Graph::edges()`.
pub const MAX_SOLVER_EDGES: usize = 128;
/// Guard for [`pmd_bruteforce`].
pub const MAX_BRUTEFORCE_EDGES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PmdError {
    #[error("graph has {0} edges; the solver handles at most {MAX_SOLVER_EDGES}")]
    TooManyEdges(usize),
    #[error("brute force is limited to {MAX_BRUTEFORCE_EDGES} edges, got {0}")]
    BruteForceGuard(usize),
}

/// Search limits. Whichever runs out first ends the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    /// Wall-clock cap in milliseconds; ignored on wasm targets.
    pub max_millis: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 1_000_000, max_millis: Some(60_000) }
    }
}

impl Budget {
    /// Default budget with `LSS_BUDGET_NODES` applied when set.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(n) = std::env::var("LSS_BUDGET_NODES").ok().and_then(|v| v.trim().parse().ok()) {
            b.max_nodes = n;
        }
        b
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes, max_millis: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PmdStatus {
    Exact,
    /// The budget ran out; `value` is only an upper bound.
    UpperBoundOnly,
}

/// Ordered edge partition with one certificate per part. Certificate `l`
/// validates part `l` against the edges not in parts `0..l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmdDecomposition {
    pub parts: Vec<Vec<Edge>>,
    pub certificates: Vec<WeightCertificate>,
}

impl PmdDecomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part index (0-based) of every edge.
    pub fn part_of(&self, e: Edge) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmdResult {
    pub value: usize,
    /// Best proven lower bound; equals `value` when exact.
    pub lower_bound: usize,
    pub decomposition: PmdDecomposition,
    pub status: PmdStatus,
    pub nodes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PmdResultJson {
    pub value: usize,
    pub status: PmdStatus,
    pub lower_bound: usize,
    /// 1-based endpoints.
    pub parts: Vec<Vec<[usize; 2]>>,
    pub certificates: Vec<CertificateJson>,
}

impl PmdResult {
    pub fn is_exact(&self) -> bool {
        self.status == PmdStatus::Exact
    }

    pub fn to_json(&self) -> PmdResultJson {
        let d = &self.decomposition;
        PmdResultJson {
            value: self.value,
            status: self.status,
            lower_bound: self.lower_bound,
            parts: d.parts.iter().map(|p| p.iter().map(|e| [e.0 + 1, e.1 + 1]).collect()).collect(),
            certificates: d.certificates.iter().enumerate().map(|(l, c)| c.to_json(l + 1)).collect(),
        }
    }
}

/// `min{2n − 3, |E|}`, tightened to `min{n − 1, |E|}` for bipartite graphs.
pub fn static_upper_bound(g: &Graph) -> usize {
    let m = g.num_edges();
    if m == 0 {
        return 0;
    }
    let n = g.n();
    if g.is_bipartite() {
        m.min(n - 1)
    } else {
        m.min(2 * n - 3)
    }
}

fn mask_edges(edges: &[Edge], mask: u128) -> Vec<Edge> {
    edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect()
}

fn full_mask(m: usize) -> u128 {
    if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    }
}

struct Exhausted;

struct Solver<'a> {
    n: usize,
    edges: &'a [Edge],
    max_nodes: u64,
    #[cfg(not(target_arch = "wasm32"))]
    deadline: Option<Instant>,
    nodes: u64,
    /// largest budget known to be insufficient for each remaining set
    failed: HashMap<u128, usize>,
    positive: HashMap<(u128, u128), Option<WeightCertificate>>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, budget: Budget) -> Self {
        #[cfg(target_arch = "wasm32")]
        let _ = budget.max_millis;
        Solver {
            n: g.n(),
            edges: g.edges(),
            max_nodes: budget.max_nodes,
            #[cfg(not(target_arch = "wasm32"))]
            deadline: budget.max_millis.map(|ms| Instant::now() + Duration::from_millis(ms)),
            nodes: 0,
            failed: HashMap::new(),
            positive: HashMap::new(),
        }
    }

    fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Exhausted);
        }
        #[cfg(not(target_arch = "wasm32"))]
        if self.nodes % 64 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Exhausted);
                }
            }
        }
        Ok(())
    }

    fn degrees(&self, rem: u128) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (i, e) in self.edges.iter().enumerate() {
            if rem >> i & 1 == 1 {
                deg[e.0] += 1;
                deg[e.1] += 1;
            }
        }
        deg
    }

    fn certificate(&mut self, rem: u128, m: u128) -> Option<WeightCertificate> {
        if let Some(c) = self.positive.get(&(rem, m)) {
            return c.clone();
        }
        let host = mask_edges(self.edges, rem);
        let part = mask_edges(self.edges, m);
        let c = matching::is_positive_matching_fast(self.n, &host, &part).expect("masks encode a matching inside the host");
        self.positive.insert((rem, m), c.clone());
        c
    }

    /// All matchings inside `rem` covering every vertex in `must`.
    fn matchings(&self, rem: u128, must: &[usize]) -> Vec<u128> {
        let idx: Vec<usize> = (0..self.edges.len()).filter(|i| rem >> i & 1 == 1).collect();
        let mut out = Vec::new();
        let mut used = vec![false; self.n];
        self.matchings_rec(&idx, 0, 0, &mut used, must, &mut out);
        out
    }

    fn matchings_rec(&self, idx: &[usize], pos: usize, cur: u128, used: &mut Vec<bool>, must: &[usize], out: &mut Vec<u128>) {
        if pos == idx.len() {
            if cur != 0 && must.iter().all(|&v| used[v]) {
                out.push(cur);
            }
            return;
        }
        self.matchings_rec(idx, pos + 1, cur, used, must, out);
        let e = self.edges[idx[pos]];
        if !used[e.0] && !used[e.1] {
            used[e.0] = true;
            used[e.1] = true;
            self.matchings_rec(idx, pos + 1, cur | 1u128 << idx[pos], used, must, out);
            used[e.0] = false;
            used[e.1] = false;
        }
    }

    fn search(&mut self, rem: u128, budget: usize) -> Result<Option<Vec<(u128, WeightCertificate)>>, Exhausted> {
        if rem == 0 {
            return Ok(Some(Vec::new()));
        }
        if budget == 0 {
            return Ok(None);
        }
        let deg = self.degrees(rem);
        let delta = deg.iter().copied().max().unwrap_or(0);
        if delta > budget || self.failed.get(&rem).is_some_and(|&b| b >= budget) {
            return Ok(None);
        }
        self.tick()?;
        if rem.count_ones() as usize <= budget {
            // single edges are always positive matchings
            let mut out = Vec::new();
            let mut r = rem;
            while r != 0 {
                let bit = r & r.wrapping_neg();
                let cert = self.certificate(r, bit).expect("a single edge is a positive matching");
                out.push((bit, cert));
                r &= !bit;
            }
            return Ok(Some(out));
        }
        // vertices at the budget must lose an edge now
        let must: Vec<usize> = (0..self.n).filter(|&v| deg[v] == budget).collect();
        let mut cands = self.matchings(rem, &must);
        cands.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then_with(|| a.reverse_bits().cmp(&b.reverse_bits()).reverse()));
        let mut accepted: Vec<u128> = Vec::new();
        for m in cands {
            if accepted.iter().any(|&a| a & m == m) {
                continue;
            }
            let Some(cert) = self.certificate(rem, m) else { continue };
            accepted.push(m);
            if let Some(mut rest) = self.search(rem & !m, budget - 1)? {
                rest.insert(0, (m, cert));
                return Ok(Some(rest));
            }
        }
        let entry = self.failed.entry(rem).or_insert(0);
        *entry = (*entry).max(budget);
        Ok(None)
    }
}

/// Computes pmd(G) by iterative deepening from Δ(G), seeded with the greedy
/// decomposition as incumbent.
pub fn pmd(g: &Graph, budget: Budget) -> Result<PmdResult, PmdError> {
    let m = g.num_edges();
    if m > MAX_SOLVER_EDGES {
        return Err(PmdError::TooManyEdges(m));
    }
    let lower = g.max_degree();
    let greedy = greedy_upper_bound(g);
    let upper = greedy.len();
    let mut solver = Solver::new(g, budget);
    let all = full_mask(m);
    // p = upper is searched as well so the search's canonical decomposition
    // is preferred over the greedy one
    for p in lower..=upper {
        match solver.search(all, p) {
            Ok(Some(stages)) => {
                let decomposition = PmdDecomposition {
                    parts: stages.iter().map(|(mask, _)| mask_edges(g.edges(), *mask)).collect(),
                    certificates: stages.into_iter().map(|(_, c)| c).collect(),
                };
                let value = decomposition.len();
                return Ok(PmdResult { value, lower_bound: value, decomposition, status: PmdStatus::Exact, nodes: solver.nodes });
            }
            Ok(None) => {}
            Err(Exhausted) => {
                let status = if p == upper { PmdStatus::Exact } else { PmdStatus::UpperBoundOnly };
                return Ok(PmdResult { value: upper, lower_bound: p, decomposition: greedy, status, nodes: solver.nodes });
            }
        }
    }
    unreachable!("the greedy decomposition witnesses p = {upper}")
}

/// Stage-by-stage greedy: grow a positive matching of the remaining graph,
/// preferring edges at maximum-degree vertices and then high endpoint-degree
/// sums.
pub fn greedy_upper_bound(g: &Graph) -> PmdDecomposition {
    let n = g.n();
    let mut rem: Vec<Edge> = g.edges().to_vec();
    let mut parts = Vec::new();
    let mut certificates = Vec::new();
    while !rem.is_empty() {
        let mut deg = vec![0usize; n];
        for e in &rem {
            deg[e.0] += 1;
            deg[e.1] += 1;
        }
        let delta = deg.iter().copied().max().unwrap_or(0);
        let mut order = rem.clone();
        order.sort_by_key(|e| {
            let hits_max = (deg[e.0] == delta) as usize + (deg[e.1] == delta) as usize;
            (std::cmp::Reverse(hits_max), std::cmp::Reverse(deg[e.0] + deg[e.1]), *e)
        });
        let mut part: Vec<Edge> = Vec::new();
        let mut cert = None;
        for e in order {
            if part.iter().any(|p| p.shares_vertex(&e)) {
                continue;
            }
            part.push(e);
            match matching::is_positive_matching_fast(n, &rem, &part).expect("valid matching") {
                Some(c) => cert = Some(c),
                None => {
                    part.pop();
                }
            }
        }
        let cert = cert.expect("the first edge of every stage is a positive matching");
        part.sort_unstable();
        rem.retain(|e| !part.contains(e));
        parts.push(part);
        certificates.push(cert);
    }
    PmdDecomposition { parts, certificates }
}

/// Reference oracle: tries every ordered partition into `p` nonempty
/// matchings for `p = Δ, Δ+1, …`, deciding each stage by Fourier–Motzkin
/// elimination.
pub fn pmd_bruteforce(g: &Graph) -> Result<usize, PmdError> {
    let m = g.num_edges();
    if m > MAX_BRUTEFORCE_EDGES {
        return Err(PmdError::BruteForceGuard(m));
    }
    if m == 0 {
        return Ok(0);
    }
    let mut cache: HashMap<(u32, u32), bool> = HashMap::new();
    for p in g.max_degree()..=m {
        let mut assign = vec![usize::MAX; m];
        if brute_rec(g, p, 0, &mut assign, &mut cache) {
            return Ok(p);
        }
    }
    unreachable!("single-edge parts always form a decomposition")
}

fn brute_rec(g: &Graph, p: usize, i: usize, assign: &mut Vec<usize>, cache: &mut HashMap<(u32, u32), bool>) -> bool {
    let edges = g.edges();
    if i == edges.len() {
        let mut masks = vec![0u32; p];
        for (e, &l) in assign.iter().enumerate() {
            masks[l] |= 1 << e;
        }
        if masks.contains(&0) {
            return false;
        }
        let mut stage: u32 = (1u32 << edges.len()) - 1;
        for &part in &masks {
            let ok = *cache.entry((stage, part)).or_insert_with(|| {
                let host: Vec<Edge> = (0..edges.len()).filter(|e| stage >> e & 1 == 1).map(|e| edges[e]).collect();
                let mm: Vec<Edge> = (0..edges.len()).filter(|e| part >> e & 1 == 1).map(|e| edges[e]).collect();
                let sys: LinearSystem = matching::positivity_system(g.n(), &host, &mm);
                crate::lp::fourier_motzkin_feasible(&sys)
            });
            if !ok {
                return false;
            }
            stage &= !part;
        }
        return true;
    }
    for l in 0..p {
        let clash = (0..i).any(|j| assign[j] == l && edges[j].shares_vertex(&edges[i]));
        if clash {
            continue;
        }
        assign[i] = l;
        if brute_rec(g, p, i + 1, assign, cache) {
            return true;
        }
        assign[i] = usize::MAX;
    }
    false
}

/// Re-checks every decomposition invariant exactly.
pub fn verify_decomposition(g: &Graph, d: &PmdDecomposition) -> bool {
    if d.parts.len() != d.certificates.len() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for part in &d.parts {
        if part.is_empty() {
            return false;
        }
        for e in part {
            if g.edge_index(*e).is_none() || !seen.insert(*e) {
                return false;
            }
        }
    }
    if seen.len() != g.num_edges() {
        return false;
    }
    let mut stage: Vec<Edge> = g.edges().to_vec();
    for (part, cert) in d.parts.iter().zip(&d.certificates) {
        for (i, a) in part.iter().enumerate() {
            if part[i + 1..].iter().any(|b| a.shares_vertex(b)) {
                return false;
            }
        }
        if cert.weights.len() != g.n() || !matching::check_certificate(&stage, part, cert) {
            return false;
        }
        stage.retain(|e| !part.contains(e));
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a - 1, b - 1)
    }

    #[test]
    fn example_graph() {
        let g = Family::Example.build().unwrap();
        let r = pmd(&g, Budget::default()).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.is_exact());
        assert!(verify_decomposition(&g, &r.decomposition));
        assert_eq!(r.decomposition.parts, vec![vec![e(1, 2), e(3, 4)], vec![e(2, 3)], vec![e(2, 4)]]);
    }

    #[test]
    fn forests_reach_max_degree() {
        assert_eq!(pmd(&Family::Star { leaves: 5 }.build().unwrap(), Budget::default()).unwrap().value, 5);
        assert_eq!(pmd(&Family::Path { n: 6 }.build().unwrap(), Budget::default()).unwrap().value, 2);
    }

    #[test]
    fn small_bruteforce_values() {
        // K3: parts are single edges
        assert_eq!(pmd_bruteforce(&Family::Complete { n: 3 }.build().unwrap()).unwrap(), 3);
        assert_eq!(pmd_bruteforce(&Family::Path { n: 4 }.build().unwrap()).unwrap(), 2);
        assert_eq!(pmd_bruteforce(&Family::Cycle { n: 4 }.build().unwrap()).unwrap(), 3);
        assert_eq!(pmd_bruteforce(&Family::Complete { n: 4 }.build().unwrap()).unwrap(), 5);
        let big = Family::Star { leaves: 11 }.build().unwrap();
        assert_eq!(pmd_bruteforce(&big), Err(PmdError::BruteForceGuard(11)));
    }

    #[test]
    fn complete_graph_k4() {
        let g = Family::Complete { n: 4 }.build().unwrap();
        let r = pmd(&g, Budget::default()).unwrap();
        assert_eq!(r.value, 5);
        assert!(verify_decomposition(&g, &r.decomposition));
    }

    #[test]
    fn greedy_edge_cases() {
        let ex = Family::Example.build().unwrap();
        let d = greedy_upper_bound(&ex);
        assert_eq!(d.len(), 3);
        assert!(verify_decomposition(&ex, &d));
        let k2 = Family::Complete { n: 2 }.build().unwrap();
        assert_eq!(greedy_upper_bound(&k2).len(), 1);
        let empty = Graph::empty(3);
        assert!(greedy_upper_bound(&empty).is_empty());
        let r = pmd(&empty, Budget::default()).unwrap();
        assert_eq!((r.value, r.status), (0, PmdStatus::Exact));
    }

    #[test]
    fn verifier_examples() {
        let g = Family::Example.build().unwrap();
        let known = PmdDecomposition {
            parts: vec![vec![e(1, 2), e(3, 4)], vec![e(2, 3)], vec![e(2, 4)]],
            certificates: vec![
                WeightCertificate::from_ints(&[3, -2, 1, 1]),
                WeightCertificate::from_ints(&[0, 0, 1, -1]),
                WeightCertificate::from_ints(&[0, 0, 0, 1]),
            ],
        };
        assert!(verify_decomposition(&g, &known));

        // the last part moved to the front: {24} must now beat 23 and 12 as well
        let swapped = PmdDecomposition {
            parts: vec![known.parts[2].clone(), known.parts[0].clone(), known.parts[1].clone()],
            certificates: vec![known.certificates[2].clone(), known.certificates[0].clone(), known.certificates[1].clone()],
        };
        assert!(!verify_decomposition(&g, &swapped));
        // the same order is still a decomposition once certificates are recomputed
        let mut stage = g.edges().to_vec();
        let mut certs = Vec::new();
        for part in &swapped.parts {
            certs.push(matching::is_positive_matching(4, &stage, part).unwrap().expect("stage-positive"));
            stage.retain(|x| !part.contains(x));
        }
        assert!(verify_decomposition(&g, &PmdDecomposition { parts: swapped.parts.clone(), certificates: certs }));

        let not_matching = PmdDecomposition {
            parts: vec![vec![e(1, 2), e(2, 3)], vec![e(2, 4)], vec![e(3, 4)]],
            certificates: known.certificates.clone(),
        };
        assert!(!verify_decomposition(&g, &not_matching));
    }

    #[test]
    fn budget_exhaustion_reports_upper_bound() {
        let g = Family::Complete { n: 5 }.build().unwrap();
        let r = pmd(&g, Budget::nodes(1)).unwrap();
        if r.status == PmdStatus::UpperBoundOnly {
            assert!(r.lower_bound < r.value);
            assert!(verify_decomposition(&g, &r.decomposition));
        }
    }

    #[test]
    fn json_shape() {
        let g = Family::Example.build().unwrap();
        let r = pmd(&g, Budget::default()).unwrap();
        let v = serde_json::to_value(r.to_json()).unwrap();
        assert_eq!(v["value"], 3);
        assert_eq!(v["status"], "exact");
        assert_eq!(v["parts"][0], serde_json::json!([[1, 2], [3, 4]]));
        assert_eq!(v["certificates"][0]["part"], 1);
    }
}
