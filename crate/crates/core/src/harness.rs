//! Corpus scans for the pmd bounds and the `pmd ≤ α` conjecture, plus the
//! forest check `pmd = Δ` over labeled trees.

use std::path::Path;
#[cfg(not(target_arch = "wasm32"))]
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{self, Graph, GraphError};
use crate::pmd::{self, Budget, PmdStatus};

pub const CSV_HEADER: &str = "id,n,m,bipartite,delta,k,alpha,pmd,status,gap,ok_upper,ok_bipartite,ok_conjecture,ms";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Exact,
    UpperBoundOnly,
    Error,
}

impl RowStatus {
    fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Exact => "exact",
            RowStatus::UpperBoundOnly => "upper_bound_only",
            RowStatus::Error => "error",
        }
    }
}

/// One scanned graph. Bound flags and the gap are `None` unless pmd is exact;
/// `ok_bipartite` is also `None` on non-bipartite graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    /// 1-based line of the corpus the graph came from.
    pub line: usize,
    pub id: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub bipartite: Option<bool>,
    pub delta: Option<usize>,
    pub k: Option<usize>,
    pub alpha: Option<i64>,
    pub pmd: Option<usize>,
    pub status: RowStatus,
    pub gap: Option<i64>,
    pub ok_upper: Option<bool>,
    pub ok_bipartite: Option<bool>,
    pub ok_conjecture: Option<bool>,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ScanRow {
    fn error(line: usize, id: String, err: String) -> Self {
        ScanRow {
            line,
            id,
            n: None,
            m: None,
            bipartite: None,
            delta: None,
            k: None,
            alpha: None,
            pmd: None,
            status: RowStatus::Error,
            gap: None,
            ok_upper: None,
            ok_bipartite: None,
            ok_conjecture: None,
            ms: 0,
            error: Some(err),
        }
    }

    pub fn is_violation(&self) -> bool {
        self.ok_conjecture == Some(false)
    }

    /// The bounds are theorems, so a false flag means a solver defect.
    pub fn is_theorem_failure(&self) -> bool {
        self.ok_upper == Some(false) || self.ok_bipartite == Some(false)
    }

    pub fn csv_line(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(ToString::to_string).unwrap_or_default()
        }
        let id = if self.id.contains([',', '"', '\n']) { format!("\"{}\"", self.id.replace('"', "\"\"")) } else { self.id.clone() };
        [
            id,
            opt(&self.n),
            opt(&self.m),
            opt(&self.bipartite),
            opt(&self.delta),
            opt(&self.k),
            opt(&self.alpha),
            opt(&self.pmd),
            self.status.as_str().to_string(),
            opt(&self.gap),
            opt(&self.ok_upper),
            opt(&self.ok_bipartite),
            opt(&self.ok_conjecture),
            self.ms.to_string(),
        ]
        .join(",")
    }
}

/// Scans a single graph.
pub fn scan_graph(line: usize, id: String, g: &Graph, budget: Budget, timing: bool) -> ScanRow {
    #[cfg(not(target_arch = "wasm32"))]
    let start = Instant::now();
    let r = match pmd::pmd(g, budget) {
        Ok(r) => r,
        Err(e) => return ScanRow::error(line, id, e.to_string()),
    };
    #[cfg(not(target_arch = "wasm32"))]
    let ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    #[cfg(target_arch = "wasm32")]
    let ms = {
        let _ = timing;
        0
    };
    let (n, m) = (g.n(), g.num_edges());
    let bipartite = g.is_bipartite();
    let alpha = g.alpha();
    let exact = r.status == PmdStatus::Exact;
    let p = r.value as i64;
    let upper = (2 * n as i64 - 3).min(m as i64);
    ScanRow {
        line,
        id,
        n: Some(n),
        m: Some(m),
        bipartite: Some(bipartite),
        delta: Some(g.max_degree()),
        k: Some(g.degeneracy().0),
        alpha: Some(alpha),
        pmd: Some(r.value),
        status: if exact { RowStatus::Exact } else { RowStatus::UpperBoundOnly },
        gap: exact.then_some(alpha - p),
        // edgeless graphs have pmd 0 while 2n - 3 and alpha can be negative
        ok_upper: exact.then_some(m == 0 || p <= upper),
        ok_bipartite: (exact && bipartite).then_some(m == 0 || p <= (n as i64 - 1).min(m as i64)),
        ok_conjecture: exact.then_some(m == 0 || p <= alpha),
        ms,
        error: None,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanFilter {
    pub max_n: Option<usize>,
    pub connected_only: bool,
}

impl ScanFilter {
    fn keeps(&self, g: &Graph) -> bool {
        self.max_n.is_none_or(|m| g.n() <= m) && (!self.connected_only || g.is_connected())
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub budget: Budget,
    /// Worker count; 1 scans serially, 0 uses every core.
    pub jobs: usize,
    /// When false every `ms` is 0, making output byte-identical across runs.
    pub timing: bool,
    pub filter: ScanFilter,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { budget: Budget::from_env(), jobs: 1, timing: true, filter: ScanFilter::default() }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub total: usize,
    pub exact: usize,
    pub upper_bound_only: usize,
    pub errors: usize,
    /// Exact rows with `pmd > α`.
    pub violations: usize,
    pub theorem_failures: usize,
    pub max_gap: Option<i64>,
    pub max_gap_id: Option<String>,
    pub slowest_ms: u64,
    pub slowest_id: Option<String>,
}

impl ScanSummary {
    pub fn from_rows(rows: &[ScanRow]) -> Self {
        let mut s = ScanSummary { total: rows.len(), ..Default::default() };
        for r in rows {
            match r.status {
                RowStatus::Exact => s.exact += 1,
                RowStatus::UpperBoundOnly => s.upper_bound_only += 1,
                RowStatus::Error => s.errors += 1,
            }
            s.violations += r.is_violation() as usize;
            s.theorem_failures += r.is_theorem_failure() as usize;
            if let Some(g) = r.gap {
                if s.max_gap.is_none_or(|m| g > m) {
                    s.max_gap = Some(g);
                    s.max_gap_id = Some(r.id.clone());
                }
            }
            if s.slowest_id.is_none() || r.ms > s.slowest_ms {
                s.slowest_ms = r.ms;
                s.slowest_id = Some(r.id.clone());
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

impl ScanReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.csv_line());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows).expect("rows serialize")
    }

    /// One `FINDING` line per conjecture violation.
    pub fn findings(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter(|r| r.is_violation())
            .map(|r| format!("FINDING: pmd > alpha on {} (pmd={}, alpha={})", r.id, r.pmd.unwrap(), r.alpha.unwrap()))
            .collect()
    }

    pub fn summary_text(&self) -> String {
        let s = &self.summary;
        let mut t = format!(
            "scanned {} graphs: {} exact, {} upper bound only, {} errors; {} pmd > alpha findings; {} bound failures",
            s.total, s.exact, s.upper_bound_only, s.errors, s.violations, s.theorem_failures
        );
        if let (Some(g), Some(id)) = (s.max_gap, &s.max_gap_id) {
            t.push_str(&format!("; max gap {g} on {id}"));
        }
        if let Some(id) = &s.slowest_id {
            t.push_str(&format!("; slowest {id} ({} ms)", s.slowest_ms));
        }
        t
    }
}

enum Item {
    Graph(usize, String, Graph),
    Bad(usize, String, String),
}

fn parse_items(text: &str) -> Vec<Item> {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    // graph6 never starts with a digit, an edge list always does
    if first.is_some_and(|l| l.starts_with(|c: char| c.is_ascii_digit())) {
        return match graph::parse_edge_list(text) {
            Ok(g) => {
                let id = g.to_graph6().unwrap_or_else(|_| "edge-list".into());
                vec![Item::Graph(1, id, g)]
            }
            Err(e) => vec![Item::Bad(1, "edge-list".into(), e.to_string())],
        };
    }
    graph::parse_graph6_corpus(text)
        .into_iter()
        .map(|(line, id, r)| match r {
            Ok(g) => Item::Graph(line, id, g),
            Err(e) => Item::Bad(line, id, e.to_string()),
        })
        .collect()
}

/// Scans graph6 lines (or one edge list). Malformed lines become error
/// rows; rows come back in corpus order whatever the worker count.
pub fn scan_text(text: &str, opts: &ScanOptions) -> ScanReport {
    let items: Vec<Item> = parse_items(text)
        .into_iter()
        .filter(|it| match it {
            Item::Graph(_, _, g) => opts.filter.keeps(g),
            Item::Bad(..) => true,
        })
        .collect();
    let run = |it: &Item| match it {
        Item::Graph(line, id, g) => scan_graph(*line, id.clone(), g, opts.budget, opts.timing),
        Item::Bad(line, id, e) => ScanRow::error(*line, id.clone(), e.clone()),
    };
    let mut rows = map_jobs(&items, opts.jobs, run);
    rows.sort_by_key(|r| r.line);
    let summary = ScanSummary::from_rows(&rows);
    ScanReport { rows, summary }
}

pub fn scan_corpus(path: &Path, opts: &ScanOptions) -> Result<ScanReport, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.display().to_string(), source })?;
    Ok(scan_text(&text, opts))
}

/// Graph6 lines for a list of graphs.
pub fn corpus_text(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| g.to_graph6().expect("small graphs encode") + "\n").collect()
}

#[cfg(feature = "parallel")]
fn map_jobs<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| items.par_iter().map(&f).collect())
}

#[cfg(not(feature = "parallel"))]
fn map_jobs<T: Sync, R: Send>(items: &[T], _jobs: usize, f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

/// All labeled trees on `n` vertices (`n^(n−2)` of them).
pub fn enumerate_trees(n: usize) -> impl Iterator<Item = Graph> {
    graph::labeled_trees(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeMismatch {
    pub id: String,
    pub delta: usize,
    pub pmd: usize,
    pub status: PmdStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestSummary {
    /// `(n, number of trees checked)`.
    pub counts: Vec<(usize, usize)>,
    pub total: usize,
    /// Trees where pmd is not exactly Δ. Any entry is a solver defect.
    pub mismatches: Vec<TreeMismatch>,
}

impl ForestSummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks `pmd = Δ` on every labeled tree with `1 ≤ n ≤ n_max`.
pub fn check_forest_pmd(n_max: usize, budget: Budget, jobs: usize) -> ForestSummary {
    let mut counts = Vec::new();
    let mut mismatches = Vec::new();
    for n in 1..=n_max {
        let trees: Vec<Graph> = enumerate_trees(n).collect();
        counts.push((n, trees.len()));
        let found = map_jobs(&trees, jobs, |t| {
            let delta = t.max_degree();
            match pmd::pmd(t, budget) {
                Ok(r) if r.is_exact() && r.value == delta => None,
                Ok(r) => Some(TreeMismatch { id: t.to_graph6().unwrap_or_default(), delta, pmd: r.value, status: r.status }),
                Err(_) => Some(TreeMismatch { id: t.to_graph6().unwrap_or_default(), delta, pmd: 0, status: PmdStatus::UpperBoundOnly }),
            }
        });
        mismatches.extend(found.into_iter().flatten());
    }
    let total = counts.iter().map(|c| c.1).sum();
    ForestSummary { counts, total, mismatches }
}
