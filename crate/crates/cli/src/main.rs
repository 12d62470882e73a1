use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lss_core::graph::{parse_edge_list, parse_graph6};
use lss_core::harness::{self, ScanFilter, ScanOptions};
use lss_core::reports::{self, properties_at, threshold_ladder, Invariants, ReportError, SuiteResult};
use lss_core::{pmd, Budget, Family, Graph, PmdError};

/// Exact invariants and desk-scale algebra checks for LSS ideals.
///
/// A <GRAPH> is a family spec (`example`, `star:3`, `path:5`, `cycle:6`,
/// `complete:4`, `kbip:2,3`, `gapped:4`), a graph6 string, or a file holding
/// an edge list (`n` then one `i j` pair per line, 1-based) or graph6.
#[derive(Parser)]
#[command(name = "lss", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Maximum degree, degeneracy, alpha and pmd.
    Invariants {
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Positive matching decomposition with weight certificates.
    Pmd {
        graph: String,
        /// Print the full result with certificates as JSON.
        #[arg(long)]
        certificate: bool,
        /// Search node budget (default: LSS_BUDGET_NODES or 1000000).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Guaranteed ring properties of R_G(d) and the threshold ladder.
    Thresholds {
        graph: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        json: bool,
    },
    /// Machine-checked identities.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Number of vertices (path: 4 or 5, star: 3).
        #[arg(long)]
        n: Option<usize>,
        /// Graph for the D suite (default path:3).
        #[arg(long)]
        graph: Option<String>,
        /// 1-based vertex for the D suite (default: last vertex).
        #[arg(long)]
        vertex: Option<usize>,
        /// Number of columns for the D suite (default 2).
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Scan a graph6 corpus (or one edge list) for bound and pmd <= alpha checks.
    Scan {
        corpus: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        /// Worker count, 0 for all cores.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
        /// Write 0 into the ms column so repeated scans are byte-identical.
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        connected: bool,
    },
    /// Check pmd = Delta on every labeled tree up to n vertices.
    Trees {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Star,
    Path,
    #[value(name = "D", alias = "d")]
    D,
    Example,
}

enum Failure {
    /// Bad arguments or unreadable input: exit 1.
    Usage(String),
    /// A desk-scale guard fired: exit 2.
    DeskScale(String),
    /// A theorem-backed check failed: exit 3.
    Check(String),
}

impl From<PmdError> for Failure {
    fn from(e: PmdError) -> Self {
        Failure::DeskScale(e.to_string())
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        if e.is_desk_scale() || matches!(e, ReportError::Pmd(_)) {
            Failure::DeskScale(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::DeskScale(m)) => {
            eprintln!("aborted (desk-scale guard): {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(m)) => {
            eprintln!("CHECK FAILED: {m}");
            ExitCode::from(3)
        }
    }
}

fn load_graph(spec: &str) -> Result<Graph, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {spec}: {e}")))?;
        let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
        let res = match first {
            Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => parse_edge_list(&text),
            Some(l) => parse_graph6(l),
            None => return Err(Failure::Usage(format!("{spec} is empty"))),
        };
        return res.map_err(|e| Failure::Usage(format!("{spec}: {e}")));
    }
    if let Ok(f) = Family::parse(spec) {
        return f.build().map_err(|e| Failure::Usage(e.to_string()));
    }
    parse_graph6(spec).map_err(|e| Failure::Usage(format!("{spec:?} is neither a file, a family nor graph6: {e}")))
}

fn budget(nodes: Option<u64>) -> Budget {
    let mut b = Budget::from_env();
    if let Some(n) = nodes {
        b.max_nodes = n;
    }
    b
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Invariants { graph, json: as_json } => {
            let g = load_graph(&graph)?;
            let inv = Invariants::compute(&g, budget(None))?;
            if as_json {
                println!("{}", json(&inv));
            } else {
                let (k, order) = g.degeneracy();
                let order: Vec<String> = order.order.iter().map(|v| (v + 1).to_string()).collect();
                println!("n = {}, |E| = {}", inv.n, inv.m);
                println!("Delta = {}", inv.delta);
                println!("k = {k} (removal order {})", order.join(" "));
                println!("alpha = {}", inv.alpha);
                match inv.pmd {
                    Some(p) => println!("pmd = {p} (exact)"),
                    None => println!("pmd <= {} (budget exhausted)", inv.pmd_upper),
                }
                println!("bipartite = {}, forest = {}", inv.bipartite, inv.forest);
            }
        }
        Cmd::Pmd { graph, certificate, budget: nodes } => {
            let g = load_graph(&graph)?;
            let r = pmd(&g, budget(nodes))?;
            if certificate {
                println!("{}", json(&r.to_json()));
            } else {
                let status = if r.is_exact() { "exact".to_string() } else { format!("upper bound, lower bound {}", r.lower_bound) };
                println!("pmd = {} ({status})", r.value);
                for (l, (part, cert)) in r.decomposition.parts.iter().zip(&r.decomposition.certificates).enumerate() {
                    let edges: Vec<String> = part.iter().map(|e| e.to_string()).collect();
                    let w: Vec<String> = cert.weights.iter().map(|x| x.to_string()).collect();
                    println!("part {}: {{{}}}  w = ({})", l + 1, edges.join(", "), w.join(", "));
                }
            }
        }
        Cmd::Thresholds { graph, d, json: as_json } => {
            let g = load_graph(&graph)?;
            let inv = Invariants::compute(&g, budget(None))?;
            let report = properties_at(&inv, d);
            let ladder = threshold_ladder(&inv);
            let mut facts = Vec::new();
            if let Ok(f) = Family::parse(&graph) {
                facts.extend(reports::class_group(&f, d));
            }
            facts.extend(reports::forest_class_group_conjecture(&g, d));
            if as_json {
                let v = serde_json::json!({ "report": report, "ladder": ladder, "facts": facts });
                println!("{}", json(&v));
            } else {
                let pmd = inv.pmd.map(|p| p.to_string()).unwrap_or_else(|| format!("<= {} (inexact)", inv.pmd_upper));
                println!("Delta = {}, k = {}, alpha = {}, pmd = {pmd}, d = {d}", inv.delta, inv.k, inv.alpha);
                print!("{}", report.to_table());
                println!();
                println!("thresholds:");
                for t in &ladder {
                    let rules: Vec<String> = t.rules.iter().map(|r| serde_json::to_value(r).unwrap().as_str().unwrap().to_string()).collect();
                    match t.from_d {
                        Some(d0) => println!("  {:<34} d >= {d0}  ({})", t.property.name(), rules.join(", ")),
                        None => println!("  {:<34} no rule applies", t.property.name()),
                    }
                }
                for f in &facts {
                    println!("{:?}: {} [{}]", f.status, f.statement, f.citation);
                }
            }
        }
        Cmd::Verify { suite, n, graph, vertex, d, json: as_json } => {
            let result = match suite {
                Suite::Path => reports::verify_path_suite(n.unwrap_or(4))?,
                Suite::Star => reports::verify_star_suite(n.unwrap_or(3))?,
                Suite::Example => reports::verify_example_suite()?,
                Suite::D => {
                    let g = load_graph(graph.as_deref().unwrap_or("path:3"))?;
                    if g.n() == 0 {
                        return Err(Failure::Usage("graph has no vertices".into()));
                    }
                    let v = vertex.unwrap_or(g.n());
                    if v == 0 || v > g.n() {
                        return Err(Failure::Usage(format!("vertex {v} outside 1..={}", g.n())));
                    }
                    reports::d_suite(&g, v - 1, d.unwrap_or(2)).map_err(|e| match e {
                        ReportError::Poly(p) => Failure::Usage(p.to_string()),
                        other => other.into(),
                    })?
                }
            };
            print_suite(&result, as_json)?;
        }
        Cmd::Scan { corpus, budget: nodes, jobs, csv: _, json: as_json, no_timing, max_n, connected } => {
            let opts = ScanOptions { budget: budget(nodes), jobs, timing: !no_timing, filter: ScanFilter { max_n, connected_only: connected } };
            let report = harness::scan_corpus(&corpus, &opts).map_err(|e| Failure::Usage(e.to_string()))?;
            if as_json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_csv());
            }
            for f in report.findings() {
                eprintln!("{f}");
            }
            eprintln!("{}", report.summary_text());
            if report.summary.theorem_failures > 0 {
                return Err(Failure::Check(format!("{} rows break a proven pmd bound", report.summary.theorem_failures)));
            }
        }
        Cmd::Trees { n, jobs } => {
            if n > 9 {
                return Err(Failure::DeskScale(format!("{n}^{} labeled trees is beyond desk scale (n <= 9)", n.saturating_sub(2))));
            }
            let s = harness::check_forest_pmd(n, budget(None), jobs);
            for (k, c) in &s.counts {
                println!("n = {k}: {c} labeled trees");
            }
            if !s.passed() {
                for m in &s.mismatches {
                    println!("mismatch {}: Delta {} but pmd {} ({:?})", m.id, m.delta, m.pmd, m.status);
                }
                return Err(Failure::Check(format!("pmd != Delta on {} trees", s.mismatches.len())));
            }
            println!("pmd = Delta on all {} trees PASS", s.total);
        }
    }
    Ok(())
}

fn print_suite(result: &SuiteResult, as_json: bool) -> Result<(), Failure> {
    if as_json {
        println!("{}", json(result));
    } else {
        print!("{}", result.to_text());
    }
    if result.passed {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} failed", result.suite)))
    }
}
