//! Rule engine mapping `(G, d)` to guaranteed ring properties, the family
//! knowledge base, and machine-checkable verification suites for stars,
//! paths and the `D` element.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Family, Graph};
use crate::groebner::{self, GroebnerError, IdealBasis};
use crate::matching;
use crate::pmd::{self, Budget, PmdError};
use crate::poly::{self, int_poly, lss_generators, Monomial, PolyError, Polynomial, TermOrder, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Pmd(#[from] PmdError),
    #[error("{0}")]
    OutOfScope(String),
}

impl ReportError {
    pub fn is_desk_scale(&self) -> bool {
        matches!(self, ReportError::Groebner(GroebnerError::DeskScaleExceeded(_)) | ReportError::OutOfScope(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    CompleteIntersection,
    Radical,
    Prime,
    IrreducibleVariety,
    StronglyFRegular,
    RationalSingularities,
    Normal,
    Ufd,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::CompleteIntersection,
        Property::Radical,
        Property::Prime,
        Property::IrreducibleVariety,
        Property::StronglyFRegular,
        Property::RationalSingularities,
        Property::Normal,
        Property::Ufd,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Property::CompleteIntersection => "complete intersection",
            Property::Radical => "radical",
            Property::Prime => "prime",
            Property::IrreducibleVariety => "irreducible variety",
            Property::StronglyFRegular => "strongly F-regular (char p)",
            Property::RationalSingularities => "rational singularities (char 0)",
            Property::Normal => "normal",
            Property::Ufd => "UFD",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `d ≥ pmd`: radical complete intersection.
    PmdRadicalCi,
    /// `d ≥ pmd + 1`: prime.
    PmdPrime,
    /// `d ≥ α`: complete intersection.
    AlphaCi,
    /// `d ≥ α + 1`: irreducible variety.
    AlphaIrreducible,
    /// `d ≥ pmd + k`: strongly F-regular / rational singularities, hence normal.
    PmdKFRegular,
    /// `d ≥ pmd + k + 1`: UFD.
    PmdKUfd,
    /// forests with `d ≥ Δ + 1`: normal.
    ForestNormal,
    /// a theorem-status fact from the knowledge base.
    KnowledgeBase,
    /// no edges: `L = (0)` and `R` is a polynomial ring.
    PolynomialRing,
}

impl Rule {
    pub fn citation(&self) -> &'static str {
        match self {
            Rule::PmdRadicalCi => "d >= pmd(G) makes L_G(d) a radical complete intersection",
            Rule::PmdPrime => "d >= pmd(G) + 1 makes L_G(d) prime",
            Rule::AlphaCi => "d >= alpha(G) makes L_G(d) a complete intersection",
            Rule::AlphaIrreducible => "d >= alpha(G) + 1 makes the variety of L_G(d) irreducible",
            Rule::PmdKFRegular => "d >= pmd(G) + k(G) makes R_G(d) strongly F-regular (char p) / rational singularities (char 0), hence normal",
            Rule::PmdKUfd => "d >= pmd(G) + k(G) + 1 makes R_G(d) a UFD",
            Rule::ForestNormal => "G a forest and d >= Delta(G) + 1 makes R_G(d) normal",
            Rule::KnowledgeBase => "family fact with theorem status, stable under increasing d",
            Rule::PolynomialRing => "G has no edges, so R_G(d) is a polynomial ring",
        }
    }

    fn grants(&self) -> &'static [Property] {
        use Property::*;
        match self {
            Rule::PmdRadicalCi => &[CompleteIntersection, Radical],
            Rule::PmdPrime => &[Prime, IrreducibleVariety],
            Rule::AlphaCi => &[CompleteIntersection],
            Rule::AlphaIrreducible => &[IrreducibleVariety],
            Rule::PmdKFRegular => &[StronglyFRegular, RationalSingularities, Normal],
            Rule::PmdKUfd => &[Ufd],
            Rule::ForestNormal => &[Normal],
            Rule::KnowledgeBase => &[CompleteIntersection, Radical, Prime, IrreducibleVariety],
            Rule::PolynomialRing => &Property::ALL,
        }
    }
}

/// Graph invariants the rules read. `pmd` is `None` unless exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub k: usize,
    pub alpha: i64,
    pub pmd: Option<usize>,
    /// Best known pmd upper bound, exact or not.
    pub pmd_upper: usize,
    pub forest: bool,
    pub bipartite: bool,
    pub six_cycle: bool,
}

impl Invariants {
    pub fn compute(g: &Graph, budget: Budget) -> Result<Self, PmdError> {
        let r = pmd::pmd(g, budget)?;
        Ok(Invariants::with_pmd(g, r.is_exact().then_some(r.value), r.value))
    }

    pub fn with_pmd(g: &Graph, pmd: Option<usize>, pmd_upper: usize) -> Self {
        let six_cycle = g.n() == 6 && g.num_edges() == 6 && g.is_connected() && (0..6).all(|v| g.degree(v) == 2);
        Invariants {
            n: g.n(),
            m: g.num_edges(),
            delta: g.max_degree(),
            k: g.degeneracy().0,
            alpha: g.alpha(),
            pmd,
            pmd_upper,
            forest: g.is_forest(),
            bipartite: g.is_bipartite(),
            six_cycle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Guaranteed,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictLine {
    pub property: Property,
    pub verdict: Verdict,
    /// Every rule that fires for the property, strongest first.
    pub rules: Vec<Rule>,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub graph: Invariants,
    pub d: usize,
    pub verdicts: Vec<VerdictLine>,
}

impl PropertyReport {
    pub fn verdict(&self, p: Property) -> &VerdictLine {
        self.verdicts.iter().find(|v| v.property == p).expect("all properties are reported")
    }

    pub fn guaranteed(&self, p: Property) -> bool {
        self.verdict(p).verdict == Verdict::Guaranteed
    }

    pub fn fired(&self, r: Rule) -> bool {
        self.verdicts.iter().any(|v| v.rules.contains(&r))
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<34} {:<11} rule", "property", "verdict");
        for v in &self.verdicts {
            let verdict = if v.verdict == Verdict::Guaranteed { "guaranteed" } else { "unknown" };
            let rules: Vec<String> = v.rules.iter().map(|r| serde_json::to_value(r).unwrap().as_str().unwrap().to_string()).collect();
            let _ = writeln!(s, "{:<34} {:<11} {}", v.property.name(), verdict, if rules.is_empty() { "-".into() } else { rules.join(", ") });
        }
        s
    }
}

#[allow(clippy::int_plus_one)]
fn rule_fires(rule: Rule, inv: &Invariants, d: usize) -> bool {
    let edgeless = inv.m == 0;
    if edgeless {
        return rule == Rule::PolynomialRing;
    }
    let d = d as i64;
    let pmd = inv.pmd.map(|p| p as i64);
    let k = inv.k as i64;
    match rule {
        Rule::PmdRadicalCi => pmd.is_some_and(|p| d >= p),
        Rule::PmdPrime => pmd.is_some_and(|p| d >= p + 1),
        Rule::AlphaCi => d >= inv.alpha,
        Rule::AlphaIrreducible => d >= inv.alpha + 1,
        Rule::PmdKFRegular => pmd.is_some_and(|p| d >= p + k),
        Rule::PmdKUfd => pmd.is_some_and(|p| d >= p + k + 1),
        Rule::ForestNormal => inv.forest && d >= inv.delta as i64 + 1,
        Rule::KnowledgeBase => knowledge_base_fires(inv, d as usize),
        Rule::PolynomialRing => false,
    }
}

/// Only theorem-status facts are consulted here.
fn knowledge_base_fires(inv: &Invariants, d: usize) -> bool {
    knowledge_base()
        .iter()
        .filter(|f| f.status == FactStatus::Theorem && f.grants_prime_ci_from.is_some())
        .any(|f| inv.six_cycle && f.family == "cycle:6" && d >= f.grants_prime_ci_from.unwrap())
}

const RULE_ORDER: [Rule; 9] = [
    Rule::PolynomialRing,
    Rule::PmdKUfd,
    Rule::PmdKFRegular,
    Rule::ForestNormal,
    Rule::PmdPrime,
    Rule::PmdRadicalCi,
    Rule::AlphaIrreducible,
    Rule::AlphaCi,
    Rule::KnowledgeBase,
];

/// Evaluates every rule at `(G, d)`.
pub fn properties_at(inv: &Invariants, d: usize) -> PropertyReport {
    let fired: Vec<Rule> = RULE_ORDER.iter().copied().filter(|&r| rule_fires(r, inv, d)).collect();
    let verdicts = Property::ALL
        .iter()
        .map(|&p| {
            let rules: Vec<Rule> = fired.iter().copied().filter(|r| r.grants().contains(&p)).collect();
            let citation = rules.iter().map(|r| r.citation()).collect::<Vec<_>>().join("; ");
            VerdictLine { property: p, verdict: if rules.is_empty() { Verdict::Unknown } else { Verdict::Guaranteed }, rules, citation }
        })
        .collect();
    PropertyReport { graph: inv.clone(), d, verdicts }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub property: Property,
    /// Smallest `d` at which some rule guarantees the property.
    pub from_d: Option<usize>,
    pub rules: Vec<Rule>,
}

/// Smallest guaranteed `d` for every property.
pub fn threshold_ladder(inv: &Invariants) -> Vec<Threshold> {
    let top = inv.pmd_upper + inv.k + 2 + inv.alpha.max(0) as usize;
    Property::ALL
        .iter()
        .map(|&p| {
            let hit = (0..=top).map(|d| properties_at(inv, d)).find(|r| r.guaranteed(p));
            match hit {
                Some(r) => Threshold { property: p, from_d: Some(r.d), rules: r.verdict(p).rules.clone() },
                None => Threshold { property: p, from_d: None, rules: Vec::new() },
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactStatus {
    Theorem,
    Conjecture,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyFact {
    pub family: String,
    pub parameters: String,
    pub statement: String,
    pub status: FactStatus,
    pub citation: String,
    #[serde(skip)]
    grants_prime_ci_from: Option<usize>,
}

fn fact(family: &str, parameters: &str, statement: &str, status: FactStatus, citation: &str) -> FamilyFact {
    FamilyFact {
        family: family.into(),
        parameters: parameters.into(),
        statement: statement.into(),
        status,
        citation: citation.into(),
        grants_prime_ci_from: None,
    }
}

pub fn knowledge_base() -> Vec<FamilyFact> {
    let mut c6 = fact(
        "cycle:6",
        "d = 3",
        "L_G(2) is neither prime nor a complete intersection; L_G(3) is a prime complete intersection",
        FactStatus::Theorem,
        "six-cycle sharpness example: radical CI and primality start at the same d",
    );
    c6.grants_prime_ci_from = Some(3);
    vec![
        c6,
        fact("forest", "d >= Delta + 1", "R_G(d) is normal", FactStatus::Theorem, Rule::ForestNormal.citation()),
        fact(
            "star",
            "n vertices, d = n",
            "Cl(R_G(n)) = Z, so the UFD threshold pmd + k + 1 is sharp on stars",
            FactStatus::Theorem,
            "class group of the star at d = Delta + 1",
        ),
        fact("path", "n vertices, d = 3", "Cl(R_G(3)) = Z^(n-2)", FactStatus::Theorem, "class group of the path at d = Delta + 1"),
        fact(
            "forest",
            "d = Delta + 1",
            "Cl(R_G(d)) = Z^m with m the number of vertices of degree Delta",
            FactStatus::Conjecture,
            "open: class group of forests at d = Delta + 1",
        ),
        fact("any", "", "pmd(G) <= alpha(G)", FactStatus::Conjecture, "open: pmd never exceeds alpha"),
        fact(
            "gapped",
            "K_n with n - 2 pendant edges at one vertex",
            "Delta = pmd = 2n - 3, k = n - 1, alpha - pmd = n - 2",
            FactStatus::Theorem,
            "pmd of the gapped family from an external result on complete graphs with pendants",
        ),
    ]
}

/// Class group knowledge for stars and paths.
pub fn class_group(family: &Family, d: usize) -> Option<FamilyFact> {
    match *family {
        Family::Star { leaves } if leaves >= 1 && d == leaves + 1 => Some(fact(
            "star",
            &format!("n = {}, d = {d}", leaves + 1),
            "Cl(R_G(d)) = Z",
            FactStatus::Theorem,
            "class group of the star at d = Delta + 1",
        )),
        Family::Path { n } if n >= 3 && d == 3 => Some(fact(
            "path",
            &format!("n = {n}, d = 3"),
            &format!("Cl(R_G(3)) = {}", free_abelian(n - 2)),
            FactStatus::Theorem,
            "class group of the path at d = Delta + 1",
        )),
        _ => None,
    }
}

/// The conjectured class group of a forest at `d = Δ + 1`.
pub fn forest_class_group_conjecture(g: &Graph, d: usize) -> Option<FamilyFact> {
    if !g.is_forest() || g.num_edges() == 0 || d != g.max_degree() + 1 {
        return None;
    }
    let delta = g.max_degree();
    let m = (0..g.n()).filter(|&v| g.degree(v) == delta).count();
    Some(fact(
        "forest",
        &format!("n = {}, Delta = {delta}, d = {d}", g.n()),
        &format!("Cl(R_G(d)) = {}", free_abelian(m)),
        FactStatus::Conjecture,
        "open: class group of forests at d = Delta + 1",
    ))
}

fn free_abelian(rank: usize) -> String {
    match rank {
        0 => "0".into(),
        1 => "Z".into(),
        r => format!("Z^{r}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Human summary such as the multiplicity ledger.
    pub summary: String,
}

impl SuiteResult {
    fn new(suite: String, checks: Vec<Check>, summary: String) -> Self {
        SuiteResult { suite, passed: checks.iter().all(|c| c.pass), checks, summary }
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        let _ = writeln!(s, "{} {}", self.summary, if self.passed { "PASS" } else { "FAIL" });
        s
    }
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

fn y(i: usize, k: usize) -> Polynomial {
    Polynomial::var(VarId::y(i, k))
}

/// Column used by vertex `i` in `Y_i`, `y_i`: 2 for even `i`, 3 for odd.
fn k_of(i: usize) -> usize {
    if i % 2 == 0 {
        2
    } else {
        3
    }
}

fn k_hat(k: usize) -> usize {
    assert!(k == 2 || k == 3, "column index {k} outside {{2, 3}}");
    5 - k
}

/// Ideals attached to the path on `n` vertices at `d = 3`.
#[derive(Debug, Clone)]
pub struct PathIdeals {
    pub n: usize,
    pub l: Vec<Polynomial>,
    pub x: Polynomial,
    /// `(i, generators of P_i)` for `i = 2..n-1`.
    pub p: Vec<(usize, Vec<Polynomial>)>,
    pub q: Vec<(usize, Vec<Polynomial>)>,
}

impl PathIdeals {
    pub fn new(n: usize) -> Self {
        assert!(n >= 3);
        let g = Family::Path { n }.build().expect("path");
        let gens = lss_generators(&g, 3);
        let l: Vec<Polynomial> = gens.iter().map(|(_, f)| f.clone()).collect();
        // F_i: every generator except f_{(i-1)i} and f_{i(i+1)}
        let f_i = |i: usize| -> Vec<Polynomial> {
            gens.iter().filter(|(e, _)| !e.touches(i - 1)).map(|(_, f)| f.clone()).collect()
        };
        let mut x = Polynomial::one();
        let mut p = Vec::new();
        let mut q = Vec::new();
        for i in 2..n {
            let k = k_of(i);
            let kh = k_hat(k);
            assert!(i > 1 && i < n && k <= 3 && kh <= 3);
            x = &x * &y(i, kh);
            let mut pi = vec![y(i, 1), y(i, 2), y(i, 3)];
            pi.extend(f_i(i));
            p.push((i, pi));
            // Y_i rows are vertices i-1 and i+1, columns 1 and k; y_i = (y_i1, y_ik)
            let (a, b, c, dd) = (y(i - 1, 1), y(i - 1, k), y(i + 1, 1), y(i + 1, k));
            let (u, v) = (y(i, 1), y(i, k));
            let mut qi = vec![&(&a * &u) + &(&b * &v), &(&c * &u) + &(&dd * &v), &(&a * &dd) - &(&b * &c), y(i, kh)];
            qi.extend(f_i(i));
            q.push((i, qi));
        }
        PathIdeals { n, l, x, p, q }
    }
}

fn multiplicity(basis: &IdealBasis, num_vars: usize) -> u128 {
    groebner::monomial_multiplicity(&groebner::initial_ideal(basis), num_vars)
}

fn dim(basis: &IdealBasis, num_vars: usize) -> i64 {
    groebner::monomial_dim(&groebner::initial_ideal(basis), num_vars)
}

/// Memberships and the multiplicity ledger for the minimal primes of `(x)`
/// in `R_G(3)`, `G` the path on `n` vertices.
pub fn verify_path_suite(n: usize) -> Result<SuiteResult, ReportError> {
    if !(4..=5).contains(&n) {
        return Err(ReportError::OutOfScope(format!("path suite runs for 4 <= n <= 5, got {n}")));
    }
    let ideals = PathIdeals::new(n);
    let order = TermOrder::grevlex();
    let nv = 3 * n;
    let mut checks = Vec::new();
    let pow = 1u128 << (n - 3);

    let mut lx = ideals.l.clone();
    lx.push(ideals.x.clone());
    let lx_gb = groebner::buchberger(&lx, &order)?;
    let e_x = multiplicity(&lx_gb, nv);
    let deg_x = ideals.x.total_degree().unwrap_or(0);
    let mut degs = vec![deg_x];
    degs.extend(std::iter::repeat_n(2, ideals.l.len()));
    let e_x_ci = groebner::ci_multiplicity(&degs);
    let e_x_expected = (n as u128 - 2) << (n - 1);
    checks.push(check(
        "e(R/(x))",
        e_x == e_x_ci && e_x == e_x_expected,
        format!("initial ideal {e_x}, complete intersection {e_x_ci}, expected (n-2)*2^(n-1) = {e_x_expected}"),
    ));
    let height = nv as i64 - dim(&lx_gb, nv);

    let mut parts: Vec<String> = Vec::new();
    let mut total = 0u128;
    for (kind, list, expected) in [("P", &ideals.p, pow), ("Q", &ideals.q, 3 * pow)] {
        for (i, gens) in list.iter() {
            let name = format!("{kind}_{i}");
            let gb = groebner::buchberger(gens, &order)?;
            let l_in = groebner::contains_all(&gb, &ideals.l)?;
            checks.push(check(format!("L_G(3) in {name}"), l_in, "all generators reduce to 0"));
            let x_in = groebner::ideal_member(&ideals.x, &gb)?;
            checks.push(check(format!("x in {name}"), x_in, format!("x = {}", ideals.x)));
            let e = multiplicity(&gb, nv);
            let mut detail = format!("initial ideal {e}, expected {expected}");
            let mut ok = e == expected;
            if kind == "P" {
                let degs: Vec<u32> = gens.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
                let ci = groebner::ci_multiplicity(&degs);
                detail.push_str(&format!(", complete intersection {ci}"));
                ok &= ci == e;
            }
            checks.push(check(format!("e(R/{name})"), ok, detail));
            let h = nv as i64 - dim(&gb, nv);
            checks.push(check(format!("height {name}"), h == height, format!("{h}, height of L + (x) is {height}")));
            parts.push(e.to_string());
            total += e;
        }
    }
    checks.push(check(
        "ledger",
        total == e_x,
        "sum over P_i and Q_i equals e(R/(x)); the transfer from initial ideals to the ideals relies on flat deformation",
    ));
    let summary = format!("ledger {} = {total} vs e(R/(x)) = {e_x}", parts.join("+"));
    Ok(SuiteResult::new(format!("path n={n}"), checks, summary))
}

/// `L_G(n−1) = (x) ∩ (det W, L_G(n−1))` for the star with center `n`.
pub fn verify_star_suite(n: usize) -> Result<SuiteResult, ReportError> {
    if n != 3 {
        return Err(ReportError::OutOfScope(format!("star suite runs for n = 3 only, got {n}")));
    }
    let d = n - 1;
    let g = Family::Star { leaves: n - 1 }.build().expect("star");
    let order = TermOrder::grevlex();
    let l: Vec<Polynomial> = lss_generators(&g, d).into_iter().map(|(_, f)| f).collect();
    let xs: Vec<Polynomial> = (1..=d).map(|j| y(n, j)).collect();
    let w: Vec<Vec<Polynomial>> = (1..n).map(|i| (1..=d).map(|j| y(i, j)).collect()).collect();
    let det_w = poly::determinant(&w);
    let mut dl = vec![det_w.clone()];
    dl.extend(l.iter().cloned());

    let l_gb = groebner::buchberger(&l, &order)?;
    let x_gb = groebner::buchberger(&xs, &order)?;
    let rhs = groebner::ideal_intersection(&xs, &dl, &order)?;
    let mut checks = Vec::new();
    checks.push(check("L in (x)", groebner::contains_all(&x_gb, &l)?, "every term of each generator has a center variable"));
    let nf = groebner::normal_form(&det_w, &x_gb)?;
    checks.push(check("det W not in (x)", !nf.is_zero(), format!("normal form {nf}")));
    checks.push(check("L in (x) ∩ (det W, L)", groebner::contains_all(&rhs, &l)?, "generators of L reduce to 0"));
    checks.push(check(
        "(x) ∩ (det W, L) in L",
        groebner::contains_all(&l_gb, &rhs.generators)?,
        format!("{} intersection generators reduce to 0", rhs.len()),
    ));
    let prod_in = xs.iter().all(|x| groebner::ideal_member(&(x * &det_w), &l_gb).unwrap_or(false));
    checks.push(check("x_j det W in L", prod_in, "products of the two components lie in L"));
    Ok(SuiteResult::new(format!("star n={n}"), checks, "L_G(n-1) = (x) ∩ (det W, L_G(n-1))".into()))
}

/// `D ∉ L_G(d)`, decided by a nonzero normal form. `v` is 0-based.
pub fn verify_d_nonzero(g: &Graph, v: usize, d: usize) -> Result<bool, ReportError> {
    let dpoly = poly::matrix_d(g, v, d)?;
    let l: Vec<Polynomial> = lss_generators(g, d).into_iter().map(|(_, f)| f).collect();
    let gb = groebner::buchberger(&l, &TermOrder::grevlex())?;
    Ok(!groebner::normal_form(&dpoly, &gb)?.is_zero())
}

pub fn d_suite(g: &Graph, v: usize, d: usize) -> Result<SuiteResult, ReportError> {
    let dpoly = poly::matrix_d(g, v, d)?;
    let nonzero = verify_d_nonzero(g, v, d)?;
    let c = check(format!("D != 0 in R_G({d}), vertex {}", v + 1), nonzero, format!("D = {dpoly}"));
    Ok(SuiteResult::new(format!("D for vertex {}", v + 1), vec![c], format!("t = {}", g.degree(v))))
}

/// The worked four-vertex example: decomposition, certificates, invariants
/// and the underlined initial terms.
pub fn verify_example_suite() -> Result<SuiteResult, ReportError> {
    let g = Family::Example.build().expect("example");
    let r = pmd::pmd(&g, Budget::default())?;
    let mut checks = vec![
        check("pmd", r.value == 3 && r.is_exact(), format!("pmd = {} ({:?})", r.value, r.status)),
        check("certificates", pmd::verify_decomposition(&g, &r.decomposition), format!("{} parts", r.decomposition.len())),
        check("alpha", g.alpha() == 4, format!("Delta = {}, k = {}, alpha = {}", g.max_degree(), g.degeneracy().0, g.alpha())),
    ];
    let stage0 = g.edges().to_vec();
    let w1 = crate::matching::WeightCertificate::from_ints(&[3, -2, 1, 1]);
    checks.push(check("w1 = (3,-2,1,1)", matching::check_certificate(&stage0, &r.decomposition.parts[0], &w1), "validates the first part"));
    let w = poly::weight_from_pmd(&r.decomposition, 3)?;
    let ini: Vec<Monomial> = lss_generators(&g, 3)
        .iter()
        .filter_map(|(_, f)| {
            let i = poly::initial_form(f, &w);
            (i.num_terms() == 1).then(|| i.terms().next().unwrap().0.clone())
        })
        .collect();
    let expected: Vec<Monomial> = [[(1, 1), (2, 1)], [(2, 2), (3, 2)], [(2, 3), (4, 3)], [(3, 1), (4, 1)]]
        .iter()
        .map(|pair| Monomial::product(&[VarId::y(pair[0].0, pair[0].1), VarId::y(pair[1].0, pair[1].1)]))
        .collect();
    let shown: Vec<String> = ini.iter().map(|m| m.to_string()).collect();
    checks.push(check("initial forms", ini == expected && poly::pairwise_coprime_squarefree(&ini), shown.join(", ")));
    Ok(SuiteResult::new("example".into(), checks, format!("pmd = {}", r.value)))
}

/// `(G₂)`: the two entries of `Y y` and `det Y` for a generic 2×2 `Y`.
pub fn herzog_ideal() -> Vec<Polynomial> {
    let v = VarId::y;
    vec![
        int_poly(&[(1, &[v(1, 1), v(2, 1)]), (1, &[v(1, 2), v(2, 2)])]),
        int_poly(&[(1, &[v(3, 1), v(2, 1)]), (1, &[v(3, 2), v(2, 2)])]),
        int_poly(&[(1, &[v(1, 1), v(3, 2)]), (-1, &[v(1, 2), v(3, 1)])]),
    ]
}
