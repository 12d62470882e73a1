//! Positive matchings and their weight certificates.
//!
//! A matching `M ⊆ E'` is positive on the edge set `E'` when some vertex
//! weight `w` makes every `M` edge sum strictly positive and every other edge
//! of `E'` strictly negative. The strict system is homogeneous, so it is
//! decided through the normalized system `≥ 1` / `≤ −1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Edge;
use crate::lp::{self, LinearSystem, Rational, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge {0} of the matching is not in the host edge set")]
    NotSubset(Edge),
    #[error("not a matching: edges {0} and {1} share a vertex")]
    NotAMatching(Edge, Edge),
    #[error("edge {0} has an endpoint outside the {1} host vertices")]
    VertexOutOfRange(Edge, usize),
}

/// One weight per host vertex (0-based index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCertificate {
    pub weights: Vec<Rational>,
}

impl WeightCertificate {
    pub fn from_ints(weights: &[i64]) -> Self {
        WeightCertificate { weights: weights.iter().map(|&w| lp::int(w)).collect() }
    }

    /// Multiplies through by the common denominator and divides out the gcd
    /// of the numerators, leaving a primitive integer vector.
    pub fn scaled_to_integers(&self) -> Self {
        let lcm = self.weights.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let ints: Vec<BigInt> = self.weights.iter().map(|w| (w * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let g = if g.is_zero() { BigInt::one() } else { g };
        WeightCertificate { weights: ints.into_iter().map(|v| Rational::from_integer(v / &g)).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(|w| w.is_integer())
    }

    pub fn weight(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn max_abs_weight(&self) -> Rational {
        self.weights.iter().map(|w| w.abs()).max().unwrap_or_else(Rational::zero)
    }

    pub fn to_json(&self, part: usize) -> CertificateJson {
        CertificateJson {
            part,
            weights: self.weights.iter().enumerate().map(|(v, w)| ((v + 1).to_string(), w.to_string())).collect(),
        }
    }
}

/// `{"part": l, "weights": {"1": "3", "2": "-2", ...}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub part: usize,
    pub weights: BTreeMap<String, String>,
}

impl CertificateJson {
    /// Parses back into a certificate on `n` vertices.
    pub fn to_certificate(&self, n: usize) -> Option<WeightCertificate> {
        let mut weights = vec![Rational::zero(); n];
        for (k, v) in &self.weights {
            let idx: usize = k.parse().ok()?;
            if idx == 0 || idx > n {
                return None;
            }
            weights[idx - 1] = v.parse().ok()?;
        }
        Some(WeightCertificate { weights })
    }
}

fn validate(n: usize, host: &[Edge], m: &[Edge]) -> Result<(), MatchingError> {
    for e in host.iter().chain(m) {
        if e.1 >= n {
            return Err(MatchingError::VertexOutOfRange(*e, n));
        }
    }
    for e in m {
        if !host.contains(e) {
            return Err(MatchingError::NotSubset(*e));
        }
    }
    for (i, a) in m.iter().enumerate() {
        for b in &m[i + 1..] {
            if a.shares_vertex(b) {
                return Err(MatchingError::NotAMatching(*a, *b));
            }
        }
    }
    Ok(())
}

/// The normalized system `w_i + w_j ≥ 1` on `M`, `≤ −1` on `E' ∖ M`.
pub fn positivity_system(n: usize, host: &[Edge], m: &[Edge]) -> LinearSystem {
    let mut sys = LinearSystem::new(n);
    for e in host {
        let rel = if m.contains(e) { Relation::Ge } else { Relation::Le };
        let bound = if rel == Relation::Ge { 1 } else { -1 };
        sys.add_int(&[(e.0, 1), (e.1, 1)], rel, bound);
    }
    sys
}

/// Decides whether `m` is a positive matching of `(V, host)` on `n`
/// vertices. On success the certificate is primitive-integral and passes
/// [`check_certificate`].
pub fn is_positive_matching(n: usize, host: &[Edge], m: &[Edge]) -> Result<Option<WeightCertificate>, MatchingError> {
    validate(n, host, m)?;
    if let Some(cert) = quick_certificate(n, host, m) {
        return Ok(Some(cert));
    }
    let sys = positivity_system(n, host, m);
    let cert = lp::lp_feasible(&sys).map(|w| WeightCertificate { weights: w }.scaled_to_integers());
    if let Some(c) = &cert {
        debug_assert!(check_certificate(host, m, c));
    }
    Ok(cert)
}

/// Same verdict as [`is_positive_matching`] without the simplex. Every
/// constraint has the form `±w_i ± w_j ≤ c`, so the system is feasible iff
/// its doubled difference-constraint graph on nodes `v⁺ = w_v`, `v⁻ = −w_v`
/// has no negative cycle. Bellman–Ford potentials `π` then give the integer
/// certificate `w_v = π(v⁺) − π(v⁻)`, which satisfies the system scaled by 2.
pub fn is_positive_matching_fast(n: usize, host: &[Edge], m: &[Edge]) -> Result<Option<WeightCertificate>, MatchingError> {
    validate(n, host, m)?;
    if let Some(cert) = quick_certificate(n, host, m) {
        return Ok(Some(cert));
    }
    Ok(difference_certificate(n, host, m).map(|c| c.scaled_to_integers()))
}

fn difference_certificate(n: usize, host: &[Edge], m: &[Edge]) -> Option<WeightCertificate> {
    let (plus, minus) = (|v: usize| 2 * v, |v: usize| 2 * v + 1);
    // arc (b, a, c) encodes π(a) ≤ π(b) + c
    let mut arcs: Vec<(usize, usize, i64)> = Vec::with_capacity(2 * host.len());
    for e in host {
        let (i, j) = (e.0, e.1);
        if m.contains(e) {
            // −w_i − w_j ≤ −1
            arcs.push((plus(j), minus(i), -1));
            arcs.push((plus(i), minus(j), -1));
        } else {
            // w_i + w_j ≤ −1
            arcs.push((minus(j), plus(i), -1));
            arcs.push((minus(i), plus(j), -1));
        }
    }
    let mut pi = vec![0i64; 2 * n];
    for round in 0..=2 * n {
        let mut changed = false;
        for &(b, a, c) in &arcs {
            if pi[b] + c < pi[a] {
                pi[a] = pi[b] + c;
                changed = true;
            }
        }
        if !changed {
            let weights = (0..n).map(|v| lp::int(pi[plus(v)] - pi[minus(v)])).collect();
            let cert = WeightCertificate { weights };
            debug_assert!(check_certificate(host, m, &cert));
            return Some(cert);
        }
        if round == 2 * n {
            break;
        }
    }
    None
}

/// `+1` on matched vertices and `−2` elsewhere works whenever no edge outside
/// `m` joins two matched vertices.
fn quick_certificate(n: usize, host: &[Edge], m: &[Edge]) -> Option<WeightCertificate> {
    let mut covered = vec![false; n];
    for e in m {
        covered[e.0] = true;
        covered[e.1] = true;
    }
    if host.iter().any(|e| covered[e.0] && covered[e.1] && !m.contains(e)) {
        return None;
    }
    let cert = WeightCertificate { weights: covered.iter().map(|&c| lp::int(if c { 1 } else { -2 })).collect() };
    Some(cert)
}

/// True iff every strict inequality holds exactly.
pub fn check_certificate(host: &[Edge], m: &[Edge], w: &WeightCertificate) -> bool {
    host.iter().chain(m).all(|e| e.1 < w.weights.len())
        && m.iter().all(|e| host.contains(e))
        && host.iter().all(|e| {
            let s = &w.weights[e.0] + &w.weights[e.1];
            if m.contains(e) {
                s.is_positive()
            } else {
                s.is_negative()
            }
        })
}
