//! Sparse polynomials over Q in the variables `y[v,c]`, LSS generators,
//! weight vectors and term orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::lp::{self, Rational};
use crate::pmd::PmdDecomposition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("d = {d} is smaller than the {parts} parts of the decomposition")]
    TooFewColumns { d: usize, parts: usize },
    #[error("vertex {vertex} has degree {t} > d = {d}")]
    DegreeExceedsColumns { vertex: usize, t: usize, d: usize },
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("term orders need nonnegative weights; {0} has weight {1}")]
    NegativeWeight(VarId, Rational),
    #[error("certificate {part} has {got} weights, expected {expected}")]
    CertificateLength { part: usize, got: usize, expected: usize },
}

/// The variable `y[vertex, column]`, both 1-based. Vertex 0 is reserved for
/// auxiliary variables (shown as `t[column]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VarId {
    pub vertex: usize,
    pub column: usize,
}

impl VarId {
    pub fn y(vertex: usize, column: usize) -> Self {
        VarId { vertex, column }
    }

    pub fn aux(k: usize) -> Self {
        VarId { vertex: 0, column: k }
    }

    pub fn is_aux(&self) -> bool {
        self.vertex == 0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_aux() {
            write!(f, "t[{}]", self.column)
        } else {
            write!(f, "y[{},{}]", self.vertex, self.column)
        }
    }
}

/// All `n·d` variables of `S`, in ranking order (largest first).
pub fn ring_variables(n: usize, d: usize) -> Vec<VarId> {
    (1..=n).flat_map(|v| (1..=d).map(move |c| VarId::y(v, c))).collect()
}

/// Product of variable powers, stored sorted by variable with no zero
/// exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn product(vars: &[VarId]) -> Self {
        Monomial::from_pairs(vars.iter().map(|&v| (v, 1)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0.binary_search_by_key(&v, |&(x, _)| x).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = VarId> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.0.iter().chain(&other.0).copied())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, if exact.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().map(|&(v, e)| (v, e - self.exponent(v))).filter(|&(_, e)| e > 0).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<VarId, u32> = self.0.iter().copied().collect();
        for &(v, e) in &other.0 {
            let x = map.entry(v).or_insert(0);
            *x = (*x).max(e);
        }
        Monomial(map.into_iter().collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    pub fn weight(&self, w: &WeightVector) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, &(v, e)| acc + w.get(v) * Rational::from_integer(BigInt::from(e)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Graded reverse lexicographic comparison; smaller `VarId` ranks higher.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    // walk from the lowest-ranked variable: the larger exponent there loses
    let (mut i, mut j) = (a.0.len(), b.0.len());
    while i > 0 || j > 0 {
        let va = if i > 0 { Some(a.0[i - 1]) } else { None };
        let vb = if j > 0 { Some(b.0[j - 1]) } else { None };
        match (va, vb) {
            (Some((x, ex)), Some((y, ey))) if x == y => {
                if ex != ey {
                    return ey.cmp(&ex);
                }
                i -= 1;
                j -= 1;
            }
            (Some((x, _)), Some((y, _))) if x > y => return Ordering::Less,
            (Some(_), Some(_)) => return Ordering::Greater,
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => unreachable!(),
        }
    }
    Ordering::Equal
}

/// Rational weight per variable; absent variables weigh 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightVector {
    weights: BTreeMap<VarId, Rational>,
}

impl WeightVector {
    pub fn zero() -> Self {
        WeightVector::default()
    }

    pub fn set(&mut self, v: VarId, w: Rational) {
        if w.is_zero() {
            self.weights.remove(&v);
        } else {
            self.weights.insert(v, w);
        }
    }

    pub fn with(mut self, v: VarId, w: Rational) -> Self {
        self.set(v, w);
        self
    }

    pub fn get(&self, v: VarId) -> Rational {
        self.weights.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarId, &Rational)> {
        self.weights.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }
}

/// Weight order refined by grevlex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TermOrder {
    weight: WeightVector,
}

impl TermOrder {
    pub fn grevlex() -> Self {
        TermOrder::default()
    }

    pub fn weighted(weight: WeightVector) -> Result<Self, PolyError> {
        if let Some((v, w)) = weight.iter().find(|(_, w)| w.is_negative()) {
            return Err(PolyError::NegativeWeight(*v, w.clone()));
        }
        Ok(TermOrder { weight })
    }

    pub fn weight(&self) -> &WeightVector {
        &self.weight
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if !self.weight.is_zero() {
            match a.weight(&self.weight).cmp(&b.weight(&self.weight)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        grevlex_cmp(a, b)
    }
}

/// Sparse polynomial with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: String,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn var(v: VarId) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v))
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(Rational::one(), m)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Monomial)>) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.keys().flat_map(|m| m.support()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            Some(d) => it.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(&Monomial, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| order.cmp(b.0, a.0));
        ts
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.sorted_terms(&TermOrder::grevlex())
            .into_iter()
            .map(|(m, c)| TermJson { coeff: c.to_string(), monomial: m.to_string() })
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts = self.sorted_terms(&TermOrder::grevlex());
        if ts.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `f_e = Σ_k y[i,k]·y[j,k]` for every edge, in edge order.
pub fn lss_generator(e: Edge, d: usize) -> Polynomial {
    let (i, j) = e.one_based();
    Polynomial::from_terms((1..=d).map(|k| (Rational::one(), Monomial::product(&[VarId::y(i, k), VarId::y(j, k)]))))
}

pub fn lss_generators(g: &Graph, d: usize) -> Vec<(Edge, Polynomial)> {
    g.edges().iter().map(|&e| (e, lss_generator(e, d))).collect()
}

/// Weight vector whose initial forms single out `y[i,l]·y[j,l]` for every
/// edge `{i,j}` in part `l`.
///
/// With integer certificates `w_l`, `B = 1 + max |w_l(i) + w_l(j)|` over all
/// parts and edges, and `C = 1 + max |w_l(v)|`, the weights are
/// `ω(y[v,l]) = C + w_l(v)·B^(−l)` for `l ≤ p` and `0` above `p`. `C` keeps
/// every weight positive so the result also defines a term order.
pub fn weight_from_pmd(dec: &PmdDecomposition, d: usize) -> Result<WeightVector, PolyError> {
    let p = dec.len();
    if d < p {
        return Err(PolyError::TooFewColumns { d, parts: p });
    }
    let certs: Vec<_> = dec.certificates.iter().map(|c| c.scaled_to_integers()).collect();
    let n = certs.first().map_or(0, |c| c.weights.len());
    for (l, c) in certs.iter().enumerate() {
        if c.weights.len() != n {
            return Err(PolyError::CertificateLength { part: l + 1, got: c.weights.len(), expected: n });
        }
    }
    let edges: Vec<Edge> = dec.parts.iter().flatten().copied().collect();
    let mut b = Rational::zero();
    let mut c = Rational::zero();
    for cert in &certs {
        for e in &edges {
            if e.1 >= n {
                return Err(PolyError::VertexOutOfRange(e.1 + 1));
            }
            b = b.max((&cert.weights[e.0] + &cert.weights[e.1]).abs());
        }
        c = c.max(cert.max_abs_weight());
    }
    let b = b + Rational::one();
    let c = c + Rational::one();
    let mut w = WeightVector::zero();
    let mut scale = Rational::one();
    for (l, cert) in certs.iter().enumerate() {
        scale /= &b;
        for v in 0..n {
            w.set(VarId::y(v + 1, l + 1), &c + &cert.weights[v] * &scale);
        }
    }
    Ok(w)
}

/// Sum of the terms of maximal `ω`-weight.
pub fn initial_form(f: &Polynomial, w: &WeightVector) -> Polynomial {
    let Some(top) = f.terms().map(|(m, _)| m.weight(w)).max() else {
        return Polynomial::zero();
    };
    Polynomial::from_terms(f.terms().filter(|(m, _)| m.weight(w) == top).map(|(m, c)| (c.clone(), m.clone())))
}

pub fn leading_monomial(f: &Polynomial, order: &TermOrder) -> Option<Monomial> {
    f.leading_term(order).map(|(m, _)| m.clone())
}

/// True iff every monomial is squarefree and no two share a variable.
pub fn pairwise_coprime_squarefree(ms: &[Monomial]) -> bool {
    ms.iter().all(|m| m.is_squarefree())
        && ms.iter().enumerate().all(|(i, a)| ms[i + 1..].iter().all(|b| a.is_coprime(b)))
}

/// `D = det A` for the `t × t` matrix with rows indexed by the neighbours of
/// `v` (ascending) and columns `d − t + 1, …, d`. `v` is 0-based.
pub fn matrix_d(g: &Graph, v: usize, d: usize) -> Result<Polynomial, PolyError> {
    if v >= g.n() {
        return Err(PolyError::VertexOutOfRange(v + 1));
    }
    let nbrs = g.neighbors(v);
    let t = nbrs.len();
    if t > d {
        return Err(PolyError::DegreeExceedsColumns { vertex: v + 1, t, d });
    }
    let a: Vec<Vec<Polynomial>> = nbrs
        .iter()
        .map(|&u| (d - t + 1..=d).map(|c| Polynomial::var(VarId::y(u + 1, c))).collect())
        .collect();
    Ok(determinant(&a))
}

/// Laplace expansion up to 5×5, fraction-free (Bareiss) elimination above.
pub fn determinant(a: &[Vec<Polynomial>]) -> Polynomial {
    let t = a.len();
    if t == 0 {
        return Polynomial::one();
    }
    if t <= 5 {
        laplace(a, &(0..t).collect::<Vec<_>>())
    } else {
        bareiss(a.to_vec())
    }
}

fn laplace(a: &[Vec<Polynomial>], cols: &[usize]) -> Polynomial {
    let row = a.len() - cols.len();
    if cols.len() == 1 {
        return a[row][cols[0]].clone();
    }
    let mut out = Polynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        if a[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = &a[row][c] * &laplace(a, &rest);
        out = if k % 2 == 0 { &out + &minor } else { &out - &minor };
    }
    out
}

fn bareiss(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let t = m.len();
    let mut sign = Rational::one();
    let mut prev = Polynomial::one();
    for k in 0..t - 1 {
        if m[k][k].is_zero() {
            match (k + 1..t).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..t {
            for j in k + 1..t {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = exact_div(&num, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    m[t - 1][t - 1].scale(&sign)
}

/// Exact division of polynomials, `q` with `num = q·den`. Panics when the
/// division is not exact, which fraction-free elimination guarantees.
fn exact_div(num: &Polynomial, den: &Polynomial) -> Polynomial {
    let order = TermOrder::grevlex();
    let (lm, lc) = den.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())).expect("nonzero divisor");
    let mut rem = num.clone();
    let mut q = Polynomial::zero();
    while let Some((m, c)) = rem.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
        let qm = lm.quotient_of(&m).expect("fraction-free step divides exactly");
        let qc = c / &lc;
        let step = Polynomial::term(qc, qm);
        rem = &rem - &(&step * den);
        q = &q + &step;
    }
    q
}

/// Lowest common multiple of weight denominators; used to move weights into
/// integers without changing the order they induce.
pub(crate) fn weight_denominator_lcm(w: &WeightVector) -> BigInt {
    w.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()))
}

/// Convenience constructor used by tests and reports.
pub fn int_poly(terms: &[(i64, &[VarId])]) -> Polynomial {
    Polynomial::from_terms(terms.iter().map(|(c, vs)| (lp::int(*c), Monomial::product(vs))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::matching::WeightCertificate;
    use proptest::prelude::*;

    fn y(i: usize, k: usize) -> VarId {
        VarId::y(i, k)
    }

    fn m(vs: &[VarId]) -> Monomial {
        Monomial::product(vs)
    }

    fn example_decomposition() -> PmdDecomposition {
        PmdDecomposition {
            parts: vec![vec![Edge(0, 1), Edge(2, 3)], vec![Edge(1, 2)], vec![Edge(1, 3)]],
            certificates: vec![
                WeightCertificate::from_ints(&[3, -2, 1, 1]),
                WeightCertificate::from_ints(&[0, 0, 1, -1]),
                WeightCertificate::from_ints(&[0, 0, 0, 1]),
            ],
        }
    }

    #[test]
    fn generators_and_rendering() {
        let k2 = Family::Complete { n: 2 }.build().unwrap();
        let gens = lss_generators(&k2, 2);
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].1.to_string(), "y[1,1]*y[2,1] + y[1,2]*y[2,2]");
        let ex = lss_generators(&Family::Example.build().unwrap(), 3);
        assert_eq!(ex[0].1.to_string(), "y[1,1]*y[2,1] + y[1,2]*y[2,2] + y[1,3]*y[2,3]");
        assert!(ex.iter().all(|(_, f)| f.num_terms() == 3 && f.terms().all(|(_, c)| c.is_one())));
        assert!(lss_generators(&Graph::empty(3), 2).is_empty());
        let json = serde_json::to_string(&gens[0].1.to_json()).unwrap();
        assert_eq!(json, r#"[{"coeff":"1","monomial":"y[1,1]*y[2,1]"},{"coeff":"1","monomial":"y[1,2]*y[2,2]"}]"#);
        let f = int_poly(&[(2, &[y(1, 1)]), (-1, &[y(1, 2)]), (-3, &[])]);
        assert_eq!(f.to_string(), "2*y[1,1] - y[1,2] - 3");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn grevlex_basics() {
        // y11 > y12 > y21, and grevlex on degree 2
        assert_eq!(grevlex_cmp(&m(&[y(1, 1)]), &m(&[y(1, 2)])), Ordering::Greater);
        // y22 ranks lowest, so the monomial using it is smaller
        assert_eq!(grevlex_cmp(&m(&[y(1, 1), y(2, 2)]), &m(&[y(1, 2), y(1, 2)])), Ordering::Less);
        // x1*x3 < x2^2 in grevlex with x1 > x2 > x3
        let (a, b, c) = (y(1, 1), y(1, 2), y(1, 3));
        assert_eq!(grevlex_cmp(&m(&[a, c]), &m(&[b, b])), Ordering::Less);
        assert_eq!(grevlex_cmp(&Monomial::one(), &m(&[c])), Ordering::Less);
    }

    #[test]
    fn example_initial_forms() {
        let g = Family::Example.build().unwrap();
        let w = weight_from_pmd(&example_decomposition(), 3).unwrap();
        let ini: Vec<Polynomial> = lss_generators(&g, 3).iter().map(|(_, f)| initial_form(f, &w)).collect();
        let expected = [m(&[y(1, 1), y(2, 1)]), m(&[y(2, 2), y(3, 2)]), m(&[y(2, 3), y(4, 3)]), m(&[y(3, 1), y(4, 1)])];
        let got: Vec<Monomial> = ini.iter().map(|p| {
            assert_eq!(p.num_terms(), 1);
            p.terms().next().unwrap().0.clone()
        }).collect();
        assert_eq!(got, expected);
        assert!(pairwise_coprime_squarefree(&got));
        let order = TermOrder::weighted(w).unwrap();
        let lead: Vec<Monomial> = lss_generators(&g, 3).iter().map(|(_, f)| leading_monomial(f, &order).unwrap()).collect();
        assert_eq!(lead, expected);
        assert!(matches!(weight_from_pmd(&example_decomposition(), 2), Err(PolyError::TooFewColumns { d: 2, parts: 3 })));
    }

    #[test]
    fn star_and_single_edge_weights() {
        let k2 = Family::Complete { n: 2 }.build().unwrap();
        let dec = PmdDecomposition { parts: vec![vec![Edge(0, 1)]], certificates: vec![WeightCertificate::from_ints(&[1, 1])] };
        let w = weight_from_pmd(&dec, 1).unwrap();
        let f = &lss_generators(&k2, 1)[0].1;
        assert_eq!(&initial_form(f, &w), f);

        let star = Family::Star { leaves: 3 }.build().unwrap();
        let r = crate::pmd::pmd(&star, crate::pmd::Budget::default()).unwrap();
        let w = weight_from_pmd(&r.decomposition, 3).unwrap();
        for (l, part) in r.decomposition.parts.iter().enumerate() {
            let e = part[0];
            let (i, j) = e.one_based();
            assert_eq!(initial_form(&lss_generator(e, 3), &w), Polynomial::monomial(m(&[y(i, l + 1), y(j, l + 1)])));
        }
    }

    #[test]
    fn initial_form_trivia() {
        let f = int_poly(&[(1, &[y(1, 1)]), (1, &[y(1, 2)])]);
        let w = WeightVector::zero().with(y(1, 1), lp::int(1));
        assert_eq!(initial_form(&f, &w), Polynomial::var(y(1, 1)));
        assert_eq!(initial_form(&f, &WeightVector::zero()), f);
        assert!(TermOrder::weighted(WeightVector::zero().with(y(1, 1), lp::int(-1))).is_err());
    }

    #[test]
    fn coprimality() {
        assert!(pairwise_coprime_squarefree(&[m(&[y(1, 1), y(2, 1)]), m(&[y(2, 2), y(3, 2)])]));
        assert!(!pairwise_coprime_squarefree(&[m(&[y(1, 1), y(2, 1)]), m(&[y(1, 1), y(3, 1)])]));
        assert!(!pairwise_coprime_squarefree(&[m(&[y(1, 1), y(1, 1)])]));
    }

    #[test]
    fn determinants() {
        let p3 = Family::Path { n: 3 }.build().unwrap();
        assert_eq!(matrix_d(&p3, 2, 2).unwrap(), Polynomial::var(y(2, 2)));
        let star = Family::Star { leaves: 2 }.build().unwrap();
        let det = matrix_d(&star, 2, 2).unwrap();
        assert_eq!(det, int_poly(&[(1, &[y(1, 1), y(2, 2)]), (-1, &[y(1, 2), y(2, 1)])]));
        assert_eq!(matrix_d(&Graph::empty(1), 0, 2).unwrap(), Polynomial::one());
        assert!(matrix_d(&star, 2, 1).is_err());
    }

    fn generic(t: usize) -> Vec<Vec<Polynomial>> {
        (0..t).map(|r| (0..t).map(|c| Polynomial::var(y(r + 1, c + 1))).collect()).collect()
    }

    #[test]
    fn determinant_term_structure() {
        let fact = [1usize, 1, 2, 6, 24, 120, 720];
        for t in 1..=4 {
            let d = determinant(&generic(t));
            assert_eq!(d.num_terms(), fact[t]);
            for (mono, c) in d.terms() {
                assert!(c.abs().is_one());
                let mut cols: Vec<usize> = mono.support().map(|v| v.column).collect();
                cols.sort_unstable();
                cols.dedup();
                assert_eq!(cols.len(), t);
            }
        }
    }

    #[test]
    fn bareiss_agrees_with_laplace() {
        let a = generic(6);
        let lap = laplace(&a, &(0..6).collect::<Vec<_>>());
        assert_eq!(lap.num_terms(), 720);
        assert_eq!(bareiss(a), lap);
    }

    #[test]
    fn arithmetic() {
        let x = Polynomial::var(y(1, 1));
        let z = Polynomial::var(y(1, 2));
        let s = &x + &z;
        assert_eq!(&s + &Polynomial::zero(), s);
        assert_eq!(&s * &Polynomial::one(), s);
        assert_eq!(s.pow(2).num_terms(), 3);
        assert!((&s - &s).is_zero());
        assert_eq!(-&(-&s), s);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((-3i64..=3, prop::collection::vec((1usize..=3, 1usize..=2), 0..3)), 1..4).prop_map(|ts| {
            Polynomial::from_terms(ts.into_iter().map(|(c, vs)| (lp::int(c), Monomial::product(&vs.into_iter().map(|(a, b)| y(a, b)).collect::<Vec<_>>()))))
        })
    }

    fn arb_weight() -> impl Strategy<Value = WeightVector> {
        prop::collection::vec(0i64..5, 6).prop_map(|ws| {
            let mut w = WeightVector::zero();
            for (i, x) in ws.into_iter().enumerate() {
                w.set(y(i / 2 + 1, i % 2 + 1), lp::int(x));
            }
            w
        })
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec((1usize..=3, 1usize..=2, 0u32..3), 0..4)
            .prop_map(|v| Monomial::from_pairs(v.into_iter().map(|(a, b, e)| (y(a, b), e))))
    }

    proptest! {
        #[test]
        fn initial_forms_are_multiplicative(f in arb_poly(), g in arb_poly(), w in arb_weight()) {
            let lhs = initial_form(&(&f * &g), &w);
            let rhs = &initial_form(&f, &w) * &initial_form(&g, &w);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn term_order_axioms(a in arb_mono(), b in arb_mono(), c in arb_mono(), w in arb_weight()) {
            let order = TermOrder::weighted(w).unwrap();
            if !a.is_one() {
                prop_assert_eq!(order.cmp(&Monomial::one(), &a), Ordering::Less);
            }
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert_eq!(order.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
        }
    }
}
