//! Desk-scale Gröbner bases over Q.
//!
//! Polynomials are converted into a dense exponent representation over the
//! variables that actually occur, with the weight part of the term order
//! scaled to integers. Buchberger's algorithm uses the normal selection
//! strategy and both of Buchberger's criteria; results are reduced and monic.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::lp::Rational;
use crate::poly::{self, Monomial, Polynomial, TermJson, TermOrder, VarId, WeightVector};

pub const MAX_VARIABLES: usize = 40;
pub const MAX_BASIS: usize = 4000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("desk-scale exceeded: {0}")]
    DeskScaleExceeded(String),
    #[error("weights do not fit after scaling to integers")]
    WeightOverflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Mono {
    exp: Vec<u32>,
    deg: u32,
    wt: i128,
}

#[derive(Debug, Clone)]
struct Ring {
    vars: Vec<VarId>,
    index: HashMap<VarId, usize>,
    weights: Vec<i128>,
}

type Dense = Vec<(Mono, Rational)>;

impl Ring {
    fn new<'a>(polys: impl IntoIterator<Item = &'a Polynomial>, order: &TermOrder) -> Result<Ring, GroebnerError> {
        let mut set = BTreeSet::new();
        for p in polys {
            set.extend(p.variables());
        }
        let vars: Vec<VarId> = set.into_iter().collect();
        let scale = poly::weight_denominator_lcm(order.weight());
        let mut weights = Vec::with_capacity(vars.len());
        for v in &vars {
            let w = order.weight().get(*v) * Rational::from_integer(scale.clone());
            weights.push(w.to_integer().to_i128().ok_or(GroebnerError::WeightOverflow)?);
        }
        let index = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        Ok(Ring { vars, index, weights })
    }

    fn guard(&self) -> Result<(), GroebnerError> {
        if self.vars.len() >= MAX_VARIABLES {
            return Err(GroebnerError::DeskScaleExceeded(format!("{} variables (limit {})", self.vars.len(), MAX_VARIABLES - 1)));
        }
        Ok(())
    }

    fn mono(&self, exp: Vec<u32>) -> Mono {
        let deg = exp.iter().sum();
        let wt = exp.iter().zip(&self.weights).map(|(&e, &w)| e as i128 * w).sum();
        Mono { exp, deg, wt }
    }

    fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        a.wt.cmp(&b.wt).then(a.deg.cmp(&b.deg)).then_with(|| {
            for k in (0..a.exp.len()).rev() {
                if a.exp[k] != b.exp[k] {
                    return b.exp[k].cmp(&a.exp[k]);
                }
            }
            Ordering::Equal
        })
    }

    fn dense(&self, p: &Polynomial) -> Dense {
        let mut out: Dense = p
            .terms()
            .map(|(m, c)| {
                let mut exp = vec![0; self.vars.len()];
                for &(v, e) in m.factors() {
                    exp[self.index[&v]] = e;
                }
                (self.mono(exp), c.clone())
            })
            .collect();
        out.sort_by(|a, b| self.cmp(&b.0, &a.0));
        out
    }

    fn sparse(&self, p: &Dense) -> Polynomial {
        Polynomial::from_terms(p.iter().map(|(m, c)| (c.clone(), self.monomial(m))))
    }

    fn monomial(&self, m: &Mono) -> Monomial {
        Monomial::from_pairs(m.exp.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (self.vars[i], e)))
    }

    fn mul(&self, a: &Mono, b: &Mono) -> Mono {
        Mono { exp: a.exp.iter().zip(&b.exp).map(|(x, y)| x + y).collect(), deg: a.deg + b.deg, wt: a.wt + b.wt }
    }

    fn lcm(&self, a: &Mono, b: &Mono) -> Mono {
        self.mono(a.exp.iter().zip(&b.exp).map(|(x, y)| *x.max(y)).collect())
    }

    fn div(&self, a: &Mono, b: &Mono) -> Mono {
        Mono { exp: a.exp.iter().zip(&b.exp).map(|(x, y)| x - y).collect(), deg: a.deg - b.deg, wt: a.wt - b.wt }
    }

    /// `p − c·m·g`, all operands sorted descending.
    fn sub_mul(&self, p: &Dense, c: &Rational, m: &Mono, g: &Dense) -> Dense {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut gi = g.iter().map(|(t, a)| (self.mul(t, m), a * c)).peekable();
        let mut pi = p.iter().cloned().peekable();
        loop {
            match (pi.peek(), gi.peek()) {
                (Some(x), Some(y)) => match self.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(pi.next().unwrap()),
                    Ordering::Less => {
                        let (t, a) = gi.next().unwrap();
                        out.push((t, -a));
                    }
                    Ordering::Equal => {
                        let (t, a) = pi.next().unwrap();
                        let (_, b) = gi.next().unwrap();
                        let s = a - b;
                        if !s.is_zero() {
                            out.push((t, s));
                        }
                    }
                },
                (Some(_), None) => out.push(pi.next().unwrap()),
                (None, Some(_)) => {
                    let (t, a) = gi.next().unwrap();
                    out.push((t, -a));
                }
                (None, None) => break,
            }
        }
        out
    }

    /// Full reduction: no term of the result is divisible by a leading
    /// monomial of `basis`.
    fn reduce(&self, f: &Dense, basis: &[Dense]) -> Dense {
        let mut p = f.clone();
        let mut rem: Dense = Vec::new();
        while let Some((lt, lc)) = p.first().cloned() {
            match basis.iter().find(|g| divides(&g[0].0, &lt)) {
                Some(g) => {
                    let m = self.div(&lt, &g[0].0);
                    let c = &lc / &g[0].1;
                    p = self.sub_mul(&p, &c, &m, g);
                }
                None => {
                    rem.push((lt, lc));
                    p.remove(0);
                }
            }
        }
        rem
    }

    fn spoly(&self, f: &Dense, g: &Dense) -> Dense {
        let l = self.lcm(&f[0].0, &g[0].0);
        let mf = self.div(&l, &f[0].0);
        let mg = self.div(&l, &g[0].0);
        let zero: Dense = Vec::new();
        let a = self.sub_mul(&zero, &-(Rational::one() / &f[0].1), &mf, f);
        self.sub_mul(&a, &(Rational::one() / &g[0].1), &mg, g)
    }
}

fn divides(a: &Mono, b: &Mono) -> bool {
    a.deg <= b.deg && a.exp.iter().zip(&b.exp).all(|(x, y)| x <= y)
}

fn coprime(a: &Mono, b: &Mono) -> bool {
    a.exp.iter().zip(&b.exp).all(|(x, y)| *x == 0 || *y == 0)
}

fn monic(mut p: Dense) -> Dense {
    if let Some(lc) = p.first().map(|t| t.1.clone()) {
        for t in &mut p {
            t.1 = &t.1 / &lc;
        }
    }
    p
}

fn gb_dense(ring: &Ring, gens: &[Dense]) -> Result<Vec<Dense>, GroebnerError> {
    let mut g: Vec<Dense> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for f in gens {
        let h = ring.reduce(f, &g);
        if h.is_empty() {
            continue;
        }
        g.push(monic(h));
        let new = g.len() - 1;
        pending.extend((0..new).map(|k| (k, new)));
    }
    while !pending.is_empty() {
        // normal strategy: smallest lcm first, ties by index
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = ring.lcm(&g[a.0][0].0, &g[a.1][0].0);
                let lb = ring.lcm(&g[b.0][0].0, &g[b.1][0].0);
                ring.cmp(&la, &lb).then((a.1, a.0).cmp(&(b.1, b.0)))
            })
            .unwrap();
        pending.remove(&(i, j));
        if coprime(&g[i][0].0, &g[j][0].0) {
            continue;
        }
        let l = ring.lcm(&g[i][0].0, &g[j][0].0);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i && k != j && divides(&g[k][0].0, &l) && !pending.contains(&key(i, k)) && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let h = ring.reduce(&ring.spoly(&g[i], &g[j]), &g);
        if h.is_empty() {
            continue;
        }
        g.push(monic(h));
        if g.len() >= MAX_BASIS {
            return Err(GroebnerError::DeskScaleExceeded(format!("basis reached {MAX_BASIS} polynomials")));
        }
        let new = g.len() - 1;
        pending.extend((0..new).map(|k| (k, new)));
    }
    Ok(reduce_basis(ring, g))
}

fn reduce_basis(ring: &Ring, g: Vec<Dense>) -> Vec<Dense> {
    let keep: Vec<usize> = (0..g.len())
        .filter(|&i| {
            !(0..g.len()).any(|j| j != i && divides(&g[j][0].0, &g[i][0].0) && (g[j][0].0 != g[i][0].0 || j < i))
        })
        .collect();
    let minimal: Vec<Dense> = keep.into_iter().map(|i| g[i].clone()).collect();
    let mut out: Vec<Dense> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Dense> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
            let head = vec![minimal[i][0].clone()];
            let tail: Dense = minimal[i][1..].to_vec();
            let mut r = head;
            r.extend(ring.reduce(&tail, &others));
            monic(r)
        })
        .collect();
    out.sort_by(|a, b| ring.cmp(&b[0].0, &a[0].0));
    out
}

/// A generating set together with the term order it was computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub generators: Vec<Polynomial>,
    pub order: TermOrder,
    /// Set when `generators` is the reduced Gröbner basis.
    pub reduced: bool,
}

impl IdealBasis {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.num_terms() == 1 && g.terms().next().unwrap().0.is_one())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| poly::leading_monomial(g, &self.order)).collect()
    }

    pub fn to_json(&self) -> Vec<Vec<TermJson>> {
        self.generators.iter().map(|g| g.to_json()).collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder) -> Result<IdealBasis, GroebnerError> {
    let ring = Ring::new(gens, order)?;
    ring.guard()?;
    let dense: Vec<Dense> = gens.iter().filter(|g| !g.is_zero()).map(|g| ring.dense(g)).collect();
    let g = gb_dense(&ring, &dense)?;
    Ok(IdealBasis { generators: g.iter().map(|p| ring.sparse(p)).collect(), order: order.clone(), reduced: true })
}

/// Remainder of `f` on division by `basis`.
pub fn normal_form(f: &Polynomial, basis: &IdealBasis) -> Result<Polynomial, GroebnerError> {
    let ring = Ring::new(basis.generators.iter().chain(std::iter::once(f)), &basis.order)?;
    let g: Vec<Dense> = basis.generators.iter().filter(|p| !p.is_zero()).map(|p| ring.dense(p)).collect();
    Ok(ring.sparse(&ring.reduce(&ring.dense(f), &g)))
}

/// Membership test; `basis` must be a Gröbner basis.
pub fn ideal_member(f: &Polynomial, basis: &IdealBasis) -> Result<bool, GroebnerError> {
    Ok(normal_form(f, basis)?.is_zero())
}

/// True iff every generator of `gens` lies in the ideal of `basis`.
pub fn contains_all(basis: &IdealBasis, gens: &[Polynomial]) -> Result<bool, GroebnerError> {
    for f in gens {
        if !ideal_member(f, basis)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Buchberger's criterion checked directly: every S-polynomial reduces to 0.
pub fn is_groebner_basis(basis: &IdealBasis) -> Result<bool, GroebnerError> {
    let ring = Ring::new(&basis.generators, &basis.order)?;
    let g: Vec<Dense> = basis.generators.iter().filter(|p| !p.is_zero()).map(|p| ring.dense(p)).collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if !ring.reduce(&ring.spoly(&g[i], &g[j]), &g).is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn initial_ideal(basis: &IdealBasis) -> MonomialIdeal {
    MonomialIdeal::new(basis.leading_monomials())
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`, then re-basing in
/// `order`.
pub fn ideal_intersection(i: &[Polynomial], j: &[Polynomial], order: &TermOrder) -> Result<IdealBasis, GroebnerError> {
    let used: BTreeSet<VarId> = i.iter().chain(j).flat_map(|p| p.variables()).collect();
    let t = (1..).map(VarId::aux).find(|v| !used.contains(v)).unwrap();
    let tp = Polynomial::var(t);
    let one_minus_t = &Polynomial::one() - &tp;
    let mut gens: Vec<Polynomial> = i.iter().map(|f| &tp * f).collect();
    gens.extend(j.iter().map(|g| &one_minus_t * g));
    let elim = TermOrder::weighted(WeightVector::zero().with(t, Rational::one())).expect("nonnegative");
    let gb = buchberger(&gens, &elim)?;
    let kept: Vec<Polynomial> = gb.generators.into_iter().filter(|p| !p.variables().contains(&t)).collect();
    buchberger(&kept, order)
}

/// Product of generator degrees of a complete intersection.
pub fn ci_multiplicity(degrees: &[u32]) -> u128 {
    degrees.iter().map(|&d| d as u128).product()
}

/// Monomial ideal kept as its minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for m in all {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        min.sort();
        MonomialIdeal { gens: min }
    }

    pub fn unit() -> Self {
        MonomialIdeal { gens: vec![Monomial::one()] }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn colon_var(&self, v: VarId) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().map(|g| {
            let e = g.exponent(v);
            if e == 0 {
                g.clone()
            } else {
                Monomial::var(v).quotient_of(g).unwrap()
            }
        }))
    }

    fn plus_var(&self, v: VarId) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().cloned().chain(std::iter::once(Monomial::var(v))))
    }

    /// Numerator `K(t)` of the Hilbert series `K(t) / (1 − t)^N`.
    pub fn hilbert_numerator(&self) -> Vec<i128> {
        if self.is_unit() {
            return vec![0];
        }
        let pairwise = self.gens.iter().enumerate().all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.is_coprime(b)));
        if pairwise {
            return self.gens.iter().fold(vec![1], |acc, g| {
                let mut f = vec![0i128; g.degree() as usize + 1];
                f[0] = 1;
                f[g.degree() as usize] -= 1;
                tpoly_mul(&acc, &f)
            });
        }
        // pivot on the variable shared by the most generators
        let mut count: HashMap<VarId, usize> = HashMap::new();
        for g in &self.gens {
            for v in g.support() {
                *count.entry(v).or_insert(0) += 1;
            }
        }
        let pivot = count.into_iter().max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0))).unwrap().0;
        let a = self.plus_var(pivot).hilbert_numerator();
        let b = self.colon_var(pivot).hilbert_numerator();
        let mut out = a;
        if out.len() < b.len() + 1 {
            out.resize(b.len() + 1, 0);
        }
        for (k, c) in b.iter().enumerate() {
            out[k + 1] += c;
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    /// Size of a minimum set of variables meeting every generator.
    pub fn min_cover(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let supports: Vec<Vec<VarId>> = self.gens.iter().map(|g| g.support().collect()).collect();
        let mut best = supports.len();
        let mut chosen = Vec::new();
        cover_rec(&supports, &mut chosen, &mut best);
        Some(best)
    }
}

fn cover_rec(supports: &[Vec<VarId>], chosen: &mut Vec<VarId>, best: &mut usize) {
    if chosen.len() >= *best {
        return;
    }
    match supports.iter().find(|s| !s.iter().any(|v| chosen.contains(v))) {
        None => *best = chosen.len(),
        Some(s) => {
            for &v in s {
                chosen.push(v);
                cover_rec(supports, chosen, best);
                chosen.pop();
            }
        }
    }
}

fn tpoly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Krull dimension of `S / mi` with `S` in `num_vars` variables; −1 for the
/// unit ideal.
pub fn monomial_dim(mi: &MonomialIdeal, num_vars: usize) -> i64 {
    match mi.min_cover() {
        None => -1,
        Some(c) => num_vars as i64 - c as i64,
    }
}

/// Multiplicity of `S / mi`: `h(1)` where `K(t) = (1 − t)^codim · h(t)`.
pub fn monomial_multiplicity(mi: &MonomialIdeal, _num_vars: usize) -> u128 {
    let Some(codim) = mi.min_cover() else { return 0 };
    let mut k = mi.hilbert_numerator();
    for _ in 0..codim {
        // divide by (1 − t)
        let mut q = Vec::with_capacity(k.len());
        let mut acc = 0i128;
        for &c in &k {
            acc += c;
            q.push(acc);
        }
        assert_eq!(q.pop(), Some(0), "Hilbert numerator not divisible by (1 - t)^codim");
        k = q;
    }
    let e: i128 = k.iter().sum();
    u128::try_from(e).expect("multiplicity is positive")
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisSummary {
    pub generators: usize,
    pub leading_monomials: Vec<String>,
}

impl From<&IdealBasis> for BasisSummary {
    fn from(b: &IdealBasis) -> Self {
        BasisSummary { generators: b.len(), leading_monomials: b.leading_monomials().iter().map(|m| m.to_string()).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, Graph};
    use crate::poly::{int_poly, lss_generators, Monomial};

    fn y(i: usize, k: usize) -> VarId {
        VarId::y(i, k)
    }

    fn lss(g: &Graph, d: usize) -> Vec<Polynomial> {
        lss_generators(g, d).into_iter().map(|(_, f)| f).collect()
    }

    fn herzog() -> Vec<Polynomial> {
        vec![
            int_poly(&[(1, &[y(1, 1), y(2, 1)]), (1, &[y(1, 2), y(2, 2)])]),
            int_poly(&[(1, &[y(3, 1), y(2, 1)]), (1, &[y(3, 2), y(2, 2)])]),
            int_poly(&[(1, &[y(1, 1), y(3, 2)]), (-1, &[y(1, 2), y(3, 1)])]),
        ]
    }

    #[test]
    fn principal_ideals() {
        let f = int_poly(&[(2, &[y(1, 1), y(2, 1)]), (4, &[y(1, 2), y(2, 2)])]);
        let gb = buchberger(&[f.clone()], &TermOrder::grevlex()).unwrap();
        assert_eq!(gb.generators, vec![f.scale(&"1/2".parse().unwrap())]);
        let k2 = Family::Complete { n: 2 }.build().unwrap();
        assert_eq!(buchberger(&lss(&k2, 2), &TermOrder::grevlex()).unwrap().len(), 1);
        assert!(ideal_member(&f, &gb).unwrap());
        assert_eq!(normal_form(&Polynomial::one(), &gb).unwrap(), Polynomial::one());
    }

    #[test]
    fn textbook_basis() {
        // x^2 - y, x*y - 1 under grevlex (x > y) -> {x^2 - y, x*y - 1, y^2 - x}
        let (x, z) = (y(1, 1), y(1, 2));
        let gens = vec![int_poly(&[(1, &[x, x]), (-1, &[z])]), int_poly(&[(1, &[x, z]), (-1, &[])])];
        let gb = buchberger(&gens, &TermOrder::grevlex()).unwrap();
        assert!(is_groebner_basis(&gb).unwrap());
        let expected = vec![
            int_poly(&[(1, &[x, x]), (-1, &[z])]),
            int_poly(&[(1, &[x, z]), (-1, &[])]),
            int_poly(&[(1, &[z, z]), (-1, &[x])]),
        ];
        assert_eq!(gb.generators, expected);
    }

    #[test]
    fn herzog_multiplicity() {
        let gb = buchberger(&herzog(), &TermOrder::grevlex()).unwrap();
        assert!(is_groebner_basis(&gb).unwrap());
        let ini = initial_ideal(&gb);
        assert_eq!(monomial_multiplicity(&ini, 6), 3);
    }

    #[test]
    fn path_initial_ideal_dimension() {
        let p4 = Family::Path { n: 4 }.build().unwrap();
        let gb = buchberger(&lss(&p4, 3), &TermOrder::grevlex()).unwrap();
        assert!(is_groebner_basis(&gb).unwrap());
        let ini = initial_ideal(&gb);
        assert_eq!(monomial_dim(&ini, 12), 9);
        assert_eq!(monomial_multiplicity(&ini, 12), 8);
    }

    #[test]
    fn monomial_ideal_invariants() {
        let single = MonomialIdeal::new([Monomial::product(&[y(1, 1), y(1, 2)])]);
        assert_eq!(monomial_dim(&single, 2), 1);
        assert_eq!(monomial_multiplicity(&single, 2), 2);
        assert_eq!(monomial_dim(&MonomialIdeal::unit(), 3), -1);
        assert_eq!(monomial_multiplicity(&MonomialIdeal::unit(), 3), 0);
        assert_eq!(monomial_dim(&MonomialIdeal::default(), 3), 3);
        assert_eq!(monomial_multiplicity(&MonomialIdeal::default(), 3), 1);
        // (x^2, xy): dim 1 in 2 vars, the line y-axis component has e = 1
        let (a, b) = (y(1, 1), y(1, 2));
        let mi = MonomialIdeal::new([Monomial::product(&[a, a]), Monomial::product(&[a, b])]);
        assert_eq!(monomial_dim(&mi, 2), 1);
        assert_eq!(monomial_multiplicity(&mi, 2), 1);
        // (x, y)^2 in 2 vars: dim 0, length 3
        let sq = MonomialIdeal::new([Monomial::product(&[a, a]), Monomial::product(&[a, b]), Monomial::product(&[b, b])]);
        assert_eq!(monomial_dim(&sq, 2), 0);
        assert_eq!(monomial_multiplicity(&sq, 2), 3);
        // minimalization drops multiples
        let red = MonomialIdeal::new([Monomial::var(a), Monomial::product(&[a, b])]);
        assert_eq!(red.generators(), &[Monomial::var(a)]);
    }

    #[test]
    fn intersections() {
        let (a, b) = (y(1, 1), y(1, 2));
        let x = Polynomial::var(a);
        let z = Polynomial::var(b);
        let order = TermOrder::grevlex();
        let i = ideal_intersection(&[x.clone()], &[z.clone()], &order).unwrap();
        assert_eq!(i.generators, vec![int_poly(&[(1, &[a, b])])]);
        let i = ideal_intersection(&[x.clone()], &[x.clone(), z.clone()], &order).unwrap();
        assert_eq!(i.generators, vec![x.clone()]);
        // (x^2 - y) ∩ (x): contains every product
        let f = int_poly(&[(1, &[a, a]), (-1, &[b])]);
        let i = ideal_intersection(&[f.clone()], &[x.clone()], &order).unwrap();
        assert!(ideal_member(&(&f * &x), &i).unwrap());
        assert!(!ideal_member(&f, &i).unwrap());
    }

    #[test]
    fn lss_under_pmd_order_needs_no_reduction() {
        let g = Family::Example.build().unwrap();
        let r = crate::pmd::pmd(&g, crate::pmd::Budget::default()).unwrap();
        let w = poly::weight_from_pmd(&r.decomposition, 3).unwrap();
        let order = TermOrder::weighted(w).unwrap();
        let gens = lss(&g, 3);
        let gb = buchberger(&gens, &order).unwrap();
        assert_eq!(gb.len(), 4);
        let ini = initial_ideal(&gb);
        assert!(poly::pairwise_coprime_squarefree(ini.generators()));
        assert_eq!(monomial_dim(&ini, 12), 8);
        assert_eq!(monomial_multiplicity(&ini, 12), 16);
    }

    #[test]
    fn d_is_not_in_the_ideal() {
        let p3 = Family::Path { n: 3 }.build().unwrap();
        let gb = buchberger(&lss(&p3, 2), &TermOrder::grevlex()).unwrap();
        let d = poly::matrix_d(&p3, 2, 2).unwrap();
        assert!(!normal_form(&d, &gb).unwrap().is_zero());
    }

    #[test]
    fn guard_and_ci() {
        let many: Vec<Polynomial> = (1..=40).map(|i| Polynomial::var(y(i, 1))).collect();
        assert!(matches!(buchberger(&many, &TermOrder::grevlex()), Err(GroebnerError::DeskScaleExceeded(_))));
        assert_eq!(ci_multiplicity(&[2, 2, 2]), 8);
        assert_eq!(ci_multiplicity(&[]), 1);
        assert_eq!(ci_multiplicity(&[1, 2]), 2);
    }
}
