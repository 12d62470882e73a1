//! Exact rational feasibility for small systems of linear inequalities.
//!
//! [`solve`] runs a phase-1 simplex with Bland's rule over free variables and
//! returns either a feasible point or a Farkas multiplier vector proving
//! infeasibility. [`fourier_motzkin_feasible`] decides the same question by
//! variable elimination and is kept as an independent cross-check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Ge,
    Le,
}

/// `Σ coeffs · x  (≥ | ≤)  bound`
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub bound: Rational,
}

impl Constraint {
    pub fn lhs(&self, point: &[Rational]) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, (j, c)| acc + c * &point[*j])
    }

    pub fn holds(&self, point: &[Rational]) -> bool {
        let v = self.lhs(point);
        match self.relation {
            Relation::Ge => v >= self.bound,
            Relation::Le => v <= self.bound,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct LinearSystem {
    num_vars: usize,
    constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem { num_vars, constraints: Vec::new() }
    }

    /// Adds a constraint, merging repeated variable indices.
    pub fn add(&mut self, coeffs: impl IntoIterator<Item = (usize, Rational)>, relation: Relation, bound: Rational) {
        let mut merged: Vec<(usize, Rational)> = Vec::new();
        for (j, c) in coeffs {
            assert!(j < self.num_vars, "variable {j} out of range");
            match merged.iter_mut().find(|(k, _)| *k == j) {
                Some((_, acc)) => *acc += c,
                None => merged.push((j, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        merged.sort_by_key(|(j, _)| *j);
        self.constraints.push(Constraint { coeffs: merged, relation, bound });
    }

    /// Integer-coefficient convenience wrapper around [`LinearSystem::add`].
    pub fn add_int(&mut self, coeffs: &[(usize, i64)], relation: Relation, bound: i64) {
        self.add(coeffs.iter().map(|&(j, c)| (j, int(c))), relation, int(bound));
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars && self.constraints.iter().all(|c| c.holds(point))
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Feasible(Vec<Rational>),
    /// One signed multiplier per constraint (≥ 0 on `Ge`, ≤ 0 on `Le`) whose
    /// combination reads `0 ≥ c` with `c > 0`.
    Infeasible { farkas: Vec<Rational> },
}

/// Checks a Farkas certificate against the system.
pub fn check_farkas(sys: &LinearSystem, farkas: &[Rational]) -> bool {
    if farkas.len() != sys.constraints.len() {
        return false;
    }
    let mut combo = vec![Rational::zero(); sys.num_vars];
    let mut rhs = Rational::zero();
    for (c, y) in sys.constraints.iter().zip(farkas) {
        let sign_ok = match c.relation {
            Relation::Ge => !y.is_negative(),
            Relation::Le => !y.is_positive(),
        };
        if !sign_ok {
            return false;
        }
        for (j, a) in &c.coeffs {
            combo[*j] += a * y;
        }
        rhs += &c.bound * y;
    }
    combo.iter().all(Zero::is_zero) && rhs.is_positive()
}

/// Feasible point, or `None` if the system is infeasible.
pub fn lp_feasible(sys: &LinearSystem) -> Option<Vec<Rational>> {
    match solve(sys) {
        LpOutcome::Feasible(x) => Some(x),
        LpOutcome::Infeasible { .. } => None,
    }
}

/// Phase-1 simplex on the free-variable system. Variables are split into
/// positive and negative parts; every row gets a slack and, when the slack
/// cannot start basic, an artificial.
pub fn solve(sys: &LinearSystem) -> LpOutcome {
    let n = sys.num_vars;
    let m = sys.constraints.len();
    let slack0 = 2 * n;
    let art0 = 2 * n + m;
    let cols = 2 * n + 2 * m;

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut is_art_basic = vec![false; m];

    for (i, c) in sys.constraints.iter().enumerate() {
        // to `a x - s = b` in ≥ form
        let sigma = match c.relation {
            Relation::Ge => 1,
            Relation::Le => -1,
        };
        let mut row = vec![Rational::zero(); cols];
        let mut b = if sigma == 1 { c.bound.clone() } else { -&c.bound };
        for (j, a) in &c.coeffs {
            let a = if sigma == 1 { a.clone() } else { -a };
            row[n + j] = -&a;
            row[*j] = a;
        }
        row[slack0 + i] = -Rational::one();
        if b.is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
            b = -b;
            basis.push(slack0 + i);
        } else {
            row[art0 + i] = Rational::one();
            basis.push(art0 + i);
            is_art_basic[i] = true;
        }
        rows.push(row);
        rhs.push(b);
    }

    // reduced costs of the phase-1 objective Σ artificials
    let mut cost = vec![Rational::zero(); cols];
    for i in 0..m {
        if is_art_basic[i] {
            cost[art0 + i] = Rational::one();
        }
    }
    let mut reduced = cost.clone();
    for i in 0..m {
        if is_art_basic[i] {
            for j in 0..cols {
                if !rows[i][j].is_zero() {
                    reduced[j] -= &rows[i][j];
                }
            }
        }
    }

    loop {
        // Bland: lowest-index improving column; artificials never re-enter
        let entering = (0..art0).find(|&j| reduced[j].is_negative());
        let Some(e) = entering else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if rows[i][e].is_positive() {
                let ratio = &rhs[i] / &rows[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            // unbounded ray in phase 1 cannot happen: objective is bounded below by 0
            unreachable!("phase-1 objective is bounded");
        };
        pivot(&mut rows, &mut rhs, &mut reduced, r, e);
        basis[r] = e;
    }

    let objective: Rational = (0..m)
        .filter(|&i| basis[i] >= art0)
        .fold(Rational::zero(), |acc, i| acc + &rhs[i]);

    if objective.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < n {
                x[bv] += &rhs[i];
            } else if bv < 2 * n {
                x[bv - n] -= &rhs[i];
            }
        }
        debug_assert!(sys.is_satisfied_by(&x));
        LpOutcome::Feasible(x)
    } else {
        // duals of the ≥-form rows sit in the slack reduced costs
        let farkas: Vec<Rational> = sys
            .constraints
            .iter()
            .enumerate()
            .map(|(i, c)| match c.relation {
                Relation::Ge => reduced[slack0 + i].clone(),
                Relation::Le => -&reduced[slack0 + i],
            })
            .collect();
        debug_assert!(check_farkas(sys, &farkas));
        LpOutcome::Infeasible { farkas }
    }
}

fn pivot(rows: &mut [Vec<Rational>], rhs: &mut [Rational], reduced: &mut [Rational], r: usize, e: usize) {
    let p = rows[r][e].clone();
    if !p.is_one() {
        for v in rows[r].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        rhs[r] /= &p;
    }
    let pivot_row = rows[r].clone();
    let pivot_rhs = rhs[r].clone();
    let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
    for i in 0..rows.len() {
        if i == r || rows[i][e].is_zero() {
            continue;
        }
        let f = rows[i][e].clone();
        for &j in &nz {
            let d = &f * &pivot_row[j];
            rows[i][j] -= d;
        }
        rhs[i] -= &f * &pivot_rhs;
    }
    if !reduced[e].is_zero() {
        let f = reduced[e].clone();
        for &j in &nz {
            let d = &f * &pivot_row[j];
            reduced[j] -= d;
        }
    }
}

/// Decides feasibility by Fourier–Motzkin elimination. Exponential in the
/// worst case; parallel constraints are merged after every step.
pub fn fourier_motzkin_feasible(sys: &LinearSystem) -> bool {
    let n = sys.num_vars;
    // everything in `a·x ≥ b` form
    let mut current: Vec<(Vec<Rational>, Rational)> = sys
        .constraints
        .iter()
        .map(|c| {
            let mut a = vec![Rational::zero(); n];
            for (j, v) in &c.coeffs {
                a[*j] = v.clone();
            }
            match c.relation {
                Relation::Ge => (a, c.bound.clone()),
                Relation::Le => (a.into_iter().map(|v| -v).collect(), -&c.bound),
            }
        })
        .collect();
    current = match merge_parallel(current) {
        Some(c) => c,
        None => return false,
    };
    for k in 0..n {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (a, b) in current {
            if a[k].is_positive() {
                pos.push((a, b));
            } else if a[k].is_negative() {
                neg.push((a, b));
            } else {
                rest.push((a, b));
            }
        }
        for (ap, bp) in &pos {
            for (aq, bq) in &neg {
                let sp = ap[k].recip();
                let sq = -aq[k].recip();
                let a: Vec<Rational> = ap.iter().zip(aq).map(|(x, y)| x * &sp + y * &sq).collect();
                let b = bp * &sp + bq * &sq;
                rest.push((a, b));
            }
        }
        current = match merge_parallel(rest) {
            Some(c) => c,
            None => return false,
        };
    }
    current.iter().all(|(_, b)| !b.is_positive())
}

/// Scales rows to a canonical direction and keeps the tightest bound per
/// direction. Returns `None` on a row `0 ≥ b` with `b > 0`.
fn merge_parallel(rows: Vec<(Vec<Rational>, Rational)>) -> Option<Vec<(Vec<Rational>, Rational)>> {
    let mut best: HashMap<Vec<Rational>, Rational> = HashMap::new();
    let mut order = Vec::new();
    for (a, b) in rows {
        let Some(lead) = a.iter().find(|v| !v.is_zero()).map(|v| v.abs()) else {
            if b.is_positive() {
                return None;
            }
            continue;
        };
        let a: Vec<Rational> = a.iter().map(|v| v / &lead).collect();
        let b = b / &lead;
        match best.get_mut(&a) {
            Some(cur) => {
                if b > *cur {
                    *cur = b;
                }
            }
            None => {
                order.push(a.clone());
                best.insert(a, b);
            }
        }
    }
    Some(
        order
            .into_iter()
            .map(|a| {
                let b = best.remove(&a).expect("direction recorded");
                (a, b)
            })
            .collect(),
    )
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_system() -> impl Strategy<Value = LinearSystem> {
        (1usize..=4, 0usize..=7).prop_flat_map(|(n, m)| {
            proptest::collection::vec(
                (proptest::collection::vec(-3i64..=3, n), any::<bool>(), -4i64..=4),
                m,
            )
            .prop_map(move |rows| {
                let mut sys = LinearSystem::new(n);
                for (a, ge, b) in rows {
                    let coeffs: Vec<(usize, i64)> = a.into_iter().enumerate().collect();
                    sys.add_int(&coeffs, if ge { Relation::Ge } else { Relation::Le }, b);
                }
                sys
            })
        })
    }

    proptest! {
        #[test]
        fn simplex_agrees_with_fourier_motzkin(sys in arb_system()) {
            match solve(&sys) {
                LpOutcome::Feasible(x) => {
                    prop_assert!(sys.is_satisfied_by(&x));
                    prop_assert!(fourier_motzkin_feasible(&sys));
                }
                LpOutcome::Infeasible { farkas } => {
                    prop_assert!(check_farkas(&sys, &farkas));
                    prop_assert!(!fourier_motzkin_feasible(&sys));
                }
            }
        }
    }
}
