use lss_core::lp::fourier_motzkin_feasible;
use lss_core::matching::positivity_system;
use lss_core::{check_certificate, is_positive_matching, is_positive_matching_fast, Edge};
use proptest::prelude::*;

/// A random host graph on `n ≤ 6` vertices and a random matching inside it.
fn host_and_matching() -> impl Strategy<Value = (usize, Vec<Edge>, Vec<Edge>)> {
    (2usize..=6).prop_flat_map(|n| {
        let pairs: Vec<Edge> = (0..n).flat_map(|j| (0..j).map(move |i| Edge::new(i, j))).collect();
        let k = pairs.len();
        (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), k), proptest::collection::vec(any::<bool>(), k))
    })
    .prop_map(|(n, pairs, in_host, in_m)| {
        let host: Vec<Edge> = pairs.iter().zip(&in_host).filter(|(_, &h)| h).map(|(e, _)| *e).collect();
        let mut m: Vec<Edge> = Vec::new();
        for (e, &pick) in host.iter().zip(&in_m) {
            if pick && !m.iter().any(|f| f.shares_vertex(e)) {
                m.push(*e);
            }
        }
        (n, host, m)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn decision_procedures_agree((n, host, m) in host_and_matching()) {
        let simplex = is_positive_matching(n, &host, &m).unwrap();
        let fast = is_positive_matching_fast(n, &host, &m).unwrap();
        let fm = fourier_motzkin_feasible(&positivity_system(n, &host, &m));
        prop_assert_eq!(simplex.is_some(), fm);
        prop_assert_eq!(fast.is_some(), fm);
        for c in simplex.iter().chain(fast.iter()) {
            prop_assert!(check_certificate(&host, &m, c));
            prop_assert!(c.is_integral());
        }
    }

    #[test]
    fn adding_host_edges_keeps_infeasibility((n, host, m) in host_and_matching(), extra in 0usize..15) {
        if is_positive_matching(n, &host, &m).unwrap().is_none() {
            let pairs: Vec<Edge> = (0..n).flat_map(|j| (0..j).map(move |i| Edge::new(i, j))).collect();
            let e = pairs[extra % pairs.len()];
            let mut bigger = host.clone();
            if !bigger.contains(&e) {
                bigger.push(e);
            }
            prop_assert!(is_positive_matching(n, &bigger, &m).unwrap().is_none());
        }
    }
}
