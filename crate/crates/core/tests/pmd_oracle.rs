use lss_core::pmd::{pmd_bruteforce, static_upper_bound, verify_decomposition};
use lss_core::{pmd, Budget, Family, Graph};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(8)).prop_map(move |es| Graph::new(n, es).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn search_matches_bruteforce(g in small_graph()) {
        let r = pmd(&g, Budget::default()).unwrap();
        prop_assert!(r.is_exact());
        prop_assert_eq!(r.value, pmd_bruteforce(&g).unwrap());
        prop_assert!(verify_decomposition(&g, &r.decomposition));
        prop_assert!(r.value >= g.max_degree() && r.value <= static_upper_bound(&g));
    }

    #[test]
    fn pmd_is_label_invariant(g in small_graph(), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(pmd(&g, Budget::default()).unwrap().value, pmd(&h, Budget::default()).unwrap().value);
    }
}

#[test]
fn complete_graphs() {
    for n in 2..=7 {
        let r = pmd(&Family::Complete { n }.build().unwrap(), Budget::default()).unwrap();
        assert!(r.is_exact(), "K{n}");
        assert_eq!(r.value, 2 * n - 3, "K{n}");
    }
}

#[test]
fn families() {
    let value = |f: Family| pmd(&f.build().unwrap(), Budget::default()).unwrap().value;
    for leaves in 1..=6 {
        assert_eq!(value(Family::Star { leaves }), leaves);
    }
    for n in 3..=9 {
        assert_eq!(value(Family::Path { n }), 2);
    }
    for n in 3..=5 {
        assert_eq!(value(Family::Gapped { n }), 2 * n - 3);
    }
    assert_eq!(value(Family::CompleteBipartite { a: 3, b: 3 }), 5);
}
