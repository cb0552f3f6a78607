mod common;

use common::*;
use imatch::generators::*;
use imatch::Error;
use proptest::prelude::*;

#[test]
fn regular_examples() {
    for seed in 0..10 {
        assert_eq!(gen_random_regular(4, 3, seed).unwrap(), named("complete(4)"));
        let g = gen_random_regular(6, 2, seed).unwrap();
        assert_eq!((g.m(), g.regular_degree()), (6, Some(2)));
        assert_eq!(gen_random_regular(10, 3, seed).unwrap().regular_degree(), Some(3));
    }
    assert!(matches!(gen_random_regular(5, 3, 1), Err(Error::InvalidParameter(_))));
}

#[test]
fn bipartite_examples() {
    for seed in 0..10 {
        assert_eq!(gen_bipartite_regular(3, 3, seed).unwrap(), named("complete_bipartite(3,3)"));
        let pm = gen_bipartite_regular(4, 1, seed).unwrap();
        assert_eq!((pm.m(), pm.regular_degree()), (4, Some(1)));
        let g = gen_bipartite_regular(20, 3, seed).unwrap();
        assert!(g.is_bipartite());
        assert_eq!(g.regular_degree(), Some(3));
    }
}

#[test]
fn degenerate_examples() {
    for seed in 0..10 {
        assert_eq!(gen_k_degenerate(25, 1, 4, seed).unwrap().girth(), None);
        let g = gen_k_degenerate(10, 2, 4, seed).unwrap();
        assert!(g.degeneracy().k <= 2 && g.max_degree() <= 4);
        assert!(gen_k_degenerate(2, 1, 2, seed).unwrap().m() <= 1);
    }
    assert!(gen_k_degenerate(10, 3, 3, 0).is_err());
}

#[test]
fn named_examples() {
    let c5 = named("cycle(5)");
    assert_eq!((c5.n(), c5.m(), c5.regular_degree()), (5, 5, Some(2)));
    let q3 = named("hypercube(3)");
    assert_eq!((q3.m(), q3.regular_degree(), q3.is_bipartite()), (12, Some(3), true));
    let h = named("heawood");
    assert_eq!((h.n(), h.m(), h.girth()), (14, 21, Some(6)));
    let p = named("petersen");
    assert_eq!((p.n(), p.m(), p.girth(), p.regular_degree()), (10, 15, Some(5), Some(3)));
    assert!(matches!(named_instance("dodecahedron"), Err(Error::UnknownInstance(_))));
    assert!(named_instance("cycle(2)").is_err());
}

#[test]
fn specs_round_trip_through_json() {
    let spec = GenSpec::BipartiteRegular { n_side: 6, d: 3, seed: 7 };
    let text = serde_json::to_string(&spec).unwrap();
    assert_eq!(text, r#"{"family":"bipartite-regular","n_side":6,"d":3,"seed":7}"#);
    assert_eq!(serde_json::from_str::<GenSpec>(&text).unwrap(), spec);
    assert_eq!(spec.generate().unwrap().m(), 18);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn regular_is_regular_and_deterministic(half in 2usize..15, d in 1usize..5, seed in any::<u64>()) {
        let n = 2 * half;
        prop_assume!(d < n);
        let g = gen_random_regular(n, d, seed).unwrap();
        prop_assert_eq!(g.regular_degree(), Some(d));
        prop_assert_eq!(g.m(), n * d / 2);
        prop_assert_eq!(gen_random_regular(n, d, seed).unwrap(), g);
    }

    #[test]
    fn bipartite_is_bipartite_regular(n_side in 1usize..17, d in 1usize..6, seed in any::<u64>()) {
        prop_assume!(d <= n_side);
        let g = gen_bipartite_regular(n_side, d, seed).unwrap();
        prop_assert!(g.is_bipartite());
        prop_assert_eq!(g.regular_degree(), Some(d));
        // every edge crosses between the two sides
        prop_assert!(g.edges().all(|(_, u, v)| u < n_side && v >= n_side));
        prop_assert_eq!(gen_bipartite_regular(n_side, d, seed).unwrap(), g);
    }

    #[test]
    fn degenerate_respects_both_caps(n in 2usize..60, k in 1usize..4, extra in 1usize..4, seed in any::<u64>()) {
        let d = k + extra;
        let g = gen_k_degenerate(n, k, d, seed).unwrap();
        prop_assert!(g.degeneracy().k <= k);
        prop_assert!(g.max_degree() <= d);
        prop_assert_eq!(gen_k_degenerate(n, k, d, seed).unwrap(), g);
    }
}
