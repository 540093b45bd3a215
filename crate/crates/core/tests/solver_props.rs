mod common;

use pathdecomp::decomp::{lower_bound, verify};
use pathdecomp::graph::named::*;
use pathdecomp::harness::enumerate_up_to;
use pathdecomp::solver::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn oracle_consistency_on_all_graphs_up_to_six() {
    for g in enumerate_up_to(6, 5).unwrap() {
        if g.size() == 0 {
            continue;
        }
        let (min, _) = min_decomposition(&g).unwrap();
        assert!(min >= lower_bound(&g).unwrap());
        for k in 1..=g.size().min(min + 1) {
            assert_eq!(solve_base(&g, k).unwrap().is_some(), k >= min, "k={k}");
        }
    }
}

#[test]
fn solve_examples() {
    assert_eq!(solve(&path(4)).unwrap().decomposition.len(), 1);
    assert_eq!(solve(&complete(5)).unwrap().decomposition.len(), 3);
    assert_eq!(solve(&cycle(4)).unwrap().decomposition.len(), 2);
    assert_eq!(solve(&petersen()).unwrap().decomposition.len(), 5);
    assert_eq!(solve(&complete(6)).unwrap().decomposition.len(), 3);
    assert_eq!(solve(&star(6)).unwrap_err(), SolveError::MaxDegree(6));
}

#[test]
fn budget_exhaustion_is_distinct() {
    let err = solve_with(&petersen(), &SolveOptions { budget: 1 }).unwrap_err();
    assert!(err.is_budget(), "{err}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn random_graphs_get_good_decompositions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=18);
        let extra = rng.gen_range(0..=2 * n);
        let g = common::random_connected(&mut rng, n, extra, 5);
        let r = solve(&g).unwrap();
        let report = verify(&g, &r.decomposition);
        prop_assert!(report.good, "{}", report);
        prop_assert!(r.verified);
        // Orders fall along each recursion branch.
        let mut stack: Vec<usize> = Vec::new();
        for s in &r.trace.steps {
            stack.truncate(s.depth);
            if let Some(&parent) = stack.last() {
                prop_assert!(s.order < parent);
            }
            prop_assert!(s.depth < n);
            stack.push(s.order);
        }
        // Same input, same answer.
        let again = solve(&g).unwrap();
        prop_assert_eq!(again.decomposition, r.decomposition);
        prop_assert_eq!(again.trace, r.trace);
    }
}
