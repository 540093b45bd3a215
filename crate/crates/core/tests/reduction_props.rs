mod common;

use pathdecomp::decomp::{verify, PathDecomposition};
use pathdecomp::graph::Graph;
use pathdecomp::harness::enumerate_up_to;
use pathdecomp::reductions::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn reducible(g: &Graph) -> bool {
    g.size() > 0 && !(g.is_complete() && matches!(g.order(), 3 | 5))
}

/// Reduce, decompose each child at random, lift, and check the bounds.
fn lift_random(g: &Graph, occ: &Occurrence, rng: &mut ChaCha8Rng) -> Result<SubCase, String> {
    let inst = reduce(g, occ).map_err(|e| e.to_string())?;
    let children: Vec<PathDecomposition> = inst
        .children
        .iter()
        .map(|(c, _)| common::random_decomposition(c, rng))
        .collect();
    let lifted = lift(&inst, &children).map_err(|e| format!("{e}"))?;
    let r = verify(g, &lifted);
    if !r.valid {
        return Err(r.to_string());
    }
    let before: usize = children.iter().map(PathDecomposition::len).sum();
    if lifted.len() as isize > before as isize + inst.plan.subcase.max_delta() {
        return Err(format!("{} paths from {before}", lifted.len()));
    }
    Ok(inst.plan.subcase)
}

#[test]
fn detector_matches_brute_force_on_small_graphs() {
    for g in enumerate_up_to(7, 5).unwrap() {
        assert_eq!(detect_c1(&g).is_some(), common::brute_c1(&g), "C1 {:?}", g);
        assert_eq!(detect_c2(&g).is_some(), common::brute_c2(&g), "C2 {:?}", g);
        assert_eq!(detect_c3(&g).is_some(), common::brute_c3(&g), "C3 {:?}", g);
        assert_eq!(detect_c4(&g).is_some(), common::brute_c4(&g), "C4 {:?}", g);
        assert_eq!(detect_c5(&g).is_some(), common::brute_c5(&g), "C5 {:?}", g);
        let any = common::brute_c1(&g)
            || common::brute_c2(&g)
            || common::brute_c3(&g)
            || common::brute_c4(&g)
            || common::brute_c5(&g);
        assert_eq!(detect(&g).is_some(), any);
    }
}

#[test]
fn detection_respects_priority() {
    for g in enumerate_up_to(7, 5).unwrap() {
        let Some(occ) = detect(&g) else { continue };
        let first = [detect_c1(&g), detect_c2(&g), detect_c3(&g), detect_c4(&g), detect_c5(&g)]
            .into_iter()
            .flatten()
            .next();
        assert_eq!(Some(occ), first);
    }
}

#[test]
fn every_small_reduction_lifts_random_child_decompositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in enumerate_up_to(8, 5).unwrap() {
        if !reducible(&g) {
            continue;
        }
        let Some(occ) = detect(&g) else { continue };
        for _ in 0..3 {
            if let Err(e) = lift_random(&g, &occ, &mut rng) {
                panic!("{occ}: {e}\n{:?}", g.edges().collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn fixtures_lift_random_child_decompositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for f in subcase_fixtures().into_iter().chain(extra_triangle_fixtures()) {
        for _ in 0..300 {
            assert_eq!(lift_random(&f.graph, &f.occurrence, &mut rng), Ok(f.subcase));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn detected_occurrences_validate(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..=16);
        let extra = rng.gen_range(0..=2 * n);
        let g = common::random_connected(&mut rng, n, extra, 5);
        if let Some(occ) = detect(&g) {
            prop_assert_eq!(occ.validate(&g), Ok(()));
        }
    }

    #[test]
    fn reductions_shrink_and_keep_the_degree_class(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..=16);
        let extra = rng.gen_range(0..=2 * n);
        let g = common::random_connected(&mut rng, n, extra, 5);
        prop_assume!(reducible(&g));
        if let Some(occ) = detect(&g) {
            let inst = reduce(&g, &occ).unwrap();
            let total: usize = inst.children.iter().map(|(c, _)| c.order()).sum();
            prop_assert!(total <= n);
            for (c, _) in &inst.children {
                prop_assert!(c.order() < n);
                prop_assert!(c.is_connected());
                prop_assert!(c.max_degree().unwrap_or(0) <= g.max_degree().unwrap());
            }
            for _ in 0..5 {
                prop_assert_eq!(lift_random(&g, &occ, &mut rng), Ok(inst.plan.subcase));
            }
        }
    }
}
