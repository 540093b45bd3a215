mod common;

use std::collections::HashSet;

use pathdecomp::graph::Graph;
use pathdecomp::harness::*;
use pathdecomp::solver::SolveOptions;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Minimum adjacency bit-string over all `n!` relabelings.
fn full_canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<bool> {
    let n = g.order();
    perms
        .iter()
        .map(|p| {
            let mut bits = Vec::with_capacity(n * n);
            for j in 0..n {
                for i in 0..j {
                    bits.push(g.has_edge(p[i], p[j]));
                }
            }
            bits
        })
        .min()
        .unwrap()
}

#[test]
fn enumerator_matches_labeled_census_up_to_five() {
    for n in 1..=5usize {
        let perms = permutations(n);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for max_deg in 1..n.max(2) {
            let mut classes = HashSet::new();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                if g.is_connected() && g.max_degree().unwrap() <= max_deg {
                    classes.insert(full_canonical(&g, &perms));
                }
            }
            let got: HashSet<Vec<bool>> = enumerate_connected(n, max_deg)
                .unwrap()
                .iter()
                .map(|g| full_canonical(g, &perms))
                .collect();
            assert_eq!(got.len(), enumerate_connected(n, max_deg).unwrap().len(), "duplicates at n={n}");
            assert_eq!(got, classes, "n={n} max_deg={max_deg}");
        }
    }
}

#[test]
fn connected_graph_counts() {
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected(n, n.max(2) - 1).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn enumerated_graphs_respect_the_degree_cap() {
    for g in enumerate_connected(7, 3).unwrap() {
        assert!(g.is_connected());
        assert!(g.max_degree().unwrap() <= 3);
    }
}

#[test]
fn batch_reports_are_deterministic() {
    let graphs = enumerate_up_to(6, 5).unwrap();
    let strip = |mut r: BatchReport| {
        for rec in &mut r.records {
            rec.micros = 0;
        }
        r
    };
    let opts = SolveOptions::default();
    assert_eq!(strip(check(&graphs, &opts)), strip(check(&graphs, &opts)));
    let r = check(&graphs, &opts);
    assert!(r.findings.is_empty());
    assert_eq!(r.records.len(), graphs.len());
    for (i, rec) in r.records.iter().enumerate() {
        assert_eq!(rec.index, i);
        assert_eq!(parse_graph6(&rec.graph6).unwrap(), graphs[i]);
    }
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["aggregate"]["graphs"], graphs.len());
}

proptest! {
    #[test]
    fn graph6_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=80);
        let extra = rng.gen_range(0..=3 * n);
        let g = common::random_connected(&mut rng, n, extra, 8);
        let s = write_graph6(&g).unwrap();
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edgelist_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=30);
        let g = common::random_connected(&mut rng, n, n, 5);
        let text: String = g.edges().map(|(a, b)| format!("{b} {a}\n")).collect();
        prop_assert_eq!(parse_edgelist(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_graphs(&text, Format::Auto).unwrap(), vec![g]);
    }
}
