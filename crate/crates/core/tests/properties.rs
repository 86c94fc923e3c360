mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use tempspan::reductions::{sat_gadget_raw_edges, sat_renormalization, CnfFormula, RawLabel};
use tempspan::*;

fn graph_strategy() -> impl Strategy<Value = TemporalGraph> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let k = pairs.len();
        proptest::collection::vec(
            proptest::option::weighted(0.6, proptest::collection::btree_set(1u32..=5, 1..=3)),
            k,
        )
        .prop_map(move |labels| {
            TemporalGraph::new(
                n,
                pairs
                    .iter()
                    .zip(labels)
                    .filter_map(|(&(u, v), ls)| ls.map(|ls| (u, v, ls))),
            )
            .unwrap()
        })
    })
}

fn setting_strategy() -> impl Strategy<Value = Setting> {
    prop_oneof![Just(Setting::Strict), Just(Setting::NonStrict)]
}

fn arrival_rank(a: Arrival) -> Option<Option<Label>> {
    match a {
        Arrival::Source => Some(None),
        Arrival::At(t) => Some(Some(t)),
        Arrival::Unreachable => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_format_round_trips(g in graph_strategy()) {
        let text = serialize_temporal_graph(&g);
        let back = parse_temporal_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_temporal_graph(&back), text);
    }

    #[test]
    fn class_and_snapshot_invariants(g in graph_strategy()) {
        let c = g.classify();
        prop_assert_eq!(c.happy, c.simple && c.proper);
        let mut union = BTreeSet::new();
        for t in 1..=g.lifetime() {
            let snap = g.snapshot(t);
            if c.proper {
                let mut touched = BTreeSet::new();
                for e in &snap {
                    prop_assert!(touched.insert(e.u) && touched.insert(e.v));
                }
            }
            union.extend(snap);
        }
        prop_assert_eq!(union, g.footprint().iter().copied().collect::<BTreeSet<_>>());
    }

    #[test]
    fn earliest_arrival_matches_enumeration(g in graph_strategy(), setting in setting_strategy()) {
        for s in 0..g.n() {
            let map = earliest_arrival(&g, s, setting).unwrap();
            let got: Vec<_> = map.arrivals().iter().map(|&a| arrival_rank(a)).collect();
            prop_assert_eq!(got, common::brute_arrivals(&g, s, setting));
            for v in 0..g.n() {
                if let Some(j) = map.journey_to(v) {
                    prop_assert!(j.is_valid(&g, setting));
                    prop_assert_eq!(j.end(), v);
                }
            }
        }
    }

    #[test]
    fn adding_a_label_never_hurts(
        g in graph_strategy(),
        setting in setting_strategy(),
        pick in any::<prop::sample::Index>(),
        extra in 1u32..=6,
    ) {
        prop_assume!(g.edge_count() > 0);
        let idx = pick.index(g.edge_count());
        let bigger = TemporalGraph::new(
            g.n(),
            g.edges().enumerate().map(|(i, (e, ls))| {
                let mut ls = ls.to_vec();
                if i == idx { ls.push(extra); }
                (e.u, e.v, ls)
            }),
        ).unwrap();
        for s in 0..g.n() {
            let before = earliest_arrival(&g, s, setting).unwrap();
            let after = earliest_arrival(&bigger, s, setting).unwrap();
            for v in 0..g.n() {
                if let Some(b) = arrival_rank(before.get(v)) {
                    let a = arrival_rank(after.get(v));
                    prop_assert!(a.is_some_and(|a| a <= b));
                }
            }
        }
        if is_temporally_connected(&g, setting) {
            prop_assert!(is_temporally_connected(&bigger, setting));
        }
    }

    #[test]
    fn strict_reach_is_contained_in_non_strict(g in graph_strategy()) {
        for s in 0..g.n() {
            let st = earliest_arrival(&g, s, Setting::Strict).unwrap();
            let ns = earliest_arrival(&g, s, Setting::NonStrict).unwrap();
            for v in 0..g.n() {
                if st.get(v).is_reachable() {
                    prop_assert!(ns.get(v).is_reachable());
                }
            }
        }
    }

    #[test]
    fn pivot_implies_connected(g in graph_strategy(), setting in setting_strategy()) {
        if !find_pivots(&g, setting).is_empty() {
            prop_assert!(is_temporally_connected(&g, setting));
        }
    }

    #[test]
    fn bispanner_is_a_bidirectionally_connected_subgraph(g in graph_strategy(), setting in setting_strategy()) {
        match build_bispanner(&g, setting) {
            Some(sp) => {
                prop_assert!(sp.is_subgraph_of(&g));
                prop_assert!(is_bidirectionally_connected(&sp, setting));
            }
            None => prop_assert!(!is_bidirectionally_connected(&g, setting)),
        }
    }

    #[test]
    fn surviving_triplets_reconstruct_to_valid_bipaths(g in graph_strategy(), setting in setting_strategy()) {
        for s in 0..g.n() {
            let run = compute_bipaths(&g, s, setting).unwrap();
            for v in 0..g.n() {
                for t in run.set(v).iter() {
                    let p = run.reconstruct_from(v, t).unwrap();
                    prop_assert!(p.is_valid(&g, setting));
                    prop_assert_eq!(p.vertices[0], s);
                    prop_assert_eq!(*p.vertices.last().unwrap(), v);
                }
                match run.reconstruct(v) {
                    Some(p) => prop_assert!(p.is_valid(&g, setting)),
                    None => prop_assert!(!run.reaches(v)),
                }
            }
        }
    }

    #[test]
    fn worklist_order_does_not_matter(g in graph_strategy(), setting in setting_strategy()) {
        for s in 0..g.n() {
            let fifo = compute_bipaths_ordered(&g, s, setting, WorklistOrder::Fifo).unwrap();
            let lifo = compute_bipaths_ordered(&g, s, setting, WorklistOrder::Lifo).unwrap();
            prop_assert_eq!(fifo.sets(), lifo.sets());
        }
    }

    #[test]
    fn renormalization_preserves_order(
        n in 0usize..=4,
        k in 0usize..=4,
        a in (-30i64..=30, -1i64..=1),
        b in (-30i64..=30, -1i64..=1),
    ) {
        let clauses: Vec<Vec<i64>> = (0..k).map(|_| vec![1]).collect();
        let phi = CnfFormula::new(n.max(1), &clauses).unwrap();
        let r = sat_renormalization(&phi);
        let (ra, rb) = (RawLabel { whole: a.0, epsilons: a.1 }, RawLabel { whole: b.0, epsilons: b.1 });
        let (va, vb) = (a.0 as f64 + 0.5 * a.1 as f64, b.0 as f64 + 0.5 * b.1 as f64);
        let positive = |v: f64| 2.0 * v + r.shift as f64 >= 1.0;
        prop_assume!(positive(va) && positive(vb));
        prop_assert_eq!(va < vb, r.apply(ra) < r.apply(rb));
        prop_assert_eq!(va == vb, r.apply(ra) == r.apply(rb));
    }
}

#[test]
fn sat_gadget_raw_labels_stay_positive_after_renormalization() {
    // x_3 occurs positively in the last clause, so the smallest possible raw
    // label t- - (n + k) is present and must land on 1.
    let phi = CnfFormula::new(3, &[vec![1], vec![-2], vec![3, 1]]).unwrap();
    let r = sat_renormalization(&phi);
    let labels: Vec<Label> = sat_gadget_raw_edges(&phi)
        .iter()
        .flat_map(|(_, _, raw)| raw.iter().map(|&x| r.apply(x)))
        .collect();
    assert_eq!(labels.iter().min(), Some(&1));
}

#[test]
fn strict_simple_bispanners_need_a_complete_footprint() {
    let mut rng = StdRng::seed_from_u64(11);
    let limits = SearchLimits::default();
    for _ in 0..60 {
        let g = common::random_simple(&mut rng, 5, 4);
        let complete = g.edge_count() == g.n() * (g.n() - 1) / 2;
        if !complete {
            assert_eq!(
                min_bispanner_bruteforce(&g, Setting::Strict, &limits).unwrap(),
                None
            );
        }
    }
}

#[test]
fn exact_solver_relationships() {
    let mut rng = StdRng::seed_from_u64(5);
    let limits = SearchLimits::default();
    for _ in 0..80 {
        let g = common::random_graph(&mut rng, 5, 4, 2, 0.7);
        for setting in Setting::BOTH {
            let tst = tst_bruteforce(&g, setting, &limits).unwrap();
            if let Some(tree) = tst.witness() {
                assert!(tree.is_subgraph_of(&g));
                assert!(tree.footprint_is_tree());
                assert!(is_temporally_connected(tree, setting));
                assert!(is_bidirectionally_connected(&g, setting));
            }
            let min = min_bispanner_bruteforce(&g, setting, &limits).unwrap();
            let built = build_bispanner(&g, setting);
            assert_eq!(min.is_some(), built.is_some());
            if let (Some(min), Some(built)) = (min, built) {
                assert!(min.size <= built.edge_count());
                assert!(is_bidirectionally_connected(&min.subgraph, setting));
                assert!(min.subgraph.is_subgraph_of(&g));
                if tst.exists() {
                    assert_eq!(min.size, g.n() - 1);
                }
            }
        }
    }
}

#[test]
fn bidirectional_connectivity_matches_enumeration() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..60 {
        let g = common::random_small(&mut rng);
        for setting in Setting::BOTH {
            assert_eq!(
                is_bidirectionally_connected(&g, setting),
                common::brute_bidirectionally_connected(&g, setting),
                "{g:?} {setting}"
            );
            assert_eq!(
                is_temporally_connected(&g, setting),
                common::brute_temporally_connected(&g, setting)
            );
        }
    }
}

#[test]
fn tst_existence_rules_out_cycle_with_tails_converse() {
    let g = fixtures::cycle_with_tails();
    assert!(is_bidirectionally_connected(&g, Setting::NonStrict));
    assert!(
        !tst_bruteforce(&g, Setting::NonStrict, &SearchLimits::default())
            .unwrap()
            .exists()
    );
}
