//! Small named graphs used throughout the tests and docs.

use crate::graph::{Label, TemporalGraph};

/// The labeled 4-cycle a-b@1, b-c@2, c-d@1, d-a@2 (a=0, b=1, c=2, d=3).
/// Temporally connected, yet none of its spanning trees is.
pub fn square() -> TemporalGraph {
    TemporalGraph::new(
        4,
        [
            (0, 1, vec![1]),
            (1, 2, vec![2]),
            (2, 3, vec![1]),
            (3, 0, vec![2]),
        ],
    )
    .expect("valid fixture")
}

/// Six vertices a..f (0..5): ab{1,9}, bc{2,8}, cd{3,7}, de{6}, eb{5,10},
/// bf{4,11}. Bidirectionally connected with pivot d, but no temporal
/// spanning tree.
pub fn cycle_with_tails() -> TemporalGraph {
    TemporalGraph::new(
        6,
        [
            (0, 1, vec![1, 9]),
            (1, 2, vec![2, 8]),
            (2, 3, vec![3, 7]),
            (3, 4, vec![6]),
            (4, 1, vec![5, 10]),
            (1, 5, vec![4, 11]),
        ],
    )
    .expect("valid fixture")
}

/// Complete graph on `n` vertices whose edges, in `(u, v)` order, take the
/// given single labels. The result is happy iff the labels form a proper
/// edge colouring.
pub fn clique(n: usize, labels: &[Label]) -> TemporalGraph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert_eq!(pairs.len(), labels.len(), "one label per clique edge");
    TemporalGraph::new(
        n,
        pairs
            .into_iter()
            .zip(labels)
            .map(|((u, v), &t)| (u, v, vec![t])),
    )
    .expect("valid clique")
}

/// Complete graph with every edge at its own distinct label `1..=n(n-1)/2`.
/// Distinct labels make it happy.
pub fn happy_clique(n: usize) -> TemporalGraph {
    let m = n * n.saturating_sub(1) / 2;
    let labels: Vec<Label> = (1..=m as Label).collect();
    clique(n, &labels)
}
