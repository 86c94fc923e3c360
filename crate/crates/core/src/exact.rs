//! Exhaustive solvers for small instances: temporal spanning trees and
//! minimum bi-spanners.

use std::ops::ControlFlow;

use crate::bipath::is_bidirectionally_connected;
use crate::error::{Error, Result};
use crate::graph::{footprint_connected, DisjointSets, Edge, Setting, TemporalGraph};
use crate::reach::is_temporally_connected;

/// Size bounds beyond which the exhaustive searches refuse to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Vertices for spanning-tree enumeration.
    pub max_vertices: usize,
    /// Non-critical edges for minimum bi-spanner search.
    pub max_edges: usize,
    /// Variables for SAT enumeration.
    pub max_variables: usize,
    /// Subsets for set cover enumeration.
    pub max_subsets: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices: 10,
            max_edges: 20,
            max_variables: 20,
            max_subsets: 15,
        }
    }
}

pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::SizeGuard {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanningTreeResult {
    /// A temporally connected subgraph whose footprint is a spanning tree.
    Exists(TemporalGraph),
    NotExists,
    /// Simple graph, strict journeys, more than two vertices.
    NeverForSimpleStrict,
}

impl SpanningTreeResult {
    pub fn exists(&self) -> bool {
        matches!(self, SpanningTreeResult::Exists(_))
    }

    pub fn witness(&self) -> Option<&TemporalGraph> {
        match self {
            SpanningTreeResult::Exists(g) => Some(g),
            _ => None,
        }
    }
}

/// Calls `visit` with the edge indices of every spanning tree of the
/// footprint, stopping early on `Break`.
fn visit_spanning_trees<B>(
    g: &TemporalGraph,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    fn go<B>(
        edges: &[Edge],
        pos: usize,
        target: usize,
        sets: &DisjointSets,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if chosen.len() == target {
            return visit(chosen);
        }
        if pos == edges.len() {
            return ControlFlow::Continue(());
        }
        let e = edges[pos];
        let mut with = sets.clone();
        if with.union(e.u, e.v) {
            chosen.push(pos);
            let r = go(edges, pos + 1, target, &with, chosen, visit);
            chosen.pop();
            r?;
        }
        // Skip `e` only if the remaining edges can still span.
        let mut rest = sets.clone();
        for f in &edges[pos + 1..] {
            rest.union(f.u, f.v);
        }
        if rest.components() == 1 {
            go(edges, pos + 1, target, sets, chosen, visit)?;
        }
        ControlFlow::Continue(())
    }

    let n = g.n();
    if n == 0 || !g.footprint_is_connected() {
        return None;
    }
    let mut chosen = Vec::with_capacity(n - 1);
    match go(
        g.footprint(),
        0,
        n - 1,
        &DisjointSets::new(n),
        &mut chosen,
        visit,
    ) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

/// All temporal subgraphs whose footprint is a spanning tree, each keeping
/// every label of its edges.
pub fn spanning_trees(g: &TemporalGraph, limits: &SearchLimits) -> Result<Vec<TemporalGraph>> {
    guard("vertex count", g.n(), limits.max_vertices)?;
    let mut out = Vec::new();
    visit_spanning_trees::<()>(g, &mut |idx| {
        out.push(g.keep_edges(idx.iter().copied()));
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Tries every spanning tree of the footprint and returns the first one that
/// is temporally connected.
pub fn tst_bruteforce(
    g: &TemporalGraph,
    setting: Setting,
    limits: &SearchLimits,
) -> Result<SpanningTreeResult> {
    guard("vertex count", g.n(), limits.max_vertices)?;
    let found = visit_spanning_trees(g, &mut |idx| {
        let tree = g.keep_edges(idx.iter().copied());
        if is_temporally_connected(&tree, setting) {
            ControlFlow::Break(tree)
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(match found {
        Some(tree) => SpanningTreeResult::Exists(tree),
        None => SpanningTreeResult::NotExists,
    })
}

/// Polynomial decision for simple graphs. Strictly, no tree on more than two
/// vertices works since a 2-hop path cannot increase both ways; otherwise a
/// tree exists iff a single snapshot spans the graph.
pub fn tst_simple(g: &TemporalGraph, setting: Setting) -> Result<SpanningTreeResult> {
    if !g.classify().simple {
        return Err(Error::Precondition("graph is not simple".into()));
    }
    let n = g.n();
    if n <= 2 {
        return Ok(if g.footprint_is_tree() || n == 0 {
            SpanningTreeResult::Exists(g.clone())
        } else {
            SpanningTreeResult::NotExists
        });
    }
    if setting == Setting::Strict {
        return Ok(SpanningTreeResult::NeverForSimpleStrict);
    }
    for t in g.distinct_labels() {
        let mut sets = DisjointSets::new(n);
        let mut tree = Vec::new();
        for (idx, (e, labels)) in g.edges().enumerate() {
            if labels == [t] && sets.union(e.u, e.v) {
                tree.push(idx);
            }
        }
        if sets.components() == 1 {
            return Ok(SpanningTreeResult::Exists(g.keep_edges(tree)));
        }
    }
    Ok(SpanningTreeResult::NotExists)
}

/// Footprint edges whose removal destroys bidirectional connectivity.
pub fn critical_bispanner_edges(g: &TemporalGraph, setting: Setting) -> Result<Vec<Edge>> {
    if !is_bidirectionally_connected(g, setting) {
        return Err(Error::Precondition(
            "graph is not bidirectionally connected".into(),
        ));
    }
    Ok(critical_indices(g, setting)
        .into_iter()
        .map(|i| g.edge(i))
        .collect())
}

fn critical_indices(g: &TemporalGraph, setting: Setting) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&i| !is_bidirectionally_connected(&g.without_edge(i), setting))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinBispanner {
    /// Number of footprint edges kept.
    pub size: usize,
    pub subgraph: TemporalGraph,
}

/// Smallest edge subset (all labels kept) that is still bidirectionally
/// connected, or `None` when the graph itself is not.
///
/// Removing edges never creates bi-paths, so every critical edge belongs to
/// every bi-spanner; only the remaining edges are searched, by ascending
/// count in lexicographic order. The size guard applies to those.
pub fn min_bispanner_bruteforce(
    g: &TemporalGraph,
    setting: Setting,
    limits: &SearchLimits,
) -> Result<Option<MinBispanner>> {
    if !is_bidirectionally_connected(g, setting) {
        return Ok(None);
    }
    let forced = critical_indices(g, setting);
    let free: Vec<usize> = (0..g.edge_count())
        .filter(|i| forced.binary_search(i).is_err())
        .collect();
    guard("non-critical edge count", free.len(), limits.max_edges)?;

    for extra in 0..=free.len() {
        let mut found = None;
        for_each_combination(free.len(), extra, |pick| {
            let keep: Vec<usize> = forced
                .iter()
                .copied()
                .chain(pick.iter().map(|&j| free[j]))
                .collect();
            if !footprint_connected(g.n(), keep.iter().map(|&i| g.edge(i))) {
                return ControlFlow::Continue(());
            }
            let sub = g.keep_edges(keep);
            if is_bidirectionally_connected(&sub, setting) {
                found = Some(sub);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(subgraph) = found {
            return Ok(Some(MinBispanner {
                size: subgraph.edge_count(),
                subgraph,
            }));
        }
    }
    unreachable!("the whole graph is bidirectionally connected")
}

/// Visits the `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(
    n: usize,
    k: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx).is_break() {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
