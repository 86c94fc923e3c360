//! Brute-force oracles and random instance generators shared by the
//! integration suites. Nothing here goes through the triplet machinery.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use tempspan::{Label, Setting, TemporalGraph, Vertex};

/// All simple paths starting at `s` (including the trivial one).
pub fn simple_paths(g: &TemporalGraph, s: Vertex) -> Vec<Vec<Vertex>> {
    fn go(g: &TemporalGraph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        let next: Vec<Vertex> = g.neighbors(last).map(|(w, _)| w).collect();
        for w in next {
            if !path.contains(&w) {
                path.push(w);
                go(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![s], &mut out);
    out
}

/// Every admissible label sequence along `path` (one label per hop).
pub fn label_sequences(g: &TemporalGraph, path: &[Vertex], setting: Setting) -> Vec<Vec<Label>> {
    fn go(lists: &[&[Label]], setting: Setting, seq: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        if seq.len() == lists.len() {
            out.push(seq.clone());
            return;
        }
        for &t in lists[seq.len()] {
            if seq.last().is_none_or(|&p| setting.follows(p, t)) {
                seq.push(t);
                go(lists, setting, seq, out);
                seq.pop();
            }
        }
    }
    let lists: Vec<&[Label]> = path
        .windows(2)
        .map(|w| g.labels(w[0], w[1]).unwrap())
        .collect();
    let mut out = Vec::new();
    go(&lists, setting, &mut Vec::new(), &mut out);
    out
}

/// Earliest arrival per vertex over every simple journey from `s`;
/// `Some(None)` marks the source.
pub fn brute_arrivals(
    g: &TemporalGraph,
    s: Vertex,
    setting: Setting,
) -> Vec<Option<Option<Label>>> {
    let mut best: Vec<Option<Option<Label>>> = vec![None; g.n()];
    best[s] = Some(None);
    for path in simple_paths(g, s) {
        if path.len() < 2 {
            continue;
        }
        let v = *path.last().unwrap();
        for seq in label_sequences(g, &path, setting) {
            let a = *seq.last().unwrap();
            match best[v] {
                Some(Some(b)) if b <= a => {}
                _ => best[v] = Some(Some(a)),
            }
        }
    }
    best
}

pub fn brute_temporally_connected(g: &TemporalGraph, setting: Setting) -> bool {
    (0..g.n()).all(|s| brute_arrivals(g, s, setting).iter().all(Option::is_some))
}

/// For every vertex `v != s`, all `(u, a, d)` realised by some bi-path
/// `s ~ v` whose last hop is `u v`, with forward arrival `a` and return
/// departure `d` on that hop.
pub fn brute_bipath_triplets(
    g: &TemporalGraph,
    s: Vertex,
    setting: Setting,
) -> BTreeMap<Vertex, BTreeSet<(Vertex, Label, Label)>> {
    let mut out: BTreeMap<Vertex, BTreeSet<(Vertex, Label, Label)>> = BTreeMap::new();
    for path in simple_paths(g, s) {
        if path.len() < 2 {
            continue;
        }
        let k = path.len() - 1;
        let (u, v) = (path[k - 1], path[k]);
        let forward: BTreeSet<Label> = label_sequences(g, &path, setting)
            .into_iter()
            .map(|seq| seq[k - 1])
            .collect();
        let mut back_path = path.clone();
        back_path.reverse();
        let backward: BTreeSet<Label> = label_sequences(g, &back_path, setting)
            .into_iter()
            .map(|seq| seq[0])
            .collect();
        for &a in &forward {
            for &d in &backward {
                out.entry(v).or_default().insert((u, a, d));
            }
        }
    }
    out
}

pub fn brute_bidirectionally_connected(g: &TemporalGraph, setting: Setting) -> bool {
    (0..g.n()).all(|s| {
        let found = brute_bipath_triplets(g, s, setting);
        (0..g.n()).all(|v| v == s || found.contains_key(&v))
    })
}

/// Random graph with `n` vertices, labels in `1..=tau`, at most `max_labels`
/// labels per edge, each pair present with probability `density`.
pub fn random_graph(
    rng: &mut StdRng,
    n: usize,
    tau: Label,
    max_labels: usize,
    density: f64,
) -> TemporalGraph {
    let mut edges = Vec::new();
    let pool: Vec<Label> = (1..=tau).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                let count = rng.gen_range(1..=max_labels.min(pool.len()));
                let labels: Vec<Label> = pool.choose_multiple(rng, count).copied().collect();
                edges.push((u, v, labels));
            }
        }
    }
    TemporalGraph::new(n, edges).unwrap()
}

/// Small random graph in the shape used by the oracle suites:
/// `n <= 6`, `tau <= 5`, at most 3 labels per edge.
pub fn random_small(rng: &mut StdRng) -> TemporalGraph {
    let n = rng.gen_range(1..=6);
    let tau = rng.gen_range(1..=5);
    let density = rng.gen_range(0.3..=1.0);
    random_graph(rng, n, tau, 3, density)
}

pub fn random_simple(rng: &mut StdRng, max_n: usize, tau: Label) -> TemporalGraph {
    let n = rng.gen_range(1..=max_n);
    let density = rng.gen_range(0.3..=1.0);
    random_graph(rng, n, tau, 1, density)
}

/// Random proper graph: labels are added one by one, skipping any that an
/// adjacent edge already carries.
pub fn random_proper(
    rng: &mut StdRng,
    max_n: usize,
    tau: Label,
    max_labels: usize,
) -> TemporalGraph {
    let n = rng.gen_range(1..=max_n);
    let density = rng.gen_range(0.4..=1.0);
    let mut used: Vec<BTreeSet<Label>> = vec![BTreeSet::new(); n];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !rng.gen_bool(density) {
                continue;
            }
            let want = rng.gen_range(1..=max_labels);
            let mut labels = Vec::new();
            for _ in 0..want * 3 {
                if labels.len() == want {
                    break;
                }
                let t = rng.gen_range(1..=tau);
                if !used[u].contains(&t) && !used[v].contains(&t) {
                    used[u].insert(t);
                    used[v].insert(t);
                    labels.push(t);
                }
            }
            if !labels.is_empty() {
                edges.push((u, v, labels));
            }
        }
    }
    TemporalGraph::new(n, edges).unwrap()
}

/// Complete graph on `n` vertices with a random proper single labelling
/// (a random proper edge colouring with labels drawn from `1..=3n`).
pub fn random_happy_clique(rng: &mut StdRng, n: usize) -> TemporalGraph {
    let mut pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let max = 3 * n as Label;
    let mut used: Vec<BTreeSet<Label>> = vec![BTreeSet::new(); n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        let free: Vec<Label> = (1..=max)
            .filter(|t| !used[u].contains(t) && !used[v].contains(t))
            .collect();
        let t = *free.choose(rng).expect("3n colours always leave one free");
        used[u].insert(t);
        used[v].insert(t);
        edges.push((u, v, vec![t]));
    }
    TemporalGraph::new(n, edges).unwrap()
}
