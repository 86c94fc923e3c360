//! Temporal graph data model.
//!
//! A temporal graph is an undirected footprint on vertices `0..n` where each
//! edge carries a strictly increasing list of positive integer labels, the
//! time steps at which the edge is present.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Label = u32;

/// Whether consecutive labels of a journey must strictly increase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Setting {
    Strict,
    #[default]
    NonStrict,
}

impl Setting {
    pub const BOTH: [Setting; 2] = [Setting::Strict, Setting::NonStrict];

    /// Can a contact at `next` follow a contact at `prev` on a journey?
    pub fn follows(self, prev: Label, next: Label) -> bool {
        match self {
            Setting::Strict => next > prev,
            Setting::NonStrict => next >= prev,
        }
    }

    /// Earliest label that may be taken after being somewhere at `after`.
    pub fn earliest_from(self, labels: &[Label], after: Time) -> Option<Label> {
        let idx = match (self, after) {
            (_, Time::NegInf) => 0,
            (_, Time::PosInf) => return None,
            (Setting::NonStrict, Time::At(t)) => labels.partition_point(|&l| l < t),
            (Setting::Strict, Time::At(t)) => labels.partition_point(|&l| l <= t),
        };
        labels.get(idx).copied()
    }

    /// Latest label that still lets a journey leave again at `before`.
    pub fn latest_until(self, labels: &[Label], before: Time) -> Option<Label> {
        let idx = match (self, before) {
            (_, Time::PosInf) => labels.len(),
            (_, Time::NegInf) => return None,
            (Setting::NonStrict, Time::At(t)) => labels.partition_point(|&l| l <= t),
            (Setting::Strict, Time::At(t)) => labels.partition_point(|&l| l < t),
        };
        idx.checked_sub(1).map(|i| labels[i])
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Setting::Strict => f.write_str("strict"),
            Setting::NonStrict => f.write_str("non-strict"),
        }
    }
}

/// A label extended with the two infinities used by sentinels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Time {
    NegInf,
    At(Label),
    PosInf,
}

impl fmt::Display for Time {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Time::NegInf => f.write_str("-inf"),
            Time::At(t) => write!(f, "{t}"),
            Time::PosInf => f.write_str("+inf"),
        }
    }
}

/// Unordered vertex pair, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

/// Class membership flags. `happy` is always `simple && proper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphClass {
    pub simple: bool,
    pub proper: bool,
    pub happy: bool,
}

/// Immutable temporal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    n: usize,
    edges: Vec<Edge>,
    labels: Vec<Vec<Label>>,
    // (neighbor, edge index), sorted by neighbor
    adjacency: Vec<Vec<(Vertex, usize)>>,
    lifetime: Label,
}

impl TemporalGraph {
    pub fn empty(n: usize) -> Self {
        TemporalGraph {
            n,
            edges: Vec::new(),
            labels: Vec::new(),
            adjacency: vec![Vec::new(); n],
            lifetime: 0,
        }
    }

    /// Builds a graph from `(u, v, labels)` triples. Labels are sorted and
    /// deduplicated; a repeated edge key is an error.
    pub fn new<I, L>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, L)>,
        L: IntoIterator<Item = Label>,
    {
        let mut map: BTreeMap<Edge, Vec<Label>> = BTreeMap::new();
        for (a, b, ls) in edges {
            let key = check_edge(n, a, b)?;
            let mut ls: Vec<Label> = ls.into_iter().collect();
            ls.sort_unstable();
            ls.dedup();
            if ls.is_empty() {
                return Err(Error::EmptyLabels(key.u, key.v));
            }
            if ls[0] == 0 {
                return Err(Error::ZeroLabel(key.u, key.v));
            }
            if map.insert(key, ls).is_some() {
                return Err(Error::DuplicateEdge(key.u, key.v));
            }
        }
        Ok(Self::from_sorted(n, map))
    }

    fn from_sorted(n: usize, map: BTreeMap<Edge, Vec<Label>>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(map.len());
        let mut labels = Vec::with_capacity(map.len());
        let mut lifetime = 0;
        for (idx, (e, ls)) in map.into_iter().enumerate() {
            adjacency[e.u].push((e.v, idx));
            adjacency[e.v].push((e.u, idx));
            lifetime = lifetime.max(*ls.last().expect("non-empty labels"));
            edges.push(e);
            labels.push(ls);
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        TemporalGraph {
            n,
            edges,
            labels,
            adjacency,
            lifetime,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Largest label in the graph, 0 when edgeless.
    pub fn lifetime(&self) -> Label {
        self.lifetime
    }

    pub fn edge(&self, idx: usize) -> Edge {
        self.edges[idx]
    }

    pub fn edge_labels(&self, idx: usize) -> &[Label] {
        &self.labels[idx]
    }

    /// Footprint edges in `(u, v)` order with their labels.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, &[Label])> + '_ {
        self.edges
            .iter()
            .copied()
            .zip(self.labels.iter().map(Vec::as_slice))
    }

    pub fn footprint(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    pub fn labels(&self, a: Vertex, b: Vertex) -> Option<&[Label]> {
        self.edge_index(a, b).map(|i| self.labels[i].as_slice())
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// Neighbors of `v` in increasing order with the labels of the joining edge.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, &[Label])> + '_ {
        self.adjacency[v]
            .iter()
            .map(move |&(w, idx)| (w, self.labels[idx].as_slice()))
    }

    pub(crate) fn incident(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of contacts, i.e. `(edge, label)` pairs.
    pub fn contact_count(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Edges present at time `t`.
    pub fn snapshot(&self, t: Label) -> Vec<Edge> {
        self.edges()
            .filter(|(_, ls)| ls.binary_search(&t).is_ok())
            .map(|(e, _)| e)
            .collect()
    }

    /// Distinct labels used anywhere in the graph, ascending.
    pub fn distinct_labels(&self) -> Vec<Label> {
        let mut all: Vec<Label> = self.labels.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn classify(&self) -> GraphClass {
        let simple = self.labels.iter().all(|ls| ls.len() == 1);
        let proper = (0..self.n).all(|v| {
            let mut seen: Vec<Label> = self.adjacency[v]
                .iter()
                .flat_map(|&(_, idx)| self.labels[idx].iter().copied())
                .collect();
            let total = seen.len();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == total
        });
        GraphClass {
            simple,
            proper,
            happy: simple && proper,
        }
    }

    pub fn footprint_is_connected(&self) -> bool {
        footprint_connected(self.n, self.edges.iter().copied())
    }

    pub fn footprint_is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() == self.n - 1 && self.footprint_is_connected()
    }

    /// Temporal subgraph keeping the given edges (by index) with all their labels.
    pub fn keep_edges(&self, indices: impl IntoIterator<Item = usize>) -> TemporalGraph {
        let map: BTreeMap<Edge, Vec<Label>> = indices
            .into_iter()
            .map(|i| (self.edges[i], self.labels[i].clone()))
            .collect();
        Self::from_sorted(self.n, map)
    }

    /// Temporal subgraph with edge `idx` and all its labels removed.
    pub fn without_edge(&self, idx: usize) -> TemporalGraph {
        self.keep_edges((0..self.edges.len()).filter(|&i| i != idx))
    }

    /// Temporal subgraph made of exactly the given contacts. Contacts that are
    /// not in this graph are ignored.
    pub fn restrict_to_contacts(
        &self,
        contacts: impl IntoIterator<Item = (Edge, Label)>,
    ) -> TemporalGraph {
        let mut map: BTreeMap<Edge, Vec<Label>> = BTreeMap::new();
        for (e, t) in contacts {
            if self
                .labels(e.u, e.v)
                .is_some_and(|ls| ls.binary_search(&t).is_ok())
            {
                map.entry(e).or_default().push(t);
            }
        }
        for ls in map.values_mut() {
            ls.sort_unstable();
            ls.dedup();
        }
        Self::from_sorted(self.n, map)
    }

    /// Is `self` a temporal subgraph of `other` on the same vertex set?
    pub fn is_subgraph_of(&self, other: &TemporalGraph) -> bool {
        self.n == other.n
            && self.edges().all(|(e, ls)| {
                other
                    .labels(e.u, e.v)
                    .is_some_and(|big| ls.iter().all(|t| big.binary_search(t).is_ok()))
            })
    }
}

fn check_edge(n: usize, a: Vertex, b: Vertex) -> Result<Edge> {
    for x in [a, b] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if a == b {
        return Err(Error::SelfLoop(a));
    }
    Ok(Edge::new(a, b))
}

/// Union-find over `0..n`.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    components: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.components -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

pub(crate) fn footprint_connected(n: usize, edges: impl IntoIterator<Item = Edge>) -> bool {
    if n == 0 {
        return true;
    }
    let mut sets = DisjointSets::new(n);
    for e in edges {
        sets.union(e.u, e.v);
    }
    sets.components() == 1
}
