//! All bidirectional temporal paths from a source.
//!
//! Every vertex `v` keeps a set `B_v` of triplets `(u, a, d)`: some bi-path
//! from the source reaches `v` from its neighbor `u` with a forward contact at
//! `a`, and its return journey leaves `v` towards `u` with a contact at `d`.
//! Triplets are propagated along edges by the extension rule and pruned by
//! per-neighbor dominance until nothing improves.

use std::collections::VecDeque;
use std::fmt;

use crate::error::Result;
use crate::graph::{Edge, Label, Setting, TemporalGraph, Time, Vertex};
use crate::reach::Journey;

/// Neighbor a triplet arrived through, or the source sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Via {
    Source,
    Vertex(Vertex),
}

impl fmt::Display for Via {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Via::Source => f.write_str("_"),
            Via::Vertex(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triplet {
    pub via: Via,
    pub arrive: Time,
    pub depart: Time,
}

impl Triplet {
    /// `(⊥, -inf, +inf)`, held by the source only.
    pub const SOURCE: Triplet = Triplet {
        via: Via::Source,
        arrive: Time::NegInf,
        depart: Time::PosInf,
    };

    pub fn new(via: Vertex, arrive: Label, depart: Label) -> Self {
        Triplet {
            via: Via::Vertex(via),
            arrive: Time::At(arrive),
            depart: Time::At(depart),
        }
    }

    /// Same neighbor, arrives no later and departs no earlier.
    pub fn dominates(&self, other: &Triplet) -> bool {
        self.via == other.via && self.arrive <= other.arrive && self.depart >= other.depart
    }
}

impl fmt::Display for Triplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.via, self.arrive, self.depart)
    }
}

/// Extension rule: pushes triplet `t` held at `v` across edge `vw` with the
/// given labels. Returns the triplet `(v, a', d')` at `w`, where `a'` is the
/// first label not before `t.arrive` and `d'` the last label not after
/// `t.depart` (strict inequalities in the strict setting).
///
/// The caller is responsible for `w != t.via`.
pub fn extend_triplet(
    t: &Triplet,
    v: Vertex,
    labels: &[Label],
    setting: Setting,
) -> Option<Triplet> {
    let arrive = setting.earliest_from(labels, t.arrive)?;
    let depart = setting.latest_until(labels, t.depart)?;
    Some(Triplet::new(v, arrive, depart))
}

/// Dominance-free triplet set of one vertex, kept sorted.
#[derive(Debug, Clone)]
pub struct TripletSet {
    owner: Vertex,
    entries: Vec<(Triplet, usize)>,
}

impl PartialEq for TripletSet {
    fn eq(&self, other: &Self) -> bool {
        self.owner == other.owner && self.iter().eq(other.iter())
    }
}

impl Eq for TripletSet {}

impl TripletSet {
    pub fn new(owner: Vertex) -> Self {
        TripletSet {
            owner,
            entries: Vec::new(),
        }
    }

    pub fn owner(&self) -> Vertex {
        self.owner
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triplet> + '_ {
        self.entries.iter().map(|(t, _)| t)
    }

    pub fn contains(&self, t: &Triplet) -> bool {
        self.entries.binary_search_by(|(x, _)| x.cmp(t)).is_ok()
    }

    /// Adds `t` under the elimination rule. Returns whether the set changed,
    /// which happens iff no triplet with the same neighbor dominates `t`.
    pub fn insert(&mut self, t: Triplet) -> bool {
        self.insert_tagged(t, usize::MAX)
    }

    fn insert_tagged(&mut self, t: Triplet, tag: usize) -> bool {
        if self.iter().any(|x| x.dominates(&t)) {
            return false;
        }
        self.entries.retain(|(x, _)| !t.dominates(x));
        let pos = self.entries.partition_point(|(x, _)| x < &t);
        self.entries.insert(pos, (t, tag));
        true
    }

    fn holds_tag(&self, tag: usize) -> bool {
        self.entries.iter().any(|&(_, x)| x == tag)
    }

    fn tag_of(&self, t: &Triplet) -> Option<usize> {
        self.entries
            .iter()
            .find(|(x, _)| x == t)
            .map(|&(_, tag)| tag)
    }
}

/// Order in which newly inserted triplets are expanded. The fixed point does
/// not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WorklistOrder {
    #[default]
    Fifo,
    Lifo,
}

#[derive(Debug, Clone)]
struct Record {
    vertex: Vertex,
    triplet: Triplet,
    parent: Option<usize>,
}

/// Result of running the triplet fixed point from one source.
#[derive(Debug, Clone)]
pub struct BipathRun {
    source: Vertex,
    setting: Setting,
    sets: Vec<TripletSet>,
    // every triplet ever inserted, with the triplet it was extended from
    records: Vec<Record>,
}

pub fn compute_bipaths(g: &TemporalGraph, s: Vertex, setting: Setting) -> Result<BipathRun> {
    compute_bipaths_ordered(g, s, setting, WorklistOrder::Fifo)
}

pub fn compute_bipaths_ordered(
    g: &TemporalGraph,
    s: Vertex,
    setting: Setting,
    order: WorklistOrder,
) -> Result<BipathRun> {
    g.check_vertex(s)?;
    let mut sets: Vec<TripletSet> = (0..g.n()).map(TripletSet::new).collect();
    let mut records = vec![Record {
        vertex: s,
        triplet: Triplet::SOURCE,
        parent: None,
    }];
    sets[s].insert_tagged(Triplet::SOURCE, 0);

    let mut work = VecDeque::from([0usize]);
    loop {
        let next = match order {
            WorklistOrder::Fifo => work.pop_front(),
            WorklistOrder::Lifo => work.pop_back(),
        };
        let Some(id) = next else { break };
        let Record {
            vertex: v, triplet, ..
        } = records[id];
        // Eliminated since it was queued: whatever replaced it dominates it
        // and is queued too.
        if !sets[v].holds_tag(id) {
            continue;
        }
        for &(w, edge) in g.incident(v) {
            // The source keeps only its sentinel; no immediate backtracking.
            if w == s || triplet.via == Via::Vertex(w) {
                continue;
            }
            let Some(ext) = extend_triplet(&triplet, v, g.edge_labels(edge), setting) else {
                continue;
            };
            let new_id = records.len();
            if sets[w].insert_tagged(ext, new_id) {
                records.push(Record {
                    vertex: w,
                    triplet: ext,
                    parent: Some(id),
                });
                work.push_back(new_id);
            }
        }
    }

    Ok(BipathRun {
        source: s,
        setting,
        sets,
        records,
    })
}

/// A pair of opposite journeys over the same simple footprint path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPath {
    /// `s = v0, ..., vk = v`
    pub vertices: Vec<Vertex>,
    /// `forward[i]` is the label used on `v_i v_{i+1}` going out.
    pub forward: Vec<Label>,
    /// `backward[i]` is the label used on `v_i v_{i+1}` coming back.
    pub backward: Vec<Label>,
}

impl BiPath {
    pub fn trivial(s: Vertex) -> Self {
        BiPath {
            vertices: vec![s],
            forward: Vec::new(),
            backward: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward_journey(&self) -> Journey {
        Journey::new(self.vertices.clone(), self.forward.clone())
    }

    pub fn backward_journey(&self) -> Journey {
        let mut vs = self.vertices.clone();
        vs.reverse();
        let mut ls = self.backward.clone();
        ls.reverse();
        Journey::new(vs, ls)
    }

    pub fn is_valid(&self, g: &TemporalGraph, setting: Setting) -> bool {
        self.forward.len() + 1 == self.vertices.len()
            && self.backward.len() == self.forward.len()
            && self.forward_journey().is_valid(g, setting)
            && self.backward_journey().is_valid(g, setting)
    }

    pub fn contacts(&self) -> impl Iterator<Item = (Edge, Label)> + '_ {
        self.vertices.windows(2).enumerate().flat_map(|(i, w)| {
            let e = Edge::new(w[0], w[1]);
            [(e, self.forward[i]), (e, self.backward[i])]
        })
    }
}

impl BipathRun {
    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn setting(&self) -> Setting {
        self.setting
    }

    pub fn set(&self, v: Vertex) -> &TripletSet {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[TripletSet] {
        &self.sets
    }

    /// Does some bi-path join the source and `v`?
    pub fn reaches(&self, v: Vertex) -> bool {
        !self.sets[v].is_empty()
    }

    pub fn reaches_all(&self) -> bool {
        self.sets.iter().all(|b| !b.is_empty())
    }

    /// Bi-path to `v` through the preferred triplet of `B_v`: earliest
    /// arrival, then latest departure, then smallest neighbor.
    pub fn reconstruct(&self, v: Vertex) -> Option<BiPath> {
        if v == self.source {
            return Some(BiPath::trivial(v));
        }
        let best = self.sets[v].iter().min_by(|x, y| {
            x.arrive
                .cmp(&y.arrive)
                .then(y.depart.cmp(&x.depart))
                .then(x.via.cmp(&y.via))
        })?;
        self.reconstruct_from(v, best)
    }

    /// Bi-path realising a specific triplet currently held in `B_v`.
    pub fn reconstruct_from(&self, v: Vertex, t: &Triplet) -> Option<BiPath> {
        let tag = self.sets[v].tag_of(t)?;
        Some(self.unwind(tag))
    }

    /// Follows parent links back to the source and cuts loops out of the walk.
    fn unwind(&self, mut id: usize) -> BiPath {
        let mut chain = Vec::new();
        loop {
            let rec = &self.records[id];
            chain.push(rec);
            match rec.parent {
                Some(p) => id = p,
                None => break,
            }
        }
        chain.reverse();

        let mut path = BiPath::trivial(chain[0].vertex);
        for rec in &chain[1..] {
            if let Some(j) = path.vertices.iter().position(|&x| x == rec.vertex) {
                // Forward labels only grow and backward labels only shrink
                // along the walk, so the shortcut stays a bi-path.
                path.vertices.truncate(j + 1);
                path.forward.truncate(j);
                path.backward.truncate(j);
                continue;
            }
            let (Time::At(a), Time::At(d)) = (rec.triplet.arrive, rec.triplet.depart) else {
                unreachable!("non-source triplets carry labels");
            };
            path.vertices.push(rec.vertex);
            path.forward.push(a);
            path.backward.push(d);
        }
        path
    }
}

pub fn is_bidirectionally_connected(g: &TemporalGraph, setting: Setting) -> bool {
    (0..g.n()).all(|s| {
        compute_bipaths(g, s, setting)
            .expect("source in range")
            .reaches_all()
    })
}

/// Union of one reconstructed bi-path per ordered vertex pair, or `None` when
/// some pair shares no bi-path.
pub fn build_bispanner(g: &TemporalGraph, setting: Setting) -> Option<TemporalGraph> {
    let mut contacts = Vec::new();
    for s in 0..g.n() {
        let run = compute_bipaths(g, s, setting).expect("source in range");
        for v in 0..g.n() {
            contacts.extend(run.reconstruct(v)?.contacts());
        }
    }
    Some(g.restrict_to_contacts(contacts))
}
