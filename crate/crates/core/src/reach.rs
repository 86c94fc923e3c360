//! One-directional temporal reachability.

use crate::error::Result;
use crate::graph::{Edge, Label, Setting, TemporalGraph, Time, Vertex};

/// Earliest arrival at a vertex from a fixed source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrival {
    /// The source itself, free to depart at any time.
    Source,
    At(Label),
    Unreachable,
}

impl Arrival {
    pub fn is_reachable(self) -> bool {
        !matches!(self, Arrival::Unreachable)
    }
}

/// A path in the footprint walked with admissible labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Journey {
    vertices: Vec<Vertex>,
    labels: Vec<Label>,
}

impl Journey {
    pub fn new(vertices: Vec<Vertex>, labels: Vec<Label>) -> Self {
        assert_eq!(vertices.len(), labels.len() + 1, "one label per hop");
        Journey { vertices, labels }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn contacts(&self) -> impl Iterator<Item = (Edge, Label)> + '_ {
        self.vertices
            .windows(2)
            .zip(&self.labels)
            .map(|(w, &t)| (Edge::new(w[0], w[1]), t))
    }

    /// Checks simplicity of the underlying path, label membership, and label order.
    pub fn is_valid(&self, g: &TemporalGraph, setting: Setting) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let present = self.contacts().all(|(e, t)| {
            g.labels(e.u, e.v)
                .is_some_and(|ls| ls.binary_search(&t).is_ok())
        });
        present && self.labels.windows(2).all(|w| setting.follows(w[0], w[1]))
    }
}

/// Earliest arrival times from one source, with the contact that first
/// reached each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrivalMap {
    source: Vertex,
    arrivals: Vec<Arrival>,
    parents: Vec<Option<(Vertex, Label)>>,
}

impl ArrivalMap {
    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn get(&self, v: Vertex) -> Arrival {
        self.arrivals[v]
    }

    pub fn arrivals(&self) -> &[Arrival] {
        &self.arrivals
    }

    pub fn all_reachable(&self) -> bool {
        self.arrivals.iter().all(|a| a.is_reachable())
    }

    /// A foremost journey from the source to `v`.
    pub fn journey_to(&self, v: Vertex) -> Option<Journey> {
        if !self.arrivals[v].is_reachable() {
            return None;
        }
        let mut vertices = vec![v];
        let mut labels = Vec::new();
        let mut cur = v;
        while let Some((prev, t)) = self.parents[cur] {
            vertices.push(prev);
            labels.push(t);
            cur = prev;
        }
        vertices.reverse();
        labels.reverse();
        Some(Journey::new(vertices, labels))
    }
}

/// Earliest time per vertex and the contact each was first reached by.
type Sweep = (Vec<Option<Time>>, Vec<Option<(Vertex, Label)>>);

/// Sweeps contacts in label order from `source`, which is considered present
/// at `start`. Each vertex is settled the first time it is reached, so the
/// recorded parent links form a tree of simple journeys.
fn sweep(g: &TemporalGraph, source: Vertex, start: Time, setting: Setting) -> Sweep {
    let mut contacts: Vec<(Label, usize)> = (0..g.edge_count())
        .flat_map(|idx| g.edge_labels(idx).iter().map(move |&t| (t, idx)))
        .collect();
    contacts.sort_unstable();

    let mut best: Vec<Option<Time>> = vec![None; g.n()];
    let mut parents = vec![None; g.n()];
    best[source] = Some(start);

    let can_leave = |at: Time, t: Label| match setting {
        Setting::NonStrict => at <= Time::At(t),
        Setting::Strict => at < Time::At(t),
    };

    let mut i = 0;
    while i < contacts.len() {
        let t = contacts[i].0;
        let end = i + contacts[i..].partition_point(|c| c.0 == t);
        let group = &contacts[i..end];
        // Non-strict journeys may chain several contacts of one label.
        loop {
            let mut changed = false;
            for &(_, idx) in group {
                let e = g.edge(idx);
                for (x, y) in [(e.u, e.v), (e.v, e.u)] {
                    if best[y].is_none() && best[x].is_some_and(|at| can_leave(at, t)) {
                        best[y] = Some(Time::At(t));
                        parents[y] = Some((x, t));
                        changed = true;
                    }
                }
            }
            if !changed || setting == Setting::Strict {
                break;
            }
        }
        i = end;
    }
    (best, parents)
}

pub fn earliest_arrival(g: &TemporalGraph, s: Vertex, setting: Setting) -> Result<ArrivalMap> {
    g.check_vertex(s)?;
    let (best, parents) = sweep(g, s, Time::NegInf, setting);
    let arrivals = best
        .iter()
        .enumerate()
        .map(|(v, b)| match b {
            _ if v == s => Arrival::Source,
            Some(Time::At(t)) => Arrival::At(*t),
            _ => Arrival::Unreachable,
        })
        .collect();
    Ok(ArrivalMap {
        source: s,
        arrivals,
        parents,
    })
}

pub fn is_temporally_connected(g: &TemporalGraph, setting: Setting) -> bool {
    (0..g.n()).all(|s| {
        earliest_arrival(g, s, setting)
            .expect("source in range")
            .all_reachable()
    })
}

/// Can `p` reach every vertex when it may only leave at or after `t`
/// (strictly after, in the strict setting)?
pub fn reaches_all_from(g: &TemporalGraph, p: Vertex, t: Label, setting: Setting) -> bool {
    sweep(g, p, Time::At(t), setting)
        .0
        .iter()
        .all(Option::is_some)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pivot {
    pub vertex: Vertex,
    /// Latest arrival at the pivot over all other vertices.
    pub time: Label,
}

/// Vertices `p` such that everyone reaches `p` by some time `t` and `p`
/// reaches everyone departing from `t` on. The witness `t` is the latest of
/// the other vertices' earliest arrivals at `p`. Graphs with fewer than two
/// vertices have no pivots.
pub fn find_pivots(g: &TemporalGraph, setting: Setting) -> Vec<Pivot> {
    if g.n() < 2 {
        return Vec::new();
    }
    let maps: Vec<ArrivalMap> = (0..g.n())
        .map(|s| earliest_arrival(g, s, setting).expect("source in range"))
        .collect();
    let mut pivots = Vec::new();
    'candidates: for p in 0..g.n() {
        let mut latest = 0;
        for (v, map) in maps.iter().enumerate() {
            if v == p {
                continue;
            }
            match map.get(p) {
                Arrival::At(t) => latest = latest.max(t),
                _ => continue 'candidates,
            }
        }
        if reaches_all_from(g, p, latest, setting) {
            pivots.push(Pivot {
                vertex: p,
                time: latest,
            });
        }
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn square_arrivals() {
        let map = earliest_arrival(&fixtures::square(), 0, Setting::NonStrict).unwrap();
        assert_eq!(
            map.arrivals(),
            &[
                Arrival::Source,
                Arrival::At(1),
                Arrival::At(2),
                Arrival::At(2)
            ]
        );
    }

    #[test]
    fn cycle_with_tails_reaches_d_at_3() {
        let map = earliest_arrival(&fixtures::cycle_with_tails(), 0, Setting::NonStrict).unwrap();
        assert_eq!(map.get(3), Arrival::At(3));
        let j = map.journey_to(3).unwrap();
        assert_eq!(j.vertices(), &[0, 1, 2, 3]);
        assert_eq!(j.labels(), &[1, 2, 3]);
        assert!(j.is_valid(&fixtures::cycle_with_tails(), Setting::Strict));
    }

    #[test]
    fn single_vertex() {
        let g = TemporalGraph::empty(1);
        let map = earliest_arrival(&g, 0, Setting::Strict).unwrap();
        assert_eq!(map.arrivals(), &[Arrival::Source]);
        assert!(is_temporally_connected(&g, Setting::Strict));
        assert!(earliest_arrival(&g, 1, Setting::Strict).is_err());
    }

    #[test]
    fn non_strict_chains_equal_labels() {
        let g = TemporalGraph::new(3, [(0, 1, vec![4]), (1, 2, vec![4])]).unwrap();
        let ns = earliest_arrival(&g, 0, Setting::NonStrict).unwrap();
        let st = earliest_arrival(&g, 0, Setting::Strict).unwrap();
        assert_eq!(ns.get(2), Arrival::At(4));
        assert_eq!(st.get(2), Arrival::Unreachable);
    }

    #[test]
    fn connectivity_fixtures() {
        for setting in Setting::BOTH {
            assert!(is_temporally_connected(&fixtures::square(), setting));
            let tree =
                TemporalGraph::new(4, [(0, 1, vec![1]), (1, 2, vec![2]), (2, 3, vec![1])]).unwrap();
            assert!(!is_temporally_connected(&tree, setting));
        }
    }

    #[test]
    fn cycle_with_tails_pivot_d_is_inclusive() {
        let pivots = find_pivots(&fixtures::cycle_with_tails(), Setting::NonStrict);
        assert!(pivots.contains(&Pivot { vertex: 3, time: 6 }));
        // d also reaches everyone leaving after 6: d-c@7, c-b@8, b-a@9,
        // b-e@10, b-f@11.
        assert!(reaches_all_from(
            &fixtures::cycle_with_tails(),
            3,
            7,
            Setting::NonStrict
        ));
        assert!(!reaches_all_from(
            &fixtures::cycle_with_tails(),
            3,
            8,
            Setting::NonStrict
        ));
        assert!(find_pivots(&fixtures::cycle_with_tails(), Setting::Strict)
            .iter()
            .any(|p| p.vertex == 3));
    }

    #[test]
    fn disconnected_has_no_pivots() {
        let g = TemporalGraph::new(3, [(0, 1, vec![1])]).unwrap();
        assert!(find_pivots(&g, Setting::NonStrict).is_empty());
    }
}
