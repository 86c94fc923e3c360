//! Set cover instances and the set cover → k-bi-spanner gadget.

use std::ops::ControlFlow;

use super::meta::{GadgetKind, GadgetMeta};
use crate::error::{Error, Result};
use crate::exact::{for_each_combination, guard, min_bispanner_bruteforce, SearchLimits};
use crate::graph::{Label, Setting, TemporalGraph, Vertex};

/// Universe `1..=universe` and a family of non-empty subsets covering it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetCoverInstance {
    universe: usize,
    subsets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(universe: usize, subsets: Vec<Vec<usize>>) -> Result<Self> {
        let mut covered = vec![false; universe];
        let mut out = Vec::with_capacity(subsets.len());
        for (i, mut s) in subsets.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::InvalidInstance(format!("subset {} is empty", i + 1)));
            }
            for &x in &s {
                if x == 0 || x > universe {
                    return Err(Error::InvalidInstance(format!(
                        "element {x} of subset {} outside 1..={universe}",
                        i + 1
                    )));
                }
                covered[x - 1] = true;
            }
            out.push(s);
        }
        if let Some(x) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidInstance(format!(
                "element {} is in no subset",
                x + 1
            )));
        }
        Ok(SetCoverInstance {
            universe,
            subsets: out,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    /// First line `<n> <m>`, then one line of elements per subset.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let ints = |line_no: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| {
                        Error::parse(line_no, format!("`{t}` is not a non-negative integer"))
                    })
                })
                .collect()
        };
        let (line_no, header) = rows
            .next()
            .ok_or_else(|| Error::parse(1, "missing `<n> <m>` header"))?;
        let [n, m] = ints(line_no, header)?[..] else {
            return Err(Error::parse(line_no, "header must be `<n> <m>`"));
        };
        let mut subsets = Vec::with_capacity(m);
        let mut last = line_no;
        for (line_no, l) in rows {
            last = line_no;
            if subsets.len() == m {
                return Err(Error::parse(line_no, format!("more than {m} subsets")));
            }
            subsets.push(ints(line_no, l)?);
        }
        if subsets.len() != m {
            return Err(Error::parse(
                last,
                format!("expected {m} subsets, found {}", subsets.len()),
            ));
        }
        SetCoverInstance::new(n, subsets)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.universe, self.subsets.len());
        for s in &self.subsets {
            let line: Vec<String> = s.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    fn covers(&self, pick: &[usize]) -> bool {
        let mut covered = vec![false; self.universe];
        for &i in pick {
            for &x in &self.subsets[i] {
                covered[x - 1] = true;
            }
        }
        covered.iter().all(|&c| c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub size: usize,
    /// 0-based subset indices.
    pub subsets: Vec<usize>,
}

/// Minimum cover, trying families by ascending size in lexicographic order.
pub fn setcover_bruteforce(inst: &SetCoverInstance, limits: &SearchLimits) -> Result<Cover> {
    let m = inst.subsets().len();
    guard("subset count", m, limits.max_subsets)?;
    for size in 0..=m {
        let mut found = None;
        for_each_combination(m, size, |pick| {
            if inst.covers(pick) {
                found = Some(pick.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(subsets) = found {
            return Ok(Cover { size, subsets });
        }
    }
    unreachable!("the full family covers the universe")
}

/// Vertex ids: `v, v1, v2, s_1..s_m, u_1..u_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverVertex {
    Hub,
    Left,
    Right,
    /// 1-based subset index
    Subset(usize),
    /// 1-based element
    Element(usize),
}

pub fn setcover_gadget_vertex(inst: &SetCoverInstance, name: CoverVertex) -> Vertex {
    let m = inst.subsets().len();
    match name {
        CoverVertex::Hub => 0,
        CoverVertex::Left => 1,
        CoverVertex::Right => 2,
        CoverVertex::Subset(i) => 2 + i,
        CoverVertex::Element(j) => 2 + m + j,
    }
}

/// Simple temporal graph on `n + m + 3` vertices in which covers of size `k`
/// correspond to bi-spanners with `3n + 2m + 3 + k` edges.
///
/// `s_i` meets `v` and its elements at time `i`; `v1` meets every `s_i` and
/// every `u_j` at `m + 1`; `v2` meets `v` and every `s_i` at `m + 2`; the
/// remaining edges `v1-v`, `v2-u_1..u_n`, `v1-v2` get fresh labels
/// `m + 3, m + 4, ...` in that order.
pub fn setcover_to_kbs_gadget(inst: &SetCoverInstance) -> (TemporalGraph, GadgetMeta) {
    let n = inst.universe();
    let m = inst.subsets().len();
    let id = |x| setcover_gadget_vertex(inst, x);
    let at = |t: usize| vec![t as Label];
    use CoverVertex::*;

    let mut edges: Vec<(Vertex, Vertex, Vec<Label>)> = Vec::new();
    for (i0, subset) in inst.subsets().iter().enumerate() {
        let i = i0 + 1;
        edges.push((id(Subset(i)), id(Hub), at(i)));
        for &j in subset {
            edges.push((id(Subset(i)), id(Element(j)), at(i)));
        }
    }
    for i in 1..=m {
        edges.push((id(Left), id(Subset(i)), at(m + 1)));
    }
    for j in 1..=n {
        edges.push((id(Left), id(Element(j)), at(m + 1)));
    }
    edges.push((id(Right), id(Hub), at(m + 2)));
    for i in 1..=m {
        edges.push((id(Right), id(Subset(i)), at(m + 2)));
    }
    let mut fresh = m + 3;
    let mut next = || {
        fresh += 1;
        at(fresh - 1)
    };
    edges.push((id(Left), id(Hub), next()));
    for j in 1..=n {
        edges.push((id(Right), id(Element(j)), next()));
    }
    edges.push((id(Left), id(Right), next()));

    let g = TemporalGraph::new(n + m + 3, edges).expect("gadget edges are well formed");
    debug_assert!(g.classify().simple);

    let mut names: Vec<String> = ["v", "v1", "v2"].map(String::from).to_vec();
    names.extend((1..=m).map(|i| format!("s{i}")));
    names.extend((1..=n).map(|j| format!("u{j}")));
    let meta = GadgetMeta {
        kind: GadgetKind::SetCoverToKbs,
        names,
        renormalization: None,
        size_offset: Some(3 * n + 2 * m + 3),
    };
    (g, meta)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KbsReductionCheck {
    pub min_cover: usize,
    /// `None` if the gadget is not bidirectionally connected.
    pub min_bispanner: Option<usize>,
    pub expected: usize,
}

impl KbsReductionCheck {
    pub fn holds(&self) -> bool {
        self.min_bispanner == Some(self.expected)
    }
}

/// Checks `min bi-spanner(gadget) = 3n + 2m + 3 + min cover` by brute force
/// on both sides, in the non-strict setting.
pub fn verify_kbs_reduction(
    inst: &SetCoverInstance,
    limits: &SearchLimits,
) -> Result<KbsReductionCheck> {
    let cover = setcover_bruteforce(inst, limits)?;
    let (g, meta) = setcover_to_kbs_gadget(inst);
    let spanner = min_bispanner_bruteforce(&g, Setting::NonStrict, limits)?;
    Ok(KbsReductionCheck {
        min_cover: cover.size,
        min_bispanner: spanner.map(|s| s.size),
        expected: meta
            .expected_bispanner_size(cover.size)
            .expect("size offset"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipath::is_bidirectionally_connected;

    fn worked() -> SetCoverInstance {
        SetCoverInstance::new(2, vec![vec![1], vec![2], vec![1, 2]]).unwrap()
    }

    #[test]
    fn instance_invariants() {
        assert!(SetCoverInstance::new(2, vec![vec![1]]).is_err());
        assert!(SetCoverInstance::new(1, vec![vec![]]).is_err());
        assert!(SetCoverInstance::new(1, vec![vec![2]]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let inst = SetCoverInstance::parse("2 3\n1\n2\n1 2\n").unwrap();
        assert_eq!(inst, worked());
        assert_eq!(SetCoverInstance::parse(&inst.to_text()).unwrap(), inst);
        assert!(SetCoverInstance::parse("2 3\n1\n2\n").is_err());
        assert!(SetCoverInstance::parse("2\n1 2\n").is_err());
    }

    #[test]
    fn brute_force_covers() {
        let l = SearchLimits::default();
        assert_eq!(
            setcover_bruteforce(&worked(), &l).unwrap(),
            Cover {
                size: 1,
                subsets: vec![2]
            }
        );
        let one = SetCoverInstance::new(1, vec![vec![1]]).unwrap();
        assert_eq!(setcover_bruteforce(&one, &l).unwrap().size, 1);
        let singles = SetCoverInstance::new(3, vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(setcover_bruteforce(&singles, &l).unwrap().size, 3);
    }

    #[test]
    fn worked_gadget_shape() {
        let (g, meta) = setcover_to_kbs_gadget(&worked());
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 20);
        assert!(g.classify().simple);
        assert!(is_bidirectionally_connected(&g, Setting::NonStrict));
        assert_eq!(meta.expected_bispanner_size(1), Some(16));
        assert_eq!(meta.vertex("u2"), Some(7));
        // fresh labels: v1-v at 6, v2-u1 at 7, v2-u2 at 8, v1-v2 at 9
        assert_eq!(g.labels(1, 0), Some(&[6][..]));
        assert_eq!(g.labels(2, 7), Some(&[8][..]));
        assert_eq!(g.labels(1, 2), Some(&[9][..]));
    }

    #[test]
    fn worked_reduction() {
        let check = verify_kbs_reduction(&worked(), &SearchLimits::default()).unwrap();
        assert_eq!(check.min_cover, 1);
        assert_eq!(check.min_bispanner, Some(16));
        assert!(check.holds());
    }
}
