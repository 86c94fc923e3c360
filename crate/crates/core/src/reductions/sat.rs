//! CNF formulas and the SAT → temporal spanning tree gadget.

use std::fmt::Write;

use super::meta::{GadgetKind, GadgetMeta, RawLabel, Renormalization};
use crate::error::{Error, Result};
use crate::exact::{guard, tst_bruteforce, SearchLimits, SpanningTreeResult};
use crate::graph::{Label, Setting, TemporalGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn from_dimacs(x: i64) -> Self {
        Literal {
            var: x.unsigned_abs() as usize,
            positive: x > 0,
        }
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }
}

/// CNF over variables `x_1..x_nvars`. No clause is empty or contains a
/// variable together with its negation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    nvars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Clauses are given as DIMACS-style signed integers.
    pub fn new(nvars: usize, clauses: &[Vec<i64>]) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidInstance(format!("clause {} is empty", j + 1)));
            }
            let mut lits: Vec<Literal> = Vec::with_capacity(clause.len());
            for &x in clause {
                let lit = Literal::from_dimacs(x);
                if lit.var == 0 || lit.var > nvars {
                    return Err(Error::InvalidInstance(format!(
                        "literal {x} in clause {} outside x1..x{nvars}",
                        j + 1
                    )));
                }
                lits.push(lit);
            }
            lits.sort_unstable();
            lits.dedup();
            if lits.windows(2).any(|w| w[0].var == w[1].var) {
                return Err(Error::InvalidInstance(format!(
                    "clause {} contains a variable and its negation",
                    j + 1
                )));
            }
            out.push(lits);
        }
        Ok(CnfFormula {
            nvars,
            clauses: out,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| assignment[l.var - 1] == l.positive))
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses: Vec<Vec<i64>> = Vec::new();
        let mut current: Vec<i64> = Vec::new();
        let mut last_line = 1;
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                match parts.as_slice() {
                    ["p", "cnf", v, c] if header.is_none() => {
                        let num = |s: &str| {
                            s.parse::<usize>()
                                .map_err(|_| Error::parse(line_no, format!("bad count `{s}`")))
                        };
                        header = Some((num(v)?, num(c)?));
                    }
                    _ => return Err(Error::parse(line_no, "expected `p cnf <vars> <clauses>`")),
                }
                continue;
            }
            if header.is_none() {
                return Err(Error::parse(line_no, "clause before `p cnf` header"));
            }
            for tok in line.split_whitespace() {
                let x: i64 = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("`{tok}` is not an integer")))?;
                if x == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(x);
                }
            }
        }
        let (nvars, nclauses) =
            header.ok_or_else(|| Error::parse(last_line, "missing `p cnf` header"))?;
        if !current.is_empty() {
            return Err(Error::parse(last_line, "last clause not terminated by 0"));
        }
        if clauses.len() != nclauses {
            return Err(Error::parse(
                last_line,
                format!(
                    "header announces {nclauses} clauses, found {}",
                    clauses.len()
                ),
            ));
        }
        CnfFormula::new(nvars, &clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.nvars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                write!(out, "{} ", l.to_dimacs()).unwrap();
            }
            out.push_str("0\n");
        }
        out
    }
}

/// First satisfying assignment in the order where `x_1` varies slowest and
/// `false` comes before `true`.
pub fn sat_bruteforce(phi: &CnfFormula, limits: &SearchLimits) -> Result<Option<Vec<bool>>> {
    let n = phi.nvars();
    guard("variable count", n, limits.max_variables)?;
    for mask in 0u64..(1u64 << n) {
        let assignment: Vec<bool> = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
        if phi.evaluate(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Vertex ids of the SAT gadget: `B, T, F, x_1..x_n, c_1..c_k`.
pub fn sat_gadget_vertex(phi: &CnfFormula, name: SatVertex) -> Vertex {
    match name {
        SatVertex::Base => 0,
        SatVertex::True => 1,
        SatVertex::False => 2,
        SatVertex::Var(i) => 2 + i,
        SatVertex::Clause(j) => 2 + phi.nvars() + j,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatVertex {
    Base,
    True,
    False,
    /// 1-based
    Var(usize),
    /// 1-based
    Clause(usize),
}

/// Raw gadget labels, before renormalization, edge by edge.
pub fn sat_gadget_raw_edges(phi: &CnfFormula) -> Vec<(SatVertex, SatVertex, [RawLabel; 2])> {
    let n = phi.nvars() as i64;
    let k = phi.clauses().len() as i64;
    let t_plus = n + k + 1;
    let t_minus = -t_plus;
    let int = RawLabel::int;

    let mut edges = vec![
        (
            SatVertex::Base,
            SatVertex::True,
            [int(t_minus), RawLabel::eps(1)],
        ),
        (
            SatVertex::Base,
            SatVertex::False,
            [RawLabel::eps(-1), int(t_plus)],
        ),
    ];
    for i in 1..=phi.nvars() {
        let ii = i as i64;
        edges.push((
            SatVertex::True,
            SatVertex::Var(i),
            [int(t_minus - ii), int(ii)],
        ));
        edges.push((
            SatVertex::False,
            SatVertex::Var(i),
            [int(-ii), int(t_plus + ii)],
        ));
    }
    for (j0, clause) in phi.clauses().iter().enumerate() {
        let j = j0 + 1;
        for lit in clause {
            let s = (lit.var + j) as i64;
            let labels = if lit.positive {
                [int(t_minus - s), int(s)]
            } else {
                [int(-s), int(t_plus + s)]
            };
            edges.push((SatVertex::Var(lit.var), SatVertex::Clause(j), labels));
        }
    }
    edges
}

/// The renormalization used for a formula: ε = 1/2, labels doubled, then
/// shifted by `4n + 4k + 3` so the smallest possible raw label maps to 1.
pub fn sat_renormalization(phi: &CnfFormula) -> Renormalization {
    let n = phi.nvars() as i64;
    let k = phi.clauses().len() as i64;
    Renormalization {
        epsilon_num: 1,
        epsilon_den: 2,
        scale: 2,
        shift: 4 * n + 4 * k + 3,
    }
}

/// Proper temporal graph with two labels per edge that admits a temporal
/// spanning tree iff `phi` is satisfiable.
pub fn sat_to_tst_gadget(phi: &CnfFormula) -> (TemporalGraph, GadgetMeta) {
    let renorm = sat_renormalization(phi);
    let n_vertices = phi.nvars() + phi.clauses().len() + 3;
    let edges = sat_gadget_raw_edges(phi).into_iter().map(|(a, b, raw)| {
        let labels: Vec<Label> = raw.iter().map(|&r| renorm.apply(r)).collect();
        (sat_gadget_vertex(phi, a), sat_gadget_vertex(phi, b), labels)
    });
    let g = TemporalGraph::new(n_vertices, edges).expect("gadget edges are well formed");

    let mut names: Vec<String> = ["B", "T", "F"].map(String::from).to_vec();
    names.extend((1..=phi.nvars()).map(|i| format!("x{i}")));
    names.extend((1..=phi.clauses().len()).map(|j| format!("c{j}")));

    let class = g.classify();
    assert!(class.proper, "SAT gadget must be proper");
    assert!(
        g.edges().all(|(_, ls)| ls.len() == 2),
        "two labels per edge"
    );

    let meta = GadgetMeta {
        kind: GadgetKind::SatToTst,
        names,
        renormalization: Some(renorm),
        size_offset: None,
    };
    (g, meta)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TstReductionCheck {
    pub satisfiable: bool,
    pub tree_strict: bool,
    pub tree_non_strict: bool,
}

impl TstReductionCheck {
    pub fn holds(&self) -> bool {
        self.satisfiable == self.tree_strict && self.satisfiable == self.tree_non_strict
    }
}

/// Compares brute-force satisfiability with brute-force spanning tree search
/// on the gadget, in both settings.
pub fn verify_tst_reduction(phi: &CnfFormula, limits: &SearchLimits) -> Result<TstReductionCheck> {
    let satisfiable = sat_bruteforce(phi, limits)?.is_some();
    let (g, _) = sat_to_tst_gadget(phi);
    let tree = |s: Setting| -> Result<bool> {
        Ok(matches!(
            tst_bruteforce(&g, s, limits)?,
            SpanningTreeResult::Exists(_)
        ))
    };
    Ok(TstReductionCheck {
        satisfiable,
        tree_strict: tree(Setting::Strict)?,
        tree_non_strict: tree(Setting::NonStrict)?,
    })
}
