use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Label, Vertex};

/// A gadget label before renormalization: `whole + epsilons * ε`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RawLabel {
    pub whole: i64,
    pub epsilons: i64,
}

impl RawLabel {
    pub const fn int(whole: i64) -> Self {
        RawLabel { whole, epsilons: 0 }
    }

    pub const fn eps(epsilons: i64) -> Self {
        RawLabel { whole: 0, epsilons }
    }
}

/// Affine map `x ↦ scale * x + shift`, with ε fixed to
/// `epsilon_num / epsilon_den`, taking raw labels to positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Renormalization {
    pub epsilon_num: i64,
    pub epsilon_den: i64,
    pub scale: i64,
    pub shift: i64,
}

impl Renormalization {
    pub fn apply(&self, raw: RawLabel) -> Label {
        let per_eps = self.scale * self.epsilon_num;
        debug_assert_eq!(per_eps % self.epsilon_den, 0, "ε must scale to an integer");
        let value = self.scale * raw.whole + per_eps / self.epsilon_den * raw.epsilons + self.shift;
        Label::try_from(value)
            .ok()
            .filter(|&l| l >= 1)
            .unwrap_or_else(|| panic!("renormalized label {value} is not positive"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    SatToTst,
    SetCoverToKbs,
}

impl GadgetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GadgetKind::SatToTst => "sat-to-tst",
            GadgetKind::SetCoverToKbs => "setcover-to-kbs",
        }
    }
}

/// Side table tying gadget vertices and labels back to the source instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMeta {
    pub kind: GadgetKind,
    /// `names[v]` is the display name of vertex `v`.
    pub names: Vec<String>,
    pub renormalization: Option<Renormalization>,
    /// For set cover gadgets: a cover of size `k` matches a bi-spanner with
    /// `size_offset + k` edges.
    pub size_offset: Option<usize>,
}

impl GadgetMeta {
    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|x| x == name)
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn expected_bispanner_size(&self, cover_size: usize) -> Option<usize> {
        self.size_offset.map(|o| o + cover_size)
    }

    /// `key=value` lines.
    pub fn to_sidecar(&self) -> String {
        let mut out = String::new();
        writeln!(out, "kind={}", self.kind.as_str()).unwrap();
        writeln!(out, "vertices={}", self.names.len()).unwrap();
        for (v, name) in self.names.iter().enumerate() {
            writeln!(out, "vertex.{v}={name}").unwrap();
        }
        if let Some(r) = &self.renormalization {
            writeln!(out, "renorm.epsilon={}/{}", r.epsilon_num, r.epsilon_den).unwrap();
            writeln!(out, "renorm.scale={}", r.scale).unwrap();
            writeln!(out, "renorm.shift={}", r.shift).unwrap();
        }
        if let Some(o) = self.size_offset {
            writeln!(out, "size.offset={o}").unwrap();
            out.push_str("size.formula=3n+2m+3+k\n");
        }
        out
    }

    pub fn parse_sidecar(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut count = None;
        let mut names: Vec<Option<String>> = Vec::new();
        let (mut eps, mut scale, mut shift) = (None, None, None);
        let mut size_offset = None;

        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(line_no, "expected key=value"))?;
            let int = |v: &str| -> Result<i64> {
                v.parse()
                    .map_err(|_| Error::parse(line_no, format!("`{v}` is not an integer")))
            };
            match key {
                "kind" => {
                    kind = Some(match value {
                        "sat-to-tst" => GadgetKind::SatToTst,
                        "setcover-to-kbs" => GadgetKind::SetCoverToKbs,
                        _ => return Err(Error::parse(line_no, format!("unknown kind `{value}`"))),
                    })
                }
                "vertices" => {
                    let n = usize::try_from(int(value)?)
                        .map_err(|_| Error::parse(line_no, "negative vertex count"))?;
                    count = Some(n);
                    names.resize(n, None);
                }
                "renorm.epsilon" => {
                    let (a, b) = value
                        .split_once('/')
                        .ok_or_else(|| Error::parse(line_no, "epsilon must be num/den"))?;
                    eps = Some((int(a)?, int(b)?));
                }
                "renorm.scale" => scale = Some(int(value)?),
                "renorm.shift" => shift = Some(int(value)?),
                "size.offset" => {
                    size_offset = Some(
                        usize::try_from(int(value)?)
                            .map_err(|_| Error::parse(line_no, "negative offset"))?,
                    )
                }
                "size.formula" => {}
                _ => {
                    let idx = key
                        .strip_prefix("vertex.")
                        .and_then(|k| k.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(line_no, format!("unknown key `{key}`")))?;
                    let slot = names
                        .get_mut(idx)
                        .ok_or_else(|| Error::parse(line_no, "vertex index out of range"))?;
                    *slot = Some(value.to_string());
                }
            }
        }

        let end = text.lines().count().max(1);
        let kind = kind.ok_or_else(|| Error::parse(end, "missing kind"))?;
        count.ok_or_else(|| Error::parse(end, "missing vertices"))?;
        let names = names
            .into_iter()
            .enumerate()
            .map(|(v, n)| n.ok_or_else(|| Error::parse(end, format!("vertex {v} has no name"))))
            .collect::<Result<Vec<_>>>()?;
        let renormalization = match (eps, scale, shift) {
            (Some((epsilon_num, epsilon_den)), Some(scale), Some(shift)) => Some(Renormalization {
                epsilon_num,
                epsilon_den,
                scale,
                shift,
            }),
            (None, None, None) => None,
            _ => return Err(Error::parse(end, "incomplete renormalization")),
        };
        Ok(GadgetMeta {
            kind,
            names,
            renormalization,
            size_offset,
        })
    }
}
