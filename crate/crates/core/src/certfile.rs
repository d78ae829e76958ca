//! Certificate files and export formats.
//!
//! The JSON form is
//!
//! ```json
//! {"format": "hqd-cert-v1", "n": 4, "cycle_length": 8,
//!  "cycles": [{"id": 0, "partition_set": 0, "vertices": [0, 2, 10, 11, 3, 1, 9, 8]}]}
//! ```
//!
//! Vertices are written as integers, or as binary strings (leftmost
//! character = lowest bit) with [`LabelStyle::Binary`]. Reading accepts both.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decomposition::{CycleSeq, PartitionedDecomposition};
use crate::error::{Error, Result};
use crate::hypercube::{coords_string, label_from_coords, HypercubeDim, VertexLabel};

pub const FORMAT_TAG: &str = "hqd-cert-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelStyle {
    #[default]
    Integer,
    Binary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRepr {
    Int(VertexLabel),
    Bits(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleRecord {
    pub id: usize,
    pub partition_set: usize,
    pub vertices: Vec<VertexRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub format: String,
    pub n: u32,
    pub cycle_length: usize,
    pub cycles: Vec<CycleRecord>,
}

impl CertificateFile {
    pub fn from_decomposition(d: &PartitionedDecomposition, labels: LabelStyle) -> Self {
        let n = d.host();
        let cycles = d
            .cycles()
            .iter()
            .zip(d.set_of())
            .enumerate()
            .map(|(id, (c, &s))| CycleRecord {
                id,
                partition_set: s,
                vertices: c
                    .vertices()
                    .iter()
                    .map(|&v| match labels {
                        LabelStyle::Integer => VertexRepr::Int(v),
                        LabelStyle::Binary => VertexRepr::Bits(coords_string(v, n)),
                    })
                    .collect(),
            })
            .collect();
        CertificateFile { format: FORMAT_TAG.to_string(), n: n.get(), cycle_length: d.cycle_length(), cycles }
    }

    /// Structural validation only; graph properties are left to the
    /// checker so that corrupted certificates can still be reported on.
    pub fn into_decomposition(self) -> Result<PartitionedDecomposition> {
        if self.format != FORMAT_TAG {
            return Err(Error::Parse(format!("format tag {:?}, expected {FORMAT_TAG:?}", self.format)));
        }
        let n = HypercubeDim::new(self.n).map_err(|e| Error::Parse(e.to_string()))?;
        if self.cycles.is_empty() {
            return Err(Error::Parse("certificate lists no cycles".into()));
        }
        let mut cycles = Vec::with_capacity(self.cycles.len());
        let mut set_of = Vec::with_capacity(self.cycles.len());
        for (k, rec) in self.cycles.into_iter().enumerate() {
            if rec.id != k {
                return Err(Error::Parse(format!("cycle record {k} has id {}", rec.id)));
            }
            if rec.vertices.is_empty() {
                return Err(Error::Parse(format!("cycle {k} has no vertices")));
            }
            let vs = rec
                .vertices
                .into_iter()
                .map(|v| match v {
                    VertexRepr::Int(x) => Ok(x),
                    VertexRepr::Bits(s) if s.len() == n.get() as usize => {
                        label_from_coords(&s).map_err(|e| Error::Parse(e.to_string()))
                    }
                    VertexRepr::Bits(s) => Err(Error::Parse(format!("label {s:?} does not have {} characters", n.get()))),
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(CycleSeq::new(vs));
            set_of.push(rec.partition_set);
        }
        PartitionedDecomposition::new(n, self.cycle_length, cycles, set_of)
    }
}

pub fn to_json(d: &PartitionedDecomposition, labels: LabelStyle) -> Result<String> {
    let mut s = serde_json::to_string(&CertificateFile::from_decomposition(d, labels))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(text: &str) -> Result<PartitionedDecomposition> {
    let file: CertificateFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_decomposition()
}

/// One line per cycle: `<id> <set>: v v v ...`, after a header line.
pub fn to_text(d: &PartitionedDecomposition, labels: LabelStyle) -> String {
    let n = d.host();
    let mut out = format!("# {FORMAT_TAG} n={} cycle_length={} cycles={}\n", n.get(), d.cycle_length(), d.num_cycles());
    for (id, (c, s)) in d.cycles().iter().zip(d.set_of()).enumerate() {
        let _ = write!(out, "{id} {s}:");
        for &v in c.vertices() {
            match labels {
                LabelStyle::Integer => {
                    let _ = write!(out, " {v}");
                }
                LabelStyle::Binary => {
                    let _ = write!(out, " {}", coords_string(v, n));
                }
            }
        }
        out.push('\n');
    }
    out
}

const SET_STYLES: [&str; 4] = ["solid", "dashed", "dotted", "bold"];

/// Graphviz view: one colour per cycle, one line style per partition set.
pub fn to_dot(d: &PartitionedDecomposition, labels: LabelStyle) -> String {
    let n = d.host();
    let total = d.num_cycles().max(1);
    let mut out = format!("graph Q{} {{\n  node [shape=circle, fontsize=10];\n", n.get());
    for v in 0..n.num_vertices() {
        let label = match labels {
            LabelStyle::Integer => v.to_string(),
            LabelStyle::Binary => coords_string(v, n),
        };
        let _ = writeln!(out, "  {v} [label=\"{label}\"];");
    }
    for (id, (c, &s)) in d.cycles().iter().zip(d.set_of()).enumerate() {
        let hue = id as f64 / total as f64;
        let style = SET_STYLES[s % SET_STYLES.len()];
        let width = 1 + s / SET_STYLES.len();
        for (u, v) in c.steps() {
            let _ = writeln!(
                out,
                "  {u} -- {v} [color=\"{hue:.3} 0.850 0.750\", style={style}, penwidth={width}, cycle={id}, set={s}];"
            );
        }
    }
    out.push_str("}\n");
    out
}
