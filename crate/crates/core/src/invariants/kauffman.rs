use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::linking::linking_matrix;
use crate::colour::{count_colourings, CountMode};
use crate::diagram::{compute_edges, delete_edges, Diagram};
use crate::error::{Error, Result};
use crate::family::SystemData;

/// Constituent links: for each choice of one end to drop at every vertex,
/// delete the chosen edges when that leaves every vertex with exactly two
/// ends. The result has one entry per admissible choice, in lexicographic
/// order of the choices.
pub fn kauffman_constituents(d: &Diagram) -> Result<Vec<Diagram>> {
    if let Some(v) = d.vertices.iter().position(|v| v.valence() != 3) {
        return Err(Error::NotApplicable(format!("vertex {v} is not trivalent")));
    }
    let edges = compute_edges(d)?;
    let mut end_edge = vec![[0usize; 3]; d.vertices.len()];
    for (i, e) in edges.iter().enumerate() {
        if let Some(((v1, p1), (v2, p2))) = e.endpoints {
            end_edge[v1][p1] = i;
            end_edge[v2][p2] = i;
        }
    }
    let n = d.vertices.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let dropped: BTreeSet<usize> = (0..n).map(|v| end_edge[v][choice[v]]).collect();
        let admissible = end_edge
            .iter()
            .all(|ends| ends.iter().filter(|e| dropped.contains(e)).count() == 1);
        if admissible {
            out.push(delete_edges(d, &dropped)?);
        }
        // odometer, last vertex fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < 3 {
                break;
            }
            choice[i] = 0;
        }
    }
}

pub enum KauffmanInvariant<'a> {
    Linking,
    ColourCount(&'a SystemData),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum KauffmanValue {
    Linking(Vec<i64>),
    Count(u64),
}

impl fmt::Display for KauffmanValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KauffmanValue::Linking(v) => {
                let s: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "[{}]", s.join(","))
            }
            KauffmanValue::Count(n) => write!(f, "{n}"),
        }
    }
}

/// The invariant evaluated on every constituent, as a sorted multiset.
pub fn kauffman_summary(d: &Diagram, invariant: &KauffmanInvariant) -> Result<Vec<KauffmanValue>> {
    let mut out = kauffman_constituents(d)?
        .iter()
        .map(|c| match invariant {
            KauffmanInvariant::Linking => Ok(KauffmanValue::Linking(linking_matrix(c)?.sorted_entries())),
            KauffmanInvariant::ColourCount(sys) => Ok(KauffmanValue::Count(count_colourings(c, sys, CountMode::All)?)),
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}
