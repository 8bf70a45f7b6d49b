use serde::Serialize;

use crate::diagram::{compute_edges, Diagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkingMatrix {
    pub component_count: usize,
    pub matrix: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    /// Entries above the diagonal, sorted.
    pub fn sorted_entries(&self) -> Vec<i64> {
        let mut v: Vec<i64> = (0..self.component_count)
            .flat_map(|i| ((i + 1)..self.component_count).map(move |j| (i, j)))
            .map(|(i, j)| self.matrix[i][j])
            .collect();
        v.sort_unstable();
        v
    }
}

/// Component of each arc, components numbered by their lowest arc.
pub fn link_components(d: &Diagram) -> Result<Vec<usize>> {
    if !d.is_link() {
        return Err(Error::NotApplicable("diagram has vertices".into()));
    }
    let mut comp = vec![0; d.arc_count];
    for (i, e) in compute_edges(d)?.iter().enumerate() {
        for &a in &e.arcs {
            comp[a] = i;
        }
    }
    Ok(comp)
}

/// Linking numbers: half the signed count of crossings between two components.
pub fn linking_matrix(d: &Diagram) -> Result<LinkingMatrix> {
    let comp = link_components(d)?;
    let n = comp.iter().map(|c| c + 1).max().unwrap_or(0);
    let mut twice = vec![vec![0i64; n]; n];
    for c in &d.crossings {
        let (i, j) = (comp[c.over], comp[c.under_in]);
        if i != j {
            twice[i][j] += c.sign.value();
            twice[j][i] += c.sign.value();
        }
    }
    if twice.iter().flatten().any(|s| s % 2 != 0) {
        return Err(Error::InvalidDiagram(
            "odd crossing count between two components".into(),
        ));
    }
    let matrix = twice
        .into_iter()
        .map(|row| row.into_iter().map(|s| s / 2).collect())
        .collect();
    Ok(LinkingMatrix {
        component_count: n,
        matrix,
    })
}
