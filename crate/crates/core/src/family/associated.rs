use serde::Serialize;

use super::system::SystemData;
use crate::algebra::{validate_axioms, OperationTable, Profile};
use crate::report::AxiomReport;

/// A quandle-candidate on `X × G` with its pair indexing: `(x, g)` has index `x |G| + g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedQuandle {
    table: OperationTable,
    x_size: usize,
    g_size: usize,
}

impl AssociatedQuandle {
    pub fn new(table: OperationTable, x_size: usize, g_size: usize) -> Self {
        assert_eq!(table.size(), x_size * g_size, "table size must be |X||G|");
        AssociatedQuandle { table, x_size, g_size }
    }

    pub fn table(&self) -> &OperationTable {
        &self.table
    }

    pub fn into_table(self) -> OperationTable {
        self.table
    }

    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn g_size(&self) -> usize {
        self.g_size
    }

    #[inline]
    pub fn index(&self, x: usize, g: usize) -> usize {
        x * self.g_size + g
    }

    #[inline]
    pub fn pair(&self, i: usize) -> (usize, usize) {
        (i / self.g_size, i % self.g_size)
    }

    pub fn op(&self, a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
        self.pair(self.table.get(self.index(a.0, a.1), self.index(b.0, b.1)))
    }

    pub fn listing(&self) -> AssociatedListing {
        let n = self.table.size();
        AssociatedListing {
            x_size: self.x_size,
            g_size: self.g_size,
            pairs: (0..n).map(|i| self.pair(i)).collect(),
            table: self.table.rows().map(|r| r.to_vec()).collect(),
        }
    }
}

/// Serializable view used by the command line.
#[derive(Debug, Clone, Serialize)]
pub struct AssociatedListing {
    pub x_size: usize,
    pub g_size: usize,
    pub pairs: Vec<(usize, usize)>,
    pub table: Vec<Vec<usize>>,
}

/// `(x, g) · (y, h) = (x *_{f(g,h)} y, g ⊗ h)`, checked against the quandle axioms.
pub fn associated_quandle(data: &SystemData) -> (AssociatedQuandle, AxiomReport) {
    let n = data.g_size;
    let table = OperationTable::from_fn(data.x_size * n, |a, b| {
        let (x, g) = (a / n, a % n);
        let (y, h) = (b / n, b % n);
        data.star(data.f(g, h), x, y) * n + data.otimes(g, h)
    });
    let report = validate_axioms(&table, Profile::Quandle);
    (AssociatedQuandle::new(table, data.x_size, n), report)
}

/// `ρ(x, g) = (x, ρ_x(g))` as a permutation of pair indices.
pub fn associated_involution(data: &SystemData) -> Vec<usize> {
    let n = data.g_size;
    (0..data.x_size * n)
        .map(|i| (i / n) * n + data.rho(i / n, i % n))
        .collect()
}
