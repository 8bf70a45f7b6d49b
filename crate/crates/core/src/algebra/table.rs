use std::fmt;

use crate::error::{Error, Result};

/// A finite binary operation on the elements `0..size`, stored row-major:
/// `get(i, j)` is `i * j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OperationTable {
    size: usize,
    entries: Vec<usize>,
}

impl OperationTable {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Self::from_flat(size, entries)
    }

    pub fn from_flat(size: usize, entries: Vec<usize>) -> Result<Self> {
        if size == 0 || entries.len() != size * size {
            return Err(Error::InvalidTable(format!(
                "expected {} entries for size {size}",
                size * size
            )));
        }
        if let Some(pos) = entries.iter().position(|&e| e >= size) {
            return Err(Error::InvalidTable(format!(
                "entry [{}][{}] = {} out of range",
                pos / size,
                pos % size,
                entries[pos]
            )));
        }
        Ok(OperationTable { size, entries })
    }

    /// Builds a table from a closure. Panics if the closure leaves the carrier.
    pub fn from_fn(size: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                let v = op(i, j);
                assert!(v < size, "operation result {v} out of range for size {size}");
                entries.push(v);
            }
        }
        OperationTable { size, entries }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: usize) -> Result<()> {
        if i >= self.size || j >= self.size || value >= self.size {
            return Err(Error::InvalidTable(format!(
                "cannot set [{i}][{j}] = {value} in a table of size {}",
                self.size
            )));
        }
        self.entries[i * self.size + j] = value;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.entries.chunks(self.size)
    }

    /// The right translation `i -> i * j`.
    pub fn column(&self, j: usize) -> Vec<usize> {
        (0..self.size).map(|i| self.get(i, j)).collect()
    }

    /// First column that is not a permutation, if any.
    pub fn non_invertible_column(&self) -> Option<usize> {
        (0..self.size).find(|&j| !is_permutation(&self.column(j)))
    }

    pub fn is_right_invertible(&self) -> bool {
        self.non_invertible_column().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }
}

impl fmt::Debug for OperationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperationTable(")?;
        f.debug_list().entries(self.rows()).finish()?;
        write!(f, ")")
    }
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &v in p {
        if v >= p.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub fn invert_permutation(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}
