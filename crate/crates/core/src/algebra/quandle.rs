use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::AxiomReport;

use super::group::{check_group, GroupTable};
use super::table::{invert_permutation, is_permutation, OperationTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Quandle,
    Rack,
    Kei,
    Group { identity: usize },
}

/// Checks a table against an axiom profile.
///
/// Axiom ids: `Q1` idempotency, `Q2` right translations are bijections,
/// `Q3` right self-distributivity, `K` right translations are involutions,
/// and `G-assoc`/`G-identity`/`G-inverse` for groups.
pub fn validate_axioms(table: &OperationTable, profile: Profile) -> AxiomReport {
    match profile {
        Profile::Group { identity } => check_group(table, identity),
        Profile::Quandle => rack_axioms(table, true, false),
        Profile::Rack => rack_axioms(table, false, false),
        Profile::Kei => rack_axioms(table, true, true),
    }
}

fn rack_axioms(t: &OperationTable, idempotent: bool, kei: bool) -> AxiomReport {
    let n = t.size();
    let mut r = AxiomReport::new();
    if idempotent {
        for i in 0..n {
            r.check(t.get(i, i) == i, "Q1", &[i]);
        }
    }
    for j in 0..n {
        let col = t.column(j);
        if !is_permutation(&col) {
            // witness: two rows with the same image in column j
            let mut first = vec![usize::MAX; n];
            for (i, &v) in col.iter().enumerate() {
                if first[v] != usize::MAX {
                    r.record("Q2", &[first[v], i, j]);
                    break;
                }
                first[v] = i;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = t.get(i, j);
            for k in 0..n {
                r.check(t.get(ij, k) == t.get(t.get(i, k), t.get(j, k)), "Q3", &[i, j, k]);
            }
        }
    }
    if kei {
        for i in 0..n {
            for j in 0..n {
                r.check(t.get(t.get(i, j), j) == i, "K", &[i, j]);
            }
        }
    }
    r
}

#[derive(Debug, Clone)]
pub enum QuandleKind {
    Trivial(usize),
    Dihedral(usize),
    /// `g * h = h^{-n} g h^n`
    Conj(GroupTable, usize),
    /// `g * h = h g^{-1} h`, abelian groups only
    Takasaki(GroupTable),
    /// `g * h = phi(g h^{-1}) h`
    Alexander(GroupTable, Vec<usize>),
}

pub fn standard_quandle(kind: &QuandleKind) -> Result<OperationTable> {
    Ok(match kind {
        QuandleKind::Trivial(n) => OperationTable::from_fn(*n, |i, _| i),
        QuandleKind::Dihedral(n) => {
            let n = *n;
            OperationTable::from_fn(n, |i, j| (2 * j + n - i % n) % n)
        }
        QuandleKind::Conj(g, n) => {
            let n = n % g.exponent();
            OperationTable::from_fn(g.order(), |a, b| {
                let bn = g.pow(b, n);
                g.mul(g.mul(g.inv(bn), a), bn)
            })
        }
        QuandleKind::Takasaki(g) => {
            if !g.is_abelian() {
                return Err(Error::NotAbelian(format!("of order {}", g.order())));
            }
            OperationTable::from_fn(g.order(), |a, b| g.mul(g.mul(b, g.inv(a)), b))
        }
        QuandleKind::Alexander(g, phi) => {
            if !g.is_automorphism(phi) {
                return Err(Error::NotAutomorphism(format!("{phi:?}")));
            }
            OperationTable::from_fn(g.order(), |a, b| g.mul(phi[g.mul(a, g.inv(b))], b))
        }
    })
}

/// The inverse operation: `(a * b) *bar b = a`.
pub fn dual_operation(table: &OperationTable) -> Result<OperationTable> {
    let n = table.size();
    let mut inv_cols = Vec::with_capacity(n);
    for j in 0..n {
        let col = table.column(j);
        if !is_permutation(&col) {
            return Err(Error::NotRightInvertible { column: j });
        }
        inv_cols.push(invert_permutation(&col));
    }
    Ok(OperationTable::from_fn(n, |i, j| inv_cols[j][i]))
}

/// Smallest subset containing `seeds` closed under the operation and its dual.
pub fn generated_subalgebra(table: &OperationTable, seeds: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    let dual = dual_operation(table)?;
    closure_with_dual(table, &dual, seeds)
}

/// As [`generated_subalgebra`] with a precomputed dual.
pub fn closure_with_dual(
    table: &OperationTable,
    dual: &OperationTable,
    seeds: &BTreeSet<usize>,
) -> Result<BTreeSet<usize>> {
    if let Some(&s) = seeds.iter().find(|&&s| s >= table.size()) {
        return Err(Error::InvalidTable(format!("seed {s} out of range")));
    }
    let mut set = seeds.clone();
    let mut work: Vec<usize> = seeds.iter().rev().copied().collect();
    let mut members: Vec<usize> = seeds.iter().copied().collect();
    while let Some(a) = work.pop() {
        let mut fresh = BTreeSet::new();
        for &b in &members {
            for v in [table.get(a, b), table.get(b, a), dual.get(a, b), dual.get(b, a)] {
                if !set.contains(&v) {
                    fresh.insert(v);
                }
            }
        }
        for v in fresh.into_iter().rev() {
            if set.insert(v) {
                members.push(v);
                work.push(v);
            }
        }
    }
    Ok(set)
}

/// Number of maps `phi` with `phi(a * b) = phi(a) * phi(b)`.
///
/// The search branches on the images of the lowest unassigned source element and
/// propagates every value forced by the homomorphism equation. The top-level
/// branches run in parallel; the total is independent of scheduling.
pub fn hom_count(source: &OperationTable, target: &OperationTable, surjective_only: bool) -> u64 {
    let n = source.size();
    let m = target.size();
    (0..m)
        .into_par_iter()
        .map(|first| {
            let mut assign = vec![usize::MAX; n];
            assign[0] = first;
            let mut count = 0;
            hom_search(source, target, surjective_only, &mut assign, &mut count);
            count
        })
        .sum()
}

fn propagate(source: &OperationTable, target: &OperationTable, assign: &mut [usize]) -> bool {
    let n = source.size();
    loop {
        let mut changed = false;
        for a in 0..n {
            if assign[a] == usize::MAX {
                continue;
            }
            for b in 0..n {
                if assign[b] == usize::MAX {
                    continue;
                }
                let c = source.get(a, b);
                let v = target.get(assign[a], assign[b]);
                if assign[c] == usize::MAX {
                    assign[c] = v;
                    changed = true;
                } else if assign[c] != v {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn hom_search(
    source: &OperationTable,
    target: &OperationTable,
    surjective_only: bool,
    assign: &mut Vec<usize>,
    count: &mut u64,
) {
    let saved = assign.clone();
    if !propagate(source, target, assign) {
        *assign = saved;
        return;
    }
    match assign.iter().position(|&v| v == usize::MAX) {
        None => {
            if !surjective_only || {
                let image: BTreeSet<usize> = assign.iter().copied().collect();
                image.len() == target.size()
            } {
                *count += 1;
            }
        }
        Some(next) => {
            for v in 0..target.size() {
                assign[next] = v;
                hom_search(source, target, surjective_only, assign, count);
                assign[next] = usize::MAX;
            }
        }
    }
    *assign = saved;
}
