use crate::algebra::{dual_operation, is_permutation, OperationTable};
use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// Checks `ρ² = id` (`I1`), `(u*v)*ρ(v) = u` (`I2`) and `ρ(u)*v = ρ(u*v)` (`I3`).
///
/// The alternative form `u*ρ(v) = u ∗̄ v` is checked independently as `I2'`;
/// when the table is right-invertible its verdict must agree with `I2`, and a
/// disagreement is recorded as `I2-EQUIV`.
pub fn validate_involution(q: &OperationTable, rho: &[usize]) -> Result<AxiomReport> {
    let n = q.size();
    if rho.len() != n || !is_permutation(rho) {
        return Err(Error::NotPermutation(format!("{rho:?} on {n} elements")));
    }
    let mut r = AxiomReport::new();
    for u in 0..n {
        r.check(rho[rho[u]] == u, "I1", &[u]);
    }
    for u in 0..n {
        for (v, &rv) in rho.iter().enumerate() {
            r.check(q.get(q.get(u, v), rv) == u, "I2", &[u, v]);
        }
    }
    for u in 0..n {
        for v in 0..n {
            r.check(q.get(rho[u], v) == rho[q.get(u, v)], "I3", &[u, v]);
        }
    }
    if let Ok(dual) = dual_operation(q) {
        for u in 0..n {
            for (v, &rv) in rho.iter().enumerate() {
                r.check(q.get(u, rv) == dual.get(u, v), "I2'", &[u, v]);
            }
        }
        if r.has_failure("I2") != r.has_failure("I2'") {
            r.record("I2-EQUIV", &[]);
        }
    }
    Ok(r)
}

/// All good involutions of `q`, in lexicographic order.
pub fn search_involutions(q: &OperationTable) -> Vec<Vec<usize>> {
    let n = q.size();
    let mut out = Vec::new();
    let mut rho = vec![usize::MAX; n];
    extend(q, &mut rho, 0, &mut out);
    out
}

fn extend(q: &OperationTable, rho: &mut [usize], u: usize, out: &mut Vec<Vec<usize>>) {
    let n = rho.len();
    if u == n {
        if validate_involution(q, rho).map(|r| r.valid).unwrap_or(false) {
            out.push(rho.to_vec());
        }
        return;
    }
    if rho[u] != usize::MAX {
        return extend(q, rho, u + 1, out);
    }
    for w in u..n {
        if rho[w] != usize::MAX {
            continue;
        }
        rho[u] = w;
        rho[w] = u;
        if consistent(q, rho) {
            extend(q, rho, u + 1, out);
        }
        rho[u] = usize::MAX;
        rho[w] = usize::MAX;
    }
}

/// Prunes on `I2` and `I3` among pairs whose images are already fixed.
fn consistent(q: &OperationTable, rho: &[usize]) -> bool {
    let n = rho.len();
    let set = |i: usize| rho[i] != usize::MAX;
    for v in (0..n).filter(|&v| set(v)) {
        for u in 0..n {
            if q.get(q.get(u, v), rho[v]) != u {
                return false;
            }
            if set(u) {
                let uv = q.get(u, v);
                if set(uv) && q.get(rho[u], v) != rho[uv] {
                    return false;
                }
            }
        }
    }
    true
}
