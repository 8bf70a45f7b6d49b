use super::system::SystemData;
use super::validate::{validate_family, FamilyKind};
use crate::algebra::{is_permutation, GroupTable, OperationTable};
use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// An `S`-axet: a group `G` acting on `X` and `τ: X × S → G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxetData {
    pub s_group: GroupTable,
    pub g_group: GroupTable,
    pub x_size: usize,
    /// `action[g]` is the permutation of `X` induced by `g`.
    pub action: Vec<Vec<usize>>,
    /// `tau[x][s] = τ_x(s)`
    pub tau: Vec<Vec<usize>>,
}

impl AxetData {
    /// Left action: `act(g, x) = g x`.
    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }

    fn check_shape(&self) -> Result<()> {
        let (m, gn, sn) = (self.x_size, self.g_group.order(), self.s_group.order());
        if m == 0 {
            return Err(Error::InvalidTable("empty X".into()));
        }
        if self.action.len() != gn {
            return Err(Error::InvalidTable("one action permutation per element of G".into()));
        }
        for (g, p) in self.action.iter().enumerate() {
            if p.len() != m || !is_permutation(p) {
                return Err(Error::NotPermutation(format!("action of {g}: {p:?}")));
            }
        }
        if self.tau.len() != m || self.tau.iter().any(|r| r.len() != sn || r.iter().any(|&v| v >= gn)) {
            return Err(Error::InvalidTable(
                "tau must be an |X| x |S| matrix of G-indices".into(),
            ));
        }
        Ok(())
    }

    /// `ACT` (group action), `AX1` (τ_x(s) fixes x), `AX2` (τ_x a homomorphism),
    /// `AX3` (equivariance `τ_{gx}(s) = g τ_x(s) g⁻¹`).
    pub fn validate(&self) -> Result<AxiomReport> {
        self.check_shape()?;
        let (g, s) = (&self.g_group, &self.s_group);
        let mut r = AxiomReport::new();
        for a in 0..g.order() {
            for b in 0..g.order() {
                for x in 0..self.x_size {
                    let ok = self.act(g.mul(a, b), x) == self.act(a, self.act(b, x));
                    r.check(ok, "ACT", &[a, b, x]);
                }
            }
        }
        for x in 0..self.x_size {
            for t in 0..s.order() {
                r.check(self.act(self.tau[x][t], x) == x, "AX1", &[x, t]);
            }
        }
        for x in 0..self.x_size {
            for t in 0..s.order() {
                for u in 0..s.order() {
                    let ok = g.mul(self.tau[x][t], self.tau[x][u]) == self.tau[x][s.mul(t, u)];
                    r.check(ok, "AX2", &[x, t, u]);
                }
            }
        }
        for x in 0..self.x_size {
            for t in 0..s.order() {
                for a in 0..g.order() {
                    let lhs = self.tau[self.act(a, x)][t];
                    let rhs = g.mul(g.mul(a, self.tau[x][t]), g.inv(a));
                    r.check(lhs == rhs, "AX3", &[x, t, a]);
                }
            }
        }
        Ok(r)
    }

    /// Whether `S` is commutative and every `τ_x(e)` acts trivially on `X`.
    pub fn admits_trivalent_structure(&self) -> bool {
        let e = self.s_group.identity();
        self.s_group.is_abelian()
            && self
                .tau
                .iter()
                .all(|row| (0..self.x_size).all(|y| self.act(row[e], y) == y))
    }
}

/// The system `x *_s y = τ_y(s) x`, `f(s, s') = s'`, `s ⊗ s' = s` over `G := S`.
///
/// When [`AxetData::admits_trivalent_structure`] holds, `s ⊕ s' = s' s` and
/// `ρ_x(s) = s⁻¹` are installed too. The report merges `fw_system` and, when
/// applicable, `trivalent_compatible` and `associative_composition`, each
/// prefixed by its kind name.
pub fn axet_to_system(a: &AxetData) -> Result<(SystemData, AxiomReport)> {
    let pre = a.validate()?;
    if !pre.valid {
        return Err(Error::precondition("axet axioms fail", pre));
    }
    let s = &a.s_group;
    let n = s.order();
    let stars = (0..n)
        .map(|t| OperationTable::from_fn(a.x_size, |x, y| a.act(a.tau[y][t], x)))
        .collect();
    let f = (0..n).map(|_| (0..n).collect()).collect();
    let otimes = OperationTable::from_fn(n, |t, _| t);
    let mut sys = SystemData::new(stars, f, otimes)?.with_group(s.clone())?;
    let mut report = AxiomReport::new();
    let mut kinds = vec![FamilyKind::FwSystem];
    if a.admits_trivalent_structure() {
        sys = sys
            .with_oplus(OperationTable::from_fn(n, |t, u| s.mul(u, t)))?
            .with_rho(vec![s.inverses().to_vec(); a.x_size])?;
        kinds.push(FamilyKind::TrivalentCompatible);
        kinds.push(FamilyKind::AssociativeComposition);
    }
    for kind in &kinds {
        report.merge_prefixed(&kind.to_string(), validate_family(&sys, kind)?);
    }
    Ok((sys, report))
}
