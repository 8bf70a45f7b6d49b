use std::collections::BTreeMap;

use crate::algebra::{is_permutation, GroupTable, OperationTable};
use crate::error::{Error, Result};

/// Composition table `G^k -> G`, indexed row-major: `(g_1, ..., g_k)` maps to
/// entry `g_1 n^{k-1} + ... + g_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gamma {
    arity: usize,
    n: usize,
    table: Vec<usize>,
}

impl Gamma {
    pub const MAX_ARITY: usize = 4;

    pub fn new(arity: usize, n: usize, table: Vec<usize>) -> Result<Self> {
        if !(2..=Self::MAX_ARITY).contains(&arity) {
            return Err(Error::InvalidTable(format!(
                "composition arity {arity} outside 2..={}",
                Self::MAX_ARITY
            )));
        }
        if table.len() != n.pow(arity as u32) || table.iter().any(|&v| v >= n) {
            return Err(Error::InvalidTable(format!(
                "composition table of arity {arity} over {n} elements is malformed"
            )));
        }
        Ok(Gamma { arity, n, table })
    }

    pub fn from_fn(arity: usize, n: usize, op: impl Fn(&[usize]) -> usize) -> Result<Self> {
        let mut table = Vec::with_capacity(n.pow(arity as u32));
        let mut args = vec![0; arity];
        for code in 0..n.pow(arity as u32) {
            decode(code, n, &mut args);
            table.push(op(&args));
        }
        Self::new(arity, n, table)
    }

    pub fn from_binary(op: &OperationTable) -> Self {
        Gamma {
            arity: 2,
            n: op.size(),
            table: op.entries().to_vec(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let code = args.iter().fold(0, |acc, &a| acc * self.n + a);
        self.table[code]
    }

    pub fn entries(&self) -> &[usize] {
        &self.table
    }
}

/// Writes the base-`n` digits of `code` into `out`, most significant first.
pub(crate) fn decode(mut code: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = code % n;
        code /= n;
    }
}

/// A carrier pair `(X, G)` with the family of operations `*_g` on `X`, the
/// twisting map `f`, the operations `⊗` and (optionally) `⊕` on `G`,
/// optional higher composition tables and the involution `ρ_x` on `G`.
///
/// One structure covers G-families, (G,*,f)-families, Q-families and the
/// general (f,⊗)-systems; which axioms hold is decided by
/// [`validate_family`](super::validate_family).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemData {
    pub x_size: usize,
    pub g_size: usize,
    /// Group structure on `G`, when `G` is a group.
    pub group: Option<GroupTable>,
    /// `stars[g]` is the table of `*_g` on `X`.
    pub stars: Vec<OperationTable>,
    /// `f[g][h] = f(g, h)`
    pub f: Vec<Vec<usize>>,
    pub otimes: OperationTable,
    pub oplus: Option<OperationTable>,
    /// Composition tables of arity 3 and 4 (arity 2 is `oplus`).
    pub gammas: BTreeMap<usize, Gamma>,
    /// `rho[x]` is the permutation `ρ_x` of `G`.
    pub rho: Option<Vec<Vec<usize>>>,
}

impl SystemData {
    /// General system; shapes are checked, axioms are not.
    pub fn new(stars: Vec<OperationTable>, f: Vec<Vec<usize>>, otimes: OperationTable) -> Result<Self> {
        let g_size = otimes.size();
        let x_size = stars.first().map(|s| s.size()).unwrap_or(0);
        let s = SystemData {
            x_size,
            g_size,
            group: None,
            stars,
            f,
            otimes,
            oplus: None,
            gammas: BTreeMap::new(),
            rho: None,
        };
        s.check_shape()?;
        Ok(s)
    }

    /// A G-family packaged as a system: `f(g,h) = h`, `g ⊗ h = h^{-1} g h`,
    /// `g ⊕ h = gh` and `ρ_x(g) = g^{-1}`.
    pub fn g_family(group: GroupTable, stars: Vec<OperationTable>) -> Result<Self> {
        let n = group.order();
        let otimes = OperationTable::from_fn(n, |g, h| group.conjugate(g, h));
        let f = (0..n).map(|_| (0..n).collect()).collect();
        let mut s = Self::new(stars, f, otimes)?;
        s.oplus = Some(group.table().clone());
        let x_size = s.x_size;
        s.rho = Some(vec![group.inverses().to_vec(); x_size]);
        s.group = Some(group);
        s.check_shape()?;
        Ok(s)
    }

    /// A (G,*,f)-family: `quandle` is the operation `*` on `G`, stored as `⊗`;
    /// `⊕` is the group product.
    pub fn gsf_family(
        group: GroupTable,
        quandle: OperationTable,
        f: Vec<Vec<usize>>,
        stars: Vec<OperationTable>,
    ) -> Result<Self> {
        let oplus = group.table().clone();
        Self::new(stars, f, quandle)?.with_oplus(oplus)?.with_group(group)
    }

    pub fn with_oplus(mut self, oplus: OperationTable) -> Result<Self> {
        self.oplus = Some(oplus);
        self.check_shape()?;
        Ok(self)
    }

    pub fn with_rho(mut self, rho: Vec<Vec<usize>>) -> Result<Self> {
        self.rho = Some(rho);
        self.check_shape()?;
        Ok(self)
    }

    pub fn with_group(mut self, group: GroupTable) -> Result<Self> {
        self.group = Some(group);
        self.check_shape()?;
        Ok(self)
    }

    /// Installs a composition table; arity 2 must agree with `oplus` when both exist.
    pub fn with_gamma(mut self, gamma: Gamma) -> Result<Self> {
        if gamma.arity() == 2 {
            let table = OperationTable::from_flat(self.g_size, gamma.entries().to_vec())?;
            match &self.oplus {
                Some(op) if *op != table => {
                    return Err(Error::InvalidTable("arity-2 composition disagrees with oplus".into()))
                }
                _ => self.oplus = Some(table),
            }
        } else {
            self.gammas.insert(gamma.arity(), gamma);
        }
        self.check_shape()?;
        Ok(self)
    }

    pub fn check_shape(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTable(m));
        if self.x_size == 0 || self.g_size == 0 {
            return bad("empty carrier".into());
        }
        if self.stars.len() != self.g_size {
            return bad(format!(
                "{} star operations for |G| = {}",
                self.stars.len(),
                self.g_size
            ));
        }
        if let Some(g) = self.stars.iter().position(|s| s.size() != self.x_size) {
            return bad(format!("star {g} has the wrong size"));
        }
        if self.f.len() != self.g_size
            || self
                .f
                .iter()
                .any(|r| r.len() != self.g_size || r.iter().any(|&v| v >= self.g_size))
        {
            return bad("f must be a |G| x |G| matrix of G-indices".into());
        }
        if self.otimes.size() != self.g_size {
            return bad("otimes has the wrong size".into());
        }
        if let Some(op) = &self.oplus {
            if op.size() != self.g_size {
                return bad("oplus has the wrong size".into());
            }
        }
        if let Some(g) = &self.group {
            if g.order() != self.g_size {
                return bad("group order differs from |G|".into());
            }
        }
        for (k, gamma) in &self.gammas {
            if *k != gamma.arity() || gamma.n != self.g_size || *k == 2 {
                return bad(format!("composition table stored under arity {k} is malformed"));
            }
        }
        if let Some(rho) = &self.rho {
            if rho.len() != self.x_size {
                return bad("rho needs one permutation per element of X".into());
            }
            for (x, p) in rho.iter().enumerate() {
                if p.len() != self.g_size || !is_permutation(p) {
                    return Err(Error::NotPermutation(format!("rho_{x} = {p:?}")));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn star(&self, g: usize, x: usize, y: usize) -> usize {
        self.stars[g].get(x, y)
    }

    #[inline]
    pub fn f(&self, g: usize, h: usize) -> usize {
        self.f[g][h]
    }

    #[inline]
    pub fn otimes(&self, g: usize, h: usize) -> usize {
        self.otimes.get(g, h)
    }

    pub fn require_oplus(&self, kind: &str) -> Result<&OperationTable> {
        self.oplus.as_ref().ok_or_else(|| Error::MissingField {
            field: "oplus",
            kind: kind.to_string(),
        })
    }

    pub fn require_rho(&self, kind: &str) -> Result<&Vec<Vec<usize>>> {
        self.rho.as_ref().ok_or_else(|| Error::MissingField {
            field: "rho",
            kind: kind.to_string(),
        })
    }

    pub fn require_group(&self, kind: &str) -> Result<&GroupTable> {
        self.group.as_ref().ok_or_else(|| Error::MissingField {
            field: "group",
            kind: kind.to_string(),
        })
    }

    /// The composition of the given arity: `oplus` for 2, a stored table otherwise.
    pub fn gamma(&self, arity: usize) -> Option<Gamma> {
        match arity {
            2 => self.oplus.as_ref().map(Gamma::from_binary),
            k => self.gammas.get(&k).cloned(),
        }
    }

    /// `ρ_x(g)`; the identity when no involution is installed.
    #[inline]
    pub fn rho(&self, x: usize, g: usize) -> usize {
        match &self.rho {
            Some(r) => r[x][g],
            None => g,
        }
    }

    /// Vertex valences this system can colour: one more than each composition arity.
    pub fn supported_valences(&self) -> Vec<usize> {
        let mut v: Vec<usize> = Vec::new();
        if self.oplus.is_some() {
            v.push(3);
        }
        v.extend(self.gammas.keys().map(|k| k + 1));
        v
    }
}
