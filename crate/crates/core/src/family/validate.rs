use std::fmt;
use std::str::FromStr;

use super::associated::{associated_involution, associated_quandle};
use super::involution::validate_involution;
use super::system::{decode, SystemData};
use crate::algebra::{validate_axioms, Profile};
use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// Which definition [`validate_family`] checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    GFamily,
    GsfFamily,
    QFamily,
    FwSystem,
    TrivalentCompatible,
    AssociativeComposition,
    /// Composition arities `n` (vertex valence `n + 1`).
    NCompatible(Vec<usize>),
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::GFamily => f.write_str("g_family"),
            FamilyKind::GsfFamily => f.write_str("gsf_family"),
            FamilyKind::QFamily => f.write_str("q_family"),
            FamilyKind::FwSystem => f.write_str("fw_system"),
            FamilyKind::TrivalentCompatible => f.write_str("trivalent_compatible"),
            FamilyKind::AssociativeComposition => f.write_str("associative_composition"),
            FamilyKind::NCompatible(ns) => {
                let list: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                write!(f, "n_compatible:{}", list.join(","))
            }
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    /// Accepts the names printed by `Display`; `n_compatible:3,4` lists arities.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "g_family" => FamilyKind::GFamily,
            "gsf_family" => FamilyKind::GsfFamily,
            "q_family" => FamilyKind::QFamily,
            "fw_system" => FamilyKind::FwSystem,
            "trivalent_compatible" => FamilyKind::TrivalentCompatible,
            "associative_composition" => FamilyKind::AssociativeComposition,
            other => {
                let list = other
                    .strip_prefix("n_compatible:")
                    .ok_or_else(|| Error::NotApplicable(format!("unknown family kind `{other}`")))?;
                let ns = list
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::NotApplicable(format!("bad arity list `{list}`")))?;
                if ns.is_empty() || ns.iter().any(|&n| n < 2) {
                    return Err(Error::NotApplicable("arities must be at least 2".into()));
                }
                FamilyKind::NCompatible(ns)
            }
        })
    }
}

/// Exhaustively checks every axiom of the named definition.
///
/// Axiom ids: `GF1..GF3` (plus `GF2e` for `x *_e y = x`), `GSF1..GSF3`,
/// `QF1..QF3`, `FW1..FW3`, `OPLUS`, `RHO`, `TC1..TC6`, `ASSOC`, and
/// `N0..N7` prefixed by `n<arity>:` for n-compatibility. Quandle checks on
/// `⊗` are prefixed `otimes:`.
pub fn validate_family(data: &SystemData, kind: &FamilyKind) -> Result<AxiomReport> {
    data.check_shape()?;
    let kind_name = kind.to_string();
    let mut r = AxiomReport::new();
    match kind {
        FamilyKind::GFamily => g_family(data, &kind_name, &mut r)?,
        FamilyKind::GsfFamily => gsf_family(data, &kind_name, &mut r)?,
        FamilyKind::QFamily => q_family(data, &mut r),
        FamilyKind::FwSystem => fw_system(data, &mut r),
        FamilyKind::TrivalentCompatible => {
            fw_system(data, &mut r);
            oplus_axiom(data, &kind_name, &mut r)?;
            rho_involutive(data, &kind_name, &mut r)?;
            trivalent(data, &mut r);
        }
        FamilyKind::AssociativeComposition => {
            let op = data.require_oplus(&kind_name)?;
            let n = data.g_size;
            for g in 0..n {
                for h in 0..n {
                    for q in 0..n {
                        r.check(op.get(g, op.get(h, q)) == op.get(op.get(g, h), q), "ASSOC", &[g, h, q]);
                    }
                }
            }
        }
        FamilyKind::NCompatible(arities) => {
            data.require_rho(&kind_name)?;
            fw_system(data, &mut r);
            rho_involutive(data, &kind_name, &mut r)?;
            let (q, _) = associated_quandle(data);
            let good = validate_involution(q.table(), &associated_involution(data))?;
            for v in good.violations.iter().filter(|v| v.axiom != "I2-EQUIV") {
                r.record("N0", &v.witness);
            }
            for &n in arities {
                let sub = n_compatible(data, n)?;
                r.merge_prefixed(&format!("n{n}"), sub);
            }
        }
    }
    Ok(r)
}

fn g_family(data: &SystemData, kind: &str, r: &mut AxiomReport) -> Result<()> {
    let grp = data.require_group(kind)?;
    let (m, n) = (data.x_size, data.g_size);
    let e = grp.identity();
    for x in 0..m {
        for g in 0..n {
            r.check(data.star(g, x, x) == x, "GF1", &[x, g]);
        }
    }
    for x in 0..m {
        for y in 0..m {
            r.check(data.star(e, x, y) == x, "GF2e", &[x, y]);
            for g in 0..n {
                for h in 0..n {
                    let lhs = data.star(grp.mul(g, h), x, y);
                    let rhs = data.star(h, data.star(g, x, y), y);
                    r.check(lhs == rhs, "GF2", &[x, y, g, h]);
                }
            }
        }
    }
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                for g in 0..n {
                    for h in 0..n {
                        let lhs = data.star(h, data.star(g, x, y), z);
                        let rhs = data.star(grp.conjugate(g, h), data.star(h, x, z), data.star(h, y, z));
                        r.check(lhs == rhs, "GF3", &[x, y, z, g, h]);
                    }
                }
            }
        }
    }
    Ok(())
}

fn gsf_family(data: &SystemData, kind: &str, r: &mut AxiomReport) -> Result<()> {
    let grp = data.require_group(kind)?;
    let (m, n) = (data.x_size, data.g_size);
    r.merge_prefixed("otimes", validate_axioms(&data.otimes, Profile::Quandle));
    for x in 0..m {
        for g in 0..n {
            r.check(data.star(g, x, x) == x, "GSF1", &[x, g]);
        }
    }
    for x in 0..m {
        for y in 0..m {
            r.check(data.star(grp.identity(), x, y) == x, "GSF2e", &[x, y]);
            for g in 0..n {
                for h in 0..n {
                    let lhs = data.star(grp.mul(g, h), x, y);
                    let rhs = data.star(h, data.star(g, x, y), y);
                    r.check(lhs == rhs, "GSF2", &[x, y, g, h]);
                }
            }
        }
    }
    twisted_distributivity(data, "GSF3", r);
    Ok(())
}

fn q_family(data: &SystemData, r: &mut AxiomReport) {
    let (m, n) = (data.x_size, data.g_size);
    r.merge_prefixed("otimes", validate_axioms(&data.otimes, Profile::Quandle));
    for a in 0..n {
        for x in 0..m {
            r.check(data.star(a, x, x) == x, "QF1", &[x, a]);
        }
        if let Some(x) = data.stars[a].non_invertible_column() {
            r.record("QF2", &[a, x]);
        }
    }
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                for a in 0..n {
                    for b in 0..n {
                        let lhs = data.star(b, data.star(a, x, y), z);
                        let rhs = data.star(data.otimes(a, b), data.star(b, x, z), data.star(b, y, z));
                        r.check(lhs == rhs, "QF3", &[x, y, z, a, b]);
                    }
                }
            }
        }
    }
}

fn fw_system(data: &SystemData, r: &mut AxiomReport) {
    let (m, n) = (data.x_size, data.g_size);
    for x in 0..m {
        for g in 0..n {
            r.check(data.star(data.f(g, g), x, x) == x, "FW1", &[x, g]);
        }
    }
    for g in 0..n {
        for h in 0..n {
            if let Some(y) = data.stars[data.f(g, h)].non_invertible_column() {
                r.record("FW2", &[g, h, y]);
            }
        }
    }
    twisted_distributivity(data, "FW3", r);
}

/// `(x *_{f(g,h)} y) *_{f(g⊗h,q)} z = (x *_{f(g,q)} z) *_{f(g⊗q,h⊗q)} (y *_{f(h,q)} z)`
fn twisted_distributivity(data: &SystemData, id: &str, r: &mut AxiomReport) {
    let (m, n) = (data.x_size, data.g_size);
    for g in 0..n {
        for h in 0..n {
            for q in 0..n {
                let f_gh = data.f(g, h);
                let f_ghq = data.f(data.otimes(g, h), q);
                let f_gq = data.f(g, q);
                let f_gqhq = data.f(data.otimes(g, q), data.otimes(h, q));
                let f_hq = data.f(h, q);
                for x in 0..m {
                    for y in 0..m {
                        for z in 0..m {
                            let lhs = data.star(f_ghq, data.star(f_gh, x, y), z);
                            let rhs = data.star(f_gqhq, data.star(f_gq, x, z), data.star(f_hq, y, z));
                            r.check(lhs == rhs, id, &[x, y, z, g, h, q]);
                        }
                    }
                }
            }
        }
    }
}

fn oplus_axiom(data: &SystemData, kind: &str, r: &mut AxiomReport) -> Result<()> {
    let op = data.require_oplus(kind)?;
    let (m, n) = (data.x_size, data.g_size);
    for x in 0..m {
        for y in 0..m {
            for g in 0..n {
                for h in 0..n {
                    let lhs = data.star(h, data.star(g, x, y), y);
                    r.check(lhs == data.star(op.get(g, h), x, y), "OPLUS", &[x, y, g, h]);
                }
            }
        }
    }
    Ok(())
}

fn rho_involutive(data: &SystemData, kind: &str, r: &mut AxiomReport) -> Result<()> {
    let rho = data.require_rho(kind)?;
    for (x, p) in rho.iter().enumerate() {
        for g in 0..data.g_size {
            r.check(p[p[g]] == g, "RHO", &[x, g]);
        }
    }
    Ok(())
}

/// Conditions 1-6 of trivalent compatibility; `f(h)` means `f(0, h)`.
fn trivalent(data: &SystemData, r: &mut AxiomReport) {
    let op = data.oplus.as_ref().expect("checked by caller");
    let n = data.g_size;
    let p = |g: usize, h: usize| op.get(g, h);
    let t = |g: usize, h: usize| data.otimes(g, h);
    let f1 = |h: usize| data.f(0, h);
    for g in 0..n {
        for h in 0..n {
            r.check(p(h, t(g, h)) == p(g, h), "TC1", &[g, h]);
        }
    }
    for g in 1..n {
        for h in 0..n {
            r.check(data.f(g, h) == data.f(0, h), "TC2", &[0, g, h]);
        }
    }
    for g in 0..n {
        for h in 0..n {
            for q in 0..n {
                r.check(t(g, p(h, q)) == t(t(g, h), q), "TC3", &[g, h, q]);
            }
        }
    }
    for h in 0..n {
        for q in 0..n {
            r.check(f1(p(h, q)) == p(f1(h), f1(q)), "TC4", &[h, q]);
        }
    }
    for g in 0..n {
        for u in 0..n {
            for v in 0..n {
                r.check(t(p(u, v), g) == p(t(u, g), t(v, g)), "TC5", &[g, u, v]);
            }
        }
    }
    for x in 0..data.x_size {
        for g in 0..n {
            for h in 0..n {
                let rgh = data.rho(x, p(g, h));
                r.check(p(h, rgh) == data.rho(x, g), "TC6a", &[x, g, h]);
                r.check(p(rgh, g) == data.rho(x, h), "TC6b", &[x, g, h]);
            }
        }
    }
}

/// Conditions 1-7 of n-compatibility for one arity, unprefixed ids `N1..N7`.
///
/// Condition 2 is checked as `Γ(h_2, h_1⊗h_2, g..) = Γ(h_1, h_2, g..)` and
/// condition 7 applies `ρ_x` only to `g_{n+1}`; in these forms arity 2
/// reduces to conditions 1 and 6 of trivalent compatibility, and G-families
/// satisfy them for every arity.
pub(crate) fn n_compatible(data: &SystemData, n: usize) -> Result<AxiomReport> {
    let gamma = data.gamma(n).ok_or(Error::MissingGamma { valence: n + 1 })?;
    let (m, k) = (data.x_size, data.g_size);
    let mut r = AxiomReport::new();
    let total = k.pow(n as u32);
    let mut g = vec![0; n];
    let mut args = vec![0; n];
    for code in 0..total {
        decode(code, k, &mut g);
        let big = gamma.eval(&g);
        // N1
        for x in 0..m {
            for y in 0..m {
                let folded = g.iter().fold(x, |acc, &gi| data.star(gi, acc, y));
                if folded != data.star(big, x, y) {
                    let mut w = vec![x, y];
                    w.extend_from_slice(&g);
                    r.record("N1", &w);
                }
            }
        }
        // N2: g[0], g[1] play h_1, h_2
        args.copy_from_slice(&g);
        args[0] = g[1];
        args[1] = data.otimes(g[0], g[1]);
        r.check(gamma.eval(&args) == big, "N2", &g);
        // N4, N6
        for h in 0..k {
            let folded = g.iter().fold(h, |acc, &gi| data.otimes(acc, gi));
            if data.otimes(h, big) != folded {
                let mut w = g.clone();
                w.push(h);
                r.record("N4", &w);
            }
            for (a, &gi) in args.iter_mut().zip(&g) {
                *a = data.otimes(gi, h);
            }
            if data.otimes(big, h) != gamma.eval(&args) {
                let mut w = g.clone();
                w.push(h);
                r.record("N6", &w);
            }
        }
        // N5
        for (a, &gi) in args.iter_mut().zip(&g) {
            *a = data.f(0, gi);
        }
        r.check(data.f(0, big) == gamma.eval(&args), "N5", &g);
        // N7, 1-based g_1..g_{n+1} with g_{n+1} = big
        for x in 0..m {
            for i in 0..n {
                let mut pos = 0;
                for j in (n - i + 1)..=n {
                    args[pos] = g[j - 1];
                    pos += 1;
                }
                args[pos] = data.rho(x, big);
                pos += 1;
                for j in 1..(n - i) {
                    args[pos] = g[j - 1];
                    pos += 1;
                }
                if data.rho(x, g[n - i - 1]) != gamma.eval(&args) {
                    let mut w = vec![x, i];
                    w.extend_from_slice(&g);
                    r.record("N7", &w);
                }
            }
        }
    }
    for g in 1..k {
        for h in 0..k {
            r.check(data.f(g, h) == data.f(0, h), "N3", &[0, g, h]);
        }
    }
    Ok(r)
}

/// `x *_{f(g,h) f(g*h,q)} y = x *_{f(g,q) f(g*q,h*q)} y`, products taken in the group.
///
/// Errors unless `data` is a valid (G,*,f)-family.
pub fn check_lemma_for(data: &SystemData) -> Result<AxiomReport> {
    let pre = validate_family(data, &FamilyKind::GsfFamily)?;
    if !pre.valid {
        return Err(Error::precondition("not a (G,*,f)-family", pre));
    }
    lemma_report(data)
}

/// The lemma identity on its own, without the family precondition.
pub fn lemma_report(data: &SystemData) -> Result<AxiomReport> {
    let grp = data.require_group("lemma")?;
    let (m, n) = (data.x_size, data.g_size);
    let mut r = AxiomReport::new();
    for g in 0..n {
        for h in 0..n {
            for q in 0..n {
                let left = grp.mul(data.f(g, h), data.f(data.otimes(g, h), q));
                let right = grp.mul(data.f(g, q), data.f(data.otimes(g, q), data.otimes(h, q)));
                for x in 0..m {
                    for y in 0..m {
                        r.check(
                            data.star(left, x, y) == data.star(right, x, y),
                            "LEMMA",
                            &[x, y, g, h, q],
                        );
                    }
                }
            }
        }
    }
    Ok(r)
}
