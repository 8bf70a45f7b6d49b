use super::system::{Gamma, SystemData};
use super::validate::{validate_family, FamilyKind};
use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// Installs `Γ_n(g_1, ..., g_n) = ((g_1 ⊕ g_2) ⊕ ...) ⊕ g_n` and checks n-compatibility.
///
/// Requires a trivalent-compatible system with associative `⊕`.
pub fn gamma_from_oplus(data: &SystemData, arity: usize) -> Result<(SystemData, AxiomReport)> {
    let mut pre = validate_family(data, &FamilyKind::TrivalentCompatible)?;
    pre.merge(validate_family(data, &FamilyKind::AssociativeComposition)?);
    if !pre.valid {
        return Err(Error::precondition(
            "composition fold needs a trivalent-compatible system with associative oplus",
            pre,
        ));
    }
    let op = data.require_oplus("gamma_from_oplus")?;
    let gamma = Gamma::from_fn(arity, data.g_size, |args| {
        args[1..].iter().fold(args[0], |acc, &g| op.get(acc, g))
    })?;
    let out = data.clone().with_gamma(gamma)?;
    let report = validate_family(&out, &FamilyKind::NCompatible(vec![arity]))?;
    Ok((out, report))
}
