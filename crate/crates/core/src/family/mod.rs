//! Multi-operation structures on a pair of carriers `(X, G)` and their associated quandles.

mod associated;
mod axet;
mod gamma;
mod involution;
mod product;
mod system;
mod validate;

pub use associated::{associated_involution, associated_quandle, AssociatedListing, AssociatedQuandle};
pub use axet::{axet_to_system, AxetData};
pub use gamma::gamma_from_oplus;
pub use involution::{search_involutions, validate_involution};
pub use product::{general_product_quandle, product_verdicts_agree, specialised_product_quandle};
pub use system::{Gamma, SystemData};
pub use validate::{check_lemma_for, lemma_report, validate_family, FamilyKind};

#[cfg(test)]
mod tests;
