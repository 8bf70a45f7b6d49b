//! Wirtinger presentations, homomorphism counts and constituent links.

mod kauffman;
mod linking;
mod wirtinger;

pub use kauffman::{kauffman_constituents, kauffman_summary, KauffmanInvariant, KauffmanValue};
pub use linking::{link_components, linking_matrix, LinkingMatrix};
pub use wirtinger::{
    group_hom_count, group_hom_count_within, hom_fingerprint, standard_panel, wirtinger_presentation,
    GroupPresentation, Letter,
};

#[cfg(test)]
mod tests;
