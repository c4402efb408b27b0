//! Normal forms for the pure and full 2-string braid groups of the torus.
//!
//! `P2(T) = F(x, y) × Z(a) × Z(b)`, and `B2(T)` is generated over it by `s`
//! with `s^2 = B = [x, y^-1]`, `s x s^-1 = B x^-1 a`, `s y s^-1 = B y^-1 b`,
//! and `a`, `b` central.

mod element;
mod presentations;

pub use element::{
    commutator_b, f2_alphabet, B2tElement, B2tGroup, B2tJson, P2tElement, P2tGroup,
    SigmaConjugation,
};
pub use presentations::{
    b2t_full_hom, p2t_delta_tau_hom, p2t_rho_hom, p2t_useful_relations_hom, p2t_xyab_hom,
    verify_presentation_a1, verify_presentation_a2, PresentationReport,
};
