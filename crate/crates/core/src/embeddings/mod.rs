//! The embedding of the Klein bottle group into the torus braid group,
//! the action of the Klein bottle mapping classes on the torus, and
//! lifting configurations through the orientable double cover.

mod config_lift;
mod mcgk;
mod phi1;

pub use config_lift::{iota, lift_configuration, parse_points, KleinPoint, TorusPoint};
pub use mcgk::{
    cover_lift_matrix, induced_sl2, ker_phi_mcgk, lift_matrices, mcgk_table, IntMat2, McgkRow,
};
pub use phi1::{
    certify_injectivity_ball, certify_injectivity_ball_with, phi1, phi1_closed_form, phi1_hom,
    BallOptions, BallReport, Collision, DEFAULT_MAX_RADIUS,
};
