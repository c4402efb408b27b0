//! Smith normal form over `Z` and the coinvariant quotients of the fibre
//! group abelianisation.

mod nab;
mod snf;

pub use nab::{
    nab_quotient_nonorientable, nab_quotient_orientable, nab_report, NabReport, Orientability,
};
pub use snf::{smith_normal_form, AbelianGroup, IntMatrix, SmithForm};
