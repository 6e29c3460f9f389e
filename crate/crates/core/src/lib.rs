//! Exact computations for the positive half of U_q(gl(m|n)) and for the
//! bigraded dg KLR algebras R(nu) of gl(m|1).

pub mod error;
pub mod scalars;
pub mod root_data;
pub mod free_super;
pub mod bilinear_form;
pub mod pbw;
pub mod klr;
pub mod polrep;
pub mod dg;
pub mod characters;
pub mod verify;

pub use error::{Error, Result};
