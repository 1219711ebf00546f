//! Configuration files, solved spec files, OBJ/CSV export and the command
//! line for [`prismflex_core`].

// NaN-rejecting comparisons such as `!(d <= tol)`
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod error;
pub mod obj;
pub mod profile;
pub mod specfile;
pub mod validate;

pub use config::PolyhedronConfig;
pub use error::{Error, Result};
pub use specfile::{RawSpec, SpecFile};
