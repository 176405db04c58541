pub mod error;
pub mod chartab;
pub mod cli;
pub mod constructions;
pub mod cyclo;
pub mod depth;
pub mod graphs;
pub mod perm;

pub use error::{Error, Result};
