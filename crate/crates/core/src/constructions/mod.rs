//! The base groups `S4 ⊵ V4`, `D8` and the subgroup families built from them.

mod base;
mod characters;
mod family;

pub use base::{
    base_groups, printed_chi, printed_nu, BaseGroups, Labels, CHI_ROWS, D8_GENERATORS, NU_ROWS,
    S3_GENERATORS, S4_GENERATORS, V4_GENERATORS,
};
pub use characters::{alpha_omega, xn_characters, xn_tuples, FamilyTables, XnCharacter};
pub use family::{family, sigma, FamilyInstance, FamilySpec, Series};

#[cfg(test)]
mod tests;
