//! Exact character tables and operations on class functions.

mod dixon;
pub(crate) mod modp;
mod product;
mod table;
mod wreath;

pub use dixon::{
    dixon_character_table, dixon_character_table_with_prime, dixon_prime, validate_prime,
};
pub use product::{block_direct_product, direct_product_table, BlockProduct, Factor};
pub use table::{
    canonical_order, induce_character, inner_product, restrict_character, CharacterTable,
    ClassData, ClassFunction, ClassJson, MultiplicityVector, TableJson,
};
pub use wreath::wreath_cyclic_table;

#[cfg(test)]
mod tests;
