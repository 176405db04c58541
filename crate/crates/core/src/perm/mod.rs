//! Permutations and fully enumerated permutation groups.

mod group;
mod permutation;
mod subgroup;

pub use group::{
    centralizer, centralizer_order, conjugacy_classes, enumerate_elements, Class, ClassSet,
    PermGroup, DEFAULT_CAP,
};
pub use permutation::Permutation;
pub use subgroup::{
    class_fusion, distinct_conjugates, is_normal, min_core_conjugates, subgroup_core, Conjugate,
    CoreCover, ElementSet, SubgroupEmbedding,
};
