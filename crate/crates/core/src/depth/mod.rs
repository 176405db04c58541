//! Inclusion matrices and the criteria that determine ordinary depth.

mod matrix;
mod relation;
mod report;

pub use matrix::{bkk_power, inclusion_matrix, matrix_depth, InclusionMatrix, IntMatrix, MatrixDepth};
pub use relation::{char_distance, m_chi, relation_graph, DistanceValue, RelationGraph};
pub use report::{
    core_depth_bound, depth_one_check, ordinary_depth, ordinary_depth_with_tables, CoreBound,
    DepthReport, EvenCriterion, OddCriterion,
};

#[cfg(test)]
mod tests;
