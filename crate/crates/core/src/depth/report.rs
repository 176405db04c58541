use std::sync::Arc;

use serde::Serialize;

use super::matrix::{inclusion_matrix, matrix_depth, InclusionMatrix, MatrixDepth};
use super::relation::{m_chi, relation_graph, DistanceValue};
use crate::chartab::{dixon_character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::perm::{
    class_fusion, is_normal, min_core_conjugates, subgroup_core, PermGroup, SubgroupEmbedding,
};

/// Whether `G = H·C_G(x)` for every `x ∈ H`, tested on one `x` per `H`-class
/// via `|H·C| = |H|·|C| / |H ∩ C|`.
pub fn depth_one_check(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    if !g.contains_group(h) {
        return Err(Error::NotSubgroup("depth-one check needs H ≤ G".into()));
    }
    for class in h.conjugacy_classes().classes() {
        let x = &class.representative;
        let (mut c, mut hc) = (0usize, 0usize);
        for y in g.elements() {
            if x.mul(y) == y.mul(x) {
                c += 1;
                if h.contains(y) {
                    hc += 1;
                }
            }
        }
        if h.order() * c / hc != g.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bound from the core being an intersection of `m` conjugates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreBound {
    pub bound: usize,
    pub m: usize,
    pub central: bool,
    pub core_order: usize,
    /// `H^w` for these `w` intersect in the core.
    pub witnesses: Vec<String>,
}

pub fn core_depth_bound(g: &PermGroup, h: &PermGroup) -> Result<CoreBound> {
    let cover = min_core_conjugates(g, h)?;
    let core = subgroup_core(g, h)?;
    let central = core
        .generators()
        .iter()
        .all(|n| g.generators().iter().all(|x| n.mul(x) == x.mul(n)));
    let bound = if central { 2 * cover.m - 1 } else { 2 * cover.m };
    Ok(CoreBound {
        bound: bound.max(1),
        m: cover.m,
        central,
        core_order: cover.core_order,
        witnesses: cover.witnesses.iter().map(ToString::to_string).collect(),
    })
}

/// Odd criterion: the largest finite distance `D` between characters of `H`
/// gives depth `≤ 2m+1` exactly for `m ≥ max(1, D)`. Unrelated pairs sit at
/// `−∞` and never obstruct it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCriterion {
    pub max_distance: u64,
    pub connected: bool,
    pub bound: usize,
}

/// Even criterion: depth `≤ 2m` exactly for `m ≥ max(2, max_χ m(χ) + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenCriterion {
    pub m_chi: Vec<DistanceValue>,
    pub max_m_chi: u64,
    pub bound: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DepthReport {
    pub schema: u32,
    pub group_order: usize,
    pub subgroup_order: usize,
    pub depth: usize,
    pub depth_one: bool,
    pub normal: bool,
    pub odd: OddCriterion,
    pub even: EvenCriterion,
    pub matrix_depth: MatrixDepth,
    pub core_bound: CoreBound,
    pub inclusion_matrix: Vec<Vec<u64>>,
    pub relation_edges: Vec<(usize, usize)>,
}

/// Depth of `H` in `G` with character tables computed on the fly.
pub fn ordinary_depth(g: &Arc<PermGroup>, h: &Arc<PermGroup>) -> Result<DepthReport> {
    let emb = class_fusion(g.clone(), h.clone())?;
    let tg = dixon_character_table(g)?;
    let th = dixon_character_table(h)?;
    ordinary_depth_with_tables(&emb, &tg, &th)
}

/// Depth of `H` in `G` from given tables, aligned to the canonical classes.
pub fn ordinary_depth_with_tables(
    emb: &SubgroupEmbedding,
    g_table: &CharacterTable,
    h_table: &CharacterTable,
) -> Result<DepthReport> {
    let (g, h) = (&*emb.ambient, &*emb.sub);
    let m = inclusion_matrix(g_table, h_table, emb)?;
    let depth_one = depth_one_check(g, h)?;
    let normal = is_normal(g, h)?;
    let (odd, even) = character_criteria(&m)?;
    let mut depth = odd.bound.min(even.bound);
    if normal {
        depth = depth.min(2);
    }
    if depth_one {
        depth = 1;
    }
    let matrix = matrix_depth(&m)?;
    if matrix.depth != depth {
        return Err(Error::Inconsistency(format!(
            "character criteria give depth {depth}, matrix criterion gives {}",
            matrix.depth
        )));
    }
    if (depth <= 2) != normal || (depth == 1) != depth_one {
        return Err(Error::Inconsistency(format!(
            "depth {depth} contradicts normal = {normal}, depth-one = {depth_one}"
        )));
    }
    let core_bound = core_depth_bound(g, h)?;
    if depth > core_bound.bound {
        return Err(Error::Inconsistency(format!(
            "depth {depth} exceeds the core bound {}",
            core_bound.bound
        )));
    }
    Ok(DepthReport {
        schema: 1,
        group_order: g.order(),
        subgroup_order: h.order(),
        depth,
        depth_one,
        normal,
        odd,
        even,
        matrix_depth: matrix,
        core_bound,
        relation_edges: relation_graph(&m).edges(),
        inclusion_matrix: m.entries,
    })
}

fn character_criteria(m: &InclusionMatrix) -> Result<(OddCriterion, EvenCriterion)> {
    let graph = relation_graph(m);
    let distances = graph.all_distances();
    let max_distance = distances
        .iter()
        .flatten()
        .filter_map(|d| d.finite())
        .max()
        .unwrap_or(0);
    let odd = OddCriterion {
        max_distance,
        connected: graph.is_connected(),
        bound: 2 * max_distance.max(1) as usize + 1,
    };
    let m_chi = (0..m.cols())
        .map(|j| m_chi(m, &distances, j))
        .collect::<Result<Vec<_>>>()?;
    let max_m_chi = m_chi
        .iter()
        .map(|d| d.finite().expect("m(χ) ≥ 0 since X ⊆ Irr(H)"))
        .max()
        .unwrap_or(0);
    let even = EvenCriterion {
        bound: 2 * (max_m_chi as usize + 1).max(2),
        m_chi,
        max_m_chi,
    };
    Ok((odd, even))
}
