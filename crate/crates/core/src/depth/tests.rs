use std::sync::Arc;

use super::*;
use crate::chartab::dixon_character_table;
use crate::constructions::{base_groups, printed_chi, printed_nu, S3_GENERATORS};
use crate::perm::{class_fusion, PermGroup, DEFAULT_CAP};

fn group(gens: &str, degree: usize) -> Arc<PermGroup> {
    Arc::new(PermGroup::from_cycle_notation(gens, degree, DEFAULT_CAP).unwrap())
}

fn matrix_for(g: &Arc<PermGroup>, h: &Arc<PermGroup>) -> InclusionMatrix {
    let emb = class_fusion(g.clone(), h.clone()).unwrap();
    let tg = dixon_character_table(g).unwrap();
    let th = dixon_character_table(h).unwrap();
    inclusion_matrix(&tg, &th, &emb).unwrap()
}

/// Inclusion matrix of `V4 ≤ S4` with rows `ν1..ν4` and columns `χ1..χ5`.
fn printed_order_matrix() -> (InclusionMatrix, [usize; 4], [usize; 5]) {
    let b = base_groups();
    let m = matrix_for(&b.s4, &b.v4);
    let nu = printed_nu(&dixon_character_table(&b.v4).unwrap(), &b.v4).unwrap();
    let chi = printed_chi(&dixon_character_table(&b.s4).unwrap(), &b.s4).unwrap();
    (m, nu, chi)
}

#[test]
fn s4_v4_matrix_matches_restriction_list() {
    let (m, nu, chi) = printed_order_matrix();
    let rows: Vec<Vec<u64>> = nu
        .iter()
        .map(|&i| chi.iter().map(|&j| m.entries[i][j]).collect())
        .collect();
    assert_eq!(
        rows,
        vec![
            vec![1, 1, 2, 0, 0],
            vec![0, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1],
        ]
    );
}

#[test]
fn s4_v4_powers() {
    let (m, _, _) = printed_order_matrix();
    let m2 = bkk_power(&m, 2).unwrap();
    // MMᵀ in any row order: one 6 on the ν1 diagonal, a 3×3 block of 2s
    let mut sorted: Vec<Vec<u128>> = m2.clone();
    sorted.sort();
    assert_eq!(
        sorted,
        vec![
            vec![0, 2, 2, 2],
            vec![0, 2, 2, 2],
            vec![0, 2, 2, 2],
            vec![6, 0, 0, 0],
        ]
    );
    let m3 = bkk_power(&m, 3).unwrap();
    let six_m: Vec<Vec<u128>> = m.to_int().iter().map(|r| r.iter().map(|x| 6 * x).collect()).collect();
    assert_eq!(m3, six_m);
    assert_eq!(bkk_power(&m, 1).unwrap(), m.to_int());
    assert_eq!(
        matrix_depth(&m).unwrap(),
        MatrixDepth {
            depth: 2,
            multiplier: 6
        }
    );
}

#[test]
fn whole_group() {
    let g = base_groups().s4;
    let m = matrix_for(&g, &g);
    for (i, row) in m.entries.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            assert_eq!(x, (i == j) as u64);
        }
    }
    assert_eq!(matrix_depth(&m).unwrap().depth, 1);
    assert!(relation_graph(&m).edges().is_empty());
    let dist = relation_graph(&m).all_distances();
    for j in 0..m.cols() {
        assert_eq!(m_chi(&m, &dist, j).unwrap(), DistanceValue::Finite(0));
    }
    let r = ordinary_depth(&g, &g).unwrap();
    assert_eq!(r.depth, 1);
    assert!(r.depth_one && r.normal);
}

#[test]
fn s4_v4_relation_and_distances() {
    let (m, nu, chi) = printed_order_matrix();
    let graph = relation_graph(&m);
    let mut edges = graph.edges();
    let mut want = vec![(nu[1], nu[2]), (nu[1], nu[3]), (nu[2], nu[3])];
    for e in want.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    want.sort();
    edges.sort();
    assert_eq!(edges, want);
    assert_eq!(char_distance(&graph, nu[1], nu[2]), DistanceValue::Finite(1));
    assert_eq!(char_distance(&graph, nu[0], nu[1]), DistanceValue::NegInf);
    assert_eq!(char_distance(&graph, nu[3], nu[3]), DistanceValue::Finite(0));
    let dist = graph.all_distances();
    assert_eq!(m_chi(&m, &dist, chi[0]).unwrap(), DistanceValue::Finite(0));
    assert_eq!(m_chi(&m, &dist, chi[3]).unwrap(), DistanceValue::Finite(0));
}

#[test]
fn distance_order() {
    assert!(DistanceValue::NegInf < DistanceValue::Finite(0));
    assert!(DistanceValue::Finite(0) < DistanceValue::Finite(3));
    assert_eq!(serde_json::to_string(&DistanceValue::NegInf).unwrap(), "\"-inf\"");
    assert_eq!(serde_json::to_string(&DistanceValue::Finite(2)).unwrap(), "2");
}

#[test]
fn zero_column_is_rejected() {
    let m = InclusionMatrix {
        entries: vec![vec![1, 0]],
        row_degrees: vec![1],
        col_degrees: vec![1, 1],
    };
    let dist = relation_graph(&m).all_distances();
    assert!(m_chi(&m, &dist, 1).is_err());
}

#[test]
fn depth_one_cases() {
    let b = base_groups();
    let trivial = group("()", 4);
    assert!(depth_one_check(&b.s4, &b.s4).unwrap());
    assert!(depth_one_check(&b.s4, &trivial).unwrap());
    assert!(!depth_one_check(&b.s4, &b.v4).unwrap());
    // a central subgroup: G = H C_G(x) since C_G(x) = G
    let c4 = group("(1,2,3,4)", 4);
    let c2 = group("(1,3)(2,4)", 4);
    assert!(depth_one_check(&c4, &c2).unwrap());
    assert_eq!(ordinary_depth(&c4, &c2).unwrap().depth, 1);
}

#[test]
fn core_bounds() {
    let b = base_groups();
    let d8 = core_depth_bound(&b.s4, &b.d8).unwrap();
    assert_eq!((d8.bound, d8.m, d8.central, d8.core_order), (4, 2, false, 4));
    let v4 = core_depth_bound(&b.s4, &b.v4).unwrap();
    assert_eq!((v4.bound, v4.m), (2, 1));
}

#[test]
fn depth_of_v4_d8_s3_in_s4() {
    let b = base_groups();
    let s3 = group(S3_GENERATORS, 4);
    let r = ordinary_depth(&b.s4, &b.v4).unwrap();
    assert_eq!(r.depth, 2);
    assert_eq!(r.matrix_depth.multiplier, 6);
    assert!(!r.odd.connected);
    let r = ordinary_depth(&b.s4, &b.d8).unwrap();
    assert_eq!(r.depth, 4);
    assert_eq!(r.inclusion_matrix.len(), 5);
    for j in 0..5 {
        assert!(r.inclusion_matrix.iter().map(|row| row[j]).sum::<u64>() >= 1);
    }
    let r = ordinary_depth(&b.s4, &s3).unwrap();
    assert_eq!(r.depth, 5);
    assert!(r.odd.connected);
    assert_eq!(r.odd.max_distance, 2);
}

#[test]
fn symmetric_group_chain() {
    // S_n in S_{n+1} has depth 2n − 1
    let s3 = group("(1,2);(1,2,3)", 3);
    let s2 = group("(1,2)", 3);
    assert_eq!(ordinary_depth(&s3, &s2).unwrap().depth, 3);
    let s5 = group("(1,2);(1,2,3,4,5)", 5);
    let s4 = group("(1,2);(1,2,3,4)", 5);
    assert_eq!(ordinary_depth(&s5, &s4).unwrap().depth, 7);
}

#[test]
fn disconnected_relation_with_odd_depth() {
    // S2 × C2 in S3 × C2: two copies of the S2 ≤ S3 relation, depth 3
    let g = group("(1,2);(1,2,3);(4,5)", 5);
    let h = group("(1,2);(4,5)", 5);
    let r = ordinary_depth(&g, &h).unwrap();
    assert!(!r.odd.connected);
    assert_eq!(r.odd.bound, 3);
    assert_eq!(r.depth, 3);
    assert_eq!(r.matrix_depth.depth, 3);
}

#[test]
fn report_json_is_stable() {
    let b = base_groups();
    let a = serde_json::to_string(&ordinary_depth(&b.s4, &b.d8).unwrap()).unwrap();
    let c = serde_json::to_string(&ordinary_depth(&b.s4, &b.d8).unwrap()).unwrap();
    assert_eq!(a, c);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["depth"], 4);
}
