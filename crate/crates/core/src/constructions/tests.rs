use super::*;
use crate::chartab::{induce_character, inner_product};
use crate::perm::{
    class_fusion, is_normal, min_core_conjugates, subgroup_core, PermGroup, Permutation,
    DEFAULT_CAP,
};

#[test]
fn base_group_orders_and_labels() {
    let b = base_groups();
    assert_eq!((b.v4.order(), b.s4.order(), b.d8.order()), (4, 24, 8));
    assert!(is_normal(&b.s4, &b.v4).unwrap());
    assert!(b.d8.contains(&b.labels.g4p));
    assert!(!b.v4.contains(&b.labels.g4p));
    for g in b.labels.v4_columns() {
        assert!(b.v4.contains(g));
    }
}

#[test]
fn s4_classes_are_the_labeled_ones() {
    let b = base_groups();
    let mut classes: Vec<usize> = b
        .labels
        .s4_columns()
        .iter()
        .map(|p| b.s4.class_of(p).unwrap())
        .collect();
    classes.sort();
    assert_eq!(classes, vec![0, 1, 2, 3, 4]);
    // g2, g3, g4 all fuse to one S4 class
    let c = b.s4.class_of(&b.labels.g2).unwrap();
    assert_eq!(b.s4.class_of(&b.labels.g3).unwrap(), c);
    assert_eq!(b.s4.class_of(&b.labels.g4).unwrap(), c);
}

#[test]
fn sigma_values() {
    assert_eq!(
        sigma(2).unwrap(),
        Permutation::parse("(1,5)(2,6)(3,7)(4,8)", 8).unwrap()
    );
    assert_eq!(sigma(3).unwrap().order(), 3);
    assert!(sigma(1).is_err());
    // G^σ acts on points 5..8
    let s = sigma(3).unwrap();
    for g in Permutation::parse_list(S4_GENERATORS, 4).unwrap() {
        let c = g.extend_to(12).conjugate_by(&s);
        let moved: Vec<usize> = (0..12).filter(|&i| c.apply(i) != i).collect();
        assert!(!moved.is_empty() && moved.iter().all(|&i| (4..8).contains(&i)));
    }
}

#[test]
fn family_a() {
    let a1 = family(Series::A, 1, DEFAULT_CAP).unwrap();
    assert_eq!((a1.g.order(), a1.h.order()), (24, 4));
    assert!(a1.sigma.is_none());
    let a2 = family(Series::A, 2, DEFAULT_CAP).unwrap();
    assert_eq!((a2.g.order(), a2.h.order(), a2.k.order()), (1152, 96, 576));
    assert_eq!(a2.core.order(), 16);
    let a3 = family(Series::A, 3, DEFAULT_CAP).unwrap();
    assert_eq!((a3.g.order(), a3.h.order(), a3.core.order()), (41472, 2304, 64));
    assert_eq!(a3.expected_depth(), 6);
}

#[test]
fn family_a_core_cover_uses_sigma_powers() {
    for n in 2..=3 {
        let inst = family(Series::A, n, DEFAULT_CAP).unwrap();
        let cover = min_core_conjugates(&inst.g, &inst.h).unwrap();
        assert!(cover.m <= n);
        let s = inst.sigma.clone().unwrap();
        let powers: Vec<Permutation> = (0..n as u64).map(|i| s.pow(i)).collect();
        assert_eq!(cover.witnesses, powers);
    }
}

#[test]
fn family_b_and_c() {
    let b2 = family(Series::B, 2, DEFAULT_CAP).unwrap();
    assert_eq!((b2.g.order(), b2.h.order()), (1152, 192));
    assert_eq!(b2.expected_depth(), 8);
    let c1 = family(Series::C, 1, DEFAULT_CAP).unwrap();
    assert_eq!((c1.g.order(), c1.h.order(), c1.core.order()), (24, 8, 4));
    assert_eq!(c1.expected_depth(), 4);
    let c2 = family(Series::C, 2, DEFAULT_CAP).unwrap();
    assert_eq!((c2.g.order(), c2.h.order()), (1152, 192));
    assert_eq!(c2.expected_depth(), 8);
    // the second doubling step is the second member of series B
    assert_eq!(c2.g.elements().len(), b2.g.elements().len());
    assert!(c2.g.contains_group(&b2.h) && c2.h.contains_group(&b2.h));
    assert!(matches!(
        family(Series::C, 3, DEFAULT_CAP),
        Err(crate::Error::CapExceeded { .. })
    ));
}

#[test]
fn family_spec_strings() {
    let s: FamilySpec = "A:n=3".parse().unwrap();
    assert_eq!((s.series, s.n), (Series::A, 3));
    let s: FamilySpec = "C:step=2".parse().unwrap();
    assert_eq!((s.series, s.n), (Series::C, 2));
    assert_eq!(s.to_string(), "C:step=2");
    assert!("A:step=2".parse::<FamilySpec>().is_err());
    assert!("D:n=1".parse::<FamilySpec>().is_err());
    assert!("A:n=0".parse::<FamilySpec>().is_err());
}

#[test]
fn core_is_intersection_of_sigma_conjugates() {
    let inst = family(Series::A, 3, DEFAULT_CAP).unwrap();
    let core = subgroup_core(&inst.g, &inst.h).unwrap();
    assert_eq!(core.order(), 64);
    assert!(inst.core.contains_group(&core) && core.contains_group(&inst.core));
}

#[test]
fn xn_counts_and_irreducible_inductions() {
    assert_eq!(xn_tuples(2).len(), 6);
    assert_eq!(xn_tuples(3).len(), 18);
    let inst = family(Series::A, 2, DEFAULT_CAP).unwrap();
    let tables = FamilyTables::new(&inst, None).unwrap();
    let xs = xn_characters(&inst, &tables).unwrap();
    assert_eq!(xs.len(), 6);
    let emb = class_fusion(inst.g.clone(), inst.k.clone()).unwrap();
    for x in &xs {
        assert!(tables.k.position(&x.character).is_some());
        let ind = induce_character(&x.character, &emb).unwrap();
        assert_eq!(inner_product(&ind, &ind).unwrap(), crate::cyclo::Cyclotomic::one());
    }
}

#[test]
fn alpha_and_omega() {
    let inst = family(Series::A, 2, DEFAULT_CAP).unwrap();
    let tables = FamilyTables::new(&inst, None).unwrap();
    let (alpha, omega) = alpha_omega(&inst, &tables).unwrap();
    assert_eq!(alpha.degree(), &crate::cyclo::Cyclotomic::one());
    assert_ne!(alpha, omega);
    assert!(tables.h.position(&alpha).is_some());
    // α^{K} = (χ4 + χ5) × χ1
    let emb = class_fusion(inst.k.clone(), inst.h.clone()).unwrap();
    let ind = induce_character(&alpha, &emb).unwrap();
    let want = tables
        .k_character(&inst, &[4, 1])
        .unwrap()
        .add(&tables.k_character(&inst, &[5, 1]).unwrap())
        .unwrap();
    assert_eq!(ind, want);

    let one = family(Series::A, 1, DEFAULT_CAP).unwrap();
    let t1 = FamilyTables::new(&one, None).unwrap();
    let (a1, w1) = alpha_omega(&one, &t1).unwrap();
    assert_eq!(a1, w1);
    assert_eq!(t1.h.position(&a1), Some(t1.nu[1]));
}

#[test]
fn h_table_matches_dixon() {
    let inst = family(Series::B, 2, DEFAULT_CAP).unwrap();
    let tables = FamilyTables::new(&inst, None).unwrap();
    let dixon = crate::chartab::dixon_character_table(&inst.h).unwrap();
    assert_eq!(tables.h.irreducibles, dixon.irreducibles);
    let _: &PermGroup = &inst.k;
}
