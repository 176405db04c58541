use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::cyclo::Cyclotomic;
use crate::perm::{class_fusion, PermGroup, Permutation, DEFAULT_CAP};

fn group(gens: &str, degree: usize) -> Arc<PermGroup> {
    Arc::new(PermGroup::from_cycle_notation(gens, degree, DEFAULT_CAP).unwrap())
}

fn s4() -> Arc<PermGroup> {
    group("(1,2);(1,2,3,4)", 4)
}

fn v4() -> Arc<PermGroup> {
    group("(1,3)(2,4);(1,2)(3,4)", 4)
}

fn ints(v: &[i64]) -> Vec<Cyclotomic> {
    v.iter().map(|&x| Cyclotomic::from_integer(x)).collect()
}

/// Values of `chi` at the classes of the given elements.
fn values_at(table: &CharacterTable, g: &PermGroup, chi: usize, elems: &[&str]) -> Vec<Cyclotomic> {
    elems
        .iter()
        .map(|e| {
            let p = Permutation::parse(e, g.degree()).unwrap();
            table.irreducibles[chi].values[g.class_of(&p).unwrap()].clone()
        })
        .collect()
}

/// Index of the irreducible with the printed values at the labeled elements.
fn find(table: &CharacterTable, g: &PermGroup, elems: &[&str], row: &[i64]) -> usize {
    let want = ints(row);
    let hits: Vec<usize> = (0..table.len())
        .filter(|&i| values_at(table, g, i, elems) == want)
        .collect();
    assert_eq!(hits.len(), 1, "row {row:?}");
    hits[0]
}

const S4_COLS: [&str; 5] = ["()", "(1,3)(2,4)", "(1,2,3)", "(1,3)", "(1,2,3,4)"];
const S4_ROWS: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, -1, -1],
    [2, 2, -1, 0, 0],
    [3, -1, 0, 1, -1],
    [3, -1, 0, -1, 1],
];
const V4_COLS: [&str; 4] = ["()", "(1,3)(2,4)", "(1,2)(3,4)", "(1,4)(2,3)"];
const V4_ROWS: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];

fn chi(t: &CharacterTable, g: &PermGroup, i: usize) -> usize {
    find(t, g, &S4_COLS, &S4_ROWS[i - 1])
}

fn nu(t: &CharacterTable, g: &PermGroup, i: usize) -> usize {
    find(t, g, &V4_COLS, &V4_ROWS[i - 1])
}

#[test]
fn s4_table_matches_printed() {
    let g = s4();
    let t = dixon_character_table(&g).unwrap();
    assert_eq!(t.len(), 5);
    assert_eq!(t.degrees(), ints(&[1, 1, 2, 3, 3]));
    for i in 1..=5 {
        assert_eq!(chi(&t, &g, i), i - 1);
    }
}

#[test]
fn v4_table_matches_printed() {
    let g = v4();
    let t = dixon_character_table(&g).unwrap();
    let mut found: Vec<usize> = (1..=4).map(|i| nu(&t, &g, i)).collect();
    found.sort();
    assert_eq!(found, vec![0, 1, 2, 3]);
}

#[test]
fn c2_table() {
    let g = group("(1,2)", 2);
    let t = dixon_character_table(&g).unwrap();
    assert_eq!(t.irreducibles[0].values, ints(&[1, 1]));
    assert_eq!(t.irreducibles[1].values, ints(&[1, -1]));
}

#[test]
fn cyclic_group_needs_roots_of_unity() {
    let g = group("(1,2,3)", 3);
    let t = dixon_character_table(&g).unwrap();
    let z = Cyclotomic::zeta(3, 1).unwrap();
    let z2 = Cyclotomic::zeta(3, 2).unwrap();
    let mut rows: Vec<Vec<Cyclotomic>> = t.irreducibles.iter().map(|c| c.values.clone()).collect();
    rows.sort();
    let mut want = vec![
        ints(&[1, 1, 1]),
        vec![Cyclotomic::one(), z.clone(), z2.clone()],
        vec![Cyclotomic::one(), z2, z],
    ];
    want.sort();
    assert_eq!(rows, want);
}

#[test]
fn inner_products_on_s4() {
    let g = s4();
    let t = dixon_character_table(&g).unwrap();
    let c4 = t.character(chi(&t, &g, 4));
    let c5 = t.character(chi(&t, &g, 5));
    assert_eq!(inner_product(c4, c4).unwrap(), Cyclotomic::one());
    assert_eq!(inner_product(c4, c5).unwrap(), Cyclotomic::zero());
}

#[test]
fn restriction_list_to_v4() {
    let (g, n) = (s4(), v4());
    let tg = dixon_character_table(&g).unwrap();
    let tn = dixon_character_table(&n).unwrap();
    let emb = class_fusion(g.clone(), n.clone()).unwrap();
    let nus: Vec<usize> = (1..=4).map(|i| nu(&tn, &n, i)).collect();
    // printed list: χ1, χ2 → ν1; χ3 → 2ν1; χ4, χ5 → ν2+ν3+ν4
    let printed: [[u64; 4]; 5] = [
        [1, 0, 0, 0],
        [1, 0, 0, 0],
        [2, 0, 0, 0],
        [0, 1, 1, 1],
        [0, 1, 1, 1],
    ];
    for (i, want) in printed.iter().enumerate() {
        let r = restrict_character(tg.character(chi(&tg, &g, i + 1)), &emb).unwrap();
        let m = tn.decompose(&r).unwrap();
        let got: Vec<u64> = nus.iter().map(|&k| m[k]).collect();
        assert_eq!(&got, want, "chi_{}", i + 1);
    }
    let r3 = restrict_character(tg.character(chi(&tg, &g, 3)), &emb).unwrap();
    assert_eq!(
        inner_product(&r3, tn.character(nus[0])).unwrap(),
        Cyclotomic::from_integer(2)
    );
    let r1 = restrict_character(tg.character(0), &emb).unwrap();
    assert_eq!(r1, ClassFunction::trivial(r1.classes.clone()));
}

#[test]
fn induce_nu2_to_s4() {
    let (g, n) = (s4(), v4());
    let tg = dixon_character_table(&g).unwrap();
    let tn = dixon_character_table(&n).unwrap();
    let emb = class_fusion(g.clone(), n.clone()).unwrap();
    let ind = induce_character(tn.character(nu(&tn, &n, 2)), &emb).unwrap();
    // reciprocity with the printed list: ν2 occurs once in χ4|N and χ5|N only
    let mut want = vec![0u64; 5];
    want[chi(&tg, &g, 4)] = 1;
    want[chi(&tg, &g, 5)] = 1;
    assert_eq!(tg.decompose(&ind).unwrap(), want);
    assert_eq!(want, vec![0, 0, 0, 1, 1]);
    assert_eq!(ind.degree(), &Cyclotomic::from_integer(6));
}

#[test]
fn induce_trivial_from_whole_group() {
    let g = s4();
    let t = dixon_character_table(&g).unwrap();
    let emb = class_fusion(g.clone(), g.clone()).unwrap();
    let ind = induce_character(t.character(0), &emb).unwrap();
    assert_eq!(&ind, t.character(0));
}

/// `ψ^G(g) = (1/|H|) Σ_{x ∈ G} ψ°(x g x⁻¹)` evaluated element by element.
fn induce_brute(psi: &ClassFunction, g: &PermGroup, h: &PermGroup) -> Vec<Cyclotomic> {
    g.conjugacy_classes()
        .classes()
        .iter()
        .map(|c| {
            let mut acc = Cyclotomic::zero();
            for x in g.elements() {
                let y = c.representative.conjugate_by(&x.inverse());
                if h.contains(&y) {
                    acc = acc + &psi.values[h.class_of(&y).unwrap()];
                }
            }
            acc.scale(&crate::cyclo::Rational::new(1.into(), (h.order() as i64).into()))
        })
        .collect()
}

#[test]
fn induction_matches_definition() {
    let g = s4();
    for h in [group("(1,3);(1,2,3,4)", 4), group("(1,2);(1,2,3)", 4), v4()] {
        let th = dixon_character_table(&h).unwrap();
        let emb = class_fusion(g.clone(), h.clone()).unwrap();
        for psi in &th.irreducibles {
            let ind = induce_character(psi, &emb).unwrap();
            assert_eq!(ind.values, induce_brute(psi, &g, &h));
            let idx = Cyclotomic::from_integer((g.order() / h.order()) as i64);
            assert_eq!(ind.degree(), &(&idx * psi.degree()));
        }
    }
}

#[test]
fn frobenius_reciprocity_random_pairs() {
    let mut rng = StdRng::seed_from_u64(7);
    let g = group("(1,2);(1,2,3,4,5)", 5);
    let tg = dixon_character_table(&g).unwrap();
    for h in [group("(1,2);(1,2,3,4)", 5), group("(1,2,3);(3,4,5)", 5)] {
        let th = dixon_character_table(&h).unwrap();
        let emb = class_fusion(g.clone(), h.clone()).unwrap();
        for _ in 0..100 {
            let psi = th.character(rng.gen_range(0..th.len()));
            let chi = tg.character(rng.gen_range(0..tg.len()));
            let lhs = inner_product(&induce_character(psi, &emb).unwrap(), chi).unwrap();
            let rhs = inner_product(psi, &restrict_character(chi, &emb).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn decompose_rejects_non_characters() {
    let g = s4();
    let t = dixon_character_table(&g).unwrap();
    let zero = ClassFunction::zero(t.classes.clone());
    assert_eq!(t.decompose(&zero).unwrap(), vec![0; 5]);
    let half = t.character(0).scale(&crate::cyclo::Rational::new(1.into(), 2.into()));
    assert!(matches!(t.decompose(&half), Err(crate::Error::NotACharacter(_))));
    let neg = t.character(0).scale(&crate::cyclo::Rational::from_integer((-1).into()));
    assert!(t.decompose(&neg).is_err());
}

#[test]
fn direct_product_v4_s4() {
    let (g, n) = (s4(), v4());
    let tg = dixon_character_table(&g).unwrap();
    let tn = dixon_character_table(&n).unwrap();
    let p = block_direct_product(&[&n, &g], DEFAULT_CAP).unwrap();
    let t = direct_product_table(&tn, &n, &tg, &g, &p).unwrap();
    assert_eq!(t.len(), 20);
    let sq: Cyclotomic = t.degrees().iter().map(|d| d * d).sum();
    assert_eq!(sq, Cyclotomic::from_integer(96));
    t.verify().unwrap();
    assert_eq!(t.irreducibles, dixon_character_table(&p).unwrap().irreducibles);
}

#[test]
fn product_with_trivial_group() {
    let g = s4();
    let tg = dixon_character_table(&g).unwrap();
    let one = group("()", 1);
    let t1 = dixon_character_table(&one).unwrap();
    let p = block_direct_product(&[&g, &one], DEFAULT_CAP).unwrap();
    let t = direct_product_table(&tg, &g, &t1, &one, &p).unwrap();
    let rows: Vec<_> = t.irreducibles.iter().map(|c| c.values.clone()).collect();
    let want: Vec<_> = tg.irreducibles.iter().map(|c| c.values.clone()).collect();
    assert_eq!(rows, want);
}

#[test]
fn product_pairing_mismatch() {
    let g = s4();
    let tg = dixon_character_table(&g).unwrap();
    let p = block_direct_product(&[&g, &g], DEFAULT_CAP).unwrap();
    let n = v4();
    let tn = dixon_character_table(&n).unwrap();
    assert!(direct_product_table(&tn, &n, &tg, &g, &p).is_err());
}

fn wreath(n: usize) -> PermGroup {
    let deg = 4 * n;
    let sigma: Vec<usize> = (0..deg).map(|i| (i + 4) % deg + 1).collect();
    let gens = vec![
        Permutation::parse("(1,2)", deg).unwrap(),
        Permutation::parse("(1,2,3,4)", deg).unwrap(),
        Permutation::from_one_based(&sigma).unwrap(),
    ];
    PermGroup::new(deg, gens, DEFAULT_CAP).unwrap()
}

#[test]
fn wreath_oracle_matches_dixon_c2() {
    let g = s4();
    let tg = dixon_character_table(&g).unwrap();
    let w = wreath(2);
    let oracle = wreath_cyclic_table(&tg, &g, &w, 2).unwrap();
    oracle.verify().unwrap();
    assert_eq!(oracle.len(), 20);
    assert_eq!(oracle.irreducibles, dixon_character_table(&w).unwrap().irreducibles);
}

#[test]
fn wreath_oracle_matches_dixon_c3() {
    let g = s4();
    let tg = dixon_character_table(&g).unwrap();
    let w = wreath(3);
    assert_eq!(w.order(), 24 * 24 * 24 * 3);
    assert_eq!(w.conjugacy_classes().len(), 55);
    let oracle = wreath_cyclic_table(&tg, &g, &w, 3).unwrap();
    oracle.verify().unwrap();
    assert_eq!(oracle.irreducibles, dixon_character_table(&w).unwrap().irreducibles);
}

#[test]
fn wreath_oracle_rejects_composite() {
    let g = s4();
    let tg = dixon_character_table(&g).unwrap();
    let w = wreath(2);
    assert!(matches!(
        wreath_cyclic_table(&tg, &g, &w, 4),
        Err(crate::Error::Unsupported(_))
    ));
}

#[test]
fn dixon_primes() {
    assert_eq!(dixon_prime(12, 24), 13);
    let w = wreath(3);
    assert_eq!(w.exponent(), 36);
    assert_eq!(dixon_prime(w.exponent(), w.order()), 433);
    let g = s4();
    let base = dixon_character_table(&g).unwrap();
    let alt = dixon_character_table_with_prime(&g, Some(37)).unwrap();
    assert_eq!(base.irreducibles, alt.irreducibles);
    assert!(dixon_character_table_with_prime(&g, Some(11)).is_err());
    assert!(dixon_character_table_with_prime(&g, Some(49)).is_err());
}

#[test]
fn json_roundtrip() {
    let g = group("(1,2,3,4,5)", 5);
    let t = dixon_character_table(&g).unwrap();
    let text = serde_json::to_string(&t.to_json()).unwrap();
    let back: TableJson = serde_json::from_str(&text).unwrap();
    let t2 = CharacterTable::from_json(&back).unwrap().align_to(&g).unwrap();
    assert_eq!(t2.irreducibles, t.irreducibles);
}
