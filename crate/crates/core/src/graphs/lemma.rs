use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::graph::{bfs_distance, gamma, Graph, Label};
use crate::chartab::{induce_character, inner_product};
use crate::constructions::{
    alpha_omega, family, xn_characters, FamilyInstance, FamilyTables, Series,
};
use crate::cyclo::Cyclotomic;
use crate::depth::{char_distance, inclusion_matrix, relation_graph, DistanceValue};
use crate::error::{Error, Result};
use crate::perm::class_fusion;

#[derive(Clone, Debug, Serialize)]
pub struct LemmaPart {
    pub part: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub schema: u32,
    pub n: usize,
    pub y_size: usize,
    pub gamma_distance: DistanceValue,
    pub alpha_omega_distance: DistanceValue,
    pub parts: Vec<LemmaPart>,
    pub gamma: Graph,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.parts.iter().all(|p| p.pass)
    }
}

/// Builds the series-A member for `n` and checks all five parts.
pub fn verify_lemma(n: usize, cap: usize, prime: Option<u64>) -> Result<LemmaReport> {
    let inst = family(Series::A, n, cap)?;
    let tables = FamilyTables::new(&inst, prime)?;
    verify_lemma_with(&inst, &tables)
}

fn part(part: &'static str, pass: bool, detail: String) -> LemmaPart {
    LemmaPart { part, pass, detail }
}

fn label(t: &[usize]) -> String {
    let s: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("({})", s.join(","))
}

pub fn verify_lemma_with(inst: &FamilyInstance, tables: &FamilyTables) -> Result<LemmaReport> {
    let n = inst.n;
    if inst.series != Series::A || n < 2 {
        return Err(Error::InvalidArgument(
            "the lemma concerns series A with n >= 2".into(),
        ));
    }
    let mut parts = Vec::new();

    // (i) χ ↦ χ^{G_n} is injective with irreducible images
    let emb_kg = class_fusion(inst.g.clone(), inst.k.clone())?;
    let mut y: BTreeMap<Label, usize> = BTreeMap::new();
    let mut failure = None;
    for x in xn_characters(inst, tables)? {
        let ind = induce_character(&x.character, &emb_kg)?;
        let norm = inner_product(&ind, &ind)?;
        match tables.g.position(&ind) {
            Some(j) if norm == Cyclotomic::one() => {
                if let Some((other, _)) = y.iter().find(|(_, &k)| k == j) {
                    failure.get_or_insert(format!(
                        "{} and {} induce the same character",
                        label(other),
                        label(&x.tuple)
                    ));
                }
                y.insert(x.tuple, j);
            }
            _ => {
                failure.get_or_insert(format!("{} induces reducibly (norm {norm})", label(&x.tuple)));
            }
        }
    }
    let expected = 2 * 3usize.pow(n as u32 - 1);
    if failure.is_none() && y.len() != expected {
        failure = Some(format!("|Y_n| = {}, expected {expected}", y.len()));
    }
    parts.push(part(
        "i",
        failure.is_none(),
        failure.unwrap_or_else(|| format!("{} distinct irreducible inductions", y.len())),
    ));

    // (ii) closure of Y_n under sharing an H_n-constituent
    let emb_hg = class_fusion(inst.g.clone(), inst.h.clone())?;
    let m = inclusion_matrix(&tables.g, &tables.h, &emb_hg)?;
    let y_set: BTreeSet<usize> = y.values().copied().collect();
    let shares = |a: usize, b: usize| (0..m.rows()).any(|i| m.entries[i][a] > 0 && m.entries[i][b] > 0);
    let escape = y_set
        .iter()
        .flat_map(|&a| (0..m.cols()).map(move |b| (a, b)))
        .find(|&(a, b)| !y_set.contains(&b) && shares(a, b));
    parts.push(part(
        "ii",
        escape.is_none(),
        match escape {
            Some((a, b)) => format!("Irr(G) #{b} outside Y_n shares a constituent with #{a}"),
            None => "Y_n is closed under relation".into(),
        },
    ));

    // (iii) relation graph on Y_n equals Γ_n under the tuple labels
    let gamma_n = gamma(n)?;
    let mut on_y = Graph::new(y.keys().cloned().collect())?;
    for (s, &a) in &y {
        for (t, &b) in &y {
            if s < t && shares(a, b) {
                on_y.add_edge(s, t)?;
            }
        }
    }
    let same = on_y.edge_set() == gamma_n.edge_set()
        && on_y.vertex_count() == gamma_n.vertex_count();
    parts.push(part(
        "iii",
        same,
        format!(
            "{} edges on Y_n, {} edges in Gamma_n",
            on_y.edge_count(),
            gamma_n.edge_count()
        ),
    ));

    // (iv) distance between (4,1,…,1) and (4,2,…,2) in Γ_n
    let ones: Label = std::iter::once(4).chain(std::iter::repeat(1).take(n - 1)).collect();
    let twos: Label = std::iter::once(4).chain(std::iter::repeat(2).take(n - 1)).collect();
    let gamma_distance = bfs_distance(&gamma_n, &ones, &twos)?;
    parts.push(part(
        "iv",
        gamma_distance == DistanceValue::Finite(n as u64 - 1),
        format!("d_Gamma({}, {}) = {gamma_distance}", label(&ones), label(&twos)),
    ));

    // (v) distance of α_n and ω_n under the relation of (G_n, H_n)
    let (alpha, omega) = alpha_omega(inst, tables)?;
    let ia = tables
        .h
        .position(&alpha)
        .ok_or_else(|| Error::Inconsistency("alpha is not irreducible".into()))?;
    let io = tables
        .h
        .position(&omega)
        .ok_or_else(|| Error::Inconsistency("omega is not irreducible".into()))?;
    let alpha_omega_distance = char_distance(&relation_graph(&m), ia, io);
    parts.push(part(
        "v",
        alpha_omega_distance == DistanceValue::Finite(n as u64),
        format!("d(alpha, omega) = {alpha_omega_distance}"),
    ));

    Ok(LemmaReport {
        schema: 1,
        n,
        y_size: y.len(),
        gamma_distance,
        alpha_omega_distance,
        parts,
        gamma: gamma_n,
    })
}
