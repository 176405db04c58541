use std::sync::Arc;

use super::table::{CharacterTable, ClassData, ClassFunction};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// One direct factor: its table, its group, and the first point it moves in
/// the product group.
#[derive(Clone, Copy)]
pub struct Factor<'a> {
    pub table: &'a CharacterTable,
    pub group: &'a PermGroup,
    pub offset: usize,
}

/// A permutation group that is the internal direct product of groups acting on
/// disjoint consecutive point blocks, with every class of the product paired
/// with a tuple of factor classes.
pub struct BlockProduct<'a> {
    pub factors: Vec<Factor<'a>>,
    pub product: &'a PermGroup,
    pub classes: Arc<ClassData>,
    /// `class_tuples[c][f]` is the class of factor `f` under product class `c`.
    pub class_tuples: Vec<Vec<usize>>,
}

impl<'a> BlockProduct<'a> {
    /// Factors in consecutive blocks starting at point 0.
    pub fn consecutive(
        parts: &[(&'a CharacterTable, &'a PermGroup)],
        product: &'a PermGroup,
    ) -> Result<Self> {
        let mut offset = 0;
        let factors = parts
            .iter()
            .map(|&(table, group)| {
                let f = Factor {
                    table,
                    group,
                    offset,
                };
                offset += group.degree();
                f
            })
            .collect();
        Self::new(factors, product)
    }

    pub fn new(factors: Vec<Factor<'a>>, product: &'a PermGroup) -> Result<Self> {
        let classes = ClassData::of(product);
        let expected: usize = factors.iter().map(|f| f.table.len()).product();
        if classes.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "class pairing mismatch: product has {} classes, factors give {expected}",
                classes.len()
            )));
        }
        let mut class_tuples = Vec::with_capacity(classes.len());
        let mut seen = std::collections::HashSet::new();
        for (c, rep) in classes.representatives.iter().enumerate() {
            let mut tuple = Vec::with_capacity(factors.len());
            let mut size = 1usize;
            for f in &factors {
                let local = rep
                    .restrict_block(f.offset, f.group.degree())
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "class pairing mismatch: {rep} does not preserve the factor blocks"
                        ))
                    })?;
                let k = f.group.class_of(&local).map_err(|_| {
                    Error::InvalidArgument(format!(
                        "class pairing mismatch: component {local} of {rep} not in its factor"
                    ))
                })?;
                size *= f.group.conjugacy_classes().get(k).size;
                tuple.push(k);
            }
            if size != classes.sizes[c] || !seen.insert(tuple.clone()) {
                return Err(Error::InvalidArgument(format!(
                    "class pairing mismatch at class {rep}"
                )));
            }
            class_tuples.push(tuple);
        }
        Ok(Self {
            factors,
            product,
            classes,
            class_tuples,
        })
    }

    /// The outer product `χ_{i_1} × χ_{i_2} × …` for factor character indices.
    pub fn character(&self, indices: &[usize]) -> Result<ClassFunction> {
        if indices.len() != self.factors.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} factor indices, got {}",
                self.factors.len(),
                indices.len()
            )));
        }
        for (f, &i) in self.factors.iter().zip(indices) {
            if i >= f.table.len() {
                return Err(Error::InvalidArgument(format!("character index {i} out of range")));
            }
        }
        self.outer(|f, c| self.factors[f].table.irreducibles[indices[f]].values[c].clone())
    }

    /// Outer product of arbitrary class functions on the factors.
    pub fn outer_of(&self, parts: &[&ClassFunction]) -> Result<ClassFunction> {
        if parts.len() != self.factors.len() {
            return Err(Error::InvalidArgument("wrong number of factor functions".into()));
        }
        self.outer(|f, c| parts[f].values[c].clone())
    }

    fn outer(&self, value: impl Fn(usize, usize) -> Cyclotomic) -> Result<ClassFunction> {
        let values = self
            .class_tuples
            .iter()
            .map(|tuple| {
                tuple
                    .iter()
                    .enumerate()
                    .fold(Cyclotomic::one(), |acc, (f, &c)| acc * value(f, c))
            })
            .collect();
        ClassFunction::new(self.classes.clone(), values)
    }

    /// All index tuples, last factor varying fastest.
    pub fn index_tuples(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for f in &self.factors {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..f.table.len()).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        out
    }

    pub fn table(&self) -> Result<CharacterTable> {
        let irr = self
            .index_tuples()
            .iter()
            .map(|t| self.character(t))
            .collect::<Result<Vec<_>>>()?;
        CharacterTable::new(self.classes.clone(), irr)
    }
}

/// Table of `G1 × G2` realized on the disjoint union of their point sets, `G1`
/// first.
pub fn direct_product_table(
    t1: &CharacterTable,
    g1: &PermGroup,
    t2: &CharacterTable,
    g2: &PermGroup,
    product: &PermGroup,
) -> Result<CharacterTable> {
    if product.degree() != g1.degree() + g2.degree() {
        return Err(Error::InvalidArgument(
            "class pairing mismatch: product degree is not the sum of factor degrees".into(),
        ));
    }
    BlockProduct::consecutive(&[(t1, g1), (t2, g2)], product)?.table()
}

/// Internal direct product of copies of groups placed on consecutive blocks.
pub fn block_direct_product(groups: &[&PermGroup], cap: usize) -> Result<PermGroup> {
    let degree: usize = groups.iter().map(|g| g.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for g in groups {
        gens.extend(g.generators().iter().map(|x| x.shifted(offset, degree)));
        offset += g.degree();
    }
    PermGroup::new(degree, gens, cap)
}
