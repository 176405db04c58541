use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Set of ambient-group elements, as a bitset over the ambient element indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet {
    bits: Vec<u64>,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        Self {
            bits: vec![0; n.div_ceil(64)],
        }
    }

    pub fn of_subgroup(ambient: &PermGroup, sub: &PermGroup) -> Result<Self> {
        let mut s = Self::empty(ambient.order());
        for e in sub.elements() {
            let i = ambient
                .index_of(e.images())
                .ok_or_else(|| Error::NotSubgroup(format!("{e} is not in the ambient group")))?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn insert(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Self {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }

    /// `{g⁻¹ x g : x ∈ self}`.
    pub fn conjugate(&self, ambient: &PermGroup, g: &Permutation) -> Self {
        let mut out = Self::empty(ambient.order());
        for i in self.iter() {
            let c = ambient.element(i).conjugate_by(g);
            out.insert(ambient.index_of(c.images()).expect("closed under conjugation"));
        }
        out
    }

    pub fn to_group(&self, ambient: &PermGroup) -> Result<PermGroup> {
        let elems: Vec<Permutation> = self.iter().map(|i| ambient.element(i).clone()).collect();
        PermGroup::from_elements(ambient.degree(), &elems)
    }
}

fn require_subgroup(ambient: &PermGroup, sub: &PermGroup) -> Result<()> {
    if sub.degree() != ambient.degree() {
        return Err(Error::DegreeMismatch {
            expected: ambient.degree(),
            found: sub.degree(),
        });
    }
    if !ambient.contains_group(sub) {
        return Err(Error::NotSubgroup(
            "some element of the subgroup is not in the ambient group".into(),
        ));
    }
    Ok(())
}

/// Whether `sub` is normal in `ambient`.
pub fn is_normal(ambient: &PermGroup, sub: &PermGroup) -> Result<bool> {
    require_subgroup(ambient, sub)?;
    Ok(ambient.generators().iter().all(|a| {
        sub.generators()
            .iter()
            .all(|s| sub.contains(&s.conjugate_by(a)))
    }))
}

/// A conjugate `sub^witness` of a subgroup.
#[derive(Clone, Debug)]
pub struct Conjugate {
    pub elements: ElementSet,
    pub witness: Permutation,
}

/// The distinct conjugates of `sub`, starting with `sub` itself, found by
/// breadth-first search over ambient generators.
pub fn distinct_conjugates(ambient: &PermGroup, sub: &PermGroup) -> Result<Vec<Conjugate>> {
    require_subgroup(ambient, sub)?;
    let first = ElementSet::of_subgroup(ambient, sub)?;
    let mut seen = HashSet::new();
    seen.insert(first.clone());
    let mut out = vec![Conjugate {
        elements: first,
        witness: Permutation::identity(ambient.degree()),
    }];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in ambient.generators() {
            let next = out[i].elements.conjugate(ambient, g);
            if seen.insert(next.clone()) {
                let witness = out[i].witness.mul(g);
                out.push(Conjugate {
                    elements: next,
                    witness,
                });
                queue.push_back(out.len() - 1);
            }
        }
    }
    Ok(out)
}

/// `Core_G(H)`: the intersection of all conjugates of `sub`.
pub fn subgroup_core(ambient: &PermGroup, sub: &PermGroup) -> Result<PermGroup> {
    let conjugates = distinct_conjugates(ambient, sub)?;
    core_of(&conjugates).to_group(ambient)
}

fn core_of(conjugates: &[Conjugate]) -> ElementSet {
    conjugates
        .iter()
        .skip(1)
        .fold(conjugates[0].elements.clone(), |acc, c| acc.intersect(&c.elements))
}

/// Smallest number of conjugates of `sub` whose intersection is the core,
/// together with conjugating elements realizing it.
#[derive(Clone, Debug)]
pub struct CoreCover {
    pub m: usize,
    pub witnesses: Vec<Permutation>,
    pub core_order: usize,
    pub conjugate_count: usize,
}

pub fn min_core_conjugates(ambient: &PermGroup, sub: &PermGroup) -> Result<CoreCover> {
    let conjugates = distinct_conjugates(ambient, sub)?;
    let core = core_of(&conjugates);
    let core_order = core.len();
    // Any cover can be conjugated to one containing `sub` itself, so index 0
    // is always chosen.
    let rest = conjugates.len() - 1;
    for m in 1..=conjugates.len() {
        let mut chosen = vec![0usize];
        if search(&conjugates, &conjugates[0].elements, 1, rest, m, core_order, &mut chosen) {
            return Ok(CoreCover {
                m,
                witnesses: chosen
                    .iter()
                    .map(|&i| conjugates[i].witness.clone())
                    .collect(),
                core_order,
                conjugate_count: conjugates.len(),
            });
        }
    }
    Err(Error::Inconsistency(
        "intersection of all conjugates is not the core".into(),
    ))
}

fn search(
    conjugates: &[Conjugate],
    acc: &ElementSet,
    from: usize,
    last: usize,
    m: usize,
    core_order: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == m {
        return acc.len() == core_order;
    }
    for i in from..=last {
        if last + 1 - i < m - chosen.len() {
            break;
        }
        chosen.push(i);
        let next = acc.intersect(&conjugates[i].elements);
        if search(conjugates, &next, i + 1, last, m, core_order, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// A subgroup together with its class fusion into the ambient group.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    pub ambient: Arc<PermGroup>,
    pub sub: Arc<PermGroup>,
    /// `fusion[c]` is the ambient class containing sub-class `c`.
    pub fusion: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn index(&self) -> usize {
        self.ambient.order() / self.sub.order()
    }
}

pub fn class_fusion(ambient: Arc<PermGroup>, sub: Arc<PermGroup>) -> Result<SubgroupEmbedding> {
    require_subgroup(&ambient, &sub)?;
    let fusion = sub
        .conjugacy_classes()
        .classes()
        .iter()
        .map(|c| ambient.class_of(&c.representative))
        .collect::<Result<Vec<_>>>()?;
    Ok(SubgroupEmbedding {
        ambient,
        sub,
        fusion,
    })
}
