use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A finitely generated permutation group with all of its elements enumerated.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    classes: OnceLock<ClassSet>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// One conjugacy class. `members` are indices into the group's element list.
#[derive(Clone, Debug)]
pub struct Class {
    pub representative: Permutation,
    pub size: usize,
    pub members: Vec<u32>,
}

/// Conjugacy classes in canonical order: ascending size, ties broken by the
/// lexicographically smallest member image sequence. Each representative is
/// that smallest member.
#[derive(Clone, Debug)]
pub struct ClassSet {
    classes: Vec<Class>,
    element_class: Vec<u32>,
}

impl ClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn get(&self, i: usize) -> &Class {
        &self.classes[i]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    /// Class of the element with the given index.
    pub fn class_of_index(&self, idx: usize) -> usize {
        self.element_class[idx] as usize
    }
}

/// Breadth-first closure of `generators` under right multiplication.
///
/// The element order depends only on the generator list.
pub fn enumerate_elements(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<PermGroup> {
    PermGroup::new(degree, generators.to_vec(), cap)
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::InvalidArgument("cap must be at least 1".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0u32);
        let mut buf = vec![0u16; degree];
        let mut next = 0;
        while next < elements.len() {
            for g in &generators {
                elements[next].mul_into(g, &mut buf);
                if !index.contains_key(buf.as_slice()) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded {
                            cap,
                            partial: elements.len() + 1,
                        });
                    }
                    let p = Permutation::from_images_unchecked(buf.clone().into_boxed_slice());
                    index.insert(p.clone(), elements.len() as u32);
                    elements.push(p);
                }
            }
            next += 1;
        }
        Ok(Self {
            degree,
            generators,
            elements,
            index,
            classes: OnceLock::new(),
        })
    }

    /// Parses a `;`-separated generator list in cycle notation.
    pub fn from_cycle_notation(text: &str, degree: usize, cap: usize) -> Result<Self> {
        Self::new(degree, Permutation::parse_list(text, degree)?, cap)
    }

    /// Group whose elements are exactly `elements` (which must be closed).
    ///
    /// A generating set is picked greedily from `elements` in the given order.
    pub fn from_elements(degree: usize, elements: &[Permutation]) -> Result<Self> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = Self::new(degree, Vec::new(), usize::MAX)?;
        for e in elements {
            if !current.contains(e) {
                gens.push(e.clone());
                current = Self::new(degree, gens.clone(), elements.len().max(1))
                    .map_err(|_| Error::NotSubgroup("element set is not closed".into()))?;
            }
        }
        if current.order() != elements.len() {
            return Err(Error::NotSubgroup("element set is not closed".into()));
        }
        Ok(current)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &[u16]) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.index.contains_key(p.images())
    }

    /// Whether every element of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.elements.iter().all(|e| self.contains(e))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.conjugacy_classes()
            .classes()
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.representative.order()))
    }

    /// Conjugacy classes, computed once by orbit closure under generator
    /// conjugation.
    pub fn conjugacy_classes(&self) -> &ClassSet {
        self.classes.get_or_init(|| self.compute_classes())
    }

    pub fn class_of(&self, p: &Permutation) -> Result<usize> {
        let idx = self
            .index_of(p.images())
            .ok_or_else(|| Error::NotInGroup(p.to_string()))?;
        Ok(self.conjugacy_classes().class_of_index(idx))
    }

    fn compute_classes(&self) -> ClassSet {
        const UNSET: u32 = u32::MAX;
        let n = self.order();
        let inverses: Vec<Permutation> = self.generators.iter().map(|g| g.inverse()).collect();
        let mut label = vec![UNSET; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if label[start] != UNSET {
                continue;
            }
            let cid = raw.len() as u32;
            let mut members = vec![start as u32];
            label[start] = cid;
            queue.push_back(start);
            while let Some(i) = queue.pop_front() {
                for (g, gi) in self.generators.iter().zip(&inverses) {
                    let c = gi.mul(&self.elements[i]).mul(g);
                    let j = self.index[c.images()] as usize;
                    if label[j] == UNSET {
                        label[j] = cid;
                        members.push(j as u32);
                        queue.push_back(j);
                    }
                }
            }
            raw.push(members);
        }
        let mut classes: Vec<Class> = raw
            .into_iter()
            .map(|mut members| {
                members.sort_unstable();
                let rep_idx = *members
                    .iter()
                    .min_by(|&&a, &&b| self.elements[a as usize].cmp(&self.elements[b as usize]))
                    .expect("nonempty class");
                Class {
                    representative: self.elements[rep_idx as usize].clone(),
                    size: members.len(),
                    members,
                }
            })
            .collect();
        classes.sort_by(|a, b| {
            a.size
                .cmp(&b.size)
                .then_with(|| a.representative.cmp(&b.representative))
        });
        let mut element_class = vec![0u32; n];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                element_class[m as usize] = ci as u32;
            }
        }
        ClassSet {
            classes,
            element_class,
        }
    }
}

/// Convenience wrapper for [`PermGroup::conjugacy_classes`].
pub fn conjugacy_classes(group: &PermGroup) -> &ClassSet {
    group.conjugacy_classes()
}

/// `C_G(x)` as a subgroup.
pub fn centralizer(group: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    if !group.contains(x) {
        return Err(Error::NotInGroup(x.to_string()));
    }
    let elems: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|g| g.mul(x) == x.mul(g))
        .cloned()
        .collect();
    PermGroup::from_elements(group.degree(), &elems)
}

/// Order of `C_G(x)` without building the subgroup.
pub fn centralizer_order(group: &PermGroup, x: &Permutation) -> usize {
    group
        .elements()
        .iter()
        .filter(|g| g.mul(x) == x.mul(g))
        .count()
}
