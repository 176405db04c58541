use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation, SubgroupEmbedding};

/// Per-class data a class function needs: representatives, sizes, orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub group_order: usize,
    pub representatives: Vec<Permutation>,
    pub sizes: Vec<usize>,
    pub element_orders: Vec<u64>,
}

impl ClassData {
    pub fn of(group: &PermGroup) -> Arc<Self> {
        let cls = group.conjugacy_classes();
        Arc::new(Self {
            group_order: group.order(),
            representatives: cls
                .classes()
                .iter()
                .map(|c| c.representative.clone())
                .collect(),
            sizes: cls.sizes(),
            element_orders: cls
                .classes()
                .iter()
                .map(|c| c.representative.order())
                .collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.group_order / self.sizes[c]
    }

    fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

/// A function on the conjugacy classes of a group, in canonical class order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    pub classes: Arc<ClassData>,
    pub values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.classes.same_as(&other.classes) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    pub fn new(classes: Arc<ClassData>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != classes.len() {
            return Err(Error::GroupMismatch {
                left: classes.len(),
                right: values.len(),
            });
        }
        Ok(Self { classes, values })
    }

    pub fn zero(classes: Arc<ClassData>) -> Self {
        let n = classes.len();
        Self {
            classes,
            values: vec![Cyclotomic::zero(); n],
        }
    }

    pub fn trivial(classes: Arc<ClassData>) -> Self {
        let n = classes.len();
        Self {
            classes,
            values: vec![Cyclotomic::one(); n],
        }
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.classes.same_as(&other.classes) {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left: self.classes.len(),
                right: other.classes.len(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            classes: self.classes.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            classes: self.classes.clone(),
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }

    /// Pointwise product (tensor product of characters).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            classes: self.classes.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }
}

/// `⟨f, h⟩ = (1/|G|) Σ_classes |C| f(c) conj(h(c))`.
pub fn inner_product(f: &ClassFunction, h: &ClassFunction) -> Result<Cyclotomic> {
    f.check_same(h)?;
    let cd = &f.classes;
    let mut acc = Cyclotomic::zero();
    for ((a, b), &size) in f.values.iter().zip(&h.values).zip(&cd.sizes) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let term = a * &b.conj();
        acc = acc + term.scale(&Rational::from_integer(BigInt::from(size)));
    }
    Ok(acc.scale(&Rational::new(
        BigInt::from(1),
        BigInt::from(cd.group_order),
    )))
}

/// `χ|_H`: value at a sub-class is the value at the ambient class it fuses to.
pub fn restrict_character(chi: &ClassFunction, emb: &SubgroupEmbedding) -> Result<ClassFunction> {
    restrict_with(chi, emb, ClassData::of(&emb.sub))
}

pub(crate) fn restrict_with(
    chi: &ClassFunction,
    emb: &SubgroupEmbedding,
    sub_classes: Arc<ClassData>,
) -> Result<ClassFunction> {
    if chi.classes.len() != emb.ambient.conjugacy_classes().len() {
        return Err(Error::GroupMismatch {
            left: chi.classes.len(),
            right: emb.ambient.conjugacy_classes().len(),
        });
    }
    ClassFunction::new(
        sub_classes,
        emb.fusion.iter().map(|&c| chi.values[c].clone()).collect(),
    )
}

/// `ψ^G(g) = (|C_G(g)| / |H|) Σ_{H-classes d ⊆ g^G} |d| ψ(d)`, which is the
/// sum `(1/|H|) Σ_{x ∈ G} ψ°(x g x⁻¹)` grouped by classes.
pub fn induce_character(psi: &ClassFunction, emb: &SubgroupEmbedding) -> Result<ClassFunction> {
    induce_with(psi, emb, ClassData::of(&emb.ambient))
}

pub(crate) fn induce_with(
    psi: &ClassFunction,
    emb: &SubgroupEmbedding,
    ambient_classes: Arc<ClassData>,
) -> Result<ClassFunction> {
    if psi.classes.len() != emb.fusion.len() {
        return Err(Error::GroupMismatch {
            left: psi.classes.len(),
            right: emb.fusion.len(),
        });
    }
    let mut sums = vec![Cyclotomic::zero(); ambient_classes.len()];
    for (d, &c) in emb.fusion.iter().enumerate() {
        let size = Rational::from_integer(BigInt::from(psi.classes.sizes[d]));
        sums[c] = &sums[c] + &psi.values[d].scale(&size);
    }
    let h = emb.sub.order();
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(c, s)| {
            let f = Rational::new(
                BigInt::from(ambient_classes.centralizer_order(c)),
                BigInt::from(h),
            );
            s.scale(&f)
        })
        .collect();
    ClassFunction::new(ambient_classes, values)
}

/// Nonnegative integer multiplicity of each irreducible.
pub type MultiplicityVector = Vec<u64>;

/// Ascending degree, then value sequences in descending order.
pub fn canonical_order(a: &ClassFunction, b: &ClassFunction) -> Ordering {
    a.values[0]
        .cmp(&b.values[0])
        .then_with(|| b.values.cmp(&a.values))
}

/// Irreducible characters of a group together with its class data.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Arc<ClassData>,
    pub irreducibles: Vec<ClassFunction>,
}

impl CharacterTable {
    /// Sorts the characters canonically.
    pub fn new(classes: Arc<ClassData>, mut irreducibles: Vec<ClassFunction>) -> Result<Self> {
        for chi in &irreducibles {
            if !chi.classes.same_as(&classes) {
                return Err(Error::GroupMismatch {
                    left: classes.len(),
                    right: chi.classes.len(),
                });
            }
        }
        irreducibles.sort_by(canonical_order);
        Ok(Self {
            classes,
            irreducibles,
        })
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.classes.group_order
    }

    pub fn degrees(&self) -> Vec<Cyclotomic> {
        self.irreducibles.iter().map(|c| c.values[0].clone()).collect()
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    /// Index of the irreducible equal to `f`, if any.
    pub fn position(&self, f: &ClassFunction) -> Option<usize> {
        self.irreducibles.iter().position(|c| c == f)
    }

    /// Multiplicities of the irreducibles in `f`; rejects anything that is not
    /// a character.
    pub fn decompose(&self, f: &ClassFunction) -> Result<MultiplicityVector> {
        let mut mults = Vec::with_capacity(self.len());
        let mut rebuilt = ClassFunction::zero(self.classes.clone());
        for chi in &self.irreducibles {
            let ip = inner_product(f, chi)?;
            let m = ip
                .as_integer()
                .filter(|m| !m.is_negative())
                .ok_or_else(|| Error::NotACharacter(format!("multiplicity {ip} is not a nonnegative integer")))?;
            let m: u64 = u64::try_from(m)
                .map_err(|_| Error::NotACharacter("multiplicity overflow".into()))?;
            if m > 0 {
                rebuilt = rebuilt.add(&chi.scale(&Rational::from_integer(BigInt::from(m))))?;
            }
            mults.push(m);
        }
        if rebuilt.values != f.values {
            return Err(Error::NotACharacter(
                "class function is not a combination of irreducibles".into(),
            ));
        }
        Ok(mults)
    }

    /// Checks row and column orthogonality, the degree-square sum and the
    /// conductor of each value against the element order of its class.
    pub fn verify(&self) -> Result<()> {
        let n = self.classes.len();
        if self.len() != n {
            return Err(Error::Inconsistency(format!(
                "table has {} characters but {n} classes",
                self.len()
            )));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let ip = inner_product(a, b)?;
                let expect = Cyclotomic::from_integer((i == j) as i64);
                if ip != expect {
                    return Err(Error::Inconsistency(format!(
                        "row orthogonality fails for characters {i},{j}: {ip}"
                    )));
                }
            }
        }
        for c in 0..n {
            let s: Cyclotomic = self
                .irreducibles
                .iter()
                .map(|chi| &chi.values[c] * &chi.values[c].conj())
                .sum();
            if s != Cyclotomic::from_integer(self.classes.centralizer_order(c) as i64) {
                return Err(Error::Inconsistency(format!(
                    "column orthogonality fails for class {c}: {s}"
                )));
            }
            for chi in &self.irreducibles {
                let v = &chi.values[c];
                if !v.is_algebraic_integer()
                    || self.classes.element_orders[c] % v.conductor() as u64 != 0
                {
                    return Err(Error::Inconsistency(format!(
                        "value {v} at class {c} is not an algebraic integer of the right conductor"
                    )));
                }
            }
        }
        let deg_sq: Cyclotomic = self
            .irreducibles
            .iter()
            .map(|chi| &chi.values[0] * &chi.values[0])
            .sum();
        if deg_sq != Cyclotomic::from_integer(self.group_order() as i64) {
            return Err(Error::Inconsistency(format!(
                "degree squares sum to {deg_sq}, not {}",
                self.group_order()
            )));
        }
        Ok(())
    }

    /// Re-expresses an imported table on the canonical classes of `group`.
    pub fn align_to(&self, group: &PermGroup) -> Result<Self> {
        let target = ClassData::of(group);
        if target.len() != self.classes.len() || target.group_order != self.group_order() {
            return Err(Error::GroupMismatch {
                left: target.len(),
                right: self.classes.len(),
            });
        }
        let mut perm = vec![usize::MAX; target.len()];
        for (old, rep) in self.classes.representatives.iter().enumerate() {
            let new = group.class_of(rep)?;
            if perm[new] != usize::MAX || target.sizes[new] != self.classes.sizes[old] {
                return Err(Error::InvalidArgument(format!(
                    "class {rep} does not match the group's classes"
                )));
            }
            perm[new] = old;
        }
        let irr = self
            .irreducibles
            .iter()
            .map(|chi| ClassFunction {
                classes: target.clone(),
                values: perm.iter().map(|&old| chi.values[old].clone()).collect(),
            })
            .collect();
        Self::new(target, irr)
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            schema: 1,
            group_order: self.group_order(),
            degree: self
                .classes
                .representatives
                .first()
                .map_or(0, Permutation::degree),
            classes: (0..self.classes.len())
                .map(|c| ClassJson {
                    representative: self.classes.representatives[c].to_string(),
                    size: self.classes.sizes[c],
                    centralizer_order: self.classes.centralizer_order(c),
                    element_order: self.classes.element_orders[c],
                })
                .collect(),
            characters: self.irreducibles.iter().map(|c| c.values.clone()).collect(),
        }
    }

    pub fn from_json(t: &TableJson) -> Result<Self> {
        if t.schema != 1 {
            return Err(Error::Parse(format!("unsupported table schema {}", t.schema)));
        }
        let mut reps = Vec::with_capacity(t.classes.len());
        for c in &t.classes {
            reps.push(Permutation::parse(&c.representative, t.degree)?);
            if c.size == 0 || c.size * c.centralizer_order != t.group_order {
                return Err(Error::Parse(format!(
                    "class {} has inconsistent size/centralizer order",
                    c.representative
                )));
            }
        }
        let classes = Arc::new(ClassData {
            group_order: t.group_order,
            element_orders: reps.iter().map(Permutation::order).collect(),
            representatives: reps,
            sizes: t.classes.iter().map(|c| c.size).collect(),
        });
        let irr = t
            .characters
            .iter()
            .map(|v| ClassFunction::new(classes.clone(), v.clone()))
            .collect::<Result<Vec<_>>>()?;
        let table = Self::new(classes, irr)?;
        table.verify()?;
        Ok(table)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassJson {
    pub representative: String,
    pub size: usize,
    pub centralizer_order: usize,
    pub element_order: u64,
}

/// Exported table layout.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableJson {
    pub schema: u32,
    pub group_order: usize,
    pub degree: usize,
    pub classes: Vec<ClassJson>,
    pub characters: Vec<Vec<Cyclotomic>>,
}
