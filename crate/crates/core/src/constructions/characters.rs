use super::base::{base_groups, printed_chi, printed_nu, BaseGroups};
use super::family::{FamilyInstance, Series};
use crate::chartab::{
    dixon_character_table, dixon_character_table_with_prime, BlockProduct, CharacterTable,
    ClassFunction,
};
use crate::error::{Error, Result};

/// Character tables of a family member and of the base groups, with the
/// printed labels located.
pub struct FamilyTables {
    pub base: BaseGroups,
    pub s4: CharacterTable,
    pub v4: CharacterTable,
    pub d8: CharacterTable,
    /// Table indices of `χ1..χ5`.
    pub chi: [usize; 5],
    /// Table indices of `ν1..ν4`.
    pub nu: [usize; 4],
    pub g: CharacterTable,
    pub h: CharacterTable,
    pub k: CharacterTable,
}

impl FamilyTables {
    /// Tables of `H` and `K` as outer products for series A and B, by Dixon's
    /// method otherwise; the table of `G` always by Dixon's method.
    pub fn new(inst: &FamilyInstance, prime: Option<u64>) -> Result<Self> {
        let base = base_groups();
        let s4 = dixon_character_table(&base.s4)?;
        let v4 = dixon_character_table(&base.v4)?;
        let d8 = dixon_character_table(&base.d8)?;
        let chi = printed_chi(&s4, &base.s4)?;
        let nu = printed_nu(&v4, &base.v4)?;
        let g = dixon_character_table_with_prime(&inst.g, prime)?;
        let (h, k) = match inst.series {
            Series::A | Series::B => {
                let first = if inst.series == Series::A {
                    (&v4, &*base.v4)
                } else {
                    (&d8, &*base.d8)
                };
                let mut parts = vec![(&s4, &*base.s4); inst.n];
                let k = BlockProduct::consecutive(&parts, &inst.k)?.table()?;
                parts[0] = first;
                let h = BlockProduct::consecutive(&parts, &inst.h)?.table()?;
                (h, k)
            }
            Series::C => (
                dixon_character_table(&inst.h)?,
                dixon_character_table(&inst.k)?,
            ),
        };
        Ok(Self {
            base,
            s4,
            v4,
            d8,
            chi,
            nu,
            g,
            h,
            k,
        })
    }

    /// Outer product on the `n` blocks of `K`, factors given by printed
    /// `χ` labels (1-based).
    pub fn k_character(&self, inst: &FamilyInstance, labels: &[usize]) -> Result<ClassFunction> {
        let parts = vec![(&self.s4, &*self.base.s4); inst.n];
        let indices = labels
            .iter()
            .map(|&l| self.chi_index(l))
            .collect::<Result<Vec<_>>>()?;
        BlockProduct::consecutive(&parts, &inst.k)?.character(&indices)
    }

    fn chi_index(&self, label: usize) -> Result<usize> {
        label
            .checked_sub(1)
            .and_then(|i| self.chi.get(i).copied())
            .ok_or_else(|| Error::InvalidArgument(format!("no character chi_{label}")))
    }
}

/// `χ_{i_1} × … × χ_{i_n} ∈ Irr(K_n)` with its label tuple.
#[derive(Clone, Debug)]
pub struct XnCharacter {
    pub tuple: Vec<usize>,
    pub character: ClassFunction,
}

/// All label tuples with `i_1 ∈ {4,5}` and `i_j ∈ {1,2,3}` otherwise, in
/// lexicographic order.
pub fn xn_tuples(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![4], vec![5]];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=3).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn xn_characters(inst: &FamilyInstance, tables: &FamilyTables) -> Result<Vec<XnCharacter>> {
    if !matches!(inst.series, Series::A | Series::B) {
        return Err(Error::Unsupported("X_n is defined for the wreath series".into()));
    }
    xn_tuples(inst.n)
        .into_iter()
        .map(|tuple| {
            let character = tables.k_character(inst, &tuple)?;
            Ok(XnCharacter { tuple, character })
        })
        .collect()
}

/// `α_n = ν2 × χ1 × … × χ1` and `ω_n = ν2 × χ2 × … × χ2` on `H_n`.
pub fn alpha_omega(
    inst: &FamilyInstance,
    tables: &FamilyTables,
) -> Result<(ClassFunction, ClassFunction)> {
    if inst.series != Series::A {
        return Err(Error::Unsupported("alpha and omega are defined for series A".into()));
    }
    let mut parts = vec![(&tables.s4, &*tables.base.s4); inst.n];
    parts[0] = (&tables.v4, &*tables.base.v4);
    let product = BlockProduct::consecutive(&parts, &inst.h)?;
    let with_tail = |label: usize| {
        let mut idx = vec![tables.chi[label - 1]; inst.n];
        idx[0] = tables.nu[1];
        product.character(&idx)
    };
    Ok((with_tail(1)?, with_tail(2)?))
}
