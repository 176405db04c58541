use std::sync::Arc;

use crate::chartab::CharacterTable;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

pub const S4_GENERATORS: &str = "(1,2);(1,2,3,4)";
pub const V4_GENERATORS: &str = "(1,3)(2,4);(1,2)(3,4)";
pub const D8_GENERATORS: &str = "(1,3);(1,2,3,4)";
pub const S3_GENERATORS: &str = "(1,2);(1,2,3)";

/// The labeled elements of `S4` used to index the printed tables.
#[derive(Clone, Debug)]
pub struct Labels {
    pub g1: Permutation,
    pub g2: Permutation,
    pub g3: Permutation,
    pub g3p: Permutation,
    pub g4: Permutation,
    pub g4p: Permutation,
    pub g5: Permutation,
}

impl Labels {
    pub fn new() -> Self {
        let p = |s: &str| Permutation::parse(s, 4).expect("valid literal");
        Self {
            g1: p("()"),
            g2: p("(1,3)(2,4)"),
            g3: p("(1,2)(3,4)"),
            g3p: p("(1,2,3)"),
            g4: p("(1,4)(2,3)"),
            g4p: p("(1,3)"),
            g5: p("(1,2,3,4)"),
        }
    }

    /// Column labels of the `V4` table: `g1, g2, g3, g4`.
    pub fn v4_columns(&self) -> [&Permutation; 4] {
        [&self.g1, &self.g2, &self.g3, &self.g4]
    }

    /// Column labels of the `S4` table: `g1, g2, g3', g4', g5`.
    pub fn s4_columns(&self) -> [&Permutation; 5] {
        [&self.g1, &self.g2, &self.g3p, &self.g4p, &self.g5]
    }
}

impl Default for Labels {
    fn default() -> Self {
        Self::new()
    }
}

/// Rows `ν1..ν4` on `g1, g2, g3, g4`.
pub const NU_ROWS: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];

/// Rows `χ1..χ5` on `g1, g2, g3', g4', g5`.
pub const CHI_ROWS: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, -1, -1],
    [2, 2, -1, 0, 0],
    [3, -1, 0, 1, -1],
    [3, -1, 0, -1, 1],
];

pub struct BaseGroups {
    pub s4: Arc<PermGroup>,
    pub v4: Arc<PermGroup>,
    pub d8: Arc<PermGroup>,
    pub labels: Labels,
}

pub fn base_groups() -> BaseGroups {
    let g = |s: &str| Arc::new(PermGroup::from_cycle_notation(s, 4, 100).expect("small group"));
    BaseGroups {
        s4: g(S4_GENERATORS),
        v4: g(V4_GENERATORS),
        d8: g(D8_GENERATORS),
        labels: Labels::new(),
    }
}

/// For each printed row, the index of the irreducible of `table` taking those
/// values at the labeled columns.
fn identify<const R: usize, const C: usize>(
    table: &CharacterTable,
    group: &PermGroup,
    columns: [&Permutation; C],
    rows: &[[i64; C]; R],
) -> Result<[usize; R]> {
    let classes = columns
        .iter()
        .map(|p| group.class_of(p))
        .collect::<Result<Vec<_>>>()?;
    let mut out = [0usize; R];
    for (k, row) in rows.iter().enumerate() {
        let want: Vec<Cyclotomic> = row.iter().map(|&x| Cyclotomic::from_integer(x)).collect();
        let hits: Vec<usize> = (0..table.len())
            .filter(|&i| classes.iter().map(|&c| &table.irreducibles[i].values[c]).eq(want.iter()))
            .collect();
        match hits[..] {
            [i] => out[k] = i,
            _ => {
                return Err(Error::Inconsistency(format!(
                    "printed row {} matches {} irreducibles",
                    k + 1,
                    hits.len()
                )))
            }
        }
    }
    Ok(out)
}

/// Table indices of `χ1..χ5` in a table of `S4`.
pub fn printed_chi(table: &CharacterTable, s4: &PermGroup) -> Result<[usize; 5]> {
    identify(table, s4, Labels::new().s4_columns(), &CHI_ROWS)
}

/// Table indices of `ν1..ν4` in a table of `V4`.
pub fn printed_nu(table: &CharacterTable, v4: &PermGroup) -> Result<[usize; 4]> {
    identify(table, v4, Labels::new().v4_columns(), &NU_ROWS)
}
