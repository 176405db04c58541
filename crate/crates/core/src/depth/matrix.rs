use serde::Serialize;

use crate::chartab::{induce_character, restrict_character, CharacterTable};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::SubgroupEmbedding;

/// Dense matrix of nonnegative integers, row-major.
pub type IntMatrix = Vec<Vec<u128>>;

/// `m_ij = ⟨ψ_i^G, χ_j⟩`, rows indexed by `Irr(H)` and columns by `Irr(G)`,
/// both in canonical table order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionMatrix {
    pub entries: Vec<Vec<u64>>,
    pub row_degrees: Vec<u64>,
    pub col_degrees: Vec<u64>,
}

fn integer_degree(d: &Cyclotomic) -> Result<u64> {
    d.as_integer()
        .and_then(|n| u64::try_from(n).ok())
        .ok_or_else(|| Error::Inconsistency(format!("degree {d} is not a positive integer")))
}

impl InclusionMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn to_int(&self) -> IntMatrix {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| x as u128).collect())
            .collect()
    }

    /// Row indices with a positive entry in column `j`.
    pub fn column_support(&self, j: usize) -> Vec<usize> {
        (0..self.rows()).filter(|&i| self.entries[i][j] > 0).collect()
    }
}

/// Builds the matrix by restricting and decomposing each `χ_j`, then checks
/// it against inducing and decomposing each `ψ_i` and against the degree
/// identity `Σ_i m_ij ψ_i(1) = χ_j(1)`.
pub fn inclusion_matrix(
    g_table: &CharacterTable,
    h_table: &CharacterTable,
    emb: &SubgroupEmbedding,
) -> Result<InclusionMatrix> {
    let r = h_table.len();
    let s = g_table.len();
    let mut entries = vec![vec![0u64; s]; r];
    for (j, chi) in g_table.irreducibles.iter().enumerate() {
        let res = restrict_character(chi, emb)?;
        let m = h_table.decompose(&res)?;
        for i in 0..r {
            entries[i][j] = m[i];
        }
    }
    for (i, psi) in h_table.irreducibles.iter().enumerate() {
        let ind = induce_character(psi, emb)?;
        let row = g_table.decompose(&ind)?;
        if row != entries[i] {
            return Err(Error::Inconsistency(format!(
                "inclusion matrix row {i}: restriction gives {:?}, induction gives {row:?}",
                entries[i]
            )));
        }
    }
    let row_degrees = h_table
        .degrees()
        .iter()
        .map(integer_degree)
        .collect::<Result<Vec<_>>>()?;
    let col_degrees = g_table
        .degrees()
        .iter()
        .map(integer_degree)
        .collect::<Result<Vec<_>>>()?;
    for j in 0..s {
        let sum: u64 = (0..r).map(|i| entries[i][j] * row_degrees[i]).sum();
        if sum != col_degrees[j] {
            return Err(Error::Inconsistency(format!(
                "column {j} decomposes to degree {sum}, expected {}",
                col_degrees[j]
            )));
        }
    }
    Ok(InclusionMatrix {
        entries,
        row_degrees,
        col_degrees,
    })
}

fn overflow() -> Error {
    Error::Inconsistency("matrix power overflowed 128 bits".into())
}

/// `A·B`, or `A·Bᵀ` when `transpose` is set.
fn mul(a: &IntMatrix, b: &IntMatrix, transpose: bool) -> Result<IntMatrix> {
    let inner = a.first().map_or(0, Vec::len);
    let cols = if transpose {
        b.len()
    } else {
        b.first().map_or(0, Vec::len)
    };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| {
                    (0..inner).try_fold(0u128, |acc, k| {
                        let y = if transpose { b[c][k] } else { b[k][c] };
                        row[k]
                            .checked_mul(y)
                            .and_then(|t| acc.checked_add(t))
                            .ok_or_else(overflow)
                    })
                })
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as u128).collect())
        .collect()
}

/// Successive powers `M⁰ = I, M¹ = M, M^{2l} = M^{2l−1}Mᵀ, M^{2l+1} = M^{2l}M`.
struct Powers {
    m: IntMatrix,
    seq: Vec<IntMatrix>,
}

impl Powers {
    fn new(m: &InclusionMatrix) -> Self {
        let m = m.to_int();
        Self {
            seq: vec![identity(m.len()), m.clone()],
            m,
        }
    }

    fn get(&mut self, n: usize) -> Result<&IntMatrix> {
        while self.seq.len() <= n {
            let k = self.seq.len();
            let next = mul(&self.seq[k - 1], &self.m, k % 2 == 0)?;
            self.seq.push(next);
        }
        Ok(&self.seq[n])
    }
}

pub fn bkk_power(m: &InclusionMatrix, n: usize) -> Result<IntMatrix> {
    Powers::new(m).get(n).cloned()
}

/// Smallest `a ≥ 1` with `upper ≤ a·lower` entrywise, if any.
fn dominating_multiplier(upper: &IntMatrix, lower: &IntMatrix) -> Option<u128> {
    let mut a = 1u128;
    for (ru, rl) in upper.iter().zip(lower) {
        for (&u, &l) in ru.iter().zip(rl) {
            if u == 0 {
                continue;
            }
            if l == 0 {
                return None;
            }
            a = a.max(u.div_ceil(l));
        }
    }
    Some(a)
}

/// Depth read off the matrix: the least `n` with `M^{n+1} ≤ a·M^{n−1}`, and
/// the least such `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixDepth {
    pub depth: usize,
    pub multiplier: u128,
}

pub fn matrix_depth(m: &InclusionMatrix) -> Result<MatrixDepth> {
    let limit = 2 * m.rows() + 1;
    let mut powers = Powers::new(m);
    for n in 1..=limit {
        let upper = powers.get(n + 1)?.clone();
        let lower = powers.get(n - 1)?;
        if let Some(a) = dominating_multiplier(&upper, lower) {
            return Ok(MatrixDepth {
                depth: n,
                multiplier: a,
            });
        }
    }
    Err(Error::Inconsistency(format!(
        "matrix criterion not met up to n = {limit}"
    )))
}
