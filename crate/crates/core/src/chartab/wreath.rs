//! Irreducible characters of `G ≀ C_n` for prime `n` by Clifford theory.
//!
//! The wreath group must act on `n` consecutive blocks of `deg G` points, with
//! every element rotating the blocks cyclically. A base-group character
//! `χ_{t_0} × … × χ_{t_{n−1}}` with non-constant index tuple has trivial
//! stabilizer among the rotations, so it induces irreducibly and its value on a
//! base element is the sum over cyclic shifts of the tuple. A constant tuple
//! `χ^n` extends in `n` ways: on an element rotating blocks by `k ≠ 0` the
//! tensor-induced extension takes the value `χ` at the return map of block 0,
//! twisted by `ζ_n^{tk}`.

use super::table::{CharacterTable, ClassData, ClassFunction};
use crate::chartab::modp::is_prime;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::PermGroup;

enum ClassShape {
    /// Base-group element: class of each block component.
    Base(Vec<usize>),
    /// Rotation by `k ≠ 0`, with the base class of the return map on block 0.
    Twisted { rotation: usize, return_class: usize },
}

pub fn wreath_cyclic_table(
    base: &CharacterTable,
    base_group: &PermGroup,
    wreath: &PermGroup,
    n: usize,
) -> Result<CharacterTable> {
    if !is_prime(n as u64) {
        return Err(Error::Unsupported(format!(
            "wreath oracle needs a prime number of blocks, got {n}"
        )));
    }
    let d = base_group.degree();
    if wreath.degree() != n * d {
        return Err(Error::InvalidArgument(format!(
            "wreath group has degree {}, expected {}",
            wreath.degree(),
            n * d
        )));
    }
    let classes = ClassData::of(wreath);
    let shapes = classes
        .representatives
        .iter()
        .map(|w| {
            let rotation = w.apply(0) / d;
            for b in 0..n {
                for i in 0..d {
                    if w.apply(b * d + i) / d != (b + rotation) % n {
                        return Err(Error::InvalidArgument(format!(
                            "{w} does not rotate the blocks cyclically"
                        )));
                    }
                }
            }
            if rotation == 0 {
                let comps = (0..n)
                    .map(|b| {
                        let local = w.restrict_block(b * d, d).expect("block preserved");
                        base_group.class_of(&local)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ClassShape::Base(comps))
            } else {
                let ret = w
                    .pow(n as u64)
                    .restrict_block(0, d)
                    .expect("return map preserves block 0");
                Ok(ClassShape::Twisted {
                    rotation,
                    return_class: base_group.class_of(&ret)?,
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let r = base.len();
    let chi = |i: usize, c: usize| &base.irreducibles[i].values[c];
    let mut irreducibles = Vec::new();

    // non-constant tuples, one per rotation orbit (its least rotation)
    for code in 0..r.pow(n as u32) {
        let tuple: Vec<usize> = (0..n).map(|b| code / r.pow((n - 1 - b) as u32) % r).collect();
        let constant = tuple.iter().all(|&t| t == tuple[0]);
        let least = (1..n).all(|s| {
            let rot: Vec<usize> = (0..n).map(|b| tuple[(b + s) % n]).collect();
            tuple <= rot
        });
        if constant || !least {
            continue;
        }
        let values = shapes
            .iter()
            .map(|shape| match shape {
                ClassShape::Base(comps) => (0..n)
                    .map(|s| {
                        comps.iter().enumerate().fold(Cyclotomic::one(), |acc, (b, &c)| {
                            acc * chi(tuple[(b + s) % n], c)
                        })
                    })
                    .sum(),
                ClassShape::Twisted { .. } => Cyclotomic::zero(),
            })
            .collect();
        irreducibles.push(ClassFunction::new(classes.clone(), values)?);
    }

    // extensions of χ^n twisted by the linear characters of C_n
    for i in 0..r {
        for t in 0..n {
            let values = shapes
                .iter()
                .map(|shape| match shape {
                    ClassShape::Base(comps) => comps
                        .iter()
                        .fold(Cyclotomic::one(), |acc, &c| acc * chi(i, c)),
                    ClassShape::Twisted {
                        rotation,
                        return_class,
                    } => {
                        let twist = Cyclotomic::zeta(n as u32, (t * rotation) as i64)
                            .expect("n is positive");
                        chi(i, *return_class) * &twist
                    }
                })
                .collect();
            irreducibles.push(ClassFunction::new(classes.clone(), values)?);
        }
    }
    if irreducibles.len() != classes.len() {
        return Err(Error::Inconsistency(format!(
            "wreath oracle built {} characters for {} classes",
            irreducibles.len(),
            classes.len()
        )));
    }
    CharacterTable::new(classes, irreducibles)
}
