//! Character tables by the Burnside–Dixon method.
//!
//! Class-sum structure constants are reduced mod a prime `p ≡ 1 (mod exp G)`
//! with `p > 2√|G|`. Common eigenvectors of the class matrices give the
//! central characters `ω_χ` mod `p`; from those the degrees and values mod `p`
//! follow, and each value is lifted exactly by recovering the eigenvalue
//! multiplicities of `ρ(g)` from the values on the powers of `g`.

use num_bigint::BigInt;

use super::modp::{self, Subspace};
use super::table::{CharacterTable, ClassData, ClassFunction};
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2√order`.
pub fn dixon_prime(exponent: u64, order: usize) -> u64 {
    let mut p = exponent + 1;
    loop {
        if p * p > 4 * order as u64 && modp::is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

/// Checks a user-supplied prime against the requirements of the method.
pub fn validate_prime(p: u64, exponent: u64, order: usize) -> Result<()> {
    if !modp::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if p % exponent != 1 % exponent {
        return Err(Error::InvalidArgument(format!(
            "prime {p} is not 1 mod the exponent {exponent}"
        )));
    }
    if p * p <= 4 * order as u64 {
        return Err(Error::InvalidArgument(format!(
            "prime {p} does not exceed 2*sqrt({order})"
        )));
    }
    if p >= 1 << 31 {
        return Err(Error::InvalidArgument(format!("prime {p} is too large")));
    }
    Ok(())
}

pub fn dixon_character_table(group: &PermGroup) -> Result<CharacterTable> {
    dixon_character_table_with_prime(group, None)
}

pub fn dixon_character_table_with_prime(
    group: &PermGroup,
    prime: Option<u64>,
) -> Result<CharacterTable> {
    let classes = group.conjugacy_classes();
    let r = classes.len();
    let order = group.order();
    let exponent = group.exponent();
    let p = match prime {
        Some(p) => {
            validate_prime(p, exponent, order)?;
            p
        }
        None => dixon_prime(exponent, order),
    };
    let class_data = ClassData::of(group);

    let class_of = |perm: &[u16]| -> usize {
        classes.class_of_index(group.index_of(perm).expect("closed group"))
    };

    // a[(j*r + k)*r + l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}
    let mut coeffs = vec![0u32; r * r * r];
    let mut buf = vec![0u16; group.degree()];
    let elem_class: Vec<usize> = (0..order).map(|i| classes.class_of_index(i)).collect();
    for (l, cl) in classes.classes().iter().enumerate() {
        let z = cl.representative.images();
        for (xi, x) in group.elements().iter().enumerate() {
            // (x⁻¹ z)(x(i)) = z(i)
            for (i, &xi_img) in x.images().iter().enumerate() {
                buf[xi_img as usize] = z[i];
            }
            let k = class_of(&buf);
            coeffs[(elem_class[xi] * r + k) * r + l] += 1;
        }
    }
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        (0..r)
            .map(|k| {
                (0..r)
                    .map(|l| coeffs[(j * r + k) * r + l] as u64 % p)
                    .collect()
            })
            .collect()
    };

    // Split F_p^r into common eigenspaces, class matrices in class order.
    let mut spaces = vec![Subspace::full(r)];
    for j in 1..r {
        if spaces.len() == r {
            break;
        }
        let a = class_matrix(j);
        let mut next = Vec::new();
        for space in spaces {
            if space.dim() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split(&space, &a, p)?);
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Inconsistency(format!(
            "class matrices split into {} spaces, expected {r}",
            spaces.len()
        )));
    }

    let sizes_mod: Vec<u64> = classes.sizes().iter().map(|&s| s as u64 % p).collect();
    let inverse_class: Vec<usize> = classes
        .classes()
        .iter()
        .map(|c| class_of(c.representative.inverse().images()))
        .collect();
    // power_classes[i][l] = class of z_i^l, for l < element order
    let power_classes: Vec<Vec<usize>> = classes
        .classes()
        .iter()
        .map(|c| {
            let o = c.representative.order();
            let mut acc = crate::perm::Permutation::identity(group.degree());
            (0..o)
                .map(|_| {
                    let k = class_of(acc.images());
                    acc = acc.mul(&c.representative);
                    k
                })
                .collect()
        })
        .collect();
    let root = modp::primitive_root(p);
    let zeta_e = modp::pow_mod(root, (p - 1) / exponent, p);
    let max_degree = num_integer::Roots::sqrt(&(order as u64));

    let mut irreducibles = Vec::with_capacity(r);
    for space in spaces {
        let w = &space.rows[0];
        if w[0] == 0 {
            return Err(Error::Inconsistency("eigenvector vanishes at identity".into()));
        }
        let inv0 = modp::inv_mod(w[0], p);
        let omega: Vec<u64> = w.iter().map(|&x| x * inv0 % p).collect();
        // Σ_i ω_i ω_{i*} / |C_i| = |G| / χ(1)²
        let mut s = 0u64;
        for i in 0..r {
            s = (s + omega[i] * omega[inverse_class[i]] % p * modp::inv_mod(sizes_mod[i], p)) % p;
        }
        if s == 0 {
            return Err(Error::Inconsistency("degree equation degenerate".into()));
        }
        let target = (order as u64 % p) * modp::inv_mod(s, p) % p;
        let degree = (1..=max_degree)
            .find(|&d| d * d % p == target)
            .ok_or_else(|| Error::Inconsistency("no integral degree".into()))?;
        let values_mod: Vec<u64> = (0..r)
            .map(|i| omega[i] * (degree % p) % p * modp::inv_mod(sizes_mod[i], p) % p)
            .collect();
        let mut values = Vec::with_capacity(r);
        for i in 0..r {
            values.push(lift_value(
                &values_mod,
                &power_classes[i],
                degree,
                exponent,
                zeta_e,
                p,
            )?);
        }
        irreducibles.push(ClassFunction::new(class_data.clone(), values)?);
    }
    let table = CharacterTable::new(class_data, irreducibles)?;
    table.verify()?;
    Ok(table)
}

/// Splits an invariant subspace into eigenspaces of `a`.
fn split(space: &Subspace, a: &[Vec<u64>], p: u64) -> Result<Vec<Subspace>> {
    let d = space.dim();
    let r = a.len();
    // images of the basis vectors under a, as coordinates at the pivots
    let mut restricted = vec![vec![0u64; d]; d];
    for (s, b) in space.rows.iter().enumerate() {
        let img: Vec<u64> = (0..r)
            .map(|k| {
                a[k].iter()
                    .zip(b)
                    .fold(0u64, |acc, (&x, &y)| (acc + x * y) % p)
            })
            .collect();
        for (t, &pc) in space.pivots.iter().enumerate() {
            restricted[t][s] = img[pc];
        }
    }
    let poly = modp::char_poly(&restricted, p);
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in modp::roots(&poly, p) {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { (x + p - lambda) % p } else { x })
                    .collect()
            })
            .collect();
        let coords = modp::nullspace(&shifted, p);
        total += coords.len();
        let vecs: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                (0..r)
                    .map(|k| {
                        space
                            .rows
                            .iter()
                            .zip(c)
                            .fold(0u64, |acc, (b, &x)| (acc + b[k] * x) % p)
                    })
                    .collect()
            })
            .collect();
        out.push(Subspace::span(vecs, p));
    }
    if total != d {
        return Err(Error::Inconsistency(
            "class matrix is not diagonalizable over the Dixon prime field".into(),
        ));
    }
    Ok(out)
}

/// Recovers `χ(g) = Σ_k μ_k ζ_o^k` from `χ(g^l)` mod `p`, where `μ_k` is the
/// multiplicity of the eigenvalue `ζ_o^k` of `ρ(g)`.
fn lift_value(
    values_mod: &[u64],
    powers: &[usize],
    degree: u64,
    exponent: u64,
    zeta_e: u64,
    p: u64,
) -> Result<Cyclotomic> {
    let o = powers.len() as u64;
    let zeta_o = modp::pow_mod(zeta_e, exponent / o, p);
    let zeta_o_inv = modp::inv_mod(zeta_o, p);
    let o_inv = modp::inv_mod(o % p, p);
    let mut exps = Vec::with_capacity(o as usize);
    let mut total = 0u64;
    for k in 0..o {
        let step = modp::pow_mod(zeta_o_inv, k, p);
        let mut acc = 0u64;
        let mut w = 1u64;
        for &c in powers {
            acc = (acc + values_mod[c] * w) % p;
            w = w * step % p;
        }
        let mu = acc * o_inv % p;
        if mu > degree {
            return Err(Error::Inconsistency(format!(
                "eigenvalue multiplicity {mu} exceeds degree {degree}"
            )));
        }
        total += mu;
        exps.push(Rational::from_integer(BigInt::from(mu)));
    }
    if total != degree {
        return Err(Error::Inconsistency(
            "eigenvalue multiplicities do not sum to the degree".into(),
        ));
    }
    Cyclotomic::from_exponents(o as u32, exps)
}
