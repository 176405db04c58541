use std::borrow::Borrow;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1..degree}`, stored as 0-based images.
///
/// Products act from the left-to-right: `p.mul(&q)` applies `p` first, then `q`,
/// so conjugation `x^g` is `g⁻¹ x g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Borrow<[u16]> for Permutation {
    fn borrow(&self) -> &[u16] {
        &self.images
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds from 0-based images. Fails unless `images` is a bijection.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::Parse(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Box<[u16]>) -> Self {
        Self { images }
    }

    /// Builds from 1-based images, as printed.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let imgs = images
            .iter()
            .map(|&i| {
                if i == 0 || i > u16::MAX as usize {
                    Err(Error::Parse(format!("point {i} out of range")))
                } else {
                    Ok((i - 1) as u16)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(imgs)
    }

    /// Parses disjoint-cycle notation such as `(1,3)(2,4)`; `()` and the empty
    /// string give the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 || degree > u16::MAX as usize {
            return Err(Error::Parse(format!("unsupported degree {degree}")));
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut moved = vec![false; degree];
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body_end = match (rest.strip_prefix('('), rest.find(')')) {
                (Some(_), Some(end)) => end,
                _ => return Err(Error::Parse(format!("malformed cycle in {text:?}"))),
            };
            let body = &rest[1..body_end];
            rest = &rest[body_end + 1..];
            if body.is_empty() {
                continue;
            }
            let points = body
                .split(',')
                .map(|tok| {
                    let p: usize = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad point {tok:?} in {text:?}")))?;
                    if p == 0 || p > degree {
                        return Err(Error::Parse(format!(
                            "point {p} exceeds degree {degree} in {text:?}"
                        )));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &points {
                if moved[p] {
                    return Err(Error::Parse(format!(
                        "point {} repeated in {text:?}",
                        p + 1
                    )));
                }
                moved[p] = true;
            }
            for (k, &p) in points.iter().enumerate() {
                images[p] = points[(k + 1) % points.len()] as u16;
            }
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses a `;`-separated generator list.
    pub fn parse_list(text: &str, degree: usize) -> Result<Vec<Self>> {
        text.split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Self::parse(s, degree))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self` then `other`.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    /// Writes `self * other` into `out` without allocating.
    #[inline]
    pub fn mul_into(&self, other: &Self, out: &mut [u16]) {
        for (o, &i) in out.iter_mut().zip(self.images.iter()) {
            *o = other.images[i as usize];
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        // x^(g⁻¹ s g): point i -> g(s(g⁻¹(i)))
        let mut out = vec![0u16; self.degree()];
        for i in 0..self.degree() {
            let pre = g.images[i] as usize;
            out[pre] = g.images[self.images[i] as usize];
        }
        Self {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Disjoint cycles (0-based), fixed points omitted, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cyc.push(p);
                p = self.apply(p);
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Same permutation viewed on a larger point set.
    pub fn extend_to(&self, degree: usize) -> Self {
        let mut imgs = self.images.to_vec();
        imgs.extend(self.degree() as u16..degree as u16);
        Self {
            images: imgs.into_boxed_slice(),
        }
    }

    /// Moves the permutation onto points `offset..offset+d` inside a set of
    /// `degree` points.
    pub fn shifted(&self, offset: usize, degree: usize) -> Self {
        assert!(offset + self.degree() <= degree);
        let mut imgs: Vec<u16> = (0..degree as u16).collect();
        for (i, &j) in self.images.iter().enumerate() {
            imgs[offset + i] = (offset + j as usize) as u16;
        }
        Self {
            images: imgs.into_boxed_slice(),
        }
    }

    /// Restriction to the points `offset..offset+len`, which must be invariant.
    pub fn restrict_block(&self, offset: usize, len: usize) -> Option<Self> {
        let mut imgs = Vec::with_capacity(len);
        for i in offset..offset + len {
            let j = self.apply(i);
            if j < offset || j >= offset + len {
                return None;
            }
            imgs.push((j - offset) as u16);
        }
        Some(Self {
            images: imgs.into_boxed_slice(),
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses with the degree set to the largest point mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(1);
        Self::parse(s, max.max(1))
    }
}
