//! Group specifiers shared by the subcommands.
//!
//! A specifier is a named group (`S4`, `V4`, `D8`, `S3`), a family member
//! (`A:n=2`, optionally suffixed `/H`, `/K`, `/N` or `/G`), or a raw
//! `;`-separated generator list in cycle notation.

use std::sync::Arc;

use crate::constructions::{
    family, FamilyInstance, FamilySpec, D8_GENERATORS, S3_GENERATORS, S4_GENERATORS,
    V4_GENERATORS,
};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Member {
    G,
    H,
    K,
    N,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Generators(String),
    Family(FamilySpec, Member),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let named = match t.to_ascii_uppercase().as_str() {
            "S4" => Some(S4_GENERATORS),
            "V4" => Some(V4_GENERATORS),
            "D8" => Some(D8_GENERATORS),
            "S3" => Some(S3_GENERATORS),
            _ => None,
        };
        if let Some(g) = named {
            return Ok(Self::Generators(g.into()));
        }
        if t.starts_with('(') || t.is_empty() {
            return Ok(Self::Generators(t.into()));
        }
        let (fam, member) = match t.rsplit_once('/') {
            Some((f, m)) => (
                f,
                match m {
                    "G" => Member::G,
                    "H" => Member::H,
                    "K" => Member::K,
                    "N" => Member::N,
                    other => return Err(Error::Parse(format!("unknown family member {other:?}"))),
                },
            ),
            None => (t, Member::G),
        };
        Ok(Self::Family(fam.parse()?, member))
    }

    /// Largest point named in a generator list; 1 for family members.
    fn natural_degree(&self) -> Result<usize> {
        match self {
            Self::Generators(text) => {
                let mut max = 0;
                for token in text.split(|c: char| !c.is_ascii_digit()) {
                    if !token.is_empty() {
                        let p: usize = token
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad point {token:?}")))?;
                        max = max.max(p);
                    }
                }
                Ok(max.max(1))
            }
            Self::Family(..) => Ok(1),
        }
    }
}

/// Resolves a group and an optional subgroup on a common point set. A family
/// member given as the group with no subgroup supplies its `H` as subgroup.
pub fn resolve_pair(
    group: &GroupSpec,
    subgroup: Option<&GroupSpec>,
    cap: usize,
) -> Result<(Arc<PermGroup>, Option<Arc<PermGroup>>)> {
    let mut cache: Option<(FamilySpec, FamilyInstance)> = None;
    let mut family_member = |spec: FamilySpec, m: Member| -> Result<Arc<PermGroup>> {
        if cache.as_ref().map(|c| c.0) != Some(spec) {
            cache = Some((spec, family(spec.series, spec.n, cap)?));
        }
        let inst = &cache.as_ref().expect("just set").1;
        Ok(match m {
            Member::G => inst.g.clone(),
            Member::H => inst.h.clone(),
            Member::K => inst.k.clone(),
            Member::N => inst.core.clone(),
        })
    };
    let sub_spec = match (subgroup, group) {
        (Some(s), _) => Some(s.clone()),
        (None, GroupSpec::Family(f, Member::G)) => Some(GroupSpec::Family(*f, Member::H)),
        _ => None,
    };
    let specs: Vec<&GroupSpec> = std::iter::once(group).chain(sub_spec.as_ref()).collect();
    let mut members = Vec::new();
    let mut degree = 1;
    for spec in &specs {
        let member = match spec {
            GroupSpec::Family(f, m) => Some(family_member(*f, *m)?),
            GroupSpec::Generators(_) => None,
        };
        degree = degree
            .max(spec.natural_degree()?)
            .max(member.as_ref().map_or(0, |g| g.degree()));
        members.push(member);
    }
    let mut out = Vec::new();
    for (spec, member) in specs.into_iter().zip(members) {
        out.push(match (spec, member) {
            (_, Some(g)) if g.degree() == degree => g,
            (_, Some(g)) => {
                let gens = g.generators().iter().map(|x| x.extend_to(degree)).collect();
                Arc::new(PermGroup::new(degree, gens, cap)?)
            }
            (GroupSpec::Generators(text), None) => {
                Arc::new(PermGroup::new(degree, Permutation::parse_list(text, degree)?, cap)?)
            }
            (GroupSpec::Family(..), None) => unreachable!("family members are resolved"),
        });
    }
    let mut it = out.into_iter();
    Ok((it.next().expect("group"), it.next()))
}
