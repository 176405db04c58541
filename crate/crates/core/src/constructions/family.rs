use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::base::{D8_GENERATORS, S4_GENERATORS, V4_GENERATORS};
use crate::error::{Error, Result};
use crate::perm::{is_normal, subgroup_core, ElementSet, PermGroup, Permutation};

/// `σ_n = ∏_{j=1}^{4} (j, j+4, …, j+4(n−1))`, shifting block `b` to `b+1`.
pub fn sigma(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("sigma needs n >= 2, got {n}")));
    }
    let deg = 4 * n;
    let images: Vec<usize> = (0..deg).map(|i| (i + 4) % deg + 1).collect();
    Permutation::from_one_based(&images)
}

/// `∏_{j=1}^{d} (j, j+d)` on `2d` points.
fn block_swap(d: usize) -> Permutation {
    let images: Vec<usize> = (0..2 * d).map(|i| (i + d) % (2 * d) + 1).collect();
    Permutation::from_one_based(&images).expect("valid swap")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Series {
    /// `H_n = ⟨N, G^σ, …, G^{σ^{n−1}}⟩ ≅ V4 × S4^{n−1}` in `S4 ≀ C_n`.
    A,
    /// `H_n = D8 × S4^{n−1}` in `S4 ≀ C_n`.
    B,
    /// `G_k = G_{k−1} ≀ C2`, `H_k = H_{k−1} × G_{k−1}`, from `(S4, D8)`.
    C,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
        })
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            other => Err(Error::Parse(format!("unknown series {other:?}"))),
        }
    }
}

/// A family member such as `A:n=3` or `C:step=2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub series: Series,
    pub n: usize,
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("family spec {s:?} is not of the form A:n=3 or C:step=2"));
        let (series, rest) = s.split_once(':').ok_or_else(bad)?;
        let series: Series = series.parse()?;
        let (key, value) = rest.split_once('=').ok_or_else(bad)?;
        let key_ok = match series {
            Series::A | Series::B => key == "n",
            Series::C => key == "step" || key == "n",
        };
        if !key_ok {
            return Err(bad());
        }
        let n: usize = value.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(Error::Parse("family index must be positive".into()));
        }
        Ok(Self { series, n })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.series {
            Series::C => write!(f, "C:step={}", self.n),
            s => write!(f, "{s}:n={}", self.n),
        }
    }
}

/// One member of a family: `H ≤ K ≤ G` with `N = Core_G(H)`.
///
/// For series A and B, `K = G^n` is the base group of `G = S4 ≀ C_n` and
/// `sigma` is `σ_n`. For series C, `K = G_{k−1} × G_{k−1}` and `sigma` is the
/// block swap.
#[derive(Debug)]
pub struct FamilyInstance {
    pub series: Series,
    pub n: usize,
    pub g: Arc<PermGroup>,
    pub h: Arc<PermGroup>,
    pub k: Arc<PermGroup>,
    pub core: Arc<PermGroup>,
    pub sigma: Option<Permutation>,
}

impl FamilyInstance {
    pub fn spec(&self) -> FamilySpec {
        FamilySpec {
            series: self.series,
            n: self.n,
        }
    }

    /// Depth the construction is designed to have.
    pub fn expected_depth(&self) -> usize {
        match self.series {
            Series::A => 2 * self.n,
            Series::B => 4 * self.n,
            Series::C => 1 << (self.n + 1),
        }
    }

    pub fn degree(&self) -> usize {
        self.g.degree()
    }
}

fn gens(text: &str, degree: usize) -> Vec<Permutation> {
    Permutation::parse_list(text, 4)
        .expect("valid literal")
        .iter()
        .map(|p| p.extend_to(degree))
        .collect()
}

fn conjugated(gs: &[Permutation], by: &Permutation) -> Vec<Permutation> {
    gs.iter().map(|x| x.conjugate_by(by)).collect()
}

pub fn family(series: Series, n: usize, cap: usize) -> Result<FamilyInstance> {
    if n == 0 {
        return Err(Error::InvalidArgument("family index must be positive".into()));
    }
    let inst = match series {
        Series::A | Series::B => wreath_family(series, n, cap)?,
        Series::C => doubling_family(n, cap)?,
    };
    check(&inst)?;
    Ok(inst)
}

fn wreath_family(series: Series, n: usize, cap: usize) -> Result<FamilyInstance> {
    let deg = 4 * n;
    let s4 = gens(S4_GENERATORS, deg);
    let v4 = gens(V4_GENERATORS, deg);
    let first = gens(if series == Series::A { V4_GENERATORS } else { D8_GENERATORS }, deg);
    let sigma = if n >= 2 { Some(sigma(n)?) } else { None };
    let mut powers = vec![Permutation::identity(deg)];
    if let Some(s) = &sigma {
        for i in 1..n {
            powers.push(powers[i - 1].mul(s));
        }
    }
    let mut g_gens = s4.clone();
    g_gens.extend(sigma.clone());
    let mut k_gens = Vec::new();
    let mut h_gens = first;
    let mut core_gens = Vec::new();
    for (i, p) in powers.iter().enumerate() {
        k_gens.extend(conjugated(&s4, p));
        core_gens.extend(conjugated(&v4, p));
        if i > 0 {
            h_gens.extend(conjugated(&s4, p));
        }
    }
    let group = |g: Vec<Permutation>| PermGroup::new(deg, g, cap).map(Arc::new);
    Ok(FamilyInstance {
        series,
        n,
        g: group(g_gens)?,
        h: group(h_gens)?,
        k: group(k_gens)?,
        core: group(core_gens)?,
        sigma,
    })
}

fn doubling_family(step: usize, cap: usize) -> Result<FamilyInstance> {
    let mut g_gens = gens(S4_GENERATORS, 4);
    let mut h_gens = gens(D8_GENERATORS, 4);
    let mut k_gens = g_gens.clone();
    let mut deg = 4;
    let mut sigma = None;
    for _ in 1..step {
        let tau = block_swap(deg);
        let ext = |gs: &[Permutation]| gs.iter().map(|x| x.extend_to(2 * deg)).collect::<Vec<_>>();
        let (g_prev, h_prev) = (ext(&g_gens), ext(&h_gens));
        let g_swapped = conjugated(&g_prev, &tau);
        k_gens = g_prev.iter().chain(&g_swapped).cloned().collect();
        h_gens = h_prev.into_iter().chain(g_swapped).collect();
        g_gens = g_prev;
        g_gens.push(tau.clone());
        sigma = Some(tau);
        deg *= 2;
    }
    let group = |g: Vec<Permutation>| PermGroup::new(deg, g, cap).map(Arc::new);
    let g = group(g_gens)?;
    let h = group(h_gens)?;
    let core = Arc::new(subgroup_core(&g, &h)?);
    Ok(FamilyInstance {
        series: Series::C,
        n: step,
        k: group(k_gens)?,
        g,
        h,
        core,
        sigma,
    })
}

fn fail(what: &str) -> Error {
    Error::Inconsistency(format!("family construction: {what}"))
}

/// Containments, orders and the core identities.
fn check(inst: &FamilyInstance) -> Result<()> {
    let (g, h, k, core) = (&inst.g, &inst.h, &inst.k, &inst.core);
    if !g.contains_group(k) || !k.contains_group(h) || !h.contains_group(core) {
        return Err(fail("expected N ≤ H ≤ K ≤ G"));
    }
    if inst.series == Series::A && !is_normal(k, h)? {
        return Err(fail("H is not normal in K"));
    }
    if !is_normal(g, core)? {
        return Err(fail("N is not normal in G"));
    }
    match inst.series {
        Series::A | Series::B => {
            let n = inst.n;
            if g.order() != 24usize.pow(n as u32) * n || g.order() / k.order() != n {
                return Err(fail("G is not S4 wr C_n"));
            }
            let core_order = 4usize.pow(n as u32);
            if core.order() != core_order || subgroup_core(g, h)?.order() != core_order {
                return Err(fail("N_n is not the core of H_n"));
            }
            if inst.series == Series::A {
                // N_n = ∩ H^{σ^i}
                let hs = ElementSet::of_subgroup(g, h)?;
                let mut acc = hs.clone();
                let mut p = Permutation::identity(g.degree());
                for _ in 1..n {
                    p = p.mul(inst.sigma.as_ref().expect("n >= 2"));
                    acc = acc.intersect(&hs.conjugate(g, &p));
                }
                if acc.len() != core_order {
                    return Err(fail("N_n is not the intersection of the H_n^{σ^i}"));
                }
            }
        }
        Series::C => {
            if inst.n >= 2 && g.order() != k.order() * 2 {
                return Err(fail("K has index other than 2"));
            }
        }
    }
    Ok(())
}
