//! Exact arithmetic in cyclotomic fields `Q(ζ_e)`.
//!
//! A value is stored in the power basis `1, ζ_e, …, ζ_e^(φ(e)−1)` of the field
//! of its minimal conductor `e`, i.e. as a polynomial of degree below `φ(e)`
//! reduced modulo the `e`-th cyclotomic polynomial. Since that basis is a basis
//! and the conductor is always minimized, two values are equal iff their
//! stored representations are equal.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

fn cyclotomic_poly(e: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&e) {
        return p.clone();
    }
    // Φ_e = (x^e − 1) / ∏_{d | e, d < e} Φ_d, coefficients low to high.
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in 1..e {
        if e % d == 0 {
            num = divide_monic(&num, &cyclotomic_poly(d));
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(e, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k];
        if c != 0 {
            quot[k - dd] = c;
            for (i, &d) in den.iter().enumerate() {
                rem[k - dd + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let g = a.extended_gcd(&m);
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m)
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// Builds `Σ c_k ζ_e^k` from a coefficient per exponent `0 ≤ k < e`.
    pub fn from_exponents(e: u32, exps: Vec<Rational>) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidArgument("conductor must be positive".into()));
        }
        if exps.len() != e as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {e} exponent coefficients, got {}",
                exps.len()
            )));
        }
        Ok(Self::reduce(e, exps).minimized())
    }

    /// Power-basis coefficients reduced modulo `Φ_e` (conductor not minimized).
    fn reduce(e: u32, mut a: Vec<Rational>) -> Self {
        let phi = cyclotomic_poly(e);
        let deg = phi.len() - 1;
        for k in (deg..a.len()).rev() {
            if a[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut a[k]);
            for (i, &p) in phi.iter().enumerate().take(deg) {
                if p != 0 {
                    a[k - deg + i] -= &c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        a.truncate(deg);
        a.resize(deg, Rational::zero());
        Self {
            conductor: e,
            coeffs: a,
        }
    }

    /// `ζ_e^k`.
    pub fn zeta(e: u32, k: i64) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidArgument("zeta: e must be positive".into()));
        }
        let mut exps = vec![Rational::zero(); e as usize];
        exps[k.rem_euclid(e as i64) as usize] = Rational::one();
        Self::from_exponents(e, exps)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients in `Q(ζ_conductor)`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    /// Integer value, if the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Coefficient vector over all exponents `0..l` for a multiple `l` of the
    /// conductor.
    fn exponent_vector(&self, l: u32) -> Vec<Rational> {
        debug_assert_eq!(l % self.conductor, 0);
        let step = (l / self.conductor) as usize;
        let mut out = vec![Rational::zero(); l as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * step] = c.clone();
        }
        out
    }

    fn embed(&self, l: u32) -> Self {
        if l == self.conductor {
            return self.clone();
        }
        Self::reduce(l, self.exponent_vector(l))
    }

    /// Tries to express `self` inside `Q(ζ_(e/q))` via the relative trace.
    fn descend(&self, q: u32) -> Option<Self> {
        let e = self.conductor;
        let sub = e / q;
        let mut exps = vec![Rational::zero(); sub as usize];
        if (sub % q) == 0 {
            for (k, c) in self.coeffs.iter().enumerate() {
                if k as u32 % q == 0 {
                    exps[k / q as usize] += c;
                }
            }
        } else {
            let inv_sub = mod_inverse(sub as i64 % q as i64, q as i64);
            let inv_q = if sub == 1 {
                0
            } else {
                mod_inverse(q as i64 % sub as i64, sub as i64)
            };
            let qm1 = Rational::from_integer(BigInt::from(q - 1));
            for (k, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let k = k as i64;
                let a = (k * inv_sub).rem_euclid(q as i64);
                let b = if sub == 1 {
                    0
                } else {
                    (k * inv_q).rem_euclid(sub as i64) as usize
                };
                if a == 0 {
                    exps[b] += c;
                } else {
                    exps[b] -= c / &qm1;
                }
            }
        }
        let candidate = Self::reduce(sub, exps);
        (candidate.embed(e) == *self).then_some(candidate)
    }

    fn minimized(mut self) -> Self {
        if self.coeffs.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        'outer: while self.conductor > 1 {
            for q in prime_factors(self.conductor) {
                if let Some(smaller) = self.descend(q) {
                    self = smaller;
                    continue 'outer;
                }
            }
            break;
        }
        self
    }

    /// Image under `ζ ↦ ζ^u` for `u` coprime to the conductor.
    pub fn galois(&self, u: i64) -> Self {
        let e = self.conductor;
        if e == 1 {
            return self.clone();
        }
        let mut exps = vec![Rational::zero(); e as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            exps[(k as i64 * u).rem_euclid(e as i64) as usize] += c;
        }
        Self::reduce(e, exps).minimized()
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        let l = num_integer::lcm(self.conductor, other.conductor);
        (self.embed(l), other.embed(l))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if self.conductor == 1 && other.conductor == 1 {
            let v = if negate {
                &self.coeffs[0] - &other.coeffs[0]
            } else {
                &self.coeffs[0] + &other.coeffs[0]
            };
            return Self::from_rational(v);
        }
        let (a, b) = self.lift_pair(other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| if negate { x - y } else { x + y })
            .collect();
        Self {
            conductor: a.conductor,
            coeffs,
        }
        .minimized()
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.conductor == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.conductor == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let (a, b) = self.lift_pair(other);
        let n = a.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::reduce(a.conductor, prod).minimized()
    }

    /// Exponent/coefficient pairs of the nonzero power-basis coefficients.
    pub fn terms(&self) -> Vec<(usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Whether all coefficients are integers (the basis is integral, so this
    /// is exactly membership in `Z[ζ_e]`).
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// Fraction text `num/den`, always with an explicit denominator.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

impl Ord for Cyclotomic {
    /// Rationals first, in numeric order; then by conductor and coefficients.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.conductor == 1, other.conductor == 1) {
            (true, true) => self.coeffs[0].cmp(&other.coeffs[0]),
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self
                .conductor
                .cmp(&other.conductor)
                .then_with(|| self.coeffs.cmp(&other.coeffs)),
        }
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.add_impl(b, false));
binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.add_impl(b, true));
binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_impl(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for Cyclotomic {
    /// `3`, `-1/2`, or sums like `2 + E(3)^1` with `E(e)` a primitive root.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            if k == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "E({})^{k}", self.conductor)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(r) = self.as_rational() {
            return s.serialize_str(&rational_to_string(r));
        }
        let coeffs: Vec<(usize, String)> = self
            .terms()
            .into_iter()
            .map(|(k, c)| (k, rational_to_string(c)))
            .collect();
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("conductor", &self.conductor)?;
        m.serialize_entry("coeffs", &coeffs)?;
        m.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CyclotomicRepr {
    Rational(String),
    Integer(i64),
    Full {
        conductor: u32,
        coeffs: Vec<(usize, String)>,
    },
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match CyclotomicRepr::deserialize(d)? {
            CyclotomicRepr::Rational(s) => parse_rational(&s)
                .map(Cyclotomic::from_rational)
                .map_err(de::Error::custom),
            CyclotomicRepr::Integer(n) => Ok(Cyclotomic::from_integer(n)),
            CyclotomicRepr::Full { conductor, coeffs } => {
                if conductor == 0 {
                    return Err(de::Error::custom("conductor must be positive"));
                }
                let mut exps = vec![Rational::zero(); conductor as usize];
                for (k, c) in coeffs {
                    if k >= conductor as usize {
                        return Err(de::Error::custom(format!(
                            "exponent {k} out of range for conductor {conductor}"
                        )));
                    }
                    exps[k] += parse_rational(&c).map_err(de::Error::custom)?;
                }
                Cyclotomic::from_exponents(conductor, exps).map_err(de::Error::custom)
            }
        }
    }
}
