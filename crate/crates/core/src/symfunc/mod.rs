//! Homogeneous symmetric functions with exact rational coefficients.
//!
//! A [`SymFunc`] is a sparse map from partitions of its degree to
//! coefficients, tagged with the basis those partitions index. The power-sum
//! basis `p` is canonical: every producer in this crate emits `p`, products
//! are only defined there, and the other bases (`e`, `m`, Schur `s`) are
//! reached through [`SymFunc::convert`].

mod characters;
mod convert;
mod truncated;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use characters::{mn_character, CharacterTable};
pub use convert::SchurVerdict;
pub use truncated::TruncatedPoly;

/// Exact rational coefficient, always in lowest terms.
pub type Coeff = BigRational;

pub fn coeff_int(v: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(v))
}

/// Parses `"a"` or `"a/b"` with integer `a` and positive `b`.
pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let bad = || Error::InvalidCoeff(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if !den.is_positive() {
        return Err(bad());
    }
    Ok(Coeff::new(num, den))
}

/// Reduced fraction string; the denominator is omitted when it is 1.
pub fn format_coeff(c: &Coeff) -> String {
    c.to_string()
}

/// Basis tag of a [`SymFunc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// Power sums.
    #[serde(rename = "p")]
    P,
    /// Elementary.
    #[serde(rename = "e")]
    E,
    /// Monomial.
    #[serde(rename = "m")]
    M,
    /// Schur.
    #[serde(rename = "s")]
    S,
}

impl Basis {
    pub fn tag(self) -> char {
        match self {
            Basis::P => 'p',
            Basis::E => 'e',
            Basis::M => 'm',
            Basis::S => 's',
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(Basis::P),
            "e" => Ok(Basis::E),
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            other => Err(Error::UnknownBasis(other.to_string())),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// An element of the degree-`n` symmetric functions in a tagged basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Partition, Coeff>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc { degree, basis, terms: BTreeMap::new() }
    }

    /// The constant `1` of degree 0.
    pub fn one() -> Self {
        SymFunc::monomial(Basis::P, Partition::empty())
    }

    /// The single basis element indexed by `lambda`.
    pub fn monomial(basis: Basis, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = lambda.size();
        terms.insert(lambda, Coeff::one());
        SymFunc { degree, basis, terms }
    }

    /// `p_λ = p_{λ_1} ⋯ p_{λ_ℓ}`.
    pub fn p_monomial(lambda: Partition) -> Self {
        SymFunc::monomial(Basis::P, lambda)
    }

    pub fn e_monomial(lambda: Partition) -> Self {
        SymFunc::monomial(Basis::E, lambda)
    }

    /// Collects terms, merging repeated partitions and dropping zeros.
    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Coeff)>,
    {
        let mut f = SymFunc::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: lambda.size() });
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the basis element `lambda` (zero when absent).
    pub fn coeff(&self, lambda: &Partition) -> Coeff {
        self.terms.get(lambda).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms in descending lexicographic order of their partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
        self.terms.iter().rev()
    }

    /// True when every coefficient has denominator 1.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { left: self.basis.tag(), right: other.basis.tag() });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect();
        out
    }

    /// Product in the power-sum basis, where `p_λ · p_μ = p_{λ ∪ μ}`.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        for f in [self, other] {
            if f.basis != Basis::P {
                return Err(Error::NotPowerSum(f.basis.tag()));
            }
        }
        let mut out = SymFunc::zero(self.degree + other.degree, Basis::P);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        Ok(out)
    }

    /// Product of a list of power-sum elements; the empty product is `1`.
    pub fn product<'a, I>(factors: I) -> Result<SymFunc>
    where
        I: IntoIterator<Item = &'a SymFunc>,
    {
        factors.into_iter().try_fold(SymFunc::one(), |acc, f| acc.mul(f))
    }
}

impl fmt::Display for SymFunc {
    /// Text form `2*p[3] - 3*p[2,1] + 1*p[1,1,1]`, descending lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let tag = self.basis.tag();
        for (i, (lambda, c)) in self.terms().enumerate() {
            if i == 0 {
                write!(f, "{}*{tag}{lambda}", format_coeff(c))?;
            } else if c.is_negative() {
                write!(f, " - {}*{tag}{lambda}", format_coeff(&-c))?;
            } else {
                write!(f, " + {}*{tag}{lambda}", format_coeff(c))?;
            }
        }
        Ok(())
    }
}

impl FromStr for SymFunc {
    type Err = Error;

    /// Parses the text form written by `Display`. The zero string `0`
    /// yields the degree-0 zero in basis `p`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(SymFunc::zero(0, Basis::P));
        }
        let bad = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
        // Split into signed chunks on " + " / " - " separators.
        let mut chunks: Vec<(bool, &str)> = Vec::new();
        let mut rest = s;
        let mut negative = false;
        loop {
            let next = [" + ", " - "]
                .iter()
                .filter_map(|sep| rest.find(sep).map(|at| (at, *sep)))
                .min_by_key(|(at, _)| *at);
            match next {
                Some((at, sep)) => {
                    chunks.push((negative, &rest[..at]));
                    negative = sep == " - ";
                    rest = &rest[at + 3..];
                }
                None => {
                    chunks.push((negative, rest));
                    break;
                }
            }
        }
        let mut basis = None;
        let mut degree = None;
        let mut parsed = Vec::new();
        for (negative, chunk) in chunks {
            let (coeff, element) = chunk.split_once('*').ok_or_else(|| bad("missing '*'"))?;
            let mut c = parse_coeff(coeff)?;
            if negative {
                c = -c;
            }
            let element = element.trim();
            let mut chars = element.chars();
            let tag = chars.next().ok_or_else(|| bad("missing basis tag"))?;
            let b: Basis = tag.to_string().parse()?;
            if *basis.get_or_insert(b) != b {
                return Err(bad("mixed bases"));
            }
            let inner = chars
                .as_str()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| bad("expected [parts]"))?;
            let parts = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| bad("bad part")))
                    .collect::<Result<Vec<_>>>()?
            };
            let lambda = Partition::new(parts)?;
            if *degree.get_or_insert(lambda.size()) != lambda.size() {
                return Err(bad("inhomogeneous expansion"));
            }
            parsed.push((lambda, c));
        }
        SymFunc::from_terms(degree.unwrap_or(0), basis.unwrap_or(Basis::P), parsed)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    degree: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms()
                .map(|(l, c)| TermJson { partition: l.clone(), coeff: format_coeff(c) })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(deserializer)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| Ok((t.partition, parse_coeff(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        SymFunc::from_terms(raw.degree, raw.basis, terms).map_err(serde::de::Error::custom)
    }
}
