//! Integer partitions, the index set of every basis of the degree-n
//! symmetric functions.
//!
//! A [`Partition`] derives `Ord` from its part vector, which for two
//! partitions of the same `n` is exactly the lexicographic order. Collections
//! indexed by partitions are displayed in *descending* lexicographic order:
//! `(n)` first, `(1^n)` last.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive sizes into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-part partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// `(r, 1^s)`, a hook shape.
    pub(crate) fn hook(r: usize, s: usize) -> Self {
        let mut parts = Vec::with_capacity(s + 1);
        if r > 0 {
            parts.push(r);
        }
        parts.extend(std::iter::repeat_n(1, s));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// The sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union of parts, re-sorted. This is the index of `p_λ · p_μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Dense multiplicity vector: entry `i - 1` is the number of parts equal
    /// to `i`, for `i = 1..=n`.
    pub fn multiplicities(&self) -> Multiplicities {
        let n = self.size();
        let mut counts = vec![0usize; n];
        for &p in &self.0 {
            counts[p - 1] += 1;
        }
        Multiplicities(counts)
    }

    /// Centralizer order `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, m) in self.multiplicities().iter() {
            for j in 1..=m {
                z *= BigUint::from(i) * BigUint::from(j);
            }
        }
        z
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Multiplicities `m_1, …, m_n` of a partition of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicities(Vec<usize>);

impl Multiplicities {
    /// `m_i`, zero outside `1..=n`.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.0.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// The `n` this vector was built for.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `Σ m_i`, the number of parts.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Pairs `(i, m_i)` for `i = 1..=n`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().map(|(i, &m)| (i + 1, m))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Rebuilds the partition with these multiplicities.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.total());
        for i in (1..=self.0.len()).rev() {
            parts.extend(std::iter::repeat_n(i, self.0[i - 1]));
        }
        Partition(parts)
    }
}

/// All partitions of `n` in strictly descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// `μ ≤ λ` in lexicographic order. Both must be partitions of the same `n`.
pub fn lex_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    let (a, b) = (mu.size(), lambda.size());
    if a != b {
        return Err(Error::SizeMismatch { left: a, right: b });
    }
    Ok(mu <= lambda)
}

/// `z_λ` as a free function, mirroring [`Partition::z`].
pub fn z_of(lambda: &Partition) -> BigUint {
    lambda.z()
}
