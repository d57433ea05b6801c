//! Partitions, cycle types and conjugacy classes of the symmetric groups.
//!
//! The canonical order of partitions of a fixed `n` is reverse-lexicographic:
//! `(3), (2,1), (1,1,1)`. Every table indexed by classes or irreducibles uses it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest `n` for which [`partitions`] will enumerate (p(60) ≈ 10⁶).
pub const PARTITION_CAP: usize = 60;

/// Default largest `n` for which permutations are listed explicitly.
pub const PERMUTATION_CAP: usize = 8;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts or an increasing sequence.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1, 1, …, 1)` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Multiplies every part by `r`.
    pub fn scaled(&self, r: usize) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p * r).collect(),
        }
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from(self)
    }
}

/// Orders first by size, then reverse-lexicographically within the same size.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Writes `(2,1,1)`; the empty partition is `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"2,1,1"`, `"(2,1,1)"` or `"2 1 1"`; `""` and `"()"` give the empty partition.
impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_unsorted(parts)
    }
}

/// Cycle-length multiplicities `k ↦ l_k` of a permutation class.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct CycleType {
    counts: BTreeMap<usize, usize>,
}

impl CycleType {
    /// Builds from `(length, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (k, l) in pairs {
            if k == 0 {
                return Err(Error::InvalidPartition("cycle length 0".into()));
            }
            if l > 0 {
                *counts.entry(k).or_insert(0) += l;
            }
        }
        Ok(CycleType { counts })
    }

    /// Multiplicity `l_k` of `k`-cycles.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// `(k, l_k)` pairs with `l_k > 0`, in increasing `k`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&k, &l)| (k, l))
    }

    pub fn n(&self) -> usize {
        self.counts.iter().map(|(k, l)| k * l).sum()
    }

    /// Total number of cycles.
    pub fn cycles(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.cycles());
        for (&k, &l) in self.counts.iter().rev() {
            parts.extend(std::iter::repeat(k).take(l));
        }
        Partition { parts }
    }

    /// Order of the centralizer, `∏_k l_k! · k^{l_k}`.
    pub fn centralizer_order(&self) -> BigUint {
        self.counts
            .iter()
            .fold(BigUint::one(), |acc, (&k, &l)| {
                acc * factorial(l) * BigUint::from(k).pow(l as u32)
            })
    }

    /// Parity of the class: `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i64 {
        let odd: usize = self
            .counts
            .iter()
            .filter(|(k, _)| *k % 2 == 0)
            .map(|(_, l)| l)
            .sum();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl From<&Partition> for CycleType {
    fn from(p: &Partition) -> Self {
        let mut counts = BTreeMap::new();
        for &k in &p.parts {
            *counts.entry(k).or_insert(0) += 1;
        }
        CycleType { counts }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_partition().fmt(f)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    partitions_capped(n, PARTITION_CAP)
}

pub fn partitions_capped(n: usize, cap: usize) -> Result<Vec<Partition>> {
    if n > cap {
        return Err(Error::SizeLimit {
            what: "partition enumeration",
            requested: n,
            cap,
        });
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return Ok(out);
    }
    let mut current = vec![n];
    loop {
        out.push(Partition {
            parts: current.clone(),
        });
        // Rightmost part that can be decreased.
        let Some(idx) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        let ones: usize = current.len() - idx - 1;
        let value = current[idx] - 1;
        current.truncate(idx);
        let mut remaining = ones + value + 1;
        while remaining > 0 {
            let part = value.min(remaining);
            current.push(part);
            remaining -= part;
        }
    }
    Ok(out)
}

/// All partitions of `n` with at most `max_len` parts, canonical order.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> Result<Vec<Partition>> {
    Ok(partitions(n)?
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect())
}

/// All exponent vectors of length `len` summing to `total`.
pub fn compositions(total: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Size of the conjugacy class, `n! / ∏_k (l_k! · k^{l_k})`.
pub fn class_size(mu: &CycleType) -> BigUint {
    factorial(mu.n()) / mu.centralizer_order()
}

/// Cycle type of a permutation given as an image array on `0..n`.
pub fn cycle_type_of(perm: &[usize]) -> CycleType {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut counts = BTreeMap::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        *counts.entry(len).or_insert(0) += 1;
    }
    CycleType { counts }
}

/// Lexicographic iterator over all permutations of `0..n`.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            current: Some((0..n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if let Some(i) = (1..next.len()).rev().find(|&i| next[i - 1] < next[i]) {
            let pivot = i - 1;
            let j = (i..next.len()).rev().find(|&j| next[j] > next[pivot]).unwrap();
            next.swap(pivot, j);
            next[i..].reverse();
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Every permutation of `0..n` with cycle type `mu`, with the default cap.
pub fn permutations_of_type(mu: &CycleType) -> Result<impl Iterator<Item = Vec<usize>>> {
    permutations_of_type_capped(mu, PERMUTATION_CAP)
}

pub fn permutations_of_type_capped(
    mu: &CycleType,
    cap: usize,
) -> Result<impl Iterator<Item = Vec<usize>>> {
    let n = mu.n();
    if n > cap {
        return Err(Error::SizeLimit {
            what: "permutation listing",
            requested: n,
            cap,
        });
    }
    let target = mu.clone();
    Ok(Permutations::new(n).filter(move |p| cycle_type_of(p) == target))
}
