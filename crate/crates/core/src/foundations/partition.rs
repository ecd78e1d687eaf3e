use std::fmt;

use crate::error::Error;

/// An integer partition: weakly decreasing positive parts.
///
/// The empty list is the empty partition. Trailing zeros in the input are
/// stripped on construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A strict partition: strictly decreasing positive parts. Indexes the
/// Schur Q-functions and everything built on them.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

fn strip_trailing_zeros(mut parts: Vec<u32>) -> Vec<u32> {
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let parts = strip_trailing_zeros(parts);
        if parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0) {
            Ok(Partition { parts })
        } else {
            Err(Error::NotAPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The part at 0-based index `i`, or 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// n(λ) = Σ_i (i−1) λ_i with rows indexed from 1.
    pub fn n_stat(&self) -> u64 {
        n_stat_of(&self.parts)
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        let parts = strip_trailing_zeros(parts);
        if parts.windows(2).all(|w| w[0] > w[1]) && parts.iter().all(|&p| p > 0) {
            Ok(StrictPartition { parts })
        } else {
            Err(Error::NotStrict(parts))
        }
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n_stat(&self) -> u64 {
        n_stat_of(&self.parts)
    }

    pub fn contains_part(&self, k: u32) -> bool {
        self.parts.contains(&k)
    }

    pub fn to_partition(&self) -> Partition {
        Partition { parts: self.parts.clone() }
    }

    /// The strict partition with a part `k` inserted (λ + (k));
    /// `None` if `k` is already a part.
    pub fn insert_part(&self, k: u32) -> Option<StrictPartition> {
        if k == 0 || self.contains_part(k) {
            return None;
        }
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p < k).unwrap_or(parts.len());
        parts.insert(pos, k);
        Some(StrictPartition { parts })
    }

    /// The strict partition with the part at index `i` removed.
    pub fn remove_index(&self, i: usize) -> StrictPartition {
        let mut parts = self.parts.clone();
        parts.remove(i);
        StrictPartition { parts }
    }
}

fn n_stat_of(parts: &[u32]) -> u64 {
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| i as u64 * p as u64)
        .sum()
}

/// Dominance order: true iff every partial sum of `a` is at most the
/// corresponding partial sum of `b` (the convention `a ≤ b`).
///
/// Comparison across unequal weights is an error.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool, Error> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch(a.weight(), b.weight()));
    }
    let k = a.len().max(b.len());
    let mut sa = 0u64;
    let mut sb = 0u64;
    for i in 0..k {
        sa += a.part(i) as u64;
        sb += b.part(i) as u64;
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n`, ascending lexicographic.
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(n, n, &mut prefix, false, &mut out);
    out.sort();
    out
}

/// All strict partitions of `n`, ascending lexicographic (the column
/// order of the golden transition tables).
pub fn strict_partitions(n: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    gen_partitions(n, n, &mut prefix, true, &mut out);
    let mut out: Vec<StrictPartition> = out
        .into_iter()
        .map(|p| StrictPartition { parts: p.parts })
        .collect();
    out.sort();
    out
}

fn gen_partitions(rem: u32, max: u32, prefix: &mut Vec<u32>, strict: bool, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition { parts: prefix.clone() });
        return;
    }
    let hi = rem.min(max);
    for p in (1..=hi).rev() {
        prefix.push(p);
        let next_max = if strict { p.saturating_sub(1) } else { p };
        gen_partitions(rem - p, next_max, prefix, strict, out);
        prefix.pop();
    }
}

fn fmt_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self, Error> {
        StrictPartition::new(p.parts)
    }
}
