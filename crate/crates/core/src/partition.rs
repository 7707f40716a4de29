//! Integer partitions and the shape operations used by the recursion.
//!
//! A [`Partition`] stores its parts weakly decreasing with no trailing zeros,
//! so structural equality is equality of partitions and the type can be used
//! directly as a memoization key.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("malformed partition token `{token}`")]
    BadToken { token: String },
    #[error("index {index} out of range for partition of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// The hook `(n-k, 1^k)`. Requires `k < n`.
    pub fn hook(n: u32, k: u32) -> Self {
        assert!(k < n, "hook (n-k, 1^k) needs k < n");
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k as usize));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Sum of parts, `|λ|`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// 1-based part access; parts past the length read as zero.
    pub fn part(&self, i: usize) -> u32 {
        debug_assert!(i >= 1);
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Dominance order `self ≥ other`, which requires equal weights.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                // zero-based form of λ_i + λ'_j - i - j + 1
                hooks.push(row - j as u32 + conj.0[j] - i as u32 - 1);
            }
        }
        hooks
    }

    /// Whether the shape is a hook `(n-k, 1^k)`.
    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    /// Whether every part equals one.
    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// `λ^{(i)}`: delete part `i` (1-based) and add one to every earlier part.
    pub fn lambda_super(&self, i: usize) -> Result<Partition, PartitionError> {
        if i == 0 || i > self.length() {
            return Err(PartitionError::IndexOutOfRange {
                index: i,
                len: self.length(),
            });
        }
        let mut parts = Vec::with_capacity(self.length() - 1);
        parts.extend(self.0[..i - 1].iter().map(|p| p + 1));
        parts.extend_from_slice(&self.0[i..]);
        Ok(Partition(parts))
    }

    /// `λ^{[i]}`: the parts after the first `i`.
    pub fn tail(&self, i: usize) -> Result<Partition, PartitionError> {
        if i > self.length() {
            return Err(PartitionError::IndexOutOfRange {
                index: i,
                len: self.length(),
            });
        }
        Ok(Partition(self.0[i..].to_vec()))
    }

    /// All `τ ⊇ self` such that `τ / self` is a horizontal strip of `m` boxes,
    /// in lexicographically decreasing order.
    pub fn horizontal_strip_additions(&self, m: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.length() + 1);
        self.extend_strip(0, m, &mut current, &mut out);
        out
    }

    fn extend_strip(&self, j: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let len = self.length();
        let base = self.0.get(j).copied().unwrap_or(0);
        if j == len {
            // one optional new row below the old shape
            let cap = if j == 0 { u32::MAX } else { self.0[j - 1] };
            if left <= cap {
                let mut parts = current.clone();
                if left > 0 {
                    parts.push(left);
                }
                out.push(Partition(parts));
            }
            return;
        }
        let max_add = if j == 0 {
            left
        } else {
            (self.0[j - 1] - base).min(left)
        };
        for add in (0..=max_add).rev() {
            current.push(base + add);
            self.extend_strip(j + 1, left - add, current, out);
            current.pop();
        }
    }

    /// LaTeX-style exponential notation, e.g. `3,1^{12}`.
    pub fn to_exponential(&self) -> String {
        if self.is_empty() {
            return "-".to_string();
        }
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match groups.last_mut() {
                Some((q, count)) if *q == p => *count += 1,
                _ => groups.push((p, 1)),
            }
        }
        groups
            .iter()
            .map(|&(p, c)| {
                if c == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{c}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `3,2,1`, exponential shorthand `2^2,1^2`, and `-` (or the
    /// empty string) for the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let bad = |token: &str| PartitionError::BadToken {
            token: token.to_string(),
        };
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (part, reps) = match token.split_once('^') {
                Some((p, r)) => (p.trim(), r.trim()),
                None => (token, "1"),
            };
            let part: u32 = part.parse().map_err(|_| bad(token))?;
            let reps: usize = reps.parse().map_err(|_| bad(token))?;
            if part == 0 {
                return Err(bad(token));
            }
            parts.extend(std::iter::repeat_n(part, reps));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

/// Iterator over the partitions of `n` in lexicographically decreasing
/// order, from `(n)` down to `(1^n)`.
#[derive(Debug, Clone)]
pub struct PartitionsOf {
    next: Option<Vec<u32>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition(current))
    }
}

fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    // drop the trailing ones, decrement the last part > 1, refill greedily
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
    if ones == parts.len() {
        return None;
    }
    let mut next = parts[..parts.len() - ones].to_vec();
    let last = next.last_mut().expect("non-all-ones partition");
    *last -= 1;
    let cap = *last;
    let mut rest = ones as u32 + 1;
    while rest > 0 {
        let take = rest.min(cap);
        next.push(take);
        rest -= take;
    }
    Some(next)
}

pub fn partitions_of(n: u32) -> PartitionsOf {
    PartitionsOf {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}
