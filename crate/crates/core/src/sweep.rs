//! Whole-table computation and oracle verification over all pairs of a weight.
//!
//! Work is split into contiguous shards. Each shard runs with its own clone
//! of the seed cache, and shard caches are merged in shard order afterwards,
//! so results never depend on the number of workers. With the `parallel`
//! feature shards run on a rayon pool; without it (or with one thread) they
//! run in sequence.

use std::fmt;

use crate::kostka::{
    kostka, kostka_auto, kostka_column, kostka_hook, kostka_one_row, FastPaths, KostkaCache,
    KostkaError, KostkaKey,
};
use crate::oracles::{kostka_number, kostka_via_charge};
use crate::partition::{partitions_of, Partition};
use crate::poly::TPoly;

/// Every `(λ, μ)` with `λ, μ ⊢ n` and `λ ≥ μ`, shapes then contents in
/// [`partitions_of`] order.
pub fn dominating_pairs(n: u32) -> Vec<KostkaKey> {
    let all: Vec<Partition> = partitions_of(n).collect();
    let mut out = Vec::new();
    for shape in &all {
        for content in &all {
            if shape.dominates(content) {
                out.push(KostkaKey::new(shape.clone(), content.clone()));
            }
        }
    }
    out
}

/// Every ordered pair of partitions of `n`.
pub fn all_pairs(n: u32) -> Vec<KostkaKey> {
    let all: Vec<Partition> = partitions_of(n).collect();
    all.iter()
        .flat_map(|s| {
            all.iter()
                .map(move |c| KostkaKey::new(s.clone(), c.clone()))
        })
        .collect()
}

/// Applies `f` to every item with per-shard caches seeded from `seed`,
/// returning results in input order and the merged cache.
pub fn sharded_map<T, R, F>(
    items: &[T],
    threads: usize,
    seed: &KostkaCache,
    f: F,
) -> Result<(Vec<R>, KostkaCache), KostkaError>
where
    T: Sync,
    R: Send,
    F: Fn(&T, &mut KostkaCache) -> R + Sync,
{
    let threads = threads.max(1);
    let shard_len = items.len().div_ceil(threads * 4).max(1);
    let run_shard = |shard: &[T]| {
        let mut cache = seed.clone();
        let results: Vec<R> = shard.iter().map(|item| f(item, &mut cache)).collect();
        (results, cache)
    };
    let shards: Vec<(Vec<R>, KostkaCache)> = run_shards(items, shard_len, threads, &run_shard);
    let mut merged = seed.clone();
    let mut results = Vec::with_capacity(items.len());
    for (part, cache) in shards {
        results.extend(part);
        merged.merge(cache)?;
    }
    Ok((results, merged))
}

#[cfg(feature = "parallel")]
fn run_shards<T, S, G>(items: &[T], shard_len: usize, threads: usize, run: &G) -> Vec<S>
where
    T: Sync,
    S: Send,
    G: Fn(&[T]) -> S + Sync,
{
    use rayon::prelude::*;
    if threads == 1 {
        return items.chunks(shard_len).map(run).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("rayon pool");
    pool.install(|| items.par_chunks(shard_len).map(run).collect())
}

#[cfg(not(feature = "parallel"))]
fn run_shards<T, S, G>(items: &[T], shard_len: usize, _threads: usize, run: &G) -> Vec<S>
where
    G: Fn(&[T]) -> S,
{
    items.chunks(shard_len).map(run).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub shape: Partition,
    pub content: Partition,
    pub value: TPoly,
}

/// `K_{λμ}(t)` for every dominating pair of weight `n`.
pub fn compute_table(
    n: u32,
    threads: usize,
    fast_paths: FastPaths,
    seed: &KostkaCache,
) -> Result<(Vec<TableRow>, KostkaCache), KostkaError> {
    let pairs = dominating_pairs(n);
    let (values, cache) = sharded_map(&pairs, threads, seed, |key, cache| {
        kostka_auto(&key.shape, &key.content, cache, fast_paths)
    })?;
    let rows = pairs
        .into_iter()
        .zip(values)
        .map(|(key, value)| TableRow {
            shape: key.shape,
            content: key.content,
            value,
        })
        .collect();
    Ok((rows, cache))
}

/// A disagreement between the recursion (or a cached value) and an oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub shape: Partition,
    pub content: Partition,
    pub got: String,
    pub expected: String,
    pub oracle: &'static str,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}) got {} expected {} [{}]",
            self.shape, self.content, self.got, self.expected, self.oracle
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Ordered pairs checked against the oracles.
    pub pairs: usize,
    /// Seed-cache entries checked directly against the charge oracle.
    pub cache_entries: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Seed entries whose tableau count exceeds this are not re-derived by
/// enumeration during [`verify`].
pub const CACHE_ENTRY_CHECK_CEILING: u64 = 200_000;

fn check_pair(key: &KostkaKey, cache: &mut KostkaCache) -> Vec<Mismatch> {
    let (shape, content) = (&key.shape, &key.content);
    let n = shape.weight();
    let rec = kostka(shape, content, cache);
    let mut out = Vec::new();
    let mut compare = |got: &TPoly, expected: &TPoly, oracle| {
        if got != expected {
            out.push(Mismatch {
                shape: shape.clone(),
                content: content.clone(),
                got: got.to_string(),
                expected: expected.to_string(),
                oracle,
            });
        }
    };
    compare(&rec, &kostka_via_charge(shape, content), "charge");
    if shape.length() <= 1 {
        compare(&rec, &kostka_one_row(content), "one-row");
    }
    if n > 0 && shape.is_hook() && shape.dominates(content) {
        let k = shape.length() as u32 - 1;
        let hook = kostka_hook(n, k, content).expect("dominance checked");
        compare(&rec, &hook, "hook");
    }
    if content.is_column() {
        compare(&rec, &kostka_column(shape), "column");
    }
    let count = kostka_number(shape, content);
    let at_one = rec.eval_at_one();
    if at_one != count.into() {
        out.push(Mismatch {
            shape: shape.clone(),
            content: content.clone(),
            got: format!("{at_one} at t=1"),
            expected: count.to_string(),
            oracle: "ssyt-count",
        });
    }
    if !rec.is_nonnegative() {
        out.push(Mismatch {
            shape: shape.clone(),
            content: content.clone(),
            got: rec.to_string(),
            expected: "nonnegative coefficients".into(),
            oracle: "positivity",
        });
    }
    out
}

/// Checks every pair of weight `≤ max_n` against the charge oracle, the
/// tableau count at `t = 1` and the closed forms, then checks each seed
/// entry small enough to enumerate against the charge oracle.
pub fn verify(max_n: u32, threads: usize, seed: &KostkaCache) -> Result<VerifyReport, KostkaError> {
    let pairs: Vec<KostkaKey> = (0..=max_n).flat_map(all_pairs).collect();
    let (found, _) = sharded_map(&pairs, threads, seed, check_pair)?;
    let mut report = VerifyReport {
        pairs: pairs.len(),
        cache_entries: 0,
        mismatches: found.into_iter().flatten().collect(),
    };
    let entries: Vec<(KostkaKey, TPoly)> = seed
        .sorted_entries()
        .into_iter()
        .filter(|(k, _)| kostka_number(&k.shape, &k.content) <= CACHE_ENTRY_CHECK_CEILING)
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    report.cache_entries = entries.len();
    let (found, _) = sharded_map(&entries, threads, &KostkaCache::new(), |(key, value), _| {
        let expected = kostka_via_charge(&key.shape, &key.content);
        (expected != *value).then(|| Mismatch {
            shape: key.shape.clone(),
            content: key.content.clone(),
            got: value.to_string(),
            expected: expected.to_string(),
            oracle: "cache-entry",
        })
    })?;
    report.mismatches.extend(found.into_iter().flatten());
    Ok(report)
}
