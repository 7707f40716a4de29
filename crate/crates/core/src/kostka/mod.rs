//! Kostka–Foulkes polynomials `K_{λμ}(t)`.
//!
//! The general route peels the first part `μ₁` off the content:
//!
//! ```text
//! K_{λμ}(t) = Σ_{i=1}^{l(λ)} (-1)^{i-1} t^{λ_i-μ₁-i+1} Σ_τ K_{τ, μ^{[1]}}(t)
//! ```
//!
//! where `τ` runs over the shapes with `τ / λ^{(i)}` a horizontal strip of
//! `λ_i - μ₁ - i + 1` boxes. Terms whose strip size is negative vanish.
//! Closed forms for one-row, hook and one-column cases live in
//! [`closed_form`] and are reachable through [`kostka_auto`].

mod cache;
mod closed_form;

use std::collections::HashMap;

use bitflags::bitflags;
use thiserror::Error;

use crate::partition::Partition;
use crate::poly::TPoly;

pub use cache::CacheFileError;
pub use closed_form::{kostka_column, kostka_hook, kostka_one_row};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KostkaError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("conflicting cache values for ({shape}; {content})")]
    CacheConflict {
        shape: Partition,
        content: Partition,
    },
}

/// A normalized `(shape, content)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KostkaKey {
    pub shape: Partition,
    pub content: Partition,
}

impl KostkaKey {
    pub fn new(shape: Partition, content: Partition) -> Self {
        KostkaKey { shape, content }
    }
}

/// Memo table for the recursion.
///
/// A cache is owned by one computation at a time (`&mut` access). Parallel
/// callers give each worker its own cache and combine them afterwards with
/// [`KostkaCache::merge`]. Only pairs with `shape ≥ content` are stored, and
/// an entry is never replaced by a different value.
#[derive(Debug, Clone, Default)]
pub struct KostkaCache {
    entries: HashMap<KostkaKey, TPoly>,
    hits: u64,
    misses: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CacheStats {
    pub entries: usize,
    pub hits: u64,
    pub misses: u64,
}

impl KostkaCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            entries: self.entries.len(),
            hits: self.hits,
            misses: self.misses,
        }
    }

    pub fn get(&self, key: &KostkaKey) -> Option<&TPoly> {
        self.entries.get(key)
    }

    fn lookup(&mut self, key: &KostkaKey) -> Option<TPoly> {
        match self.entries.get(key) {
            Some(v) => {
                self.hits += 1;
                Some(v.clone())
            }
            None => {
                self.misses += 1;
                None
            }
        }
    }

    /// Stores a value. Fails if the key already holds a different value or
    /// if the pair violates dominance vanishing.
    pub fn insert(&mut self, key: KostkaKey, value: TPoly) -> Result<(), KostkaError> {
        let vanishes = !key.shape.dominates(&key.content);
        if vanishes && !value.is_zero() {
            return Err(KostkaError::CacheConflict {
                shape: key.shape,
                content: key.content,
            });
        }
        if vanishes {
            return Ok(());
        }
        match self.entries.get(&key) {
            Some(existing) if *existing != value => Err(KostkaError::CacheConflict {
                shape: key.shape,
                content: key.content,
            }),
            Some(_) => Ok(()),
            None => {
                self.entries.insert(key, value);
                Ok(())
            }
        }
    }

    /// Folds another cache into this one; statistics are summed.
    pub fn merge(&mut self, other: KostkaCache) -> Result<(), KostkaError> {
        self.hits += other.hits;
        self.misses += other.misses;
        for (k, v) in other.entries {
            self.insert(k, v)?;
        }
        Ok(())
    }

    /// Entries sorted by key.
    pub fn sorted_entries(&self) -> Vec<(&KostkaKey, &TPoly)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }
}

/// Strips the longest common leading run of parts shared by shape and content.
pub fn prefix_reduce(shape: &Partition, content: &Partition) -> (Partition, Partition) {
    let r = shape
        .parts()
        .iter()
        .zip(content.parts())
        .take_while(|(a, b)| a == b)
        .count();
    (
        shape.tail(r).expect("r ≤ l(shape)"),
        content.tail(r).expect("r ≤ l(content)"),
    )
}

/// One top-level summand of the recursion: `sign · t^exponent · Σ_τ K_{τ,μ^{[1]}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm {
    /// 1-based row index `i`.
    pub index: usize,
    pub negative: bool,
    /// `λ_i - μ₁ - i + 1`, also the size of the horizontal strip.
    pub exponent: u32,
    pub children: Vec<Partition>,
}

/// Which rows to sum over in [`kostka_with_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummationBound {
    /// `i = 1..=l(λ)`; the bound used everywhere else in this crate.
    ShapeLength,
    /// `i = 1..=μ₁`, the alternative bound (truncates when `μ₁ < l(λ)`).
    ContentHead,
}

/// The surviving summands of the recursion for `shape` against a content
/// whose first part is `head`. Depends on the content only through `head`.
pub fn expansion_terms(shape: &Partition, head: u32) -> Vec<ExpansionTerm> {
    expansion_terms_bounded(shape, head, shape.length())
}

fn expansion_terms_bounded(shape: &Partition, head: u32, rows: usize) -> Vec<ExpansionTerm> {
    (1..=rows.min(shape.length()))
        .filter_map(|i| {
            let exponent = i64::from(shape.part(i)) - i64::from(head) - i as i64 + 1;
            let exponent = u32::try_from(exponent).ok()?;
            let base = shape.lambda_super(i).expect("1 ≤ i ≤ l(shape)");
            Some(ExpansionTerm {
                index: i,
                negative: i % 2 == 0,
                exponent,
                children: base.horizontal_strip_additions(exponent),
            })
        })
        .collect()
}

/// `K_{shape,content}(t)` by the general recursion, memoized in `cache`.
///
/// Returns zero when the weights differ or `shape` does not dominate
/// `content`.
pub fn kostka(shape: &Partition, content: &Partition, cache: &mut KostkaCache) -> TPoly {
    if !shape.dominates(content) {
        return TPoly::zero();
    }
    let (shape, content) = prefix_reduce(shape, content);
    if content.is_empty() {
        return TPoly::one();
    }
    let key = KostkaKey::new(shape, content);
    if let Some(v) = cache.lookup(&key) {
        return v;
    }
    let head = key.content.part(1);
    let rest = key.content.tail(1).expect("content is nonempty");
    let mut acc = TPoly::zero();
    for term in expansion_terms(&key.shape, head) {
        let mut inner = TPoly::zero();
        for child in &term.children {
            inner += &kostka(child, &rest, cache);
        }
        let inner = inner.shift(term.exponent);
        if term.negative {
            acc -= &inner;
        } else {
            acc += &inner;
        }
    }
    debug_assert!(
        acc.is_nonnegative(),
        "negative coefficient in K_{{{}; {}}}",
        key.shape,
        key.content
    );
    cache
        .insert(key, acc.clone())
        .expect("fresh entry cannot conflict");
    acc
}

/// One top-level step of the recursion under an explicit summation bound,
/// with the children evaluated by [`kostka`].
pub fn kostka_with_bound(
    shape: &Partition,
    content: &Partition,
    bound: SummationBound,
    cache: &mut KostkaCache,
) -> TPoly {
    if shape.weight() != content.weight() {
        return TPoly::zero();
    }
    if content.is_empty() {
        return TPoly::one();
    }
    let head = content.part(1);
    let rest = content.tail(1).expect("content is nonempty");
    let rows = match bound {
        SummationBound::ShapeLength => shape.length(),
        SummationBound::ContentHead => head as usize,
    };
    let mut acc = TPoly::zero();
    for term in expansion_terms_bounded(shape, head, rows) {
        let mut inner = TPoly::zero();
        for child in &term.children {
            inner += &kostka(child, &rest, cache);
        }
        let inner = inner.shift(term.exponent);
        if term.negative {
            acc -= &inner;
        } else {
            acc += &inner;
        }
    }
    acc
}

/// The recursion with no memoization, no dominance pruning and no prefix
/// reduction. Exponential; meant for small cross-checks.
pub fn kostka_uncached(shape: &Partition, content: &Partition) -> TPoly {
    if shape.weight() != content.weight() {
        return TPoly::zero();
    }
    if content.is_empty() {
        return TPoly::one();
    }
    let rest = content.tail(1).expect("content is nonempty");
    let mut acc = TPoly::zero();
    for term in expansion_terms(shape, content.part(1)) {
        let mut inner = TPoly::zero();
        for child in &term.children {
            inner += &kostka_uncached(child, &rest);
        }
        let inner = inner.shift(term.exponent);
        if term.negative {
            acc -= &inner;
        } else {
            acc += &inner;
        }
    }
    acc
}

bitflags! {
    /// Closed forms that [`kostka_auto`] may dispatch to.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
    pub struct FastPaths: u8 {
        const ONE_ROW = 1;
        const HOOK = 1 << 1;
        const COLUMN = 1 << 2;
    }
}

/// The code path [`kostka_auto_traced`] took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Weight mismatch or failed dominance.
    Vanishing,
    OneRow,
    Hook,
    Column,
    Recursion,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Vanishing => "vanishing",
            Route::OneRow => "one-row",
            Route::Hook => "hook",
            Route::Column => "column",
            Route::Recursion => "recursion",
        }
    }
}

/// Prefix-reduces, then uses an enabled closed form when the reduced pair
/// fits one, and the recursion otherwise.
pub fn kostka_auto(
    shape: &Partition,
    content: &Partition,
    cache: &mut KostkaCache,
    fast_paths: FastPaths,
) -> TPoly {
    kostka_auto_traced(shape, content, cache, fast_paths).0
}

pub fn kostka_auto_traced(
    shape: &Partition,
    content: &Partition,
    cache: &mut KostkaCache,
    fast_paths: FastPaths,
) -> (TPoly, Route) {
    if !shape.dominates(content) {
        return (TPoly::zero(), Route::Vanishing);
    }
    let (shape, content) = prefix_reduce(shape, content);
    let n = shape.weight();
    if fast_paths.contains(FastPaths::ONE_ROW) && shape.length() <= 1 {
        return (kostka_one_row(&content), Route::OneRow);
    }
    if fast_paths.contains(FastPaths::COLUMN) && content.is_column() {
        return (kostka_column(&shape), Route::Column);
    }
    if fast_paths.contains(FastPaths::HOOK) && n > 0 && shape.is_hook() {
        let k = shape.length() as u32 - 1;
        let value = kostka_hook(n, k, &content).expect("dominance checked above");
        return (value, Route::Hook);
    }
    (kostka(&shape, &content, cache), Route::Recursion)
}
