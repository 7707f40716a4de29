//! Line-oriented persistence for [`KostkaCache`].
//!
//! One record per line: `shape<TAB>content<TAB>polynomial-json`, with
//! partitions in comma form and the polynomial as `[[e,"c"],...]`.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use thiserror::Error;

use super::{KostkaCache, KostkaKey};
use crate::partition::Partition;
use crate::poly::TPoly;

#[derive(Debug, Error)]
pub enum CacheFileError {
    #[error("cache i/o: {0}")]
    Io(#[from] io::Error),
    #[error("cache line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("cache line {line}: entry ({shape}; {content}) rejected: {reason}")]
    Invalid {
        line: usize,
        shape: Partition,
        content: Partition,
        reason: String,
    },
}

impl KostkaCache {
    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (key, value) in self.sorted_entries() {
            let js = serde_json::to_string(value).map_err(io::Error::other)?;
            writeln!(w, "{}\t{}\t{}", key.shape, key.content, js)?;
        }
        w.flush()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> io::Result<()> {
        self.write_to(BufWriter::new(File::create(path)?))
    }

    /// Parses and validates a cache file. Blank lines are skipped.
    pub fn read_from<R: BufRead>(r: R) -> Result<KostkaCache, CacheFileError> {
        let mut cache = KostkaCache::new();
        for (idx, line) in r.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let malformed = |reason: String| CacheFileError::Malformed {
                line: line_no,
                reason,
            };
            let fields: Vec<&str> = line.split('\t').collect();
            let [shape, content, poly] = fields[..] else {
                return Err(malformed(format!(
                    "expected 3 tab-separated fields, found {}",
                    fields.len()
                )));
            };
            let shape: Partition = shape
                .parse()
                .map_err(|e| malformed(format!("shape: {e}")))?;
            let content: Partition = content
                .parse()
                .map_err(|e| malformed(format!("content: {e}")))?;
            let invalid = |reason: String| CacheFileError::Invalid {
                line: line_no,
                shape: shape.clone(),
                content: content.clone(),
                reason,
            };
            let value: TPoly =
                serde_json::from_str(poly).map_err(|e| invalid(format!("polynomial: {e}")))?;
            if shape.weight() != content.weight() {
                return Err(invalid("weights differ".into()));
            }
            let dominates = shape.dominates(&content);
            if !dominates && !value.is_zero() {
                return Err(invalid(
                    "nonzero value but shape does not dominate content".into(),
                ));
            }
            if dominates && value.is_zero() {
                return Err(invalid("zero value but shape dominates content".into()));
            }
            if !value.is_nonnegative() {
                return Err(invalid("negative coefficient".into()));
            }
            let key = KostkaKey::new(shape.clone(), content.clone());
            cache
                .insert(key, value)
                .map_err(|_| invalid("duplicate key with a different value".into()))?;
        }
        Ok(cache)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<KostkaCache, CacheFileError> {
        Self::read_from(BufReader::new(File::open(path)?))
    }
}
