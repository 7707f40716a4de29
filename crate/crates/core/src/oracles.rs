//! Independent oracles: semistandard tableaux, the charge statistic, and
//! Kostka numbers.
//!
//! Nothing here calls into [`crate::kostka`] or the strip enumeration in
//! [`crate::partition`]; the module only borrows the `Partition` value type
//! and `TPoly` for its output.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::Partition;
use crate::poly::TPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("word letters {found:?} do not match content multiplicities {expected:?}")]
    ContentMismatch { expected: Vec<u32>, found: Vec<u32> },
}

/// A semistandard Young tableau in English notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Vec<u32>,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Checks row weak increase, column strict increase and row lengths.
    pub fn is_semistandard(&self) -> bool {
        if self.rows.len() != self.shape.len()
            || self
                .rows
                .iter()
                .zip(&self.shape)
                .any(|(r, &s)| r.len() != s as usize)
        {
            return false;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(below, above)| below > above)
        });
        rows_ok && cols_ok
    }

    /// Letter multiplicities, index `v-1` holding the count of `v`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0; max as usize];
        for &v in self.rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        counts
    }
}

/// A word in the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u32>);

/// All SSYT of the given shape and content, in lexicographic order of their
/// row-by-row fillings.
pub fn enumerate_ssyt(shape: &Partition, content: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.weight() != content.weight() {
        return out;
    }
    let mut filler = Filler {
        shape: shape.parts(),
        remaining: content.parts().to_vec(),
        rows: shape
            .parts()
            .iter()
            .map(|&s| Vec::with_capacity(s as usize))
            .collect(),
    };
    filler.fill(0, &mut |rows| {
        out.push(Tableau {
            shape: shape.parts().to_vec(),
            rows: rows.to_vec(),
        })
    });
    out
}

/// Row-by-row backtracking filler.
struct Filler<'a> {
    shape: &'a [u32],
    remaining: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl Filler<'_> {
    fn fill(&mut self, row: usize, emit: &mut dyn FnMut(&[Vec<u32>])) {
        if row == self.shape.len() {
            emit(&self.rows);
            return;
        }
        let col = self.rows[row].len();
        if col == self.shape[row] as usize {
            self.fill(row + 1, emit);
            return;
        }
        let left = self.rows[row].last().copied().unwrap_or(1);
        let above = if row > 0 {
            self.rows[row - 1][col] + 1
        } else {
            1
        };
        // row r (0-based) can only hold letters > r
        let lo = left.max(above).max(row as u32 + 1);
        for v in lo..=self.remaining.len() as u32 {
            let slot = v as usize - 1;
            if self.remaining[slot] == 0 {
                continue;
            }
            self.remaining[slot] -= 1;
            self.rows[row].push(v);
            self.fill(row, emit);
            self.rows[row].pop();
            self.remaining[slot] += 1;
        }
    }
}

/// Rows read right to left, top row first.
pub fn reading_word(t: &Tableau) -> Word {
    Word(
        t.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect(),
    )
}

/// Lascoux–Schützenberger charge of a word with partition content.
///
/// Standard subwords are extracted one at a time: take the leftmost unused
/// 1, then for each next letter the leftmost unused copy strictly right of
/// the previous one, wrapping around to the left end when there is none.
/// Within a subword the index of 1 is 0; the index of `r+1` equals that of
/// `r` when `r+1` sits to the right of `r` and is one larger when it sits to
/// the left (that is, when the scan wrapped). The charge is the sum of all
/// indices.
pub fn charge(w: &Word, content: &Partition) -> Result<u32, OracleError> {
    let letters = content.length();
    let mut found = vec![0u32; letters.max(w.0.iter().copied().max().unwrap_or(0) as usize)];
    for &v in &w.0 {
        if v == 0 {
            return Err(OracleError::ContentMismatch {
                expected: content.parts().to_vec(),
                found: w.0.clone(),
            });
        }
        found[v as usize - 1] += 1;
    }
    if found[..] != *content.parts() {
        return Err(OracleError::ContentMismatch {
            expected: content.parts().to_vec(),
            found,
        });
    }
    let mut used = vec![false; w.0.len()];
    let mut remaining = found;
    let mut total = 0;
    while remaining.first().is_some_and(|&c| c > 0) {
        // letters still present form an initial segment 1..=top since the
        // content is a partition
        let top = remaining.iter().take_while(|&&c| c > 0).count() as u32;
        let mut pos = leftmost_unused(w, &used, 1, 0).expect("unused 1");
        used[pos] = true;
        remaining[0] -= 1;
        let mut index = 0;
        for v in 2..=top {
            pos = match leftmost_unused(w, &used, v, pos + 1) {
                Some(p) => p,
                None => {
                    index += 1;
                    leftmost_unused(w, &used, v, 0).expect("unused letter")
                }
            };
            used[pos] = true;
            remaining[v as usize - 1] -= 1;
            total += index;
        }
    }
    Ok(total)
}

fn leftmost_unused(w: &Word, used: &[bool], letter: u32, from: usize) -> Option<usize> {
    (from..w.0.len()).find(|&i| w.0[i] == letter && !used[i])
}

/// `Σ_T t^{charge(T)}` over all SSYT of the given shape and content.
pub fn kostka_via_charge(shape: &Partition, content: &Partition) -> TPoly {
    let mut counts: HashMap<u32, u64> = HashMap::new();
    for t in enumerate_ssyt(shape, content) {
        let c = charge(&reading_word(&t), content).expect("tableau has the requested content");
        *counts.entry(c).or_default() += 1;
    }
    TPoly::from_terms(counts)
}

/// Number of SSYT of the given shape and content, counted by peeling off
/// the largest letter as a horizontal strip at each step.
pub fn kostka_number(shape: &Partition, content: &Partition) -> u64 {
    if shape.weight() != content.weight() {
        return 0;
    }
    let mut memo = HashMap::new();
    count_fillings(shape.parts(), content.parts(), &mut memo)
}

fn count_fillings(
    shape: &[u32],
    content: &[u32],
    memo: &mut HashMap<(Vec<u32>, usize), u64>,
) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    // a tableau on letters 1..=k has at most k rows
    if shape.len() > content.len() {
        return 0;
    }
    let key = (shape.to_vec(), content.len());
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let mut total = 0;
    let mut inner = shape.to_vec();
    remove_strip(shape, 0, last, &mut inner, &mut |smaller| {
        let end = smaller.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        total += count_fillings(&smaller[..end], rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Calls `f` on every `ν` with `shape / ν` a horizontal strip of `m` boxes.
fn remove_strip(shape: &[u32], j: usize, m: u32, inner: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if j == shape.len() {
        if m == 0 {
            f(inner);
        }
        return;
    }
    let floor = shape.get(j + 1).copied().unwrap_or(0);
    let most = (shape[j] - floor).min(m);
    for take in 0..=most {
        inner[j] = shape[j] - take;
        remove_strip(shape, j + 1, m - take, inner, f);
    }
    inner[j] = shape[j];
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau {
            shape: rows.iter().map(|r| r.len() as u32).collect(),
            rows: rows.iter().map(|r| r.to_vec()).collect(),
        }
    }

    #[test]
    fn small_enumerations() {
        let ts = enumerate_ssyt(&p("2,1"), &p("1,1,1"));
        assert_eq!(ts, vec![tab(&[&[1, 2], &[3]]), tab(&[&[1, 3], &[2]])]);
        assert_eq!(
            enumerate_ssyt(&p("4"), &p("4")),
            vec![tab(&[&[1, 1, 1, 1]])]
        );
        assert!(enumerate_ssyt(&p("2,2"), &p("3,1")).is_empty());
        assert!(enumerate_ssyt(&p("2,1"), &p("2")).is_empty());
        assert_eq!(
            enumerate_ssyt(&Partition::empty(), &Partition::empty()).len(),
            1
        );
    }

    #[test]
    fn enumerated_tableaux_are_valid() {
        for n in 0..=7 {
            let all: Vec<_> = partitions_of(n).collect();
            for shape in &all {
                for content in &all {
                    let ts = enumerate_ssyt(shape, content);
                    for t in &ts {
                        assert!(t.is_semistandard());
                        assert_eq!(t.content(), content.parts());
                    }
                    let mut dedup = ts.clone();
                    dedup.dedup();
                    assert_eq!(dedup.len(), ts.len());
                    assert_eq!(
                        kostka_number(shape, content),
                        ts.len() as u64,
                        "{shape}; {content}"
                    );
                    assert_eq!(ts.is_empty(), !shape.dominates(content));
                }
            }
        }
    }

    #[test]
    fn words() {
        assert_eq!(reading_word(&tab(&[&[1, 2], &[3]])), Word(vec![2, 1, 3]));
        assert_eq!(reading_word(&tab(&[&[1, 3], &[2]])), Word(vec![3, 1, 2]));
        assert_eq!(reading_word(&tab(&[&[1, 1, 2]])), Word(vec![2, 1, 1]));
    }

    #[test]
    fn charges() {
        assert_eq!(charge(&Word(vec![2, 1, 3]), &p("1,1,1")), Ok(2));
        assert_eq!(charge(&Word(vec![3, 1, 2]), &p("1,1,1")), Ok(1));
        assert_eq!(charge(&Word(vec![1, 1, 1]), &p("3")), Ok(0));
        assert_eq!(charge(&Word(vec![]), &Partition::empty()), Ok(0));
        assert!(matches!(
            charge(&Word(vec![2, 1, 1]), &p("1,1,1")),
            Err(OracleError::ContentMismatch { .. })
        ));
        assert!(charge(&Word(vec![1, 3]), &p("1,1")).is_err());
        assert!(charge(&Word(vec![0, 1]), &p("1,1")).is_err());
    }

    #[test]
    fn charge_is_deterministic() {
        let w = Word(vec![2, 1, 3, 1, 2, 1]);
        let c = p("3,2,1");
        assert_eq!(charge(&w, &c), charge(&w, &c));
    }

    #[test]
    fn charge_extremes_on_standard_content() {
        for n in 1..=7u32 {
            let column = Partition::column(n);
            let row_charges: Vec<_> = enumerate_ssyt(&Partition::row(n), &column)
                .iter()
                .map(|t| charge(&reading_word(t), &column).unwrap())
                .collect();
            assert_eq!(row_charges, vec![n * (n - 1) / 2]);
            let col_charges: Vec<_> = enumerate_ssyt(&column, &column)
                .iter()
                .map(|t| charge(&reading_word(t), &column).unwrap())
                .collect();
            assert_eq!(col_charges, vec![0]);
            for shape in partitions_of(n) {
                for t in enumerate_ssyt(&shape, &column) {
                    assert!(charge(&reading_word(&t), &column).unwrap() <= n * (n - 1) / 2);
                }
            }
        }
    }

    #[test]
    fn charge_generating_functions() {
        let poly = |terms: &[(u32, i64)]| TPoly::from_terms(terms.iter().copied());
        assert_eq!(
            kostka_via_charge(&p("2,1"), &p("1,1,1")),
            poly(&[(1, 1), (2, 1)])
        );
        assert_eq!(
            kostka_via_charge(&p("3,2,1"), &p("2,2,1,1")),
            poly(&[(1, 1), (2, 2), (3, 1)])
        );
        assert_eq!(
            kostka_via_charge(&p("4,1,1"), &p("2,1^4")),
            poly(&[(3, 1), (4, 1), (5, 2), (6, 1), (7, 1)])
        );
        for n in 1..=6 {
            assert_eq!(
                kostka_via_charge(&Partition::row(n), &Partition::column(n)),
                poly(&[(n * (n - 1) / 2, 1)])
            );
        }
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka_number(&p("3,2,1"), &p("2,2,1,1")), 4);
        assert_eq!(kostka_number(&p("3,1"), &p("4")), 0);
        assert_eq!(kostka_number(&p("4"), &p("4")), 1);
        assert_eq!(kostka_number(&p("2,1"), &p("1,1")), 0);
    }

    #[test]
    fn tableau_json() {
        let t = tab(&[&[1, 2], &[3]]);
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"shape":[2,1],"rows":[[1,2],[3]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&js).unwrap(), t);
    }
}
