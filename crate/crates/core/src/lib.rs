//! Exact Kostka–Foulkes polynomials.
//!
//! [`kostka::kostka`] evaluates `K_{λμ}(t)` with a memoized recursion over
//! horizontal strips; [`kostka::kostka_auto`] adds closed-form shortcuts for
//! one-row, hook and one-column cases. [`oracles`] holds an independent
//! charge-statistic implementation used for cross-checking, and [`sweep`]
//! runs whole tables and verification passes, in parallel when the
//! `parallel` feature is on.

pub mod kostka;
pub mod oracles;
pub mod partition;
pub mod poly;
pub mod sweep;

pub use kostka::{kostka, kostka_auto, FastPaths, KostkaCache, KostkaKey};
pub use partition::{partitions_of, Partition, PartitionError};
pub use poly::TPoly;
