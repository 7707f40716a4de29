use std::time::Instant;

use kostka_foulkes::kostka::{kostka_column, kostka_one_row};
use kostka_foulkes::oracles::{enumerate_ssyt, kostka_number, kostka_via_charge};
use kostka_foulkes::{kostka, kostka_auto, FastPaths, KostkaCache, Partition, TPoly};
use num_bigint::BigInt;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Coefficients of K_{(6,4,3,2),(3,1^12)} for t^16 .. t^62.
const LARGE_FIXTURE: [u32; 47] = [
    1, 3, 7, 15, 28, 48, 79, 122, 180, 256, 351, 465, 600, 751, 917, 1093, 1273, 1447, 1613, 1758,
    1878, 1965, 2017, 2027, 2001, 1933, 1832, 1701, 1549, 1378, 1203, 1025, 855, 695, 552, 425,
    320, 232, 163, 110, 72, 44, 26, 14, 7, 3, 1,
];

fn large_fixture() -> TPoly {
    TPoly::from_terms(
        LARGE_FIXTURE
            .iter()
            .enumerate()
            .map(|(i, &c)| (16 + i as u32, c)),
    )
}

#[test]
fn large_shape_matches_table() {
    let shape = p("6,4,3,2");
    let content = p("3,1^12");
    let start = Instant::now();
    let value = kostka(&shape, &content, &mut KostkaCache::new());
    let elapsed = start.elapsed();
    assert_eq!(value, large_fixture());
    assert_eq!(value.low_degree(), Some(16));
    assert_eq!(value.degree(), Some(62));
    assert_eq!(value.coeff(39), BigInt::from(2027));
    assert_eq!(value.eval_at_one(), BigInt::from(35035));
    eprintln!("recursion: {elapsed:?}");
}

#[test]
fn large_shape_oracles_agree() {
    let shape = p("6,4,3,2");
    let content = p("3,1^12");
    assert_eq!(kostka_number(&shape, &content), 35035);
    assert_eq!(enumerate_ssyt(&shape, &content).len(), 35035);
    assert_eq!(kostka_via_charge(&shape, &content), large_fixture());
}

#[test]
fn large_shape_decomposition() {
    // t^3 Σ_τ K_{τ,(1^12)} - K_{(7,3,2),(1^12)} over the eleven strip shapes
    let column = Partition::column(12);
    let strip_shapes = [
        "7,3,2", "6,4,2", "6,3,3", "6,3,2,1", "5,4,3", "5,4,2,1", "5,3,3,1", "5,3,2,2", "4,4,3,1",
        "4,4,2,2", "4,3,3,2",
    ];
    let sum = strip_shapes
        .iter()
        .fold(TPoly::zero(), |acc, s| &acc + &kostka_column(&p(s)));
    let value = &sum.shift(3) - &kostka_column(&p("7,3,2"));
    assert_eq!(value, large_fixture());
    let mut cache = KostkaCache::new();
    for s in strip_shapes {
        assert_eq!(kostka(&p(s), &column, &mut cache), kostka_column(&p(s)));
    }
}

#[test]
fn fast_path_flags_do_not_change_large_value() {
    let shape = p("6,4,3,2");
    let content = p("3,1^12");
    let plain = kostka_auto(
        &shape,
        &content,
        &mut KostkaCache::new(),
        FastPaths::empty(),
    );
    let fast = kostka_auto(&shape, &content, &mut KostkaCache::new(), FastPaths::all());
    assert_eq!(plain, fast);
}

#[test]
fn one_row_formula_up_to_twelve() {
    let mut cache = KostkaCache::new();
    for n in 0..=12 {
        for content in kostka_foulkes::partitions_of(n) {
            assert_eq!(
                kostka(&Partition::row(n), &content, &mut cache),
                kostka_one_row(&content)
            );
        }
    }
}
