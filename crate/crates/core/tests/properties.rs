use kostka_foulkes::kostka::{kostka_hook, prefix_reduce};
use kostka_foulkes::oracles::{kostka_number, kostka_via_charge};
use kostka_foulkes::poly::t_binomial;
use kostka_foulkes::sweep::verify;
use kostka_foulkes::{kostka, partitions_of, KostkaCache, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

/// A partition of `n ≤ max_n`, chosen uniformly among partitions of a uniform `n`.
fn arb_partition(max_n: u32) -> impl Strategy<Value = Partition> {
    (0..=max_n).prop_flat_map(|n| {
        let all: Vec<Partition> = partitions_of(n).collect();
        proptest::sample::select(all)
    })
}

/// A pair of partitions of the same weight `n ≤ max_n`.
fn arb_pair(max_n: u32) -> impl Strategy<Value = (Partition, Partition)> {
    (0..=max_n).prop_flat_map(|n| {
        let all: Vec<Partition> = partitions_of(n).collect();
        (
            proptest::sample::select(all.clone()),
            proptest::sample::select(all),
        )
    })
}

/// A random partition with parts up to 30 and length up to 12.
fn arb_wide_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..30, 0..12).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn dominance_vanishing_and_positivity((shape, content) in arb_pair(8)) {
        let v = kostka(&shape, &content, &mut KostkaCache::new());
        prop_assert_eq!(v.is_zero(), !shape.dominates(&content));
        prop_assert!(v.is_nonnegative());
        prop_assert_eq!(v.eval_at_one(), BigInt::from(kostka_number(&shape, &content)));
    }

    #[test]
    fn prefix_reduction_invariance((shape, content) in arb_pair(8)) {
        let (s, c) = prefix_reduce(&shape, &content);
        prop_assert!(s.part(1) != c.part(1) || s.is_empty() || c.is_empty());
        let mut cache = KostkaCache::new();
        prop_assert_eq!(kostka(&shape, &content, &mut cache), kostka(&s, &c, &mut cache));
        prop_assert_eq!(kostka_via_charge(&shape, &content), kostka_via_charge(&s, &c));
    }

    #[test]
    fn common_prefix_can_be_prepended((shape, content) in arb_pair(6), extra in 0u32..3) {
        // prepend a shared first part no smaller than either first part
        let head = shape.part(1).max(content.part(1)) + extra;
        prop_assume!(head > 0);
        let grow = |q: &Partition| {
            let mut v = vec![head];
            v.extend_from_slice(q.parts());
            Partition::new(v).unwrap()
        };
        let mut cache = KostkaCache::new();
        prop_assert_eq!(
            kostka_via_charge(&grow(&shape), &grow(&content)),
            kostka(&shape, &content, &mut cache)
        );
    }

    #[test]
    fn tail_lemma(q in arb_wide_partition()) {
        for i in 0..q.length() {
            let a = q.tail(i).unwrap();
            let b = q.tail(i + 1).unwrap();
            prop_assert_eq!(a.n_stat() - b.n_stat(), b.weight());
        }
    }

    #[test]
    fn lambda_super_shapes(q in arb_wide_partition()) {
        for i in 1..=q.length() {
            let s = q.lambda_super(i).unwrap();
            prop_assert!(Partition::new(s.parts().to_vec()).is_ok());
            prop_assert_eq!(s.weight(), q.weight() - q.part(i) + (i as u32 - 1));
            prop_assert_eq!(s.length(), q.length() - 1);
        }
    }

    #[test]
    fn strips_interlace(q in arb_partition(10), m in 0u32..5) {
        let strips = q.horizontal_strip_additions(m);
        for w in strips.windows(2) {
            prop_assert!(w[0] > w[1]);
        }
        for t in &strips {
            prop_assert_eq!(t.weight(), q.weight() + m);
            for j in 1..=t.length() {
                prop_assert!(t.part(j) >= q.part(j) && q.part(j) >= t.part(j + 1));
            }
        }
    }

    #[test]
    fn hook_formula_matches_recursion(
        (content, k) in arb_partition(10)
            .prop_filter("nonempty", |c| !c.is_empty())
            .prop_flat_map(|c| { let l = c.length() as u32; (Just(c), 0..l) })
    ) {
        // (n-k, 1^k) dominates μ exactly when k < l(μ)
        let n = content.weight();
        let hook = Partition::hook(n, k);
        prop_assert!(hook.dominates(&content));
        prop_assert_eq!(kostka_hook(n, k, &content).unwrap(), kostka(&hook, &content, &mut KostkaCache::new()));
    }

    #[test]
    fn binomial_recurrences(n in 1u32..=20, k in 1u32..=20) {
        prop_assume!(k <= n);
        prop_assert_eq!(t_binomial(n, k), t_binomial(n, n - k));
        prop_assert_eq!(t_binomial(n + 1, k), &t_binomial(n, k).shift(k) + &t_binomial(n, k - 1));
    }
}

#[test]
fn oracle_sweep_up_to_seven() {
    let report = verify(7, 4, &KostkaCache::new()).unwrap();
    assert!(report.passed(), "{:?}", report.mismatches);
    let expected: usize = (0..=7).map(|n| partitions_of(n).count().pow(2)).sum();
    assert_eq!(report.pairs, expected);
}
