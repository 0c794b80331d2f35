use gaussdeg::verify::crossform_suite;
use gaussdeg::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition_strategy(max_weight: u32) -> impl Strategy<Value = Partition> {
    (0..=max_weight)
        .prop_flat_map(|k| {
            let all = enumerate_partitions(k, k as usize);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

/// Veronese varieties small enough that every m is cheap.
fn variety_strategy() -> impl Strategy<Value = (VeroneseVariety, u32)> {
    prop_oneof![(1u32..=1, 2u32..=12), (2u32..=2, 2u32..=5), (3u32..=3, 2u32..=3), (4u32..=4, 2u32..=2)]
        .prop_flat_map(|(n, d)| {
            let v = VeroneseVariety::new(n, d).unwrap();
            (Just(v), n..v.ambient_dim())
        })
}

proptest! {
    #[test]
    fn hook_matches_bruteforce(lam in partition_strategy(10)) {
        prop_assert_eq!(syt_count_hook(&lam), syt_count_bruteforce(&lam).unwrap());
    }

    #[test]
    fn hook_is_conjugation_invariant(lam in partition_strategy(14)) {
        prop_assert_eq!(syt_count_hook(&lam), syt_count_hook(&lam.conjugate()));
    }

    #[test]
    fn padding_never_changes_a_partition(lam in partition_strategy(10), zeros in 0usize..4) {
        let mut parts = lam.parts().to_vec();
        parts.extend(std::iter::repeat_n(0, zeros));
        let padded = Partition::new(parts).unwrap();
        prop_assert_eq!(syt_count_hook(&padded), syt_count_hook(&lam));
        prop_assert_eq!(&padded, &lam);
    }

    #[test]
    fn enumeration_is_sorted_and_valid(k in 0u32..14, max_parts in 0usize..8) {
        let all = enumerate_partitions(k, max_parts);
        for pair in all.windows(2) {
            // Strictly decreasing in lexicographic order: no duplicates.
            prop_assert!(pair[0].parts() > pair[1].parts());
        }
        for lam in &all {
            prop_assert_eq!(lam.weight(), k);
            prop_assert!(lam.len() <= max_parts);
            prop_assert!(lam.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn main_and_alternate_agree((v, m) in variety_strategy()) {
        let main = degree_main(&v, m).unwrap();
        let alt = degree_alternate(&v, m).unwrap();
        prop_assert_eq!(&main.degree, &alt.degree);
        prop_assert!(main.degree > BigInt::from(0));
        prop_assert_eq!(main.dim, v.n as u64 + (v.ambient_dim() - m) as u64 * (m - v.n) as u64);
    }

    #[test]
    fn bounds_hold((v, m) in variety_strategy()) {
        let b = bounds(&v, m).unwrap();
        prop_assert!(b.lower <= b.ratio && b.ratio <= b.upper);
        prop_assert!(b.within_bounds);
    }

    #[test]
    fn table_json_round_trip(n in 1u32..=4, d in 2u32..=6) {
        let table = veronese_integral_table(&VeroneseVariety::new(n, d).unwrap());
        prop_assert_eq!(SegreIntegralTable::from_json(&table.to_json()).unwrap(), table);
    }
}

#[test]
fn cross_formula_sweep() {
    let suite = crossform_suite(&[1, 2, 3], &[2, 3, 4]);
    assert!(suite.passed(), "{:?}", suite.failures);
}

#[test]
fn rsk_square_sum() {
    for k in 0..=10u32 {
        let sum: BigInt = enumerate_partitions(k, k as usize)
            .iter()
            .map(|lam| {
                let f = syt_count_hook(lam);
                &f * &f
            })
            .sum();
        assert_eq!(sum, factorial(k as u64));
    }
}

#[test]
fn curve_tables_reproduce_general_curve_formula() {
    for big_n in 2..=8 {
        for g in 0..=3 {
            for d in 1..=8 {
                if g + d <= 1 {
                    continue;
                }
                let table = curve_integral_table(big_n, d, g).unwrap();
                for m in 1..big_n {
                    let GenericOutcome::Degree(r) = degree_generic(&table, m).unwrap() else {
                        panic!("non-positive total for N = {big_n}, d = {d}, g = {g}");
                    };
                    assert_eq!(r.degree, degree_general_curve(big_n, d, g, m).unwrap().degree);
                }
            }
        }
    }
}
