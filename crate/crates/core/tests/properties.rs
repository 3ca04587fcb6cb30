use std::collections::BTreeMap;

use proptest::prelude::*;

use linecode::io::{code_from_json, code_to_json};
use linecode::{
    brute_force_min_weight, concatenated_binary_generator, enumerate_lines, hyperplane_profile,
    line_through, quaternary_generator_matrix, AdditiveLineCode, Hyperplane, HyperplaneLoads,
    Point, Strategy as Eval,
};

/// A random multiset of lines in PG(l-1, 2) for l in 3..=7.
fn arb_code() -> impl Strategy<Value = AdditiveLineCode> {
    (3u32..=7).prop_flat_map(|l| {
        let count = enumerate_lines(l).unwrap().len();
        proptest::collection::vec((0..count, 1u32..4), 1..40).prop_map(move |picks| {
            let lines = enumerate_lines(l).unwrap();
            AdditiveLineCode::new(l, picks.into_iter().map(|(i, m)| (lines[i], m))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strategies_agree(code in arb_code()) {
        let scan = HyperplaneLoads::compute(&code, Eval::Scan);
        let dual = HyperplaneLoads::compute(&code, Eval::Dual);
        prop_assert_eq!(&scan, &dual);
        for p in scan.profiles() {
            let direct = hyperplane_profile(&code, Hyperplane::new(p.dual_mask, code.dim()).unwrap());
            prop_assert_eq!(p, direct);
        }
    }

    #[test]
    fn oracle_matches_geometry(code in arb_code()) {
        let d = HyperplaneLoads::compute(&code, Eval::Dual).parameters().d;
        let w = brute_force_min_weight(&concatenated_binary_generator(&code), 20).unwrap();
        prop_assert_eq!(w, 2 * d);
    }

    #[test]
    fn codeword_weights_are_outside_counts(code in arb_code()) {
        let g = quaternary_generator_matrix(&code);
        let loads = HyperplaneLoads::compute(&code, Eval::Scan);
        for p in loads.profiles() {
            let wt = g.codeword(p.dual_mask).iter().filter(|x| !x.is_zero()).count() as u64;
            prop_assert_eq!(wt, p.outside);
        }
    }

    #[test]
    fn distribution_totals(code in arb_code()) {
        let loads = HyperplaneLoads::compute(&code, Eval::default());
        let dist = loads.weight_distribution();
        prop_assert_eq!(dist.total(), (1u64 << code.dim()) - 1);
        prop_assert_eq!(dist.min_weight(), loads.parameters().d);
        let p = loads.parameters();
        prop_assert_eq!(p.n, p.d + p.s);
    }

    #[test]
    fn sum_is_superadditive(a in arb_code(), b in arb_code()) {
        prop_assume!(a.dim() == b.dim());
        let s = a.sum(&b).unwrap();
        let pa = HyperplaneLoads::compute(&a, Eval::Scan).parameters();
        let pb = HyperplaneLoads::compute(&b, Eval::Scan).parameters();
        let ps = HyperplaneLoads::compute(&s, Eval::Scan).parameters();
        prop_assert_eq!(ps.n, pa.n + pb.n);
        prop_assert!(ps.d >= pa.d + pb.d);
        let doubled = HyperplaneLoads::compute(&a.repeated(2).unwrap(), Eval::Scan).parameters();
        prop_assert_eq!((doubled.n, doubled.d, doubled.s), (2 * pa.n, 2 * pa.d, 2 * pa.s));
    }

    #[test]
    fn json_round_trip(code in arb_code()) {
        prop_assert_eq!(code_from_json(&code_to_json(&code)).unwrap(), code);
    }

    #[test]
    fn line_through_is_canonical(l in 2u32..=10, a in 1u32..1024, b in 1u32..1024) {
        let top = (1u32 << l) - 1;
        let (a, b) = ((a - 1) % top + 1, (b - 1) % top + 1);
        prop_assume!(a != b);
        let line = line_through(Point::new(a, l).unwrap(), Point::new(b, l).unwrap()).unwrap();
        let [x, y, z] = line.masks();
        prop_assert!(x < y && y < z && x ^ y == z);
        prop_assert!(line.contains(Point::new(a, l).unwrap()) && line.contains(Point::new(b, l).unwrap()));
        let via_other = line_through(Point::new(b, l).unwrap(), Point::new(a ^ b, l).unwrap()).unwrap();
        prop_assert_eq!(line, via_other);
    }
}

#[test]
fn partitioned_evaluation_is_deterministic() {
    let code = linecode::all_lines_code(8).unwrap();
    let first = HyperplaneLoads::compute(&code, Eval::Dual).weight_distribution();
    for _ in 0..3 {
        assert_eq!(
            HyperplaneLoads::compute(&code, Eval::Dual).weight_distribution(),
            first
        );
    }
    assert_eq!(
        first.counts(),
        &BTreeMap::from([(line_count_outside(8), 255)])
    );
}

/// Lines of PG(7,2) minus lines of a hyperplane PG(6,2).
fn line_count_outside(l: u32) -> u64 {
    linecode::line_count(l).unwrap() - linecode::line_count(l - 1).unwrap()
}
