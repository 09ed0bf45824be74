mod common;

use common::checks::{fast_and_thom_paths, isolation_matches_thom, planted_univariate, surd_fibers, univariate_counts};
use common::rng;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn univariate_counts_match(seed in any::<u64>()) {
        let (p, want) = planted_univariate(&mut rng(seed));
        let r = univariate_counts(&p, want);
        prop_assert!(r.is_ok(), "{}", r.unwrap_err());
    }

    #[test]
    fn fibers_over_quadratic_roots(seed in any::<u64>()) {
        let r = surd_fibers(&mut rng(seed));
        prop_assert!(r.is_ok(), "{}", r.unwrap_err());
    }

    #[test]
    fn fast_path_matches_thom(seed in any::<u64>()) {
        let r = fast_and_thom_paths(&mut rng(seed));
        prop_assert!(r.is_ok(), "{}", r.unwrap_err());
    }

    #[test]
    fn isolation_signs_match_thom(seed in any::<u64>()) {
        let r = isolation_matches_thom(&mut rng(seed));
        prop_assert!(r.is_ok(), "{}", r.unwrap_err());
    }
}
