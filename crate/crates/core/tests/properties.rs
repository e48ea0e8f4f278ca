mod common;

use common::*;
use likelihood_lab::experiments::{lp_equivalent, posterior, random_prior};
use likelihood_lab::rational::{int, ratio};
use likelihood_lab::stopping::{
    build_truncated_experiment, mixture, shared_outcomes, BernoulliDesign, StoppingRule,
};
use likelihood_lab::{Rational, Subset};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn design(numerators: &[i64]) -> BernoulliDesign {
    let labels = (0..numerators.len()).map(|i| format!("t{i}")).collect();
    BernoulliDesign::new(labels, numerators.iter().map(|&n| ratio(n, 10)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lp_constant_inverts_when_events_swap(seed in any::<u64>(), k in 1usize..5, n in 1usize..6) {
        let mut rng = rng(seed);
        let exp = split_first(&experiment(&mut rng, k, n));
        let m = exp.n_omega();
        let (e, f) = (nonempty_subset(&mut rng, m), nonempty_subset(&mut rng, m));
        let forward = lp_equivalent(&exp, &e, &exp, &f).unwrap();
        let backward = lp_equivalent(&exp, &f, &exp, &e).unwrap();
        match (forward, backward) {
            (Some(c), Some(d)) => prop_assert!((c * d).is_one()),
            (None, None) => {}
            other => prop_assert!(false, "asymmetric: {:?}", other),
        }
    }

    #[test]
    fn mixture_keeps_lp_classes_and_constants(seed in any::<u64>(), k in 1usize..4, n in 1usize..5) {
        let mut rng = rng(seed);
        let exp_e = experiment(&mut rng, k, n);
        let exp_f = experiment(&mut rng, k, n + 1);
        let mix = mixture(&exp_e, &exp_f).unwrap();
        let e = nonempty_subset(&mut rng, n);
        let f = nonempty_subset(&mut rng, n + 1);
        let lift = |s: &Subset, offset: usize| {
            Subset::from_indices(mix.n_omega(), s.iter().map(|w| w + offset))
        };
        prop_assert_eq!(
            lp_equivalent(&mix, &lift(&e, 0), &mix, &lift(&f, n)).unwrap(),
            lp_equivalent(&exp_e, &e, &exp_f, &f).unwrap()
        );
    }

    #[test]
    fn posteriors_of_a_partition_sum_to_one(seed in any::<u64>(), k in 1usize..5, n in 1usize..5) {
        let mut rng = rng(seed);
        let exp = experiment(&mut rng, k, n);
        let prior = random_prior(&mut rng, exp.theta_labels());
        let e = nonempty_subset(&mut rng, n);
        let parts: Vec<Option<Rational>> = (0..k)
            .map(|t| posterior(&exp, &prior, &Subset::singleton(k, t), &e).unwrap())
            .collect();
        if parts.iter().all(Option::is_some) {
            let total: Rational = parts.into_iter().flatten().sum();
            prop_assert_eq!(total, int(1));
        } else {
            prop_assert!(parts.iter().all(Option::is_none));
        }
    }

    #[test]
    fn truncated_rows_are_distributions(
        ps in prop::collection::vec(0i64..=10, 1..4),
        horizon in 1usize..7,
        r in 1usize..4,
    ) {
        let d = design(&ps);
        for rule in [StoppingRule::fixed_n(horizon), StoppingRule::inverse_sampling(r, horizon)] {
            let exp = build_truncated_experiment(&d, &rule).unwrap();
            for row in exp.rows() {
                prop_assert_eq!(row.iter().sum::<Rational>(), int(1));
            }
        }
    }

    #[test]
    fn shared_terminals_carry_identical_likelihoods(
        ps in prop::collection::vec(0i64..=10, 1..4),
        horizon in 1usize..7,
        r in 1usize..4,
    ) {
        let d = design(&ps);
        let a = build_truncated_experiment(&d, &StoppingRule::fixed_n(horizon)).unwrap();
        let b = build_truncated_experiment(&d, &StoppingRule::inverse_sampling(r, horizon)).unwrap();
        for w in shared_outcomes(&a, &b) {
            let (i, j) = (a.omega_index(&w).unwrap(), b.omega_index(&w).unwrap());
            for t in 0..a.n_theta() {
                prop_assert_eq!(a.likelihood(t, i), b.likelihood(t, j));
            }
        }
    }
}

#[test]
fn all_zero_events_are_equivalent_with_unit_constant() {
    let mut rng = rng(3);
    let exp = experiment(&mut rng, 2, 3);
    let none = Subset::empty(3);
    assert_eq!(
        lp_equivalent(&exp, &none, &exp, &none).unwrap(),
        Some(int(1))
    );
    assert!(exp
        .rows()
        .iter()
        .all(|r| !r.iter().sum::<Rational>().is_zero()));
}
