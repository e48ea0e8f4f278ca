//! Fixtures shared by the integration targets.
#![allow(dead_code)]

use likelihood_lab::experiments::{
    random_experiment, seeded_rng, Experiment, ExperimentShape, Prior,
};
use likelihood_lab::rational::ratio;
use likelihood_lab::{EventSet, HypothesisSet, Subset};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const COLORS: [&str; 4] = ["blue", "white", "cyan", "cobalt"];

/// Both tables of the opening example, each padded with a `rest` outcome.
pub fn example1() -> (Experiment, Experiment) {
    let e = Experiment::from_table(
        &["t1", "t2"],
        &["A", "B", "C", "rest"],
        &[
            &[".423", ".564", ".011", ".002"],
            &[".039", ".052", ".909", "0"],
        ],
    )
    .unwrap();
    let f = Experiment::from_table(
        &["t1", "t2"],
        &["A'", "B'", "rest"],
        &[&[".846", ".12", ".034"], &[".078", ".01", ".912"]],
    )
    .unwrap();
    (e, f)
}

/// Two draws with replacement from an urn of four colors; the parameter
/// fixes the color counts out of 100.
pub fn urn() -> Experiment {
    let counts = [[15i64, 30, 50, 5], [10, 20, 20, 50]];
    let omega: Vec<String> = COLORS
        .iter()
        .flat_map(|a| COLORS.iter().map(move |b| format!("{a}-{b}")))
        .collect();
    let rows = counts
        .iter()
        .map(|c| {
            (0..16)
                .map(|i| ratio(c[i / 4] * c[i % 4], 10_000))
                .collect()
        })
        .collect();
    Experiment::new(vec!["t1".into(), "t2".into()], omega, rows).unwrap()
}

/// Outcomes whose first (second) draw matches, `None` matching anything.
pub fn draws(exp: &Experiment, first: Option<&str>, second: Option<&str>) -> EventSet {
    let names: Vec<&str> = exp
        .omega_labels()
        .iter()
        .map(String::as_str)
        .filter(|o| {
            let (a, b) = o.split_once('-').unwrap();
            first.is_none_or(|x| x == a) && second.is_none_or(|x| x == b)
        })
        .collect();
    exp.event(&names).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    seeded_rng(seed)
}

pub fn experiment(rng: &mut ChaCha8Rng, n_theta: usize, n_omega: usize) -> Experiment {
    random_experiment(
        rng,
        ExperimentShape {
            n_theta,
            n_omega,
            denominator: 6,
        },
    )
}

/// A uniformly random nonempty subset of `0..len`.
pub fn nonempty_subset(rng: &mut ChaCha8Rng, len: usize) -> Subset {
    loop {
        let s = Subset::from_indices(len, (0..len).filter(|_| rng.gen_bool(0.5)));
        if !s.is_empty() {
            return s;
        }
    }
}

/// Disjoint nonempty hypotheses (needs `len ≥ 2`).
pub fn disjoint_pair(rng: &mut ChaCha8Rng, len: usize) -> (HypothesisSet, HypothesisSet) {
    loop {
        let mut h1 = Subset::empty(len);
        let mut h2 = Subset::empty(len);
        for t in 0..len {
            match rng.gen_range(0..3) {
                0 => h1.insert(t),
                1 => h2.insert(t),
                _ => {}
            }
        }
        if !h1.is_empty() && !h2.is_empty() {
            return (h1, h2);
        }
    }
}

/// A prior with every mass positive.
pub fn positive_prior(rng: &mut ChaCha8Rng, labels: &[String]) -> Prior {
    let weights: Vec<i64> = labels.iter().map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = weights.iter().sum();
    Prior::new(
        labels.to_vec(),
        weights.iter().map(|&w| ratio(w, total)).collect(),
    )
    .unwrap()
}

/// Splits outcome 0 into two outcomes carrying 1/3 and 2/3 of its mass, so
/// the two halves are proportional with constant 1/2.
pub fn split_first(exp: &Experiment) -> Experiment {
    let mut omega = vec!["s1".to_string(), "s2".to_string()];
    omega.extend(exp.omega_labels()[1..].iter().cloned());
    let rows = exp
        .rows()
        .iter()
        .map(|r| {
            let mut row = vec![&r[0] * ratio(1, 3), &r[0] * ratio(2, 3)];
            row.extend(r[1..].iter().cloned());
            row
        })
        .collect();
    Experiment::new(exp.theta_labels().to_vec(), omega, rows).unwrap()
}
