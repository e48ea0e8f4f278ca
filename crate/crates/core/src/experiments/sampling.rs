//! Seeded generation of priors and small experiments.

use super::{Experiment, Prior};
use crate::bits::Subset;
use crate::rational::{self, Rational};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest denominator used for random priors.
pub const MAX_PRIOR_DENOMINATOR: u64 = 10_000;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `parts` non-negative integers summing to `total`, drawn by random cuts.
fn composition<R: Rng>(rng: &mut R, total: u64, parts: usize) -> Vec<u64> {
    let mut cuts: Vec<u64> = (0..parts.saturating_sub(1))
        .map(|_| rng.gen_range(0..=total))
        .collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts {
        out.push(c - prev);
        prev = c;
    }
    out.push(total - prev);
    out
}

/// A random prior whose masses share a denominator ≤ 10⁴.
pub fn random_prior<R: Rng>(rng: &mut R, theta_labels: &[String]) -> Prior {
    let d = rng.gen_range(1..=MAX_PRIOR_DENOMINATOR);
    let mass = composition(rng, d, theta_labels.len())
        .into_iter()
        .map(|k| Rational::new(BigInt::from(k), BigInt::from(d)))
        .collect();
    Prior::new(theta_labels.to_vec(), mass).expect("composition sums to the denominator")
}

/// The deterministic prior sample: uniform, every point mass, every
/// two-point uniform prior, every uniform prior missing one parameter, then
/// seeded random priors until at least `n` priors are present.
pub fn sample_priors(theta_labels: &[String], n: usize, seed: u64) -> Vec<Prior> {
    let k = theta_labels.len();
    let mut out = vec![Prior::uniform(theta_labels)];
    for t in 0..k {
        out.push(Prior::point_mass(theta_labels, t));
    }
    for a in 0..k {
        for b in a + 1..k {
            let h = Subset::from_indices(k, [a, b]);
            out.push(Prior::uniform_on(theta_labels, &h).expect("nonempty"));
        }
    }
    if k > 2 {
        for t in 0..k {
            let mut h = Subset::full(k);
            h.remove(t);
            out.push(Prior::uniform_on(theta_labels, &h).expect("nonempty"));
        }
    }
    let mut rng = seeded_rng(seed);
    while out.len() < n {
        out.push(random_prior(&mut rng, theta_labels));
    }
    out
}

/// Shape of a randomly generated experiment.
#[derive(Clone, Copy, Debug)]
pub struct ExperimentShape {
    pub n_theta: usize,
    pub n_omega: usize,
    /// Rows are compositions of this denominator; small values produce ties
    /// and zero likelihoods.
    pub denominator: u64,
}

pub fn random_experiment<R: Rng>(rng: &mut R, shape: ExperimentShape) -> Experiment {
    let theta = (1..=shape.n_theta).map(|i| format!("t{i}")).collect();
    let omega = (0..shape.n_omega)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let d = shape.denominator.max(1);
    let rows = (0..shape.n_theta)
        .map(|_| {
            composition(rng, d, shape.n_omega)
                .into_iter()
                .map(|k| rational::ratio(k as i64, d as i64))
                .collect()
        })
        .collect();
    Experiment::new(theta, omega, rows).expect("rows are compositions")
}
