//! The uniform-on-three-points family, truncated to Θ = {1..K}.

use super::Experiment;
use crate::bits::{HypothesisSet, Subset};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use num_traits::Zero;

/// `⌊n/2⌋` with the convention `⌊1/2⌋ = 1`.
pub fn modified_half(n: usize) -> usize {
    if n == 1 {
        1
    } else {
        n / 2
    }
}

/// `P_θ` uniform on `{⌊θ/2⌋, 2θ, 2θ+1}` for θ ∈ {1..K}, Ω = {1..2K+1}.
/// Labels are the decimal integers. Every θ ≤ K has its whole support in Ω,
/// so no row is renormalized.
pub fn fraser_experiment(k: usize) -> Result<Experiment> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "K must be at least 3, got {k}"
        )));
    }
    let n_omega = 2 * k + 1;
    let third = rational::ratio(1, 3);
    let rows = (1..=k)
        .map(|theta| {
            let mut row = vec![Rational::zero(); n_omega];
            for w in [modified_half(theta), 2 * theta, 2 * theta + 1] {
                row[w - 1] = third.clone();
            }
            row
        })
        .collect();
    Experiment::new(
        (1..=k).map(|t| t.to_string()).collect(),
        (1..=n_omega).map(|w| w.to_string()).collect(),
        rows,
    )
}

fn point_estimator(exp: &Experiment, f: impl Fn(usize) -> usize) -> Vec<HypothesisSet> {
    let k = exp.n_theta();
    (1..=exp.n_omega())
        .map(|n| {
            let theta = f(n);
            if (1..=k).contains(&theta) {
                Subset::singleton(k, theta - 1)
            } else {
                Subset::empty(k)
            }
        })
        .collect()
}

/// `n ↦ {⌊n/2⌋}`.
pub fn fraser_low(exp: &Experiment) -> Vec<HypothesisSet> {
    point_estimator(exp, modified_half)
}

/// `n ↦ {2n}`, empty when `2n` falls outside the truncated Θ.
pub fn fraser_mid(exp: &Experiment) -> Vec<HypothesisSet> {
    point_estimator(exp, |n| 2 * n)
}

/// `n ↦ {2n+1}`, empty when outside the truncated Θ.
pub fn fraser_high(exp: &Experiment) -> Vec<HypothesisSet> {
    point_estimator(exp, |n| 2 * n + 1)
}

/// `coverage(θ) = Σ_{ω: θ ∈ estimator(ω)} P_θ(ω)`, indexed by θ.
pub fn estimator_coverage(exp: &Experiment, estimator: &[HypothesisSet]) -> Result<Vec<Rational>> {
    if estimator.len() != exp.n_omega() {
        return Err(Error::MismatchedSpace(format!(
            "estimator defined on {} outcomes, experiment has {}",
            estimator.len(),
            exp.n_omega()
        )));
    }
    for h in estimator {
        exp.check_hypothesis(h)?;
    }
    Ok((0..exp.n_theta())
        .map(|t| {
            estimator
                .iter()
                .enumerate()
                .filter(|(_, h)| h.contains(t))
                .map(|(w, _)| exp.likelihood(t, w))
                .sum()
        })
        .collect())
}
