use super::{restricted_posterior, Experiment, Prior};
use crate::bits::{EventSet, HypothesisSet, Subset};
use crate::error::{Error, Result};
use crate::rational::Rational;
use num_traits::{One, Zero};
use serde::Serialize;

/// Outcome of the Bayesian support test between two pieces of evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SupportVerdict {
    NoSupport { witness: Option<SupportWitness> },
    WeakSupport,
    StrictSupport,
}

/// Why support failed, by parameter index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SupportWitness {
    /// `P^F_θ(F) > 0` while `P^E_θ(E) = 0`.
    NullLikelihood { theta: usize },
    /// `P^E_{θ1}(E)·P^F_{θ2}(F) < P^E_{θ2}(E)·P^F_{θ1}(F)`.
    CrossProduct { theta1: usize, theta2: usize },
}

impl SupportVerdict {
    pub fn is_support(&self) -> bool {
        !matches!(self, SupportVerdict::NoSupport { .. })
    }
}

/// Which statement of the strict clause to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrictReading {
    /// Null-likelihood condition plus strict cross-products.
    WithNullCondition,
    /// Strict cross-products alone.
    CrossProductOnly,
}

fn require_shared_theta(a: &Experiment, b: &Experiment) -> Result<()> {
    if a.theta_labels() != b.theta_labels() {
        return Err(Error::MismatchedTheta);
    }
    Ok(())
}

/// The unique `c > 0` with `P^E_θ(E) = c·P^F_θ(F)` for every θ. Two all-zero
/// likelihood vectors give `c = 1`.
pub fn lp_equivalent(
    exp_e: &Experiment,
    e: &EventSet,
    exp_f: &Experiment,
    f: &EventSet,
) -> Result<Option<Rational>> {
    require_shared_theta(exp_e, exp_f)?;
    exp_e.check_event(e)?;
    exp_f.check_event(f)?;
    let le: Vec<Rational> = (0..exp_e.n_theta()).map(|t| exp_e.mass(t, e)).collect();
    let lf: Vec<Rational> = (0..exp_f.n_theta()).map(|t| exp_f.mass(t, f)).collect();
    let c = match lf.iter().position(|v| !v.is_zero()) {
        Some(t) => &le[t] / &lf[t],
        None => {
            return Ok(le.iter().all(Zero::is_zero).then(Rational::one));
        }
    };
    if c.is_zero() {
        return Ok(None);
    }
    let proportional = le.iter().zip(&lf).all(|(a, b)| *a == &c * b);
    Ok(proportional.then_some(c))
}

/// Does `E` (in `exp_e`) support `H1` over `H2` at least as much as `F` (in `exp_f`)?
pub fn bayesian_supports(
    exp_e: &Experiment,
    e: &EventSet,
    exp_f: &Experiment,
    f: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
) -> Result<SupportVerdict> {
    bayesian_supports_with(exp_e, e, exp_f, f, h1, h2, StrictReading::WithNullCondition)
}

pub fn bayesian_supports_with(
    exp_e: &Experiment,
    e: &EventSet,
    exp_f: &Experiment,
    f: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
    reading: StrictReading,
) -> Result<SupportVerdict> {
    require_shared_theta(exp_e, exp_f)?;
    exp_e.check_event(e)?;
    exp_f.check_event(f)?;
    exp_e.check_hypothesis(h1)?;
    exp_e.check_hypothesis(h2)?;
    if !h1.is_disjoint(h2) {
        return Err(Error::OverlappingHypotheses);
    }
    let pe: Vec<Rational> = (0..exp_e.n_theta()).map(|t| exp_e.mass(t, e)).collect();
    let pf: Vec<Rational> = (0..exp_f.n_theta()).map(|t| exp_f.mass(t, f)).collect();

    let null_failure = h1
        .union(h2)
        .iter()
        .find(|&t| !pf[t].is_zero() && pe[t].is_zero());

    let mut all_strict = true;
    for t1 in h1.iter() {
        for t2 in h2.iter() {
            let lhs = &pe[t1] * &pf[t2];
            let rhs = &pe[t2] * &pf[t1];
            if lhs < rhs {
                return Ok(SupportVerdict::NoSupport {
                    witness: Some(null_failure.map_or(
                        SupportWitness::CrossProduct {
                            theta1: t1,
                            theta2: t2,
                        },
                        |theta| SupportWitness::NullLikelihood { theta },
                    )),
                });
            }
            all_strict &= lhs > rhs;
        }
    }
    match (null_failure, reading) {
        (_, StrictReading::CrossProductOnly) if all_strict => Ok(SupportVerdict::StrictSupport),
        (Some(theta), _) => Ok(SupportVerdict::NoSupport {
            witness: Some(SupportWitness::NullLikelihood { theta }),
        }),
        (None, _) if all_strict => Ok(SupportVerdict::StrictSupport),
        (None, _) => Ok(SupportVerdict::WeakSupport),
    }
}

/// Support of `H1` over `H2` by `E` relative to the sure event.
pub fn bayesian_favors(
    exp: &Experiment,
    e: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
) -> Result<SupportVerdict> {
    bayesian_supports(exp, e, exp, &exp.sure_event(), h1, h2)
}

/// Posterior equivalence of `E` and `F`: true exactly when their likelihood
/// vectors are proportional.
pub fn posterior_equivalent(
    exp_e: &Experiment,
    e: &EventSet,
    exp_f: &Experiment,
    f: &EventSet,
) -> Result<bool> {
    Ok(lp_equivalent(exp_e, e, exp_f, f)?.is_some())
}

/// Whether `prior` violates the support inequality: the `F` side is
/// well-defined while the `E` side is undefined or gives `H1` a smaller
/// posterior.
pub fn support_violated_by(
    exp_e: &Experiment,
    e: &EventSet,
    exp_f: &Experiment,
    f: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
    prior: &Prior,
) -> Result<bool> {
    let within = h1.union(h2);
    let post_f = restricted_posterior(exp_f, prior, h1, &within, f)?;
    let post_e = restricted_posterior(exp_e, prior, h1, &within, e)?;
    Ok(match (post_e, post_f) {
        (_, None) => false,
        (None, Some(_)) => true,
        (Some(a), Some(b)) => a < b,
    })
}

/// A prior on `{θ1, θ2}` under which `E` fails to support `θ1` over `θ2` as
/// much as `F` does. Tries the two-point uniform prior first, then each point
/// mass; the point masses cover failures of the null-likelihood condition
/// that the uniform prior cannot expose.
pub fn counterexample_prior(
    exp_e: &Experiment,
    e: &EventSet,
    exp_f: &Experiment,
    f: &EventSet,
    theta1: usize,
    theta2: usize,
) -> Result<Prior> {
    let n = exp_e.n_theta();
    if let Some(&t) = [theta1, theta2].iter().find(|&&t| t >= n) {
        return Err(Error::IndexOutOfRange {
            what: "theta",
            index: t,
            size: n,
        });
    }
    if theta1 == theta2 {
        return Err(Error::EqualIndices);
    }
    let h1 = Subset::singleton(n, theta1);
    let h2 = Subset::singleton(n, theta2);
    counterexample_prior_for(exp_e, e, exp_f, f, &h1, &h2, theta1, theta2)
}

/// Like [`counterexample_prior`] for composite hypotheses, given the pair
/// `θ1 ∈ H1`, `θ2 ∈ H2` (or `θ1 = θ2` for a single null-likelihood
/// parameter). Each candidate is verified against the full `H1`, `H2`
/// definition before it is returned.
#[allow(clippy::too_many_arguments)]
pub fn counterexample_prior_for(
    exp_e: &Experiment,
    e: &EventSet,
    exp_f: &Experiment,
    f: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
    theta1: usize,
    theta2: usize,
) -> Result<Prior> {
    require_shared_theta(exp_e, exp_f)?;
    let labels = exp_e.theta_labels();
    let mut candidates = Vec::new();
    if theta1 != theta2 {
        candidates.push(Prior::uniform_on(
            labels,
            &Subset::from_indices(labels.len(), [theta1, theta2]),
        )?);
    }
    candidates.push(Prior::point_mass(labels, theta1));
    if theta1 != theta2 {
        candidates.push(Prior::point_mass(labels, theta2));
    }
    for prior in candidates {
        if support_violated_by(exp_e, e, exp_f, f, h1, h2, &prior)? {
            return Ok(prior);
        }
    }
    Err(Error::NoCounterexample)
}

/// Checks the witness construction for proportional likelihoods: for every
/// θ, `P_θ(E) = P_θ(F ∩ C_θ)`, `P_θ(F ∩ C_θ) = P_θ(F)·P_θ(C_θ)`, and
/// `P_θ(C_θ)` is one positive constant across θ.
pub fn lp_minus_check(
    exp: &Experiment,
    e: &EventSet,
    f: &EventSet,
    witnesses: &[EventSet],
) -> Result<bool> {
    exp.check_event(e)?;
    exp.check_event(f)?;
    if witnesses.len() != exp.n_theta() {
        return Err(Error::MismatchedSpace(format!(
            "{} witnesses for {} parameters",
            witnesses.len(),
            exp.n_theta()
        )));
    }
    for c in witnesses {
        exp.check_event(c)?;
    }
    let common = exp.mass(0, &witnesses[0]);
    if common.is_zero() {
        return Ok(false);
    }
    for (t, c) in witnesses.iter().enumerate() {
        let pc = exp.mass(t, c);
        let pfc = exp.mass(t, &f.intersection(c));
        if pc != common || exp.mass(t, e) != pfc || pfc != exp.mass(t, f) * &pc {
            return Ok(false);
        }
    }
    Ok(true)
}

impl std::fmt::Display for SupportVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SupportVerdict::NoSupport { .. } => f.write_str("no support"),
            SupportVerdict::WeakSupport => f.write_str("weak support"),
            SupportVerdict::StrictSupport => f.write_str("strict support"),
        }
    }
}
