use crate::bits::{all_subsets, Subset};
use crate::error::{Error, Result};
use crate::experiments::{sample_priors, Experiment};
use crate::qualitative::induce_likelihood;
use crate::rational::{self, Rational};
use crate::theses::corollary1_check;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// Mismatches kept in a [`Definition15Report`].
pub const MISMATCH_CAP: usize = 16;

/// Largest |Θ| for which every hypothesis is enumerated.
const MAX_THETA: usize = 16;

pub fn tagged(tag: &str, omega: &str) -> String {
    format!("{tag}:{omega}")
}

/// Flip a fair coin, then run `exp_e` (tag `E`) or `exp_f` (tag `F`).
pub fn mixture(exp_e: &Experiment, exp_f: &Experiment) -> Result<Experiment> {
    if exp_e.theta_labels() != exp_f.theta_labels() {
        return Err(Error::MismatchedTheta);
    }
    let labels = exp_e
        .omega_labels()
        .iter()
        .map(|w| tagged("E", w))
        .chain(exp_f.omega_labels().iter().map(|w| tagged("F", w)))
        .collect();
    let half = rational::half();
    let rows = exp_e
        .rows()
        .iter()
        .zip(exp_f.rows())
        .map(|(re, rf)| re.iter().chain(rf).map(|v| v * &half).collect())
        .collect();
    Experiment::new(exp_e.theta_labels().to_vec(), labels, rows)
}

/// Outcome labels present in both experiments, in `exp_e`'s order.
pub fn shared_outcomes(exp_e: &Experiment, exp_f: &Experiment) -> Vec<String> {
    exp_e
        .omega_labels()
        .iter()
        .filter(|w| exp_f.omega_index(w).is_ok())
        .cloned()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutcomeIrrelevance {
    pub outcome: String,
    /// `P^E_θ(ω) = P^F_θ(ω)` for every θ.
    pub likelihoods_identical: bool,
    /// The LP constant between the tagged mixture outcomes, if proportional.
    #[serde(with = "rational::as_opt_string")]
    pub lp_constant: Option<Rational>,
    /// Proportional with constant 1.
    pub quantitative: bool,
    /// `⟨E,ω⟩|θ ≡ ⟨F,ω⟩|θ` for every θ in the induced qualitative likelihood.
    pub qualitative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrelevanceReport {
    pub shared: usize,
    pub irrelevant: bool,
    pub outcomes: Vec<OutcomeIrrelevance>,
}

/// Whether knowledge of which experiment ran is irrelevant at each shared
/// outcome, quantitatively and qualitatively.
pub fn irrelevance_check(exp_e: &Experiment, exp_f: &Experiment) -> Result<IrrelevanceReport> {
    let m = mixture(exp_e, exp_f)?;
    let shared = shared_outcomes(exp_e, exp_f);
    if shared.is_empty() {
        return Err(Error::NoSharedOutcomes);
    }
    let ql = induce_likelihood(&m);
    let outcomes = shared
        .par_iter()
        .map(|w| {
            let (ie, jf) = (exp_e.omega_index(w)?, exp_f.omega_index(w)?);
            let e = m.event(&[&tagged("E", w)])?;
            let f = m.event(&[&tagged("F", w)])?;
            let lp_constant = crate::experiments::lp_equivalent(&m, &e, &m, &f)?;
            Ok(OutcomeIrrelevance {
                outcome: w.clone(),
                likelihoods_identical: (0..exp_e.n_theta())
                    .all(|t| exp_e.likelihood(t, ie) == exp_f.likelihood(t, jf)),
                quantitative: lp_constant.as_ref().is_some_and(One::is_one),
                lp_constant,
                qualitative: corollary1_check(&ql, &e, &f)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IrrelevanceReport {
        shared: outcomes.len(),
        irrelevant: outcomes.iter().all(|o| o.quantitative && o.qualitative),
        outcomes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Definition15Mismatch {
    pub prior_index: usize,
    pub outcome: String,
    /// `Q^E(H|ω) = Q^F(H|ω)` for every H.
    pub across_experiments: bool,
    /// `Q^M(H|⟨E,ω⟩) = Q^M(H|⟨F,ω⟩)` for every H.
    pub within_mixture: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Definition15Report {
    pub seed: u64,
    pub priors_examined: usize,
    pub outcomes: usize,
    pub hypotheses: usize,
    /// Posteriors agree across the two experiments at every prior and outcome.
    pub across_experiments: bool,
    /// Posteriors agree between the tagged mixture outcomes everywhere.
    pub within_mixture: bool,
    /// The two formulations agree at every (prior, outcome).
    pub formulations_agree: bool,
    pub mismatches: Vec<Definition15Mismatch>,
}

/// `values` times the least common multiple of their denominators. Posteriors
/// are unchanged by positive rescaling of a likelihood column or a prior, so
/// comparisons can run on integers without gcd normalization.
fn cleared(values: &[Rational]) -> Vec<BigInt> {
    let l = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    values
        .iter()
        .map(|v| v.numer() * (&l / v.denom()))
        .collect()
}

/// Unnormalized joint `Q(θ)·P_θ(ω)` per θ and its total.
struct Joint {
    parts: Vec<BigInt>,
    total: BigInt,
}

impl Joint {
    fn new(prior: &[BigInt], lik: &[BigInt]) -> Self {
        let parts: Vec<BigInt> = prior.iter().zip(lik).map(|(q, l)| q * l).collect();
        let total = parts.iter().sum();
        Joint { parts, total }
    }

    fn mass(&self, h: &Subset) -> BigInt {
        h.iter().map(|t| &self.parts[t]).sum()
    }
}

/// `Q_a(H|·) = Q_b(H|·)` for every listed H, both sides undefined counting
/// as equal.
fn same_posteriors(a: &Joint, b: &Joint, hypotheses: &[Subset]) -> bool {
    match (a.total.is_zero(), b.total.is_zero()) {
        (true, true) => true,
        (false, false) => hypotheses
            .iter()
            .all(|h| a.mass(h) * &b.total == b.mass(h) * &a.total),
        _ => false,
    }
}

fn column(exp: &Experiment, omega: usize) -> Vec<Rational> {
    (0..exp.n_theta())
        .map(|t| exp.likelihood(t, omega).clone())
        .collect()
}

/// Compares the two statements of stopping-rule irrelevance on sampled
/// priors: equal posteriors across the experiments, and equal posteriors for
/// the two tagged outcomes of the mixture.
pub fn definition15_agreement(
    exp_e: &Experiment,
    exp_f: &Experiment,
    n: usize,
    seed: u64,
) -> Result<Definition15Report> {
    let m = mixture(exp_e, exp_f)?;
    let shared = shared_outcomes(exp_e, exp_f);
    if shared.is_empty() {
        return Err(Error::NoSharedOutcomes);
    }
    let k = exp_e.n_theta();
    if k > MAX_THETA {
        return Err(Error::CapExceeded {
            what: "|Θ| for hypothesis enumeration",
            size: k,
            cap: MAX_THETA,
        });
    }
    let hypotheses: Vec<Subset> = all_subsets(k).collect();
    let columns = shared
        .iter()
        .map(|w| {
            Ok([
                cleared(&column(exp_e, exp_e.omega_index(w)?)),
                cleared(&column(exp_f, exp_f.omega_index(w)?)),
                cleared(&column(&m, m.omega_index(&tagged("E", w))?)),
                cleared(&column(&m, m.omega_index(&tagged("F", w))?)),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let priors = sample_priors(exp_e.theta_labels(), n, seed);
    let same = |q: &[BigInt], a: &[BigInt], b: &[BigInt]| {
        same_posteriors(&Joint::new(q, a), &Joint::new(q, b), &hypotheses)
    };
    let verdicts: Vec<Definition15Mismatch> = priors
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, q)| {
            let q = cleared(q.masses());
            shared
                .iter()
                .zip(&columns)
                .map(move |(w, [e, f, me, mf])| Definition15Mismatch {
                    prior_index: i,
                    outcome: w.clone(),
                    across_experiments: same(&q, e, f),
                    within_mixture: same(&q, me, mf),
                })
        })
        .collect();
    let mismatches: Vec<Definition15Mismatch> = verdicts
        .iter()
        .filter(|v| v.across_experiments != v.within_mixture)
        .take(MISMATCH_CAP)
        .cloned()
        .collect();
    Ok(Definition15Report {
        seed,
        priors_examined: priors.len(),
        outcomes: shared.len(),
        hypotheses: hypotheses.len(),
        across_experiments: verdicts.iter().all(|v| v.across_experiments),
        within_mixture: verdicts.iter().all(|v| v.within_mixture),
        formulations_agree: mismatches.is_empty(),
        mismatches,
    })
}
