//! Finite experiments, priors and posteriors with exact rational arithmetic,
//! plus the quantitative likelihoodist decision procedures.

mod fraser;
mod sampling;
mod support;

pub use fraser::{
    estimator_coverage, fraser_experiment, fraser_high, fraser_low, fraser_mid, modified_half,
};
pub use sampling::{random_experiment, random_prior, sample_priors, seeded_rng, ExperimentShape};
pub use support::{
    bayesian_favors, bayesian_supports, bayesian_supports_with, counterexample_prior,
    counterexample_prior_for, lp_equivalent, lp_minus_check, posterior_equivalent,
    support_violated_by, StrictReading, SupportVerdict, SupportWitness,
};

use crate::bits::{EventSet, HypothesisSet, Subset};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};

/// A finite experiment: parameters Θ, outcomes Ω and the matrix `P_θ(ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Experiment {
    theta_labels: Vec<String>,
    omega_labels: Vec<String>,
    likelihood: Vec<Vec<Rational>>,
}

/// On-disk form of an [`Experiment`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExperimentDoc {
    pub theta: Vec<String>,
    pub omega: Vec<String>,
    pub likelihoods: Vec<Vec<String>>,
}

impl Experiment {
    pub fn new(
        theta_labels: Vec<String>,
        omega_labels: Vec<String>,
        likelihood: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let bad = |m: String| Error::InvalidExperiment(m);
        if theta_labels.is_empty() || omega_labels.is_empty() {
            return Err(bad("Θ and Ω must be nonempty".into()));
        }
        check_unique(&theta_labels, "theta").map_err(bad)?;
        check_unique(&omega_labels, "omega").map_err(bad)?;
        if likelihood.len() != theta_labels.len() {
            return Err(bad(format!(
                "{} likelihood rows for {} parameters",
                likelihood.len(),
                theta_labels.len()
            )));
        }
        for (i, row) in likelihood.iter().enumerate() {
            if row.len() != omega_labels.len() {
                return Err(bad(format!(
                    "row {} has {} entries, expected {}",
                    theta_labels[i],
                    row.len(),
                    omega_labels.len()
                )));
            }
            if let Some(j) = row.iter().position(|v| !rational::is_probability(v)) {
                return Err(bad(format!(
                    "entry ({}, {}) = {} is outside [0,1]",
                    theta_labels[i],
                    omega_labels[j],
                    rational::format(&row[j])
                )));
            }
            let total: Rational = row.iter().sum();
            if !total.is_one() {
                return Err(bad(format!(
                    "row {} sums to {}, not 1",
                    theta_labels[i],
                    rational::format(&total)
                )));
            }
        }
        Ok(Experiment {
            theta_labels,
            omega_labels,
            likelihood,
        })
    }

    /// Convenience constructor from string labels and rational literals.
    pub fn from_table(theta: &[&str], omega: &[&str], rows: &[&[&str]]) -> Result<Self> {
        let doc = ExperimentDoc {
            theta: theta.iter().map(|s| s.to_string()).collect(),
            omega: omega.iter().map(|s| s.to_string()).collect(),
            likelihoods: rows
                .iter()
                .map(|r| r.iter().map(|s| s.to_string()).collect())
                .collect(),
        };
        Experiment::from_doc(&doc)
    }

    pub fn from_doc(doc: &ExperimentDoc) -> Result<Self> {
        let mut rows = Vec::with_capacity(doc.likelihoods.len());
        for (i, row) in doc.likelihoods.iter().enumerate() {
            let mut parsed = Vec::with_capacity(row.len());
            for (j, cell) in row.iter().enumerate() {
                let r = rational::parse(cell)
                    .map_err(|m| Error::parse(format!("likelihoods[{i}][{j}]"), m))?;
                parsed.push(r);
            }
            rows.push(parsed);
        }
        Experiment::new(doc.theta.clone(), doc.omega.clone(), rows)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ExperimentDoc = serde_json::from_str(text).map_err(json_error)?;
        Experiment::from_doc(&doc)
    }

    pub fn to_doc(&self) -> ExperimentDoc {
        ExperimentDoc {
            theta: self.theta_labels.clone(),
            omega: self.omega_labels.clone(),
            likelihoods: self
                .likelihood
                .iter()
                .map(|r| r.iter().map(rational::format).collect())
                .collect(),
        }
    }

    pub fn theta_labels(&self) -> &[String] {
        &self.theta_labels
    }

    pub fn omega_labels(&self) -> &[String] {
        &self.omega_labels
    }

    pub fn n_theta(&self) -> usize {
        self.theta_labels.len()
    }

    pub fn n_omega(&self) -> usize {
        self.omega_labels.len()
    }

    /// `P_θ(ω)`.
    pub fn likelihood(&self, theta: usize, omega: usize) -> &Rational {
        &self.likelihood[theta][omega]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.likelihood
    }

    pub fn theta_index(&self, name: &str) -> Result<usize> {
        self.theta_labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::parse("theta", format!("unknown parameter {name:?}")))
    }

    pub fn omega_index(&self, name: &str) -> Result<usize> {
        self.omega_labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::parse("omega", format!("unknown outcome {name:?}")))
    }

    /// Event from outcome names.
    pub fn event(&self, names: &[&str]) -> Result<EventSet> {
        let idx = names
            .iter()
            .map(|n| self.omega_index(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subset::from_indices(self.n_omega(), idx))
    }

    /// Hypothesis from parameter names.
    pub fn hypothesis(&self, names: &[&str]) -> Result<HypothesisSet> {
        let idx = names
            .iter()
            .map(|n| self.theta_index(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subset::from_indices(self.n_theta(), idx))
    }

    pub fn sure_event(&self) -> EventSet {
        Subset::full(self.n_omega())
    }

    pub fn all_hypotheses(&self) -> HypothesisSet {
        Subset::full(self.n_theta())
    }

    pub(crate) fn check_event(&self, e: &EventSet) -> Result<()> {
        if e.len() != self.n_omega() {
            return Err(Error::MismatchedSpace(format!(
                "event of width {} over Ω of size {}",
                e.len(),
                self.n_omega()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_hypothesis(&self, h: &HypothesisSet) -> Result<()> {
        if h.len() != self.n_theta() {
            return Err(Error::MismatchedSpace(format!(
                "hypothesis of width {} over Θ of size {}",
                h.len(),
                self.n_theta()
            )));
        }
        Ok(())
    }

    /// `P_θ(E)` without validation; widths must already match.
    pub(crate) fn mass(&self, theta: usize, e: &EventSet) -> Rational {
        e.iter().map(|w| &self.likelihood[theta][w]).sum()
    }
}

fn check_unique(labels: &[String], axis: &str) -> std::result::Result<(), String> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(format!("duplicate {axis} label {l:?}"));
        }
    }
    Ok(())
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::parse(
        format!("line {} column {}", e.line(), e.column()),
        e.to_string(),
    )
}

/// `Σ_{ω∈E} P_θ(ω)`.
pub fn event_likelihood(exp: &Experiment, theta: usize, e: &EventSet) -> Result<Rational> {
    if theta >= exp.n_theta() {
        return Err(Error::IndexOutOfRange {
            what: "theta",
            index: theta,
            size: exp.n_theta(),
        });
    }
    exp.check_event(e)?;
    Ok(exp.mass(theta, e))
}

/// A prior over Θ with exact rational masses summing to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Prior {
    theta_labels: Vec<String>,
    mass: Vec<Rational>,
}

/// On-disk form of a [`Prior`]: `{"prior": {"θ": "p/q"}}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct PriorDoc {
    pub prior: BTreeMap<String, String>,
}

impl Prior {
    pub fn new(theta_labels: Vec<String>, mass: Vec<Rational>) -> Result<Self> {
        if theta_labels.len() != mass.len() {
            return Err(Error::InvalidPrior(format!(
                "{} masses for {} parameters",
                mass.len(),
                theta_labels.len()
            )));
        }
        check_unique(&theta_labels, "theta").map_err(Error::InvalidPrior)?;
        if let Some(i) = mass.iter().position(|m| !rational::is_probability(m)) {
            return Err(Error::InvalidPrior(format!(
                "mass of {} is {}",
                theta_labels[i],
                rational::format(&mass[i])
            )));
        }
        let total: Rational = mass.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidPrior(format!(
                "masses sum to {}, not 1",
                rational::format(&total)
            )));
        }
        Ok(Prior { theta_labels, mass })
    }

    /// Uniform on `h`, zero elsewhere.
    pub fn uniform_on(theta_labels: &[String], h: &HypothesisSet) -> Result<Self> {
        let k = h.count();
        if k == 0 {
            return Err(Error::EmptyHypothesis);
        }
        let each = rational::ratio(1, k as i64);
        let mass = (0..theta_labels.len())
            .map(|i| {
                if h.contains(i) {
                    each.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Prior::new(theta_labels.to_vec(), mass)
    }

    pub fn uniform(theta_labels: &[String]) -> Self {
        Prior::uniform_on(theta_labels, &Subset::full(theta_labels.len()))
            .expect("nonempty parameter set")
    }

    pub fn point_mass(theta_labels: &[String], theta: usize) -> Self {
        Prior::uniform_on(theta_labels, &Subset::singleton(theta_labels.len(), theta))
            .expect("valid index")
    }

    /// Reads a prior document against an experiment's parameter labels.
    /// Parameters absent from the document get mass 0.
    pub fn from_doc(doc: &PriorDoc, theta_labels: &[String]) -> Result<Self> {
        for name in doc.prior.keys() {
            if !theta_labels.contains(name) {
                return Err(Error::parse(
                    format!("prior.{name}"),
                    "not a parameter of the experiment",
                ));
            }
        }
        let mut mass = Vec::with_capacity(theta_labels.len());
        for name in theta_labels {
            mass.push(match doc.prior.get(name) {
                Some(text) => {
                    rational::parse(text).map_err(|m| Error::parse(format!("prior.{name}"), m))?
                }
                None => Rational::zero(),
            });
        }
        Prior::new(theta_labels.to_vec(), mass)
    }

    pub fn from_json(text: &str, theta_labels: &[String]) -> Result<Self> {
        let doc: PriorDoc = serde_json::from_str(text).map_err(json_error)?;
        Prior::from_doc(&doc, theta_labels)
    }

    pub fn to_doc(&self) -> PriorDoc {
        PriorDoc {
            prior: self
                .theta_labels
                .iter()
                .zip(&self.mass)
                .map(|(l, m)| (l.clone(), rational::format(m)))
                .collect(),
        }
    }

    pub fn theta_labels(&self) -> &[String] {
        &self.theta_labels
    }

    pub fn masses(&self) -> &[Rational] {
        &self.mass
    }

    pub fn mass(&self, theta: usize) -> &Rational {
        &self.mass[theta]
    }

    /// `Q(H)`.
    pub fn mass_of(&self, h: &HypothesisSet) -> Rational {
        h.iter().map(|i| &self.mass[i]).sum()
    }

    /// The parameters with positive mass.
    pub fn support(&self) -> HypothesisSet {
        Subset::from_indices(
            self.mass.len(),
            (0..self.mass.len()).filter(|&i| !self.mass[i].is_zero()),
        )
    }

    pub(crate) fn check_against(&self, exp: &Experiment) -> Result<()> {
        if self.theta_labels != exp.theta_labels {
            return Err(Error::MismatchedTheta);
        }
        Ok(())
    }
}

/// `Q(H | E) = Σ_{θ∈H} P_θ(E)Q(θ) / Σ_{θ∈Θ} P_θ(E)Q(θ)`, `None` when the
/// denominator vanishes.
pub fn posterior(
    exp: &Experiment,
    prior: &Prior,
    h: &HypothesisSet,
    e: &EventSet,
) -> Result<Option<Rational>> {
    restricted_posterior(exp, prior, h, &exp.all_hypotheses(), e)
}

/// Posterior of `h` given `(within × Ω) ∩ (Θ × E)`; the denominator ranges
/// over `within` only. With `within = H1 ∪ H2` this is the posterior used by
/// the support and favoring definitions.
pub fn restricted_posterior(
    exp: &Experiment,
    prior: &Prior,
    h: &HypothesisSet,
    within: &HypothesisSet,
    e: &EventSet,
) -> Result<Option<Rational>> {
    prior.check_against(exp)?;
    exp.check_hypothesis(h)?;
    exp.check_hypothesis(within)?;
    exp.check_event(e)?;
    let joint = |t: usize| prior.mass(t) * exp.mass(t, e);
    let denom: Rational = within.iter().map(joint).sum();
    if denom.is_zero() {
        return Ok(None);
    }
    let numer: Rational = h.intersection(within).iter().map(joint).sum();
    Ok(Some(numer / denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    pub(crate) fn example1_e() -> Experiment {
        Experiment::from_table(
            &["t1", "t2"],
            &["A", "B", "C", "rest"],
            &[
                &[".423", ".564", ".011", ".002"],
                &[".039", ".052", ".909", "0"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn event_likelihood_sums_columns() {
        let e = example1_e();
        let a = e.event(&["A"]).unwrap();
        assert_eq!(event_likelihood(&e, 0, &a).unwrap(), ratio(423, 1000));
        assert_eq!(
            event_likelihood(&e, 1, &e.sure_event()).unwrap(),
            ratio(1, 1)
        );
        assert_eq!(
            event_likelihood(&e, 1, &Subset::empty(4)).unwrap(),
            ratio(0, 1)
        );
        assert!(matches!(
            event_likelihood(&e, 2, &a),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn posterior_matches_hand_bayes() {
        let e = example1_e();
        let q = Prior::uniform(e.theta_labels());
        let h = e.hypothesis(&["t1"]).unwrap();
        let a = e.event(&["A"]).unwrap();
        // (423/2000) / (423/2000 + 39/2000)
        assert_eq!(posterior(&e, &q, &h, &a).unwrap(), Some(ratio(423, 462)));
        assert_eq!(ratio(423, 462), ratio(141, 154));
        let point = Prior::point_mass(e.theta_labels(), 0);
        assert_eq!(posterior(&e, &point, &h, &a).unwrap(), Some(ratio(1, 1)));
    }

    #[test]
    fn posterior_undefined_on_null_evidence() {
        let e = Experiment::from_table(&["t1", "t2"], &["x", "y"], &[&["1", "0"], &["1/2", "1/2"]])
            .unwrap();
        let q = Prior::point_mass(e.theta_labels(), 0);
        let y = e.event(&["y"]).unwrap();
        assert_eq!(posterior(&e, &q, &e.all_hypotheses(), &y).unwrap(), None);
    }

    #[test]
    fn invalid_inputs_are_rejected_with_location() {
        let bad_row = Experiment::from_table(&["t"], &["x", "y"], &[&["1/2", "1/3"]]);
        assert!(matches!(bad_row, Err(Error::InvalidExperiment(_))));
        let dup = Experiment::from_table(&["t", "t"], &["x"], &[&["1"], &["1"]]);
        assert!(matches!(dup, Err(Error::InvalidExperiment(_))));
        let garbled = Experiment::from_table(&["t"], &["x"], &[&["one"]]);
        match garbled {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "likelihoods[0][0]"),
            other => panic!("{other:?}"),
        }
        let labels = vec!["a".to_string(), "b".to_string()];
        let doc = PriorDoc {
            prior: [("a".to_string(), "1/2".to_string())].into(),
        };
        assert!(matches!(
            Prior::from_doc(&doc, &labels),
            Err(Error::InvalidPrior(_))
        ));
    }

    #[test]
    fn documents_round_trip() {
        let e = example1_e();
        let json = serde_json::to_string(&e.to_doc()).unwrap();
        assert_eq!(Experiment::from_json(&json).unwrap(), e);
        let q = Prior::uniform(e.theta_labels());
        let json = serde_json::to_string(&q.to_doc()).unwrap();
        assert_eq!(Prior::from_json(&json, e.theta_labels()).unwrap(), q);
    }
}
