use crate::error::{Error, Result};
use crate::experiments::{json_error, Experiment};
use crate::rational::{self, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Terminal sequences enumerated before giving up.
pub const OUTCOME_CAP: usize = 1 << 16;

/// I.i.d. binary trials; `p[θ]` is the chance that a trial records a 1
/// (a death, in the clinical reading).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliDesign {
    theta_labels: Vec<String>,
    p: Vec<Rational>,
}

impl BernoulliDesign {
    pub fn new(theta_labels: Vec<String>, p: Vec<Rational>) -> Result<Self> {
        if theta_labels.is_empty() || theta_labels.len() != p.len() {
            return Err(Error::InvalidExperiment(format!(
                "{} parameter labels for {} trial probabilities",
                theta_labels.len(),
                p.len()
            )));
        }
        if let Some(i) = p.iter().position(|v| !rational::is_probability(v)) {
            return Err(Error::InvalidExperiment(format!(
                "trial probability for {} is {}, outside [0,1]",
                theta_labels[i],
                rational::format(&p[i])
            )));
        }
        let distinct: BTreeSet<&String> = theta_labels.iter().collect();
        if distinct.len() != theta_labels.len() {
            return Err(Error::InvalidExperiment("duplicate parameter label".into()));
        }
        Ok(BernoulliDesign { theta_labels, p })
    }

    pub fn theta_labels(&self) -> &[String] {
        &self.theta_labels
    }

    pub fn p(&self, theta: usize) -> &Rational {
        &self.p[theta]
    }

    fn check_theta(&self, theta: usize) -> Result<()> {
        if theta >= self.p.len() {
            return Err(Error::IndexOutOfRange {
                what: "theta",
                index: theta,
                size: self.p.len(),
            });
        }
        Ok(())
    }

    /// `Π p^{x_i}(1-p)^{1-x_i}`, ignoring the stopping rule.
    pub fn sequence_probability(&self, theta: usize, x: &[bool]) -> Result<Rational> {
        self.check_theta(theta)?;
        let ones = x.iter().filter(|&&b| b).count();
        let p = &self.p[theta];
        let q = Rational::one() - p;
        Ok(num_traits::pow(p.clone(), ones) * num_traits::pow(q, x.len() - ones))
    }
}

/// The deterministic, parameter-free part of a stopping rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleKind {
    /// Stop after `n` trials.
    FixedN(usize),
    /// Stop once `r` ones have been observed.
    InverseSampling(usize),
    /// Stop exactly at the listed histories.
    Table(BTreeSet<String>),
}

/// A 0/1 stopping rule with a horizon that forces a stop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoppingRule {
    kind: RuleKind,
    horizon: usize,
}

impl StoppingRule {
    pub fn new(kind: RuleKind, horizon: usize) -> Result<Self> {
        if let RuleKind::Table(stops) = &kind {
            for h in stops {
                let x = parse_sequence(h)?;
                if x.len() > horizon {
                    return Err(Error::parse(
                        format!("table entry {h:?}"),
                        format!("longer than the horizon {horizon}"),
                    ));
                }
            }
        }
        Ok(StoppingRule { kind, horizon })
    }

    pub fn fixed_n(n: usize) -> Self {
        StoppingRule {
            kind: RuleKind::FixedN(n),
            horizon: n,
        }
    }

    pub fn inverse_sampling(r: usize, horizon: usize) -> Self {
        StoppingRule {
            kind: RuleKind::InverseSampling(r),
            horizon,
        }
    }

    pub fn kind(&self) -> &RuleKind {
        &self.kind
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Whether the rule stops after observing `history`.
    pub fn stops(&self, history: &[bool]) -> bool {
        if history.len() >= self.horizon {
            return true;
        }
        match &self.kind {
            RuleKind::FixedN(n) => history.len() >= *n,
            RuleKind::InverseSampling(r) => history.iter().filter(|&&b| b).count() >= *r,
            RuleKind::Table(stops) => stops.contains(&sequence_label(history)),
        }
    }

    /// The rule stops at `x` and at none of its proper prefixes.
    pub fn is_terminal(&self, x: &[bool]) -> bool {
        (0..x.len()).all(|n| !self.stops(&x[..n])) && self.stops(x)
    }

    /// Short human description, also used to name lumped outcomes.
    pub fn describe(&self) -> String {
        match &self.kind {
            RuleKind::FixedN(n) => format!("fixed-n {n}"),
            RuleKind::InverseSampling(r) => format!("inverse-sampling {r}/{}", self.horizon),
            RuleKind::Table(stops) => format!("table {}/{}", stops.len(), self.horizon),
        }
    }
}

/// `"0"`/`"1"` rendering of a history, first trial first.
pub fn sequence_label(x: &[bool]) -> String {
    x.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn parse_sequence(text: &str) -> Result<Vec<bool>> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::parse(
                format!("sequence {text:?}"),
                format!("unexpected character {other:?}"),
            )),
        })
        .collect()
}

/// `h(x;θ)·s(n|x)`: the sequence probability when the rule stops exactly at
/// `x`, an error otherwise.
pub fn factored_likelihood(
    design: &BernoulliDesign,
    rule: &StoppingRule,
    theta: usize,
    x: &[bool],
) -> Result<Rational> {
    design.check_theta(theta)?;
    if !rule.is_terminal(x) {
        return Err(Error::InconsistentSequence(sequence_label(x)));
    }
    design.sequence_probability(theta, x)
}

/// Every terminal sequence of `rule`, in lexicographic order.
pub fn terminal_sequences(rule: &StoppingRule, cap: usize) -> Result<Vec<Vec<bool>>> {
    let mut out = Vec::new();
    // Depth-first with 0 before 1; terminal sequences are prefix-free, so
    // this visits them in lexicographic order.
    let mut stack = vec![Vec::new()];
    while let Some(x) = stack.pop() {
        if rule.stops(&x) {
            if out.len() == cap {
                return Err(Error::CapExceeded {
                    what: "terminal sequences",
                    size: cap + 1,
                    cap,
                });
            }
            out.push(x);
            continue;
        }
        let mut one = x.clone();
        one.push(true);
        let mut zero = x;
        zero.push(false);
        stack.push(one);
        stack.push(zero);
    }
    Ok(out)
}

pub fn build_truncated_experiment(
    design: &BernoulliDesign,
    rule: &StoppingRule,
) -> Result<Experiment> {
    build_truncated_experiment_with_cap(design, rule, OUTCOME_CAP)
}

/// The experiment whose outcomes are the terminal sequences of `rule`.
pub fn build_truncated_experiment_with_cap(
    design: &BernoulliDesign,
    rule: &StoppingRule,
    cap: usize,
) -> Result<Experiment> {
    let seqs = terminal_sequences(rule, cap)?;
    let rows = (0..design.p.len())
        .map(|t| {
            seqs.iter()
                .map(|x| design.sequence_probability(t, x))
                .collect()
        })
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    let labels = seqs.iter().map(|x| sequence_label(x)).collect();
    Experiment::new(design.theta_labels.clone(), labels, rows)
}

/// Label of the lumped remainder outcome for `rule`.
pub fn other_label(rule: &StoppingRule) -> String {
    format!("other({})", rule.describe())
}

/// Keeps the terminal sequences `keep` as outcomes and merges everything
/// else into one remainder outcome, so that long horizons stay tractable.
pub fn build_lumped_experiment(
    design: &BernoulliDesign,
    rule: &StoppingRule,
    keep: &[String],
) -> Result<Experiment> {
    let seqs = keep
        .iter()
        .map(|s| parse_sequence(s))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(design.p.len());
    for t in 0..design.p.len() {
        let mut row = seqs
            .iter()
            .map(|x| factored_likelihood(design, rule, t, x))
            .collect::<Result<Vec<Rational>>>()?;
        let kept: Rational = row.iter().sum();
        let rest = Rational::one() - kept;
        if rest < Rational::zero() {
            return Err(Error::InvalidExperiment("kept sequences repeat".into()));
        }
        row.push(rest);
        rows.push(row);
    }
    let mut labels = keep.to_vec();
    labels.push(other_label(rule));
    Experiment::new(design.theta_labels.clone(), labels, rows)
}

/// Sequences terminal under both rules, enumerating whichever tree fits the
/// cap.
pub fn shared_terminals(a: &StoppingRule, b: &StoppingRule, cap: usize) -> Result<Vec<String>> {
    let (seqs, other) = match terminal_sequences(a, cap) {
        Ok(s) => (s, b),
        Err(Error::CapExceeded { .. }) => (terminal_sequences(b, cap)?, a),
        Err(e) => return Err(e),
    };
    Ok(seqs
        .iter()
        .filter(|x| other.is_terminal(x))
        .map(|x| sequence_label(x))
        .collect())
}

/// On-disk form of a stopping rule.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RuleDoc {
    FixedN { n: usize },
    InverseSampling { r: usize },
    Table { stop: Vec<String> },
}

/// On-disk design: trial probabilities per parameter, one or more rules and
/// the shared horizon.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DesignDoc {
    pub p: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<RuleDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rules: Vec<RuleDoc>,
    pub max_n: usize,
}

/// A parsed design file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    pub design: BernoulliDesign,
    pub rules: Vec<StoppingRule>,
}

impl Design {
    pub fn from_doc(doc: &DesignDoc) -> Result<Self> {
        let mut labels = Vec::new();
        let mut p = Vec::new();
        for (name, value) in &doc.p {
            labels.push(name.clone());
            p.push(rational::parse(value).map_err(|m| Error::parse(format!("p[{name:?}]"), m))?);
        }
        let design = BernoulliDesign::new(labels, p)?;
        let rules = doc
            .rule
            .iter()
            .chain(&doc.rules)
            .map(|r| {
                let kind = match r {
                    RuleDoc::FixedN { n } => RuleKind::FixedN(*n),
                    RuleDoc::InverseSampling { r } => RuleKind::InverseSampling(*r),
                    RuleDoc::Table { stop } => RuleKind::Table(stop.iter().cloned().collect()),
                };
                StoppingRule::new(kind, doc.max_n)
            })
            .collect::<Result<Vec<_>>>()?;
        if rules.is_empty() {
            return Err(Error::parse("design", "no stopping rule given"));
        }
        Ok(Design { design, rules })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DesignDoc = serde_json::from_str(text).map_err(json_error)?;
        Design::from_doc(&doc)
    }
}
