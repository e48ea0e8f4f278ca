//! Qualitative favoring: the likelihood-side conditions and their sampled
//! counterpart over induced orderings.

use super::report::{AtomDoc, Conclusion, SampleCheckReport, SampleFailure};
use crate::bits::{EventSet, HypothesisSet};
use crate::error::{Error, Result};
use crate::experiments::{sample_priors, Experiment};
use crate::qualitative::{induce_ordering, Atom, DeltaSpace, QualLikelihood};
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FavoringVerdict {
    None,
    Weak,
    Strict,
}

impl FavoringVerdict {
    pub fn favors(self) -> bool {
        self != FavoringVerdict::None
    }
}

/// Why a condition of the favoring characterization failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Diagnostic {
    /// `∅|θ ⊏ E|θ` fails: `E` has likelihood zero under θ.
    NullLikelihood { theta: String },
    /// `E|θ₂ ⊑ E|θ₁` fails.
    Reversed { theta1: String, theta2: String },
    /// The pair is tied, so it is not strict.
    Tied { theta1: String, theta2: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FavoringReport {
    pub verdict: FavoringVerdict,
    pub diagnostics: Vec<Diagnostic>,
}

/// Which pairs must be strict for a strict verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StrictScope {
    #[default]
    AllPairs,
    SomePair,
}

fn label(exp: &Experiment, t: usize) -> String {
    exp.theta_labels()[t].clone()
}

/// The qualitative law of likelihood for simple hypotheses: `E` favors θ₁
/// over θ₂ strictly when `E|θ₂ ⊏ E|θ₁`, weakly when the two are tied.
pub fn qll_favors(
    ql: &QualLikelihood,
    e: &EventSet,
    theta1: usize,
    theta2: usize,
) -> Result<FavoringReport> {
    if theta1 == theta2 {
        return Err(Error::EqualIndices);
    }
    let exp = ql.experiment();
    let c = ql.compare_given(e, theta2, e, theta1)?;
    let (verdict, diagnostics) = match c {
        Ordering::Less => (FavoringVerdict::Strict, vec![]),
        Ordering::Equal => (
            FavoringVerdict::Weak,
            vec![Diagnostic::Tied {
                theta1: label(exp, theta1),
                theta2: label(exp, theta2),
            }],
        ),
        Ordering::Greater => (
            FavoringVerdict::None,
            vec![Diagnostic::Reversed {
                theta1: label(exp, theta1),
                theta2: label(exp, theta2),
            }],
        ),
    };
    Ok(FavoringReport {
        verdict,
        diagnostics,
    })
}

pub(crate) fn check_disjoint(
    exp: &Experiment,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
) -> Result<()> {
    exp.check_hypothesis(h1)?;
    exp.check_hypothesis(h2)?;
    if h1.is_empty() || h2.is_empty() {
        return Err(Error::EmptyHypothesis);
    }
    if !h1.is_disjoint(h2) {
        return Err(Error::OverlappingHypotheses);
    }
    Ok(())
}

/// Conditions (1) `∅|θ ⊏ E|θ` on `H1 ∪ H2` and (2) `E|θ₂ ⊑ E|θ₁` for all
/// pairs; strict when every pair is strict.
pub fn theorem1_conditions(
    ql: &QualLikelihood,
    e: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
) -> Result<FavoringReport> {
    theorem1_conditions_with(ql, e, h1, h2, StrictScope::AllPairs)
}

pub fn theorem1_conditions_with(
    ql: &QualLikelihood,
    e: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
    scope: StrictScope,
) -> Result<FavoringReport> {
    let exp = ql.experiment();
    check_disjoint(exp, h1, h2)?;
    exp.check_event(e)?;
    let mut diagnostics = Vec::new();
    for t in h1.union(h2).iter() {
        if ql.is_null(t, e)? {
            diagnostics.push(Diagnostic::NullLikelihood {
                theta: label(exp, t),
            });
        }
    }
    let mut ties = Vec::new();
    let mut any_strict = false;
    for t1 in h1.iter() {
        for t2 in h2.iter() {
            let (theta1, theta2) = (label(exp, t1), label(exp, t2));
            match ql.compare_given(e, t2, e, t1)? {
                Ordering::Greater => diagnostics.push(Diagnostic::Reversed { theta1, theta2 }),
                Ordering::Equal => ties.push(Diagnostic::Tied { theta1, theta2 }),
                Ordering::Less => any_strict = true,
            }
        }
    }
    if !diagnostics.is_empty() {
        return Ok(FavoringReport {
            verdict: FavoringVerdict::None,
            diagnostics,
        });
    }
    let strict = match scope {
        StrictScope::AllPairs => ties.is_empty(),
        StrictScope::SomePair => any_strict,
    };
    Ok(FavoringReport {
        verdict: if strict {
            FavoringVerdict::Strict
        } else {
            FavoringVerdict::Weak
        },
        diagnostics: ties,
    })
}

struct Cylinders {
    space: DeltaSpace,
    h1: crate::qualitative::DeltaEvent,
    h2: crate::qualitative::DeltaEvent,
    e: crate::qualitative::DeltaEvent,
}

impl Cylinders {
    fn new(exp: &Experiment, e: &EventSet, h1: &HypothesisSet, h2: &HypothesisSet) -> Result<Self> {
        let space = DeltaSpace::of(exp)?;
        Ok(Cylinders {
            h1: space.hypothesis_cylinder(h1),
            h2: space.hypothesis_cylinder(h2),
            e: space.event_cylinder(e),
            space,
        })
    }
}

/// Checks Theorem 1's verdict against induced orderings at sampled priors.
pub fn favoring_sample_check(
    exp: &Experiment,
    e: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
    n_priors: usize,
    seed: u64,
) -> Result<SampleCheckReport> {
    let ql = crate::qualitative::induce_likelihood(exp);
    let claim = theorem1_conditions(&ql, e, h1, h2)?.verdict;
    favoring_sample_check_claim(exp, e, h1, h2, claim, n_priors, seed)
}

/// Checks a claimed verdict at sampled priors.
///
/// Weak and strict claims are consistent when no prior violates the favoring
/// inequality; strictness is only demanded where both hypotheses carry mass.
/// A `None` claim is consistent once some prior violates it, and
/// `Unwitnessed` otherwise.
pub fn favoring_sample_check_claim(
    exp: &Experiment,
    e: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
    claim: FavoringVerdict,
    n_priors: usize,
    seed: u64,
) -> Result<SampleCheckReport> {
    check_disjoint(exp, h1, h2)?;
    exp.check_event(e)?;
    let cyl = Cylinders::new(exp, e, h1, h2)?;
    let priors = sample_priors(exp.theta_labels(), n_priors, seed);
    let outcomes: Vec<Result<Option<SampleFailure>>> = priors
        .par_iter()
        .enumerate()
        .map(|(i, prior)| {
            let ord = induce_ordering(exp, prior)?;
            let hh = cyl.h1.union(cyl.h2);
            if ord.is_null(hh) {
                return Ok(None);
            }
            let ehh = cyl.e.inter(hh);
            let after = Atom::new(cyl.h1, ehh);
            let before = Atom::new(cyl.h1, hh);
            let atoms = || {
                vec![
                    AtomDoc::new(&cyl.space, after),
                    AtomDoc::new(&cyl.space, before),
                ]
            };
            if ord.is_null(ehh) {
                return Ok(Some(SampleFailure::new(
                    i,
                    prior,
                    atoms(),
                    "evidence is null within H1 ∪ H2",
                )));
            }
            let c = ord.compare(after, before);
            if c == Some(Ordering::Less) {
                return Ok(Some(SampleFailure::new(
                    i,
                    prior,
                    atoms(),
                    "posterior of H1 decreased",
                )));
            }
            let both = !ord.is_null(cyl.h1) && !ord.is_null(cyl.h2);
            if claim == FavoringVerdict::Strict && both && c != Some(Ordering::Greater) {
                return Ok(Some(SampleFailure::new(
                    i,
                    prior,
                    atoms(),
                    "posterior of H1 did not increase",
                )));
            }
            Ok(None)
        })
        .collect();
    let mut violations = Vec::new();
    for o in outcomes {
        if let Some(f) = o? {
            violations.push(f);
        }
    }
    let name = "favoring";
    Ok(match claim {
        FavoringVerdict::None => {
            let weak: Vec<SampleFailure> = violations
                .into_iter()
                .filter(|f| f.detail != "posterior of H1 did not increase")
                .collect();
            let mut r = SampleCheckReport::new(name, seed, priors.len(), vec![]);
            r.conclusion = if weak.is_empty() {
                Conclusion::Unwitnessed
            } else {
                Conclusion::Consistent
            };
            r.witness = weak.into_iter().next();
            r
        }
        _ => SampleCheckReport::new(name, seed, priors.len(), violations),
    })
}

/// Sampled bridge between pairwise likelihood order and `E|H2 ⪯ E|H1`.
///
/// With `E|θ₂ ⊑ E|θ₁` for every pair, no prior with `H1, H2` non-null may
/// give `E|H2 ≻ E|H1`. Without it, some prior must; the report is
/// `Unwitnessed` if none in the sample does.
pub fn proposition3_bridge_check(
    exp: &Experiment,
    e: &EventSet,
    h1: &HypothesisSet,
    h2: &HypothesisSet,
    n_priors: usize,
    seed: u64,
) -> Result<SampleCheckReport> {
    check_disjoint(exp, h1, h2)?;
    exp.check_event(e)?;
    let ql = crate::qualitative::induce_likelihood(exp);
    let mut pairwise = true;
    for t1 in h1.iter() {
        for t2 in h2.iter() {
            pairwise &= ql.compare_given(e, t2, e, t1)? != Ordering::Greater;
        }
    }
    let cyl = Cylinders::new(exp, e, h1, h2)?;
    let priors = sample_priors(exp.theta_labels(), n_priors, seed);
    let found: Vec<Result<Option<SampleFailure>>> = priors
        .par_iter()
        .enumerate()
        .map(|(i, prior)| {
            let ord = induce_ordering(exp, prior)?;
            if ord.is_null(cyl.h1) || ord.is_null(cyl.h2) {
                return Ok(None);
            }
            let (a, b) = (Atom::new(cyl.e, cyl.h2), Atom::new(cyl.e, cyl.h1));
            Ok((ord.compare(a, b) == Some(Ordering::Greater)).then(|| {
                SampleFailure::new(
                    i,
                    prior,
                    vec![AtomDoc::new(&cyl.space, a), AtomDoc::new(&cyl.space, b)],
                    "E|H2 above E|H1",
                )
            }))
        })
        .collect();
    let mut greater = Vec::new();
    for f in found {
        greater.extend(f?);
    }
    let name = "proposition3-bridge";
    Ok(if pairwise {
        SampleCheckReport::new(name, seed, priors.len(), greater)
    } else {
        let mut r = SampleCheckReport::new(name, seed, priors.len(), vec![]);
        r.conclusion = if greater.is_empty() {
            Conclusion::Unwitnessed
        } else {
            Conclusion::Consistent
        };
        r.witness = greater.into_iter().next();
        r
    })
}
