//! Qualitative posterior and favoring equivalence.

use super::report::{AtomDoc, SampleCheckReport, SampleFailure};
use crate::bits::{EventSet, HypothesisSet, Subset};
use crate::error::{Error, Result};
use crate::experiments::{json_error, sample_priors, Experiment, Prior, PriorDoc};
use crate::qualitative::{
    induce_likelihood, induce_ordering, Atom, DeltaEvent, DeltaSpace, QualLikelihood, QualOrdering,
};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Largest |Θ| for which every hypothesis and every disjoint pair is
/// enumerated; larger Θ samples `SAMPLED_PAIRS` pairs per prior.
pub const EXHAUSTIVE_THETA: usize = 4;
pub const SAMPLED_PAIRS: usize = 81;
const MAX_HYPOTHESIS_THETA: usize = 16;

/// The events `C_θ`, one per parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessFamily {
    witnesses: Vec<EventSet>,
}

/// `{"witnesses": {"θ": ["ω", ...]}}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessDoc {
    pub witnesses: BTreeMap<String, Vec<String>>,
}

impl WitnessFamily {
    pub fn new(exp: &Experiment, witnesses: Vec<EventSet>) -> Result<Self> {
        if witnesses.len() != exp.n_theta() {
            let missing = exp.theta_labels()[witnesses.len().min(exp.n_theta() - 1)].clone();
            return Err(Error::MissingWitness(missing));
        }
        witnesses.iter().try_for_each(|w| exp.check_event(w))?;
        Ok(WitnessFamily { witnesses })
    }

    /// `C_θ = Ω` for every θ.
    pub fn sure(exp: &Experiment) -> Self {
        WitnessFamily {
            witnesses: vec![exp.sure_event(); exp.n_theta()],
        }
    }

    pub fn from_names(exp: &Experiment, entries: &[(&str, &[&str])]) -> Result<Self> {
        let doc = WitnessDoc {
            witnesses: entries
                .iter()
                .map(|(t, ws)| (t.to_string(), ws.iter().map(|w| w.to_string()).collect()))
                .collect(),
        };
        Self::from_doc(exp, &doc)
    }

    pub fn from_doc(exp: &Experiment, doc: &WitnessDoc) -> Result<Self> {
        for name in doc.witnesses.keys() {
            exp.theta_index(name)
                .map_err(|_| Error::parse(format!("witnesses.{name}"), "unknown parameter"))?;
        }
        let witnesses = exp
            .theta_labels()
            .iter()
            .map(|t| {
                let names = doc
                    .witnesses
                    .get(t)
                    .ok_or_else(|| Error::MissingWitness(t.clone()))?;
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                exp.event(&refs)
                    .map_err(|e| Error::parse(format!("witnesses.{t}"), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WitnessFamily { witnesses })
    }

    pub fn from_json(exp: &Experiment, text: &str) -> Result<Self> {
        let doc: WitnessDoc = serde_json::from_str(text).map_err(json_error)?;
        Self::from_doc(exp, &doc)
    }

    pub fn to_doc(&self, exp: &Experiment) -> WitnessDoc {
        WitnessDoc {
            witnesses: exp
                .theta_labels()
                .iter()
                .zip(&self.witnesses)
                .map(|(t, w)| {
                    (
                        t.clone(),
                        w.iter().map(|i| exp.omega_labels()[i].clone()).collect(),
                    )
                })
                .collect(),
        }
    }

    pub fn get(&self, theta: usize) -> &EventSet {
        &self.witnesses[theta]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: u8,
    pub holds: bool,
    /// Parameters (or parameter pairs) at which the condition fails.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub holds: bool,
    pub conditions: Vec<ConditionResult>,
}

impl WitnessReport {
    pub fn first_failure(&self) -> Option<u8> {
        self.conditions
            .iter()
            .find(|c| !c.holds)
            .map(|c| c.condition)
    }
}

/// The four witness conditions under ⊑:
/// (1) `E|θ ≡ F∩C_θ|θ`, (2) `F ⫫_θ C_θ`, (3) `C_θ|θ ≡ C_η|η`,
/// (4) `∅|θ ⊏ C_θ|θ`.
pub fn theorem2_witness_check(
    ql: &QualLikelihood,
    e: &EventSet,
    f: &EventSet,
    w: &WitnessFamily,
) -> Result<WitnessReport> {
    let exp = ql.experiment();
    exp.check_event(e)?;
    exp.check_event(f)?;
    if w.witnesses.len() != exp.n_theta() {
        return Err(Error::MissingWitness(
            exp.theta_labels()[w.witnesses.len().min(exp.n_theta() - 1)].clone(),
        ));
    }
    w.witnesses.iter().try_for_each(|c| exp.check_event(c))?;
    let omega = exp.sure_event();
    let labels = exp.theta_labels();
    let mut fails: [Vec<String>; 4] = Default::default();
    for t in 0..exp.n_theta() {
        let c = w.get(t);
        let fc = f.intersection(c);
        if ql.compare(t, e, &omega, t, &fc, &omega)? != Some(std::cmp::Ordering::Equal) {
            fails[0].push(labels[t].clone());
        }
        // F ⫫_θ C_θ: F|C_θ∩θ ≡ F|θ, or C_θ∩θ null.
        let independent = ql.is_null(t, c)?
            || ql.compare(t, f, c, t, f, &omega)? == Some(std::cmp::Ordering::Equal);
        if !independent {
            fails[1].push(labels[t].clone());
        }
        for u in t + 1..exp.n_theta() {
            if ql.compare(t, c, &omega, u, w.get(u), &omega)? != Some(std::cmp::Ordering::Equal) {
                fails[2].push(format!("{}/{}", labels[t], labels[u]));
            }
        }
        if ql.is_null(t, c)? {
            fails[3].push(labels[t].clone());
        }
    }
    let conditions: Vec<ConditionResult> = fails
        .into_iter()
        .enumerate()
        .map(|(i, failures)| ConditionResult {
            condition: i as u8 + 1,
            holds: failures.is_empty(),
            failures,
        })
        .collect();
    Ok(WitnessReport {
        holds: conditions.iter().all(|c| c.holds),
        conditions,
    })
}

/// Corollary 1's hypothesis: `E|θ ≡ F|θ` for every θ.
pub fn corollary1_check(ql: &QualLikelihood, e: &EventSet, f: &EventSet) -> Result<bool> {
    let exp = ql.experiment();
    exp.check_event(e)?;
    exp.check_event(f)?;
    for t in 0..exp.n_theta() {
        if ql.compare_given(e, t, f, t)? != std::cmp::Ordering::Equal {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Setting<'a> {
    exp: &'a Experiment,
    space: DeltaSpace,
    e: DeltaEvent,
    f: DeltaEvent,
    seed: u64,
}

impl<'a> Setting<'a> {
    fn new(exp: &'a Experiment, e: &EventSet, f: &EventSet, seed: u64) -> Result<Self> {
        exp.check_event(e)?;
        exp.check_event(f)?;
        if exp.n_theta() > MAX_HYPOTHESIS_THETA {
            return Err(Error::CapExceeded {
                what: "|Θ| for hypothesis enumeration",
                size: exp.n_theta(),
                cap: MAX_HYPOTHESIS_THETA,
            });
        }
        let space = DeltaSpace::of(exp)?;
        Ok(Setting {
            exp,
            e: space.event_cylinder(e),
            f: space.event_cylinder(f),
            space,
            seed,
        })
    }

    fn cyl(&self, h: &HypothesisSet) -> DeltaEvent {
        self.space.hypothesis_cylinder(h)
    }

    fn atoms(&self, pairs: &[Atom]) -> Vec<AtomDoc> {
        pairs
            .iter()
            .map(|&a| AtomDoc::new(&self.space, a))
            .collect()
    }

    /// Definition-9 conditions at one ordering: `None` when they hold.
    fn posterior_failure(&self, ord: &QualOrdering) -> Option<(Vec<Atom>, String)> {
        let (en, fn_) = (ord.is_null(self.e), ord.is_null(self.f));
        if en != fn_ {
            let full = self.space.full();
            return Some((
                vec![Atom::new(self.e, full), Atom::new(self.f, full)],
                "exactly one of E, F is null".into(),
            ));
        }
        if en {
            return None;
        }
        let k = self.exp.n_theta();
        for m in 0..1u64 << k {
            let h = self.cyl(&Subset::from_mask(k, m));
            let (a, b) = (Atom::new(h, self.e), Atom::new(h, self.f));
            if ord.compare(a, b) != Some(std::cmp::Ordering::Equal) {
                return Some((vec![a, b], "H|E differs from H|F".into()));
            }
        }
        None
    }

    /// Disjoint pairs `(H1, H2)`: all `3^|Θ|` when |Θ| ≤ 4, otherwise a
    /// seeded sample.
    fn pairs(&self, index: usize) -> Vec<(HypothesisSet, HypothesisSet)> {
        let k = self.exp.n_theta();
        let assign = |digits: &mut dyn FnMut(usize) -> usize| {
            let (mut h1, mut h2) = (Subset::empty(k), Subset::empty(k));
            for t in 0..k {
                match digits(t) {
                    1 => h1.insert(t),
                    2 => h2.insert(t),
                    _ => {}
                }
            }
            (h1, h2)
        };
        if k <= EXHAUSTIVE_THETA {
            (0..3usize.pow(k as u32))
                .map(|code| assign(&mut |t| code / 3usize.pow(t as u32) % 3))
                .collect()
        } else {
            let mut rng = crate::experiments::seeded_rng(self.seed ^ 0x5eed);
            rng.set_stream(index as u64);
            (0..SAMPLED_PAIRS)
                .map(|_| assign(&mut |_| rng.gen_range(0..3)))
                .collect()
        }
    }

    /// Definition-8 conditions at one ordering.
    fn favoring_failure(&self, ord: &QualOrdering, index: usize) -> Option<(Vec<Atom>, String)> {
        for (h1, h2) in self.pairs(index) {
            let hh = self.cyl(&h1.union(&h2));
            let (eh, fh) = (self.e.inter(hh), self.f.inter(hh));
            let (en, fn_) = (ord.is_null(eh), ord.is_null(fh));
            let full = self.space.full();
            if en != fn_ {
                return Some((
                    vec![Atom::new(eh, full), Atom::new(fh, full)],
                    "exactly one of E∩(H1∪H2), F∩(H1∪H2) is null".into(),
                ));
            }
            if !en {
                let h1c = self.cyl(&h1);
                let (a, b) = (Atom::new(h1c, eh), Atom::new(h1c, fh));
                if ord.compare(a, b) != Some(std::cmp::Ordering::Equal) {
                    return Some((vec![a, b], "H1|E∩(H1∪H2) differs from H1|F∩(H1∪H2)".into()));
                }
            }
        }
        None
    }
}

fn collect<T>(items: Vec<Result<T>>) -> Result<Vec<T>> {
    items.into_iter().collect()
}

/// Checks posterior equivalence (null agreement, `H|E ∼ H|F` for every H)
/// and favoring equivalence (every disjoint pair) at sampled priors.
pub fn posterior_equivalence_sample_check(
    exp: &Experiment,
    e: &EventSet,
    f: &EventSet,
    n_priors: usize,
    seed: u64,
) -> Result<SampleCheckReport> {
    let s = Setting::new(exp, e, f, seed)?;
    let priors = sample_priors(exp.theta_labels(), n_priors, seed);
    let found = collect(
        priors
            .par_iter()
            .enumerate()
            .map(|(i, prior)| {
                let ord = induce_ordering(exp, prior)?;
                let fail = s
                    .posterior_failure(&ord)
                    .or_else(|| s.favoring_failure(&ord, i));
                Ok(fail
                    .map(|(atoms, detail)| SampleFailure::new(i, prior, s.atoms(&atoms), detail)))
            })
            .collect(),
    )?;
    Ok(SampleCheckReport::new(
        "posterior-equivalence",
        seed,
        priors.len(),
        found.into_iter().flatten().collect(),
    ))
}

/// Theorem 2: the witness conditions, then the sampled equivalence check.
/// Errors with `Precondition` when a witness condition fails.
pub fn qlp_equivalence_sample_check(
    exp: &Experiment,
    e: &EventSet,
    f: &EventSet,
    w: &WitnessFamily,
    n_priors: usize,
    seed: u64,
) -> Result<SampleCheckReport> {
    let ql = induce_likelihood(exp);
    let witness = theorem2_witness_check(&ql, e, f, w)?;
    if let Some(c) = witness.first_failure() {
        return Err(Error::Precondition(format!("witness condition {c} fails")));
    }
    let mut r = posterior_equivalence_sample_check(exp, e, f, n_priors, seed)?;
    r.check = "qlp-equivalence".into();
    Ok(r)
}

/// Per sampled prior, posterior equivalence and favoring equivalence must
/// agree.
pub fn claim5_equiv_check(
    exp: &Experiment,
    e: &EventSet,
    f: &EventSet,
    n_priors: usize,
    seed: u64,
) -> Result<SampleCheckReport> {
    let s = Setting::new(exp, e, f, seed)?;
    let priors = sample_priors(exp.theta_labels(), n_priors, seed);
    let rows = collect(
        priors
            .par_iter()
            .enumerate()
            .map(|(i, prior)| {
                let ord = induce_ordering(exp, prior)?;
                Ok((s.posterior_failure(&ord), s.favoring_failure(&ord, i)))
            })
            .collect(),
    )?;
    let mut failures = Vec::new();
    for (i, (post, fav)) in rows.iter().enumerate() {
        if post.is_some() != fav.is_some() {
            let (atoms, detail) = post
                .clone()
                .or_else(|| fav.clone())
                .expect("one side failed");
            let which = if post.is_some() {
                "posterior"
            } else {
                "favoring"
            };
            failures.push(SampleFailure::new(
                i,
                &priors[i],
                s.atoms(&atoms),
                format!("only {which} equivalence fails: {detail}"),
            ));
        }
    }
    let first = rows.iter().position(|(p, q)| p.is_some() || q.is_some());
    let mut r = SampleCheckReport::new("claim5-equivalence", seed, priors.len(), failures);
    r.posterior_equivalent = Some(rows.iter().all(|(p, _)| p.is_none()));
    r.favoring_equivalent = Some(rows.iter().all(|(_, q)| q.is_none()));
    r.separating_prior = first.map(|i| priors[i].to_doc());
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assumption1Report {
    pub prior: PriorDoc,
    /// (A) `H` is almost sure.
    pub almost_sure: bool,
    /// (B) every θ ∈ H is non-null.
    pub members_non_null: bool,
    pub holds: bool,
}

/// Builds the uniform prior on `H` and verifies both conditions on the
/// ordering it induces.
pub fn assumption1_probe(
    exp: &Experiment,
    h: &HypothesisSet,
) -> Result<(Prior, Assumption1Report)> {
    exp.check_hypothesis(h)?;
    if h.is_empty() {
        return Err(Error::EmptyHypothesis);
    }
    let prior = Prior::uniform_on(exp.theta_labels(), h)?;
    let ord = induce_ordering(exp, &prior)?;
    let space = ord.space();
    let almost_sure = ord.almost_sure(space.hypothesis_cylinder(h));
    let members_non_null = h
        .iter()
        .all(|t| !ord.is_null(space.hypothesis_cylinder(&Subset::singleton(exp.n_theta(), t))));
    let report = Assumption1Report {
        prior: prior.to_doc(),
        almost_sure,
        members_non_null,
        holds: almost_sure && members_non_null,
    };
    Ok((prior, report))
}
