use super::measure::Measure;
use super::space::{Atom, DeltaEvent, DeltaSpace};
use crate::error::{Error, Result};
use crate::experiments::{Experiment, ExperimentDoc, Prior, PriorDoc};
use crate::rational::{self, Rational};
use num_traits::Zero;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

/// A comparative ordering on atoms `A|B` realized by the joint measure
/// `Q(θ, ω) = prior(θ)·P_θ(ω)`: `A|B` has value `Q(A∩B)/Q(B)` and the null
/// sets are exactly the `Q`-null events.
pub struct QualOrdering {
    space: DeltaSpace,
    experiment: Experiment,
    prior: Prior,
    measure: Measure,
    /// Atom values replaced after construction. Only used to build
    /// deliberately broken orderings for testing the checkers.
    overrides: BTreeMap<Atom, Rational>,
    memo: Mutex<HashMap<Atom, Option<Rational>>>,
}

/// Where an ordering came from. Orderings are rebuilt from this, never
/// serialized as value tables.
#[derive(Clone, Debug, Serialize)]
pub struct ProvenanceDoc {
    pub experiment: ExperimentDoc,
    pub prior: PriorDoc,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub overrides: Vec<OverrideDoc>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OverrideDoc {
    pub left: u64,
    pub cond: u64,
    pub value: String,
}

pub fn induce_ordering(exp: &Experiment, prior: &Prior) -> Result<QualOrdering> {
    if prior.theta_labels() != exp.theta_labels() {
        return Err(Error::MismatchedTheta);
    }
    let space = DeltaSpace::of(exp)?;
    let mut points = Vec::with_capacity(space.size());
    for t in 0..exp.n_theta() {
        for w in 0..exp.n_omega() {
            points.push(prior.mass(t) * exp.likelihood(t, w));
        }
    }
    Ok(QualOrdering {
        space,
        experiment: exp.clone(),
        prior: prior.clone(),
        measure: Measure::from_points(&points),
        overrides: BTreeMap::new(),
        memo: Mutex::new(HashMap::new()),
    })
}

impl Clone for QualOrdering {
    fn clone(&self) -> Self {
        QualOrdering {
            space: self.space.clone(),
            experiment: self.experiment.clone(),
            prior: self.prior.clone(),
            measure: self.measure.clone(),
            overrides: self.overrides.clone(),
            memo: Mutex::new(HashMap::new()),
        }
    }
}

impl std::fmt::Debug for QualOrdering {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QualOrdering")
            .field("space", &self.space)
            .field("prior", &self.prior)
            .field("overrides", &self.overrides.len())
            .finish()
    }
}

impl QualOrdering {
    pub fn space(&self) -> &DeltaSpace {
        &self.space
    }

    pub fn experiment(&self) -> &Experiment {
        &self.experiment
    }

    pub fn prior(&self) -> &Prior {
        &self.prior
    }

    pub fn provenance(&self) -> ProvenanceDoc {
        ProvenanceDoc {
            experiment: self.experiment.to_doc(),
            prior: self.prior.to_doc(),
            overrides: self
                .overrides
                .iter()
                .map(|(a, v)| OverrideDoc {
                    left: a.left.0,
                    cond: a.cond.0,
                    value: rational::format(v),
                })
                .collect(),
        }
    }

    pub fn is_corrupted(&self) -> bool {
        !self.overrides.is_empty()
    }

    pub fn is_null(&self, a: DeltaEvent) -> bool {
        self.measure.is_zero(a.0)
    }

    pub fn almost_sure(&self, a: DeltaEvent) -> bool {
        self.is_null(self.space.complement(a))
    }

    /// `Q(A∩B)/Q(B)`, or `None` when `B` is null.
    pub fn value(&self, atom: Atom) -> Option<Rational> {
        if let Some(v) = self.overrides.get(&atom) {
            return (!self.is_null(atom.cond)).then(|| v.clone());
        }
        let mut memo = self.memo.lock().expect("memo lock");
        memo.entry(atom)
            .or_insert_with(|| {
                (!self.is_null(atom.cond))
                    .then(|| self.measure.ratio(atom.left.0 & atom.cond.0, atom.cond.0))
            })
            .clone()
    }

    /// `None` when either conditioning event is null.
    pub fn compare(&self, a: Atom, b: Atom) -> Option<Ordering> {
        if self.is_null(a.cond) || self.is_null(b.cond) {
            return None;
        }
        if !self.overrides.is_empty()
            && (self.overrides.contains_key(&a) || self.overrides.contains_key(&b))
        {
            return Some(self.value(a)?.cmp(&self.value(b)?));
        }
        Some(
            self.measure
                .cmp_ratio(a.left.0 & a.cond.0, a.cond.0, b.left.0 & b.cond.0, b.cond.0),
        )
    }

    /// `A|B` against `C|D` on raw events.
    pub fn cmp(
        &self,
        a: DeltaEvent,
        b: DeltaEvent,
        c: DeltaEvent,
        d: DeltaEvent,
    ) -> Option<Ordering> {
        self.compare(Atom::new(a, b), Atom::new(c, d))
    }

    /// `A ⫫_C B`: `A|B∩C ∼ A|C`, or `B∩C` is null.
    pub fn cond_independent(&self, a: DeltaEvent, b: DeltaEvent, c: DeltaEvent) -> Result<bool> {
        if self.is_null(c) {
            return Err(Error::NullConditioning);
        }
        let bc = b.inter(c);
        Ok(self.is_null(bc) || self.cmp(a, bc, a, c) == Some(Ordering::Equal))
    }

    /// A copy whose values at atoms `a` and `b` are exchanged. Both atoms must
    /// be defined. The null sets are unchanged.
    pub fn with_swapped_values(&self, a: Atom, b: Atom) -> Result<QualOrdering> {
        let (va, vb) = match (self.value(a), self.value(b)) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::NullConditioning),
        };
        let mut out = self.clone();
        out.overrides.insert(a, vb);
        out.overrides.insert(b, va);
        Ok(out)
    }
}

/// Free-function form of [`QualOrdering::compare`].
pub fn compare(ord: &QualOrdering, a: Atom, b: Atom) -> Option<Ordering> {
    ord.compare(a, b)
}

pub fn is_null(ord: &QualOrdering, a: DeltaEvent) -> bool {
    ord.is_null(a)
}

pub fn almost_sure(ord: &QualOrdering, a: DeltaEvent) -> bool {
    ord.almost_sure(a)
}

pub fn cond_independent(
    ord: &QualOrdering,
    a: DeltaEvent,
    b: DeltaEvent,
    c: DeltaEvent,
) -> Result<bool> {
    ord.cond_independent(a, b, c)
}

impl QualOrdering {
    /// `Q(A)` as a rational (the value of `A|Δ`).
    pub fn probability(&self, a: DeltaEvent) -> Rational {
        self.value(Atom::new(a, self.space.full()))
            .unwrap_or_else(Rational::zero)
    }
}
