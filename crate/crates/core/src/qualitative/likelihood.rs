use super::measure::Measure;
use super::space::{Atom, DeltaSpace};
use crate::bits::EventSet;
use crate::error::{Error, Result};
use crate::experiments::Experiment;
use crate::rational::Rational;
use num_traits::Zero;
use std::cmp::Ordering;

/// The restricted relation ⊑ on atoms conditioned on a single parameter:
/// `A|{θ}×E` has value `P_θ(A_θ ∩ E)/P_θ(E)`, where `A_θ` is the section of
/// `A` at θ. The null sets are the `{θ}×E` with `P_θ(E) = 0`; in particular
/// `{θ}×Ω` is never null.
///
/// Cross-parameter comparisons (`A|θ` against `B|η`) compare these values
/// directly. Comparisons with conditioning `{θ}×E`, `E ≠ Ω`, across different
/// parameters are an extension beyond the statements they are used in.
#[derive(Clone, Debug)]
pub struct QualLikelihood {
    experiment: Experiment,
    fast: Option<(DeltaSpace, Measure)>,
}

pub fn induce_likelihood(exp: &Experiment) -> QualLikelihood {
    let fast = DeltaSpace::of(exp).ok().map(|space| {
        let points: Vec<Rational> = exp.rows().iter().flatten().cloned().collect();
        (space, Measure::from_points(&points))
    });
    QualLikelihood {
        experiment: exp.clone(),
        fast,
    }
}

impl QualLikelihood {
    pub fn experiment(&self) -> &Experiment {
        &self.experiment
    }

    fn check(&self, theta: usize, sets: &[&EventSet]) -> Result<()> {
        if theta >= self.experiment.n_theta() {
            return Err(Error::IndexOutOfRange {
                what: "theta",
                index: theta,
                size: self.experiment.n_theta(),
            });
        }
        sets.iter().try_for_each(|e| self.experiment.check_event(e))
    }

    /// Whether `{θ}×E` is null.
    pub fn is_null(&self, theta: usize, e: &EventSet) -> Result<bool> {
        self.check(theta, &[e])?;
        Ok(self.experiment.mass(theta, e).is_zero())
    }

    /// `P_θ(left ∩ cond)/P_θ(cond)`, `None` when `{θ}×cond` is null.
    pub fn value(
        &self,
        theta: usize,
        left: &EventSet,
        cond: &EventSet,
    ) -> Result<Option<Rational>> {
        self.check(theta, &[left, cond])?;
        if cond.count() == cond.len() {
            // Rows are validated to sum to exactly 1.
            return Ok(Some(self.experiment.mass(theta, left)));
        }
        let d = self.experiment.mass(theta, cond);
        if d.is_zero() {
            return Ok(None);
        }
        Ok(Some(
            self.experiment.mass(theta, &left.intersection(cond)) / d,
        ))
    }

    /// `left1|{θ}×cond1` against `left2|{η}×cond2`.
    pub fn compare(
        &self,
        theta: usize,
        left1: &EventSet,
        cond1: &EventSet,
        eta: usize,
        left2: &EventSet,
        cond2: &EventSet,
    ) -> Result<Option<Ordering>> {
        let a = self.value(theta, left1, cond1)?;
        let b = self.value(eta, left2, cond2)?;
        Ok(a.zip(b).map(|(a, b)| a.cmp(&b)))
    }

    /// `E|θ` against `F|η`, i.e. conditioning on the whole parameter slice.
    pub fn compare_given(
        &self,
        e: &EventSet,
        theta: usize,
        f: &EventSet,
        eta: usize,
    ) -> Result<Ordering> {
        let omega = self.experiment.sure_event();
        let c = self.compare(theta, e, &omega, eta, f, &omega)?;
        Ok(c.expect("parameter slices are never null"))
    }

    /// Compares Δ-atoms whose conditioning events are single-parameter
    /// slices `{θ}×E`. `None` when either conditioning event is null.
    pub fn compare_atoms(&self, a: Atom, b: Atom) -> Result<Option<Ordering>> {
        let (space, measure) = self.fast.as_ref().ok_or(Error::CapExceeded {
            what: "|Θ×Ω| for Δ-atoms",
            size: self.experiment.n_theta() * self.experiment.n_omega(),
            cap: super::space::MAX_DELTA,
        })?;
        for atom in [a, b] {
            if !atom.cond.is_empty() && space.as_slice(atom.cond).is_none() {
                return Err(Error::MismatchedSpace(
                    "⊑ only conditions on events of the form {θ}×E".into(),
                ));
            }
        }
        if measure.is_zero(a.cond.0) || measure.is_zero(b.cond.0) {
            return Ok(None);
        }
        Ok(Some(measure.cmp_ratio(
            a.left.0 & a.cond.0,
            a.cond.0,
            b.left.0 & b.cond.0,
            b.cond.0,
        )))
    }
}
