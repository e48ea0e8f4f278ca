use crate::bits::{EventSet, HypothesisSet, Subset};
use crate::error::{Error, Result};
use crate::experiments::Experiment;
use serde::Serialize;

/// Largest Δ representable as a single-word mask.
pub const MAX_DELTA: usize = 64;

/// Δ = Θ×Ω with `(θ, ω)` stored at bit `θ·|Ω| + ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSpace {
    theta_labels: Vec<String>,
    omega_labels: Vec<String>,
}

/// A subset of Δ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DeltaEvent(pub u64);

/// The conditional pair `left | cond`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub left: DeltaEvent,
    pub cond: DeltaEvent,
}

impl Atom {
    pub fn new(left: DeltaEvent, cond: DeltaEvent) -> Self {
        Atom { left, cond }
    }
}

impl DeltaEvent {
    pub const EMPTY: DeltaEvent = DeltaEvent(0);

    pub fn union(self, o: DeltaEvent) -> DeltaEvent {
        DeltaEvent(self.0 | o.0)
    }
    pub fn inter(self, o: DeltaEvent) -> DeltaEvent {
        DeltaEvent(self.0 & o.0)
    }
    pub fn minus(self, o: DeltaEvent) -> DeltaEvent {
        DeltaEvent(self.0 & !o.0)
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn is_subset(self, o: DeltaEvent) -> bool {
        self.0 & !o.0 == 0
    }
    pub fn is_disjoint(self, o: DeltaEvent) -> bool {
        self.0 & o.0 == 0
    }
}

impl DeltaSpace {
    pub fn new(theta_labels: Vec<String>, omega_labels: Vec<String>) -> Result<Self> {
        let size = theta_labels.len() * omega_labels.len();
        if size == 0 {
            return Err(Error::InvalidExperiment("empty Θ×Ω".into()));
        }
        if size > MAX_DELTA {
            return Err(Error::CapExceeded {
                what: "|Θ×Ω| for qualitative orderings",
                size,
                cap: MAX_DELTA,
            });
        }
        Ok(DeltaSpace {
            theta_labels,
            omega_labels,
        })
    }

    pub fn of(exp: &Experiment) -> Result<Self> {
        DeltaSpace::new(exp.theta_labels().to_vec(), exp.omega_labels().to_vec())
    }

    pub fn size(&self) -> usize {
        self.theta_labels.len() * self.omega_labels.len()
    }

    pub fn n_theta(&self) -> usize {
        self.theta_labels.len()
    }

    pub fn n_omega(&self) -> usize {
        self.omega_labels.len()
    }

    pub fn theta_labels(&self) -> &[String] {
        &self.theta_labels
    }

    pub fn omega_labels(&self) -> &[String] {
        &self.omega_labels
    }

    pub fn bit(&self, theta: usize, omega: usize) -> usize {
        theta * self.n_omega() + omega
    }

    pub fn full(&self) -> DeltaEvent {
        DeltaEvent(low_bits(self.size()))
    }

    pub fn complement(&self, a: DeltaEvent) -> DeltaEvent {
        self.full().minus(a)
    }

    fn omega_mask(&self) -> u64 {
        low_bits(self.n_omega())
    }

    /// `H × Ω`.
    pub fn hypothesis_cylinder(&self, h: &HypothesisSet) -> DeltaEvent {
        let mut m = 0;
        for t in h.iter() {
            m |= self.omega_mask() << (t * self.n_omega());
        }
        DeltaEvent(m)
    }

    /// `Θ × E`.
    pub fn event_cylinder(&self, e: &EventSet) -> DeltaEvent {
        let row = e.as_mask().expect("Ω fits in a word when Δ does");
        DeltaEvent((0..self.n_theta()).fold(0, |m, t| m | row << (t * self.n_omega())))
    }

    /// `{θ} × E`.
    pub fn slice(&self, theta: usize, e: &EventSet) -> DeltaEvent {
        DeltaEvent(e.as_mask().expect("Ω fits in a word") << (theta * self.n_omega()))
    }

    /// `{ω : (θ, ω) ∈ A}` as an Ω-mask.
    pub fn section_mask(&self, a: DeltaEvent, theta: usize) -> u64 {
        (a.0 >> (theta * self.n_omega())) & self.omega_mask()
    }

    pub fn section(&self, a: DeltaEvent, theta: usize) -> EventSet {
        Subset::from_mask(self.n_omega(), self.section_mask(a, theta))
    }

    /// `Some((θ, E))` when `a = {θ} × E` with `E` nonempty.
    pub fn as_slice(&self, a: DeltaEvent) -> Option<(usize, u64)> {
        let rows: Vec<usize> = (0..self.n_theta())
            .filter(|&t| self.section_mask(a, t) != 0)
            .collect();
        match rows.as_slice() {
            [t] => Some((*t, self.section_mask(a, *t))),
            _ => None,
        }
    }

    /// Points of `a` as `θ:ω` labels, in bit order.
    pub fn labels(&self, a: DeltaEvent) -> Vec<String> {
        (0..self.size())
            .filter(|&i| a.0 >> i & 1 == 1)
            .map(|i| {
                format!(
                    "{}:{}",
                    self.theta_labels[i / self.n_omega()],
                    self.omega_labels[i % self.n_omega()]
                )
            })
            .collect()
    }

    pub fn doc(&self, a: DeltaEvent) -> EventDoc {
        EventDoc {
            mask: a.0,
            points: self.labels(a),
        }
    }
}

/// Serialized form of a Δ-event: its mask and its `θ:ω` points.
#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct EventDoc {
    pub mask: u64,
    pub points: Vec<String>,
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
