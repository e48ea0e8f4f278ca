//! Finite measures on Δ scaled to integer point weights.
//!
//! Every ratio compared by an ordering is `Q(X)/Q(Y)`, so a common positive
//! scale cancels. Weights whose total fits in a `u64` use `u128` arithmetic;
//! anything larger falls back to big integers.

use crate::rational::Rational;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub(crate) enum Measure {
    Small(Vec<u128>),
    Big(Vec<BigUint>),
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

impl Measure {
    /// Points must be non-negative.
    pub fn from_points(points: &[Rational]) -> Measure {
        let lcm = points
            .iter()
            .fold(BigInt::from(1), |acc, p| acc.lcm(p.denom()));
        let weights: Vec<BigUint> = points
            .iter()
            .map(|p| {
                (p.numer() * (&lcm / p.denom()))
                    .to_biguint()
                    .expect("non-negative point mass")
            })
            .collect();
        let total: BigUint = weights.iter().sum();
        if total.to_u64().is_some() {
            Measure::Small(weights.iter().map(|w| w.to_u128().unwrap()).collect())
        } else {
            Measure::Big(weights)
        }
    }

    pub fn is_zero(&self, mask: u64) -> bool {
        match self {
            Measure::Small(w) => bits(mask).all(|i| w[i] == 0),
            Measure::Big(w) => bits(mask).all(|i| w[i].is_zero()),
        }
    }

    fn small(w: &[u128], mask: u64) -> u128 {
        bits(mask).map(|i| w[i]).sum()
    }

    fn big(w: &[BigUint], mask: u64) -> BigUint {
        bits(mask).map(|i| &w[i]).sum()
    }

    /// Compares `μ(n1)/μ(d1)` with `μ(n2)/μ(d2)`; both denominators must be
    /// non-null.
    pub fn cmp_ratio(&self, n1: u64, d1: u64, n2: u64, d2: u64) -> Ordering {
        match self {
            Measure::Small(w) => {
                let lhs = Self::small(w, n1) * Self::small(w, d2);
                let rhs = Self::small(w, n2) * Self::small(w, d1);
                lhs.cmp(&rhs)
            }
            Measure::Big(w) => {
                let lhs = Self::big(w, n1) * Self::big(w, d2);
                let rhs = Self::big(w, n2) * Self::big(w, d1);
                lhs.cmp(&rhs)
            }
        }
    }

    /// `μ(n)/μ(d)` as a rational; `d` must be non-null.
    pub fn ratio(&self, n: u64, d: u64) -> Rational {
        let (a, b) = match self {
            Measure::Small(w) => (
                BigInt::from(Self::small(w, n)),
                BigInt::from(Self::small(w, d)),
            ),
            Measure::Big(w) => (BigInt::from(Self::big(w, n)), BigInt::from(Self::big(w, d))),
        };
        Rational::new(a, b)
    }
}
