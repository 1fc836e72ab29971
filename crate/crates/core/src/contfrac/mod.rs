//! Continued fractions of `√d` and everything read off them: convergents, the
//! fundamental solution, solutions of `x² − d·y² = n` for small `n`, and the
//! parametric families whose expansions have a closed form.

mod families;
mod general;

pub use families::{check_family, families, FamilyCheck, FamilySpec, Poly};
pub use general::{class_representatives, solve_rhs, solve_small_rhs};
pub(crate) use general::times_unit;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::scalar::{dec, PellInt};
use crate::solution::PellSolution;

/// `√d = [a0; period…]` with the period repeating forever.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct CfExpansion<T: PellInt> {
    #[serde(with = "dec")]
    pub d: T,
    #[serde(with = "dec")]
    pub a0: T,
    #[serde(with = "dec::vec")]
    pub period: Vec<T>,
}

impl<T: PellInt> CfExpansion<T> {
    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// The `i`-th partial quotient, `a0` at index 0.
    pub fn digit(&self, i: usize) -> &T {
        if i == 0 {
            &self.a0
        } else {
            &self.period[(i - 1) % self.period.len()]
        }
    }

    /// Palindromic body, terminal digit `2·a0`, and agreement with a fresh expansion.
    pub fn is_consistent(&self) -> bool {
        let Some((last, body)) = self.period.split_last() else {
            return false;
        };
        let palindrome = body.iter().eq(body.iter().rev());
        palindrome
            && *last == T::lit(2) * self.a0.clone()
            && cf_sqrt(&self.d).map(|fresh| fresh == *self).unwrap_or(false)
    }
}

impl<T: PellInt> std::fmt::Display for CfExpansion<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let digits: Vec<String> = self.period.iter().map(ToString::to_string).collect();
        write!(f, "[{}; {}]", self.a0, digits.join(", "))
    }
}

/// Expands `√d` with the `(P, Q)` recurrence; the period closes when `Q` returns to 1.
pub fn cf_sqrt<T: PellInt>(d: &T) -> Result<CfExpansion<T>> {
    if *d < T::lit(2) {
        return Err(domain(format!("continued fraction of √{d}: need d ≥ 2")));
    }
    let a0 = d.sqrt();
    if a0.sq() == *d {
        return Err(domain(format!("{d} is a perfect square")));
    }
    let (mut p, mut q, mut a) = (T::zero(), T::one(), a0.clone());
    let mut period = Vec::new();
    loop {
        p = a.clone() * q.clone() - p;
        q = (d.clone() - p.sq()) / q;
        a = (a0.clone() + p.clone()) / q.clone();
        period.push(a.clone());
        if q.is_one() {
            break;
        }
    }
    Ok(CfExpansion { d: d.clone(), a0, period })
}

/// The first `count` convergents `h/k` of the expansion.
pub fn convergents<T: PellInt>(exp: &CfExpansion<T>, count: usize) -> Vec<(T, T)> {
    let (mut h2, mut h1) = (T::zero(), T::one());
    let (mut k2, mut k1) = (T::one(), T::zero());
    (0..count)
        .map(|i| {
            let a = exp.digit(i).clone();
            let h = a.clone() * h1.clone() + h2.clone();
            let k = a * k1.clone() + k2.clone();
            h2 = std::mem::replace(&mut h1, h.clone());
            k2 = std::mem::replace(&mut k1, k.clone());
            (h, k)
        })
        .collect()
}

fn convergent_at<T: PellInt>(exp: &CfExpansion<T>, index: usize) -> (T, T) {
    convergents(exp, index + 1).pop().expect("at least one convergent")
}

/// The smallest positive solution of `x² − d·y² = 1`.
pub fn fundamental<T: PellInt>(d: &T) -> Result<PellSolution<T>> {
    let exp = cf_sqrt(d)?;
    Ok(fundamental_from(&exp))
}

pub(crate) fn fundamental_from<T: PellInt>(exp: &CfExpansion<T>) -> PellSolution<T> {
    let l = exp.period_len();
    let index = if l.is_multiple_of(2) { l - 1 } else { 2 * l - 1 };
    let (x, y) = convergent_at(exp, index);
    PellSolution::new(exp.d.clone(), T::one(), x, y).expect("convergent at period end solves the Pell equation")
}

/// The smallest positive solution of `x² − d·y² = −1`, present iff the period is odd.
pub fn negative_unit<T: PellInt>(d: &T) -> Result<Option<PellSolution<T>>> {
    let exp = cf_sqrt(d)?;
    Ok(negative_unit_from(&exp))
}

pub(crate) fn negative_unit_from<T: PellInt>(exp: &CfExpansion<T>) -> Option<PellSolution<T>> {
    let l = exp.period_len();
    (l % 2 == 1).then(|| {
        let (x, y) = convergent_at(exp, l - 1);
        PellSolution::new(exp.d.clone(), -T::one(), x, y).expect("odd period yields a norm −1 convergent")
    })
}
