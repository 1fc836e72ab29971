use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::is_square;
use crate::error::{contract, domain, Result};
use crate::scalar::{dec, PellInt};

/// A witness `(x, y)`, `x, y ≥ 0`, for `x² − d·y² = n` with `d` a positive non-square.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "T: PellInt", try_from = "RawSolution<T>", into = "RawSolution<T>")]
pub struct PellSolution<T: PellInt> {
    d: T,
    n: T,
    x: T,
    y: T,
}

impl<T: PellInt> PellSolution<T> {
    pub fn new(d: T, n: T, x: T, y: T) -> Result<Self> {
        if !d.is_positive() || is_square(&d) {
            return Err(domain(format!("d = {d} must be a positive non-square")));
        }
        if x.is_negative() || y.is_negative() {
            return Err(domain(format!("solution coordinates must be non-negative, got ({x}, {y})")));
        }
        let value = x.sq() - d.clone() * y.sq();
        if value != n {
            return Err(contract(format!("{x}² − {d}·{y}² = {value}, expected {n}")));
        }
        Ok(Self { d, n, x, y })
    }

    /// Builds from possibly negative coordinates, taking absolute values.
    pub fn from_signed(d: T, n: T, x: T, y: T) -> Result<Self> {
        Self::new(d, n, x.abs(), y.abs())
    }

    /// Skips validation; only for fault-injection fixtures.
    #[doc(hidden)]
    pub fn new_unchecked(d: T, n: T, x: T, y: T) -> Self {
        Self { d, n, x, y }
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn n(&self) -> &T {
        &self.n
    }

    pub fn x(&self) -> &T {
        &self.x
    }

    pub fn y(&self) -> &T {
        &self.y
    }

    pub fn residual(&self) -> T {
        self.x.sq() - self.d.clone() * self.y.sq()
    }

    /// Re-checks every invariant; `false` only for values built with `new_unchecked`.
    pub fn is_valid(&self) -> bool {
        self.d.is_positive()
            && !is_square(&self.d)
            && !self.x.is_negative()
            && !self.y.is_negative()
            && self.residual() == self.n
    }

    /// The pair in the `a·x² + 1 = y²` labeling, i.e. `(y, x)`.
    pub fn swapped(&self) -> (T, T) {
        (self.y.clone(), self.x.clone())
    }
}

impl<T: PellInt> fmt::Display for PellSolution<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) : x² − {}·y² = {}", self.x, self.y, self.d, self.n)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
struct RawSolution<T: PellInt> {
    #[serde(with = "dec")]
    d: T,
    #[serde(with = "dec")]
    n: T,
    #[serde(with = "dec")]
    x: T,
    #[serde(with = "dec")]
    y: T,
}

impl<T: PellInt> TryFrom<RawSolution<T>> for PellSolution<T> {
    type Error = crate::PellError;

    fn try_from(raw: RawSolution<T>) -> Result<Self> {
        PellSolution::new(raw.d, raw.n, raw.x, raw.y)
    }
}

impl<T: PellInt> From<PellSolution<T>> for RawSolution<T> {
    fn from(s: PellSolution<T>) -> Self {
        RawSolution { d: s.d, n: s.n, x: s.x, y: s.y }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_witnesses() {
        assert!(PellSolution::new(2i64, 1, 3, 2).is_ok());
        assert!(matches!(PellSolution::new(4i64, 1, 1, 0), Err(crate::PellError::Domain(_))));
        assert!(matches!(PellSolution::new(2i64, 1, 3, 3), Err(crate::PellError::Contract(_))));
        assert!(PellSolution::new(2i64, -1, -1, 1).is_err());
        assert_eq!(PellSolution::from_signed(2i64, -1, -1, 1).unwrap().x(), &1);
    }

    #[test]
    fn json_uses_decimal_strings() {
        let s = PellSolution::new(61i64, 1, 1766319049, 226153980).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"d":"61","n":"1","x":"1766319049","y":"226153980"}"#);
        let back: PellSolution<i64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<PellSolution<i64>>(r#"{"d":"61","n":"1","x":"2","y":"1"}"#).is_err());
    }
}
