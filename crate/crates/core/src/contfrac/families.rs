//! Parametric families of `d` whose `√d` expansions follow a closed pattern.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{cf_sqrt, CfExpansion};
use crate::error::{domain, Result};
use crate::scalar::{dec, PellInt};

/// Integer polynomial in the family parameters `k` and `u`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    /// `(coefficient, power of k, power of u)`
    terms: Vec<(i64, u32, u32)>,
}

impl Poly {
    pub fn constant(c: i64) -> Self {
        Poly { terms: vec![(c, 0, 0)] }.normalized()
    }

    pub fn k() -> Self {
        Poly { terms: vec![(1, 1, 0)] }
    }

    pub fn u() -> Self {
        Poly { terms: vec![(1, 0, 1)] }
    }

    fn normalized(mut self) -> Self {
        self.terms.sort_by_key(|&(_, pk, pu)| (pk, pu));
        let mut merged: Vec<(i64, u32, u32)> = Vec::new();
        for (c, pk, pu) in self.terms {
            match merged.last_mut() {
                Some(last) if last.1 == pk && last.2 == pu => last.0 += c,
                _ => merged.push((c, pk, pu)),
            }
        }
        merged.retain(|t| t.0 != 0);
        Poly { terms: merged }
    }

    pub fn eval<T: PellInt>(&self, k: &T, u: &T) -> T {
        self.terms.iter().fold(T::zero(), |acc, &(c, pk, pu)| {
            acc + T::lit(c) * num_traits::pow(k.clone(), pk as usize) * num_traits::pow(u.clone(), pu as usize)
        })
    }

    pub fn uses_u(&self) -> bool {
        self.terms.iter().any(|t| t.2 > 0)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self.terms.extend(rhs.terms);
        self.normalized()
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.into_iter().map(|(c, a, b)| (-c, a, b)).collect() }
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        let mut terms = Vec::new();
        for &(c1, k1, u1) in &self.terms {
            for &(c2, k2, u2) in &rhs.terms {
                terms.push((c1 * c2, k1 + k2, u1 + u2));
            }
        }
        Poly { terms }.normalized()
    }
}

impl Add<i64> for Poly {
    type Output = Poly;
    fn add(self, rhs: i64) -> Poly {
        self + Poly::constant(rhs)
    }
}

impl Mul<Poly> for i64 {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        Poly::constant(self) * rhs
    }
}

/// A family `d(k, u)` with predicted expansion `[head; period]`.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub name: &'static str,
    pub d: Poly,
    pub head: Poly,
    pub period: Vec<Poly>,
}

impl FamilySpec {
    pub fn uses_u(&self) -> bool {
        self.d.uses_u() || self.head.uses_u() || self.period.iter().any(Poly::uses_u)
    }
}

/// The five tabulated families, in order.
///
/// `family5` is the printed pattern `[e; 1, 2k+1, 2k+1, 1, 2e]`; the expansions
/// actually carry `2k−1` in the middle, so it is kept as a known mismatch.
pub fn families() -> Vec<FamilySpec> {
    let k = Poly::k;
    let u = Poly::u;
    let c = Poly::constant;
    let sq = |p: Poly| p.clone() * p;

    let mut out = vec![
        FamilySpec {
            name: "family1",
            d: sq(3 * k() + -1) + sq(4 * k() + -1),
            head: 5 * k() + -2,
            period: vec![c(1), c(1), c(1), c(1), 10 * k() + -4],
        },
        FamilySpec {
            name: "family2",
            d: sq(3 * k() + 1) + sq(4 * k() + 1),
            head: 5 * k() + 1,
            period: vec![c(2), c(2), 10 * k() + 2],
        },
        FamilySpec {
            name: "family3",
            d: sq(5 * k() + -2) + sq(12 * k() + -5),
            head: 13 * k() + -6,
            period: vec![c(1), c(1), c(1), c(1), c(1), c(1), 26 * k() + -12],
        },
    ];
    let step = 4 * sq(k()) + 1;
    let e4 = step.clone() * u() + k();
    out.push(FamilySpec {
        name: "family4",
        d: sq(e4.clone()) + 4 * (k() * u()) + 1,
        head: e4.clone(),
        period: vec![2 * k(), 2 * k(), 2 * e4],
    });
    let base5 = step * u() - k();
    let e5 = base5.clone() + -1;
    out.push(FamilySpec {
        name: "family5",
        d: sq(base5) - 4 * (k() * u()) + 1,
        head: e5.clone(),
        period: vec![c(1), 2 * k() + 1, 2 * k() + 1, c(1), 2 * e5],
    });
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct FamilyCheck<T: PellInt> {
    pub family: String,
    #[serde(with = "dec")]
    pub k: T,
    #[serde(with = "dec")]
    pub u: T,
    #[serde(with = "dec")]
    pub d: T,
    pub expected: CfExpansion<T>,
    pub actual: CfExpansion<T>,
    pub matched: bool,
}

/// Evaluates `spec` at `(k, u)` and compares with the true expansion.
pub fn check_family<T: PellInt>(spec: &FamilySpec, k: &T, u: &T) -> Result<FamilyCheck<T>> {
    let d = spec.d.eval(k, u);
    let head = spec.head.eval(k, u);
    if d < T::lit(2) || d.sqrt().sq() == d {
        return Err(domain(format!("{} at k={k}, u={u}: d = {d} is not a non-square ≥ 2", spec.name)));
    }
    if d.sqrt() != head {
        return Err(domain(format!(
            "{} at k={k}, u={u}: predicted head {head} differs from ⌊√{d}⌋",
            spec.name
        )));
    }
    let expected = CfExpansion {
        d: d.clone(),
        a0: head,
        period: spec.period.iter().map(|p| p.eval(k, u)).collect(),
    };
    let actual = cf_sqrt(&d)?;
    Ok(FamilyCheck {
        family: spec.name.to_string(),
        k: k.clone(),
        u: u.clone(),
        d,
        matched: expected == actual,
        expected,
        actual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(name: &str) -> FamilySpec {
        families().into_iter().find(|f| f.name == name).unwrap()
    }

    #[test]
    fn examples() {
        let r = check_family(&family("family1"), &2i64, &0).unwrap();
        assert_eq!((r.d, r.expected.a0, r.expected.period.clone()), (74, 8, vec![1, 1, 1, 1, 16]));
        assert!(r.matched);

        let r = check_family(&family("family4"), &2i64, &1).unwrap();
        assert_eq!((r.d, r.expected.a0, r.expected.period.clone()), (370, 19, vec![4, 4, 38]));
        assert!(r.matched);

        let r = check_family(&family("family5"), &2i64, &1).unwrap();
        assert_eq!((r.d, r.expected.a0), (218, 14));
        assert_eq!(r.expected.period, vec![1, 5, 5, 1, 28]);
        assert_eq!(r.actual.period, vec![1, 3, 3, 1, 28]);
        assert!(!r.matched);
    }

    #[test]
    fn closed_forms_of_d() {
        for k in 1i64..10 {
            assert_eq!(family("family1").d.eval(&k, &0), 25 * k * k - 14 * k + 2);
            assert_eq!(family("family2").d.eval(&k, &0), 25 * k * k + 14 * k + 2);
            assert_eq!(family("family3").d.eval(&k, &0), 169 * k * k - 140 * k + 29);
        }
        assert!(!family("family1").uses_u());
        assert!(family("family4").uses_u());
    }

    #[test]
    fn printed_families_hold() {
        for name in ["family1", "family2", "family3"] {
            for k in 1i64..=25 {
                assert!(check_family(&family(name), &k, &0).unwrap().matched, "{name} k={k}");
            }
        }
        for k in 1i64..=10 {
            for u in 1i64..=10 {
                assert!(check_family(&family("family4"), &k, &u).unwrap().matched, "k={k} u={u}");
            }
        }
    }

    #[test]
    fn family5_middle_digits_are_two_k_minus_one() {
        for k in 1i64..=10 {
            for u in 1i64..=10 {
                let r = check_family(&family("family5"), &k, &u).unwrap();
                let e = r.expected.a0;
                assert_eq!(r.actual.period, vec![1, 2 * k - 1, 2 * k - 1, 1, 2 * e], "k={k} u={u}");
                assert!(!r.matched);
            }
        }
    }

    #[test]
    fn inadmissible_parameters() {
        // family1 at k = 0 gives d = 2 but the predicted head −2
        assert!(check_family(&family("family1"), &0i64, &0).is_err());
    }
}
