//! Necessary conditions for `x² − d·y² = −1`, checked against the truth.

use serde::{Deserialize, Serialize};

use super::euler::{euler_descent, EulerVariant};
use super::Mode;
use crate::arith::{factorize, jacobi, representations, FormType, Representation};
use crate::error::{domain, Result};
use crate::oracle::negpell_solvable;
use crate::scalar::{dec, PellInt};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct CriteriaVerdict<T: PellInt> {
    #[serde(with = "dec")]
    pub d: T,
    pub has_two_square_rep: bool,
    pub rep_used: Option<Representation<T>>,
    /// `(p, (a/p))` for the odd member `a` of `rep_used` and every odd prime `p | d`.
    pub residue_checks: Vec<(String, i32)>,
    /// `(a/D) = 1` or `(b/D) = 1` for `rep_used`, with `D` the odd part of `d`.
    pub escott_check: bool,
    pub necessary_ok: bool,
    pub actually_solvable: bool,
    /// Whether an Euler certificate for `−1` reconstructs; only run when solvable.
    pub glw_check: Option<bool>,
}

pub fn negpell_criteria<T: PellInt>(d: &T) -> Result<CriteriaVerdict<T>> {
    super::check_d(d)?;
    let factors = factorize(d)?;
    if factors.iter().any(|(_, e)| *e > 1) {
        return Err(domain(format!("{d} is not squarefree")));
    }
    let two = T::lit(2);
    let odd_primes: Vec<T> = factors.into_iter().map(|(p, _)| p).filter(|p| *p != two).collect();
    let odd_part = odd_primes.iter().fold(T::one(), |acc, p| acc * p.clone());
    let reps = representations(d, FormType::Plus1, &T::zero());
    let symbols = |a: &T| -> Result<Vec<(String, i32)>> {
        odd_primes.iter().map(|p| Ok((p.to_string(), jacobi(a, p)?))).collect()
    };
    let mut rep_used = None;
    let mut residue_checks = Vec::new();
    let mut necessary_ok = false;
    'reps: for rep in &reps {
        for a in [&rep.f, &rep.g] {
            if a.is_even() {
                continue;
            }
            let checks = symbols(a)?;
            let pass = checks.iter().all(|(_, s)| *s == 1);
            if pass || rep_used.is_none() {
                rep_used = Some(rep.clone());
                residue_checks = checks;
            }
            if pass {
                necessary_ok = true;
                break 'reps;
            }
        }
    }
    let escott_check = match &rep_used {
        Some(r) => jacobi(&r.f, &odd_part)? == 1 || jacobi(&r.g, &odd_part)? == 1,
        None => false,
    };
    let actually_solvable = negpell_solvable(d)?;
    let glw_check = if actually_solvable {
        Some(matches!(euler_descent(d, EulerVariant::Neg1, Mode::Reverse)?, Ok(desc) if desc.certificate.is_valid()))
    } else {
        None
    };
    Ok(CriteriaVerdict {
        d: d.clone(),
        has_two_square_rep: !reps.is_empty(),
        rep_used,
        residue_checks,
        escott_check,
        necessary_ok,
        actually_solvable,
        glw_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(d: i64) -> CriteriaVerdict<BigInt> {
        negpell_criteria(&BigInt::from(d)).unwrap()
    }

    #[test]
    fn examples() {
        let e = v(2306);
        assert!(e.necessary_ok && e.escott_check && !e.actually_solvable);
        let e = v(13);
        assert!(e.necessary_ok && e.actually_solvable);
        assert_eq!(e.glw_check, Some(true));
        let e = v(34);
        assert!(!e.necessary_ok && !e.actually_solvable);
        assert_eq!(e.residue_checks, vec![("17".to_string(), -1)]);
        assert!(negpell_criteria(&BigInt::from(12)).is_err());
    }
}
