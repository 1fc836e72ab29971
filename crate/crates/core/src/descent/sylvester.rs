//! Sylvester: for a prime `A = 2f² + g²` with `f` odd, `fy² + 2gxy − 2fx² = ±1`.
//!
//! Expanding `p + √−2 = (g + f√−2)(y + x√−2)²` gives `p = g(y² − 2x²) − 4fxy` and
//! `p² − A·q² = −2` with `q = y² + 2x²`.

use super::certificate::{Certificate, Method};
use super::forms::Form;
use super::{Attempt, Descent, Miss, Mode};
use crate::arith::{is_prime, representations, FormType};
use crate::error::Result;
use crate::lifts::lift_neg2;
use crate::scalar::{range_inclusive, PellInt};
use crate::solution::PellSolution;

pub fn sylvester<T: PellInt>(a: &T, mode: Mode) -> Result<Attempt<T>> {
    super::check_d(a)?;
    if !is_prime(a) {
        return Ok(Err(Miss::NotApplicable(format!("{a} is not prime"))));
    }
    let reps = representations(a, FormType::Plus2, &T::zero());
    if reps.is_empty() {
        return Ok(Err(Miss::Unsolvable));
    }
    // A = g² + 2f² is stored as (f, g) = (rep.g, rep.f)
    let Some(rep) = reps.into_iter().find(|r| r.g.is_odd()) else {
        return Ok(Err(Miss::NotApplicable(format!("{a} has no representation 2f² + g² with f odd"))));
    };
    let (f, g) = (rep.g, rep.f);
    let two = T::lit(2);
    // in the variables (x, y): −2f·x² + 2g·xy + f·y²
    let form = Form::new(-two * f.clone(), g.clone(), f.clone());
    let found = match mode {
        Mode::Search { bound } => scan(&form, &T::lit(bound as i64)),
        Mode::Reverse => {
            // the exact solver minimizes the second variable, so put x there
            let swapped = Form::new(form.c.clone(), form.b.clone(), form.a.clone());
            swapped.min_solution_pm(&T::one())?.map(|((y, x), _)| (x, y))
        }
    };
    match (found, mode) {
        (Some((x, y)), _) => finish(a, f, g, x, y).map(Ok),
        (None, Mode::Reverse) => Ok(Err(Miss::Unsolvable)),
        (None, _) => Ok(Err(Miss::BoundExhausted)),
    }
}

/// `x` ascending from 1, then the smallest `|y| ≥ 1`, positive first.
fn scan<T: PellInt>(form: &Form<T>, bound: &T) -> Option<(T, T)> {
    for x in range_inclusive(T::one(), bound.clone()) {
        let best = [T::one(), -T::one()]
            .iter()
            .flat_map(|t| form.ys_for(&x, t))
            .filter(|y| !y.is_zero() && y.abs() <= *bound)
            .min_by_key(|y| (y.abs(), y.is_negative()));
        if let Some(y) = best {
            return Some((x, y));
        }
    }
    None
}

fn finish<T: PellInt>(a: &T, f: T, g: T, x: T, y: T) -> Result<Descent<T>> {
    let two = T::lit(2);
    let p = g.clone() * (y.sq() - two.clone() * x.sq()) - T::lit(4) * f.clone() * x.clone() * y.clone();
    let q = y.sq() + two * x.sq();
    let certificate = Certificate::new(
        Method::Sylvester,
        a.clone(),
        vec![("f", f), ("g", g), ("x", x), ("y", y), ("p", p.clone()), ("q", q.clone())],
    )?;
    let auxiliary = PellSolution::new(a.clone(), T::lit(-2), p.abs(), q.clone())?;
    let solution = lift_neg2(&q, &p.abs(), a)?;
    Ok(Descent::new(certificate, Some(auxiliary), Some(solution)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn w(a: i64) -> Vec<i64> {
        let desc = sylvester(&BigInt::from(a), Mode::Search { bound: 10 }).unwrap().unwrap();
        ["f", "g", "x", "y"]
            .iter()
            .map(|k| i64::try_from(desc.certificate.witness(k).unwrap().clone()).unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(w(3), vec![1, 1, 1, 1]);
        assert_eq!(w(11), vec![1, 3, 3, 1]);
        assert_eq!(w(19), vec![3, 1, 1, 1]);
    }

    #[test]
    fn hypotheses() {
        let run = |a: i64| sylvester(&BigInt::from(a), Mode::Reverse).unwrap();
        assert!(matches!(run(15), Err(Miss::NotApplicable(_))));
        assert_eq!(run(5).unwrap_err(), Miss::Unsolvable);
        // 17 = 3² + 2·2² has f even
        assert!(matches!(run(17), Err(Miss::NotApplicable(_))));
    }

    #[test]
    fn every_prime_3_mod_8_is_solved() {
        for a in (3i64..3000).step_by(8) {
            if !is_prime(&a) {
                continue;
            }
            let desc = sylvester(&BigInt::from(a), Mode::Reverse).unwrap().unwrap();
            assert!(desc.certificate.is_valid());
            assert!(desc.solution.unwrap().is_valid(), "A = {a}");
        }
    }
}
