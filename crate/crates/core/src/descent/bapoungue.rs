//! Bapoungué: `ax² + 2bxy − kay² = ±1` with `δ = ka² + b²`.
//!
//! A solution gives `z² − δ·t² = −k` for `z = −bx² + 2akxy + kby²`, `t = x² + ky²`,
//! together with `(ax + by)² − δy² = ±a` and `(kay − bx)² − δx² = ∓ka`.

use super::certificate::{Certificate, Method};
use super::forms::Form;
use super::{Attempt, Descent, Miss, Mode};
use crate::arith::{is_square, square_root};
use crate::error::{domain, Result};
use crate::lifts::{lift_neg1, lift_neg2};
use crate::scalar::{range_inclusive, PellInt};
use crate::solution::PellSolution;

/// The `k` with `Q(√−k)` of class number 1.
pub const CLASS_NUMBER_ONE: [i64; 9] = [1, 2, 3, 7, 11, 19, 43, 67, 163];

pub fn bapoungue<T: PellInt>(k: &T, a: &T, b: &T, mode: Mode) -> Result<Attempt<T>> {
    if !k.is_positive() || !a.is_positive() {
        return Err(domain(format!("need k ≥ 1 and a ≥ 1, got k = {k}, a = {a}")));
    }
    let delta = k.clone() * a.sq() + b.sq();
    if is_square(&delta) {
        return Err(domain(format!("δ = ka² + b² = {delta} is a perfect square")));
    }
    let form = Form::new(a.clone(), b.clone(), -k.clone() * a.clone());
    let found = match mode {
        Mode::Search { bound } => scan(&form, &T::lit(bound as i64)),
        Mode::Reverse => form.min_solution_pm(&T::one())?.map(|(s, _)| s),
    };
    match (found, mode) {
        (Some((x, y)), _) => finish(k, a, b, &delta, x, y).map(Ok),
        (None, Mode::Reverse) => Ok(Err(Miss::Unsolvable)),
        (None, _) => Ok(Err(Miss::BoundExhausted)),
    }
}

/// Pairs `(a, b)` with `a` odd, `b ≥ 1`, `gcd(a, b) = 1` and `ka² + b² = d`.
pub fn bapoungue_pairs<T: PellInt>(d: &T, k: &T) -> Vec<(T, T)> {
    let mut out = Vec::new();
    let mut a = T::one();
    while k.clone() * a.sq() < *d {
        if let Some(b) = square_root(&(d.clone() - k.clone() * a.sq())) {
            if b.is_positive() && a.gcd(&b).is_one() {
                out.push((a.clone(), b));
            }
        }
        a = a + T::lit(2);
    }
    out
}

/// Runs every admissible `(a, b)` for each `k` in turn; the first success wins.
pub fn bapoungue_for<T: PellInt>(d: &T, ks: &[i64], mode: Mode) -> Result<Attempt<T>> {
    super::check_d(d)?;
    let mut tried = false;
    let mut exhausted = false;
    for &k in ks {
        let k = T::lit(k);
        for (a, b) in bapoungue_pairs(d, &k) {
            tried = true;
            match bapoungue(&k, &a, &b, mode)? {
                Ok(desc) => return Ok(Ok(desc)),
                Err(Miss::BoundExhausted) => exhausted = true,
                Err(_) => {}
            }
        }
    }
    Ok(Err(match (tried, exhausted) {
        (false, _) => Miss::NotApplicable(format!("{d} has no admissible ka² + b² for k in {ks:?}")),
        (_, true) => Miss::BoundExhausted,
        _ => Miss::Unsolvable,
    }))
}

/// `x` ascending from 0, then the smallest `|y|`, positive first.
fn scan<T: PellInt>(form: &Form<T>, bound: &T) -> Option<(T, T)> {
    for x in range_inclusive(T::zero(), bound.clone()) {
        let best = [T::one(), -T::one()]
            .iter()
            .flat_map(|t| form.ys_for(&x, t))
            .filter(|y| y.abs() <= *bound && !(x.is_zero() && y.is_zero()))
            .min_by_key(|y| (y.abs(), y.is_negative()));
        if let Some(y) = best {
            return Some((x, y));
        }
    }
    None
}

fn finish<T: PellInt>(k: &T, a: &T, b: &T, delta: &T, x: T, y: T) -> Result<Descent<T>> {
    let ka = k.clone() * a.clone();
    let z = -b.clone() * x.sq() + T::lit(2) * ka.clone() * x.clone() * y.clone() + k.clone() * b.clone() * y.sq();
    let t = x.sq() + k.clone() * y.sq();
    let eb2 = (a.clone() * x.clone() + b.clone() * y.clone()).abs();
    let eb3 = (ka * y.clone() - b.clone() * x.clone()).abs();
    let related = vec![
        ("eb2".to_string(), PellSolution::new(delta.clone(), eb2.sq() - delta.clone() * y.sq(), eb2, y.abs())?),
        ("eb3".to_string(), PellSolution::new(delta.clone(), eb3.sq() - delta.clone() * x.sq(), eb3, x.abs())?),
    ];
    let certificate = Certificate::new(
        Method::Bapoungue,
        delta.clone(),
        vec![
            ("k", k.clone()),
            ("a", a.clone()),
            ("b2", b.clone()),
            ("x", x),
            ("y", y),
            ("z", z.clone()),
            ("t", t.clone()),
            ("delta", delta.clone()),
        ],
    )?;
    let auxiliary = PellSolution::new(delta.clone(), -k.clone(), z.abs(), t.clone())?;
    let solution = if k.is_one() {
        Some(lift_neg1(&t, &z.abs(), delta)?)
    } else if *k == T::lit(2) {
        Some(lift_neg2(&t, &z.abs(), delta)?)
    } else {
        None
    };
    let mut desc = Descent::new(certificate, Some(auxiliary), solution);
    desc.related = related;
    Ok(desc)
}
