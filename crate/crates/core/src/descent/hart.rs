//! Hart: `A = r² + s²` and `s·m² − 2r·mn − s·n² = ±1` give `x² − A·y² = −1` with
//! `y = m² + n²`.

use super::certificate::{Certificate, Method};
use super::forms::Form;
use super::{Attempt, Descent, Miss, Mode};
use crate::arith::{representations, square_root, FormType};
use crate::contfrac::solve_small_rhs;
use crate::error::{domain, Result};
use crate::lifts::lift_neg1;
use crate::scalar::{range_inclusive, PellInt};
use crate::solution::PellSolution;

pub fn hart<T: PellInt>(a: &T, mode: Mode) -> Result<Attempt<T>> {
    hart_tagged(a, mode, Method::Hart)
}

pub(crate) fn hart_tagged<T: PellInt>(a: &T, mode: Mode, method: Method) -> Result<Attempt<T>> {
    super::check_d(a)?;
    let reps = representations(a, FormType::Plus1, &T::zero());
    if reps.is_empty() {
        return Ok(Err(Miss::Unsolvable));
    }
    let one = T::one();
    let mut best: Option<(T, T, T, T)> = None;
    for rep in &reps {
        let (r, s) = (&rep.f, &rep.g);
        let form = Form::new(s.clone(), -r.clone(), -s.clone());
        match mode {
            Mode::Search { bound } => {
                let bound = T::lit(bound as i64);
                if let Some((m, n)) = scan(&form, &bound) {
                    return finish(a, method, r, s, m, n).map(Ok);
                }
            }
            Mode::Reverse => {
                if let Some(((m, n), _)) = form.min_solution_pm(&one)? {
                    let y = m.sq() + n.sq();
                    if best.as_ref().is_none_or(|b| y < b.2.sq() + b.3.sq()) {
                        best = Some((r.clone(), s.clone(), m, n));
                    }
                }
            }
        }
    }
    match (mode, best) {
        (Mode::Reverse, Some((r, s, m, n))) => finish(a, method, &r, &s, m, n).map(Ok),
        (Mode::Reverse, None) => Ok(Err(Miss::Unsolvable)),
        _ => Ok(Err(Miss::BoundExhausted)),
    }
}

/// First `(m, n)` with `0 ≤ n ≤ bound`, `|m| ≤ bound`, `n` outer, solving the form
/// `= ±1`; among several `m` the smallest `|m|` wins, positive first.
fn scan<T: PellInt>(form: &Form<T>, bound: &T) -> Option<(T, T)> {
    // the same form with the roles of m and n exchanged
    let swapped = Form::new(form.c.clone(), form.b.clone(), form.a.clone());
    for n in range_inclusive(T::zero(), bound.clone()) {
        let best = [T::one(), -T::one()]
            .iter()
            .flat_map(|t| swapped.ys_for(&n, t))
            .filter(|m| m.abs() <= *bound)
            .min_by_key(|m| (m.abs(), m.is_negative()));
        if let Some(m) = best {
            return Some((m, n));
        }
    }
    None
}

fn finish<T: PellInt>(a: &T, method: Method, r: &T, s: &T, m: T, n: T) -> Result<Descent<T>> {
    let y = m.sq() + n.sq();
    let x = square_root(&(a.clone() * y.sq() - T::one()))
        .ok_or_else(|| domain(format!("A·y² − 1 is not a square for A = {a}, y = {y}")))?;
    let certificate = Certificate::new(
        method,
        a.clone(),
        vec![("r", r.clone()), ("s", s.clone()), ("m", m), ("n", n), ("x", x.clone()), ("y", y.clone())],
    )?;
    let auxiliary = PellSolution::new(a.clone(), -T::one(), x.clone(), y.clone())?;
    let solution = lift_neg1(&y, &x, a)?;
    Ok(Descent::new(certificate, Some(auxiliary), Some(solution)))
}

/// Hart's auxiliary equation `P² − A·n² = ±s` with `A = r² + s²`.
///
/// Returns the smaller of the two minimal solutions (by `n`), if any. The right-hand
/// side must satisfy `|s| < 2√A`.
pub fn hart_aux<T: PellInt>(a: &T, r: &T, s: &T) -> Result<Option<PellSolution<T>>> {
    if r.sq() + s.sq() != *a {
        return Err(domain(format!("{a} ≠ {r}² + {s}²")));
    }
    let pos = solve_small_rhs(a, s)?;
    let neg = solve_small_rhs(a, &-s.clone())?;
    Ok(match (pos, neg) {
        (Some(p), Some(n)) => Some(if n.y() < p.y() { n } else { p }),
        (p, n) => p.or(n),
    })
}
