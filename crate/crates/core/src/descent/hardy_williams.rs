//! Hardy–Williams: `a = f² + g²` with `f` odd and `fx² − 2gxy − fy² = 1`.
//!
//! A solution gives the triple `b = 2xy`, `c = x² − y²`, `p = x² + y²` with
//! `bg − cf = −1`, hence `q² − a·p² = −1` for `q = bf + cg`.

use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, Method};
use super::forms::Form;
use super::{Attempt, Descent, Miss, Mode};
use crate::arith::{representations, FormType};
use crate::error::Result;
use crate::lifts::lift_neg1;
use crate::scalar::{dec, range_inclusive, PellInt};
use crate::solution::PellSolution;

/// One representation tried, with `g` signed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct HwTrial<T: PellInt> {
    #[serde(with = "dec")]
    pub f: T,
    #[serde(with = "dec")]
    pub g: T,
    #[serde(with = "dec::pair")]
    pub solution: Option<(T, T)>,
}

/// The descent together with every odd-`f` representation tried.
pub fn hardy_williams<T: PellInt>(a: &T, mode: Mode) -> Result<(Attempt<T>, Vec<HwTrial<T>>)> {
    super::check_d(a)?;
    let mut trials = Vec::new();
    for rep in representations(a, FormType::Plus1, &T::zero()) {
        if rep.f.is_even() {
            continue;
        }
        let signs = if rep.g.is_zero() { vec![rep.g.clone()] } else { vec![rep.g.clone(), -rep.g.clone()] };
        for g in signs {
            let form = Form::new(rep.f.clone(), -g.clone(), -rep.f.clone());
            let solution = match mode {
                Mode::Search { bound } => scan(&form, &T::lit(bound as i64)),
                Mode::Reverse => form.min_solution(&T::one())?,
            };
            trials.push(HwTrial { f: rep.f.clone(), g, solution });
        }
    }
    if trials.is_empty() {
        return Ok((Err(Miss::Unsolvable), trials));
    }
    let attempt = match trials.iter().find_map(|t| t.solution.as_ref().map(|s| (t, s))) {
        Some((t, (x, y))) => Ok(finish(a, t.f.clone(), t.g.clone(), x.clone(), y.clone())?),
        None if matches!(mode, Mode::Reverse) => Err(Miss::Unsolvable),
        None => Err(Miss::BoundExhausted),
    };
    Ok((attempt, trials))
}

/// Number of odd-`f` representations, up to the sign of `g`, that admit a solution.
pub fn solvable_representations<T: PellInt>(trials: &[HwTrial<T>]) -> usize {
    let mut hits: Vec<(T, T)> = trials.iter().filter(|t| t.solution.is_some()).map(|t| (t.f.clone(), t.g.abs())).collect();
    hits.sort();
    hits.dedup();
    hits.len()
}

/// `y` ascending from 0, then the smallest `|x|`, positive first.
fn scan<T: PellInt>(form: &Form<T>, bound: &T) -> Option<(T, T)> {
    let swapped = Form::new(form.c.clone(), form.b.clone(), form.a.clone());
    for y in range_inclusive(T::zero(), bound.clone()) {
        let best = swapped
            .ys_for(&y, &T::one())
            .into_iter()
            .filter(|x| x.abs() <= *bound)
            .min_by_key(|x| (x.abs(), x.is_negative()));
        if let Some(x) = best {
            return Some((x, y));
        }
    }
    None
}

fn finish<T: PellInt>(a: &T, f: T, g: T, x: T, y: T) -> Result<Descent<T>> {
    let b = T::lit(2) * x.clone() * y.clone();
    let c = x.sq() - y.sq();
    let p = x.sq() + y.sq();
    let q = b.clone() * f.clone() + c.clone() * g.clone();
    let certificate = Certificate::new(
        Method::HardyWilliams,
        a.clone(),
        vec![("f", f), ("g", g), ("x", x), ("y", y), ("b", b), ("c", c), ("p", p.clone()), ("q", q.clone())],
    )?;
    let auxiliary = PellSolution::new(a.clone(), -T::one(), q.abs(), p.clone())?;
    let solution = lift_neg1(&p, &q.abs(), a)?;
    Ok(Descent::new(certificate, Some(auxiliary), Some(solution)))
}
