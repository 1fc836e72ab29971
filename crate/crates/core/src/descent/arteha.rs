//! Arteha's three cases for prime `d`.
//!
//! 1. `d ≡ 1 (mod 4)`, `d = a² + b²`, `a` odd: `a(m² − n²) − 2bmn = ±1`,
//!    `y = 2·|2amn + b(m² − n²)|·(m² + n²)`.
//! 2. `d ≡ 3 (mod 8)`, `d = a² + 2b²`: `b·|m² − 2n²| − 2amn = ±1`,
//!    `y = |4bmn + a·|m² − 2n²||·(m² + 2n²)`.
//! 3. `d ≡ 7 (mod 8)`, `d = a² − 2b²`: `2amn − b(m² + 2n²) = ±1`,
//!    `y = |(a(m² + 2n²) − 4bmn)(m² − 2n²)|`.

use super::certificate::{Certificate, Method};
use super::forms::Form;
use super::{Attempt, Descent, Miss, Mode};
use crate::arith::{is_prime, minus2_orbit_bound, representations, square_root, FormType};
use crate::error::Result;
use crate::scalar::{range_inclusive, PellInt};
use crate::solution::PellSolution;

/// The case for `d`, if `d` is a prime of one of the three classes.
pub fn arteha_case<T: PellInt>(d: &T) -> Option<Method> {
    if !is_prime(d) {
        return None;
    }
    let r = d.mod_floor(&T::lit(8));
    if r == T::one() || r == T::lit(5) {
        Some(Method::Arteha1Mod4)
    } else if r == T::lit(3) {
        Some(Method::Arteha3Mod8)
    } else if r == T::lit(7) {
        Some(Method::Arteha7Mod8)
    } else {
        None
    }
}

/// `(a, b)` pairs in the case's form.
fn pairs<T: PellInt>(d: &T, case: Method) -> Vec<(T, T)> {
    match case {
        Method::Arteha1Mod4 => representations(d, FormType::Plus1, &T::zero())
            .into_iter()
            .filter(|r| r.f.is_odd())
            .map(|r| (r.f, r.g))
            .collect(),
        Method::Arteha3Mod8 => representations(d, FormType::Plus2, &T::zero()).into_iter().map(|r| (r.f, r.g)).collect(),
        _ => representations(d, FormType::Minus2, &minus2_orbit_bound(d)).into_iter().map(|r| (r.f, r.g)).collect(),
    }
}

/// The unit forms in `(m, n)`; case 2 has one per sign of `m² − 2n²`.
fn forms<T: PellInt>(case: Method, a: &T, b: &T) -> Vec<(Form<T>, i64)> {
    let two = T::lit(2);
    match case {
        Method::Arteha1Mod4 => vec![(Form::new(a.clone(), -b.clone(), -a.clone()), 0)],
        Method::Arteha3Mod8 => vec![
            (Form::new(b.clone(), -a.clone(), -two.clone() * b.clone()), 1),
            (Form::new(-b.clone(), -a.clone(), two * b.clone()), -1),
        ],
        _ => vec![(Form::new(-b.clone(), a.clone(), -two * b.clone()), 0)],
    }
}

/// Whether `(m, n)` lies on the side of `m² − 2n²` its case-2 form assumes.
fn on_side<T: PellInt>(sign: i64, m: &T, n: &T) -> bool {
    let v = m.sq() - T::lit(2) * n.sq();
    match sign {
        1 => !v.is_negative(),
        -1 => v.is_negative(),
        _ => true,
    }
}

fn y_of<T: PellInt>(case: Method, a: &T, b: &T, m: &T, n: &T) -> T {
    let (two, four) = (T::lit(2), T::lit(4));
    let mn = m.clone() * n.clone();
    match case {
        Method::Arteha1Mod4 => {
            two.clone() * (two * a.clone() * mn + b.clone() * (m.sq() - n.sq())).abs() * (m.sq() + n.sq())
        }
        Method::Arteha3Mod8 => {
            let diff = (m.sq() - two.clone() * n.sq()).abs();
            (four * b.clone() * mn + a.clone() * diff).abs() * (m.sq() + two * n.sq())
        }
        _ => {
            let sum = m.sq() + two.clone() * n.sq();
            ((a.clone() * sum - four * b.clone() * mn) * (m.sq() - two * n.sq())).abs()
        }
    }
}

/// Candidates for one `(a, b)`: `(m, n, y)` with `y > 0` and `d·y² + 1` a square.
fn candidates<T: PellInt>(d: &T, case: Method, a: &T, b: &T, mode: Mode) -> Result<Vec<(T, T, T)>> {
    let mut out = Vec::new();
    for (form, sign) in forms(case, a, b) {
        let mn: Vec<(T, T)> = match mode {
            Mode::Search { bound } => scan(&form, sign, &T::lit(bound as i64)),
            Mode::Reverse => {
                let mut v = form.small_solutions(&T::one(), 3)?;
                v.extend(form.small_solutions(&-T::one(), 3)?);
                v
            }
        };
        for (m, n) in mn {
            if !on_side(sign, &m, &n) {
                continue;
            }
            let y = y_of(case, a, b, &m, &n);
            if y.is_positive() && square_root(&(d.clone() * y.sq() + T::one())).is_some() {
                out.push((m, n, y));
            }
        }
    }
    Ok(out)
}

/// All `(m, n)` with `0 ≤ n ≤ bound`, `|m| ≤ bound` on the form `= ±1`.
fn scan<T: PellInt>(form: &Form<T>, sign: i64, bound: &T) -> Vec<(T, T)> {
    let swapped = Form::new(form.c.clone(), form.b.clone(), form.a.clone());
    let mut out = Vec::new();
    for n in range_inclusive(T::zero(), bound.clone()) {
        for t in [T::one(), -T::one()] {
            for m in swapped.ys_for(&n, &t) {
                if m.abs() <= *bound && on_side(sign, &m, &n) {
                    out.push((m, n.clone()));
                }
            }
        }
    }
    out
}

/// The smallest `y` over every representation; `related` holds the best solution
/// of each representation that produced one, labelled by `(a, b, m, n)`.
pub fn arteha<T: PellInt>(d: &T, mode: Mode) -> Result<Attempt<T>> {
    super::check_d(d)?;
    let Some(case) = arteha_case(d) else {
        return Ok(Err(Miss::NotApplicable(format!("{d} is not a prime ≡ 1 (mod 4), 3 or 7 (mod 8)"))));
    };
    arteha_as(d, case, mode)
}

/// As [`arteha`], with the case fixed; `d` outside that case is not applicable.
pub fn arteha_as<T: PellInt>(d: &T, case: Method, mode: Mode) -> Result<Attempt<T>> {
    super::check_d(d)?;
    if arteha_case(d) != Some(case) {
        return Ok(Err(Miss::NotApplicable(format!("{d} is not in the class of {case}"))));
    }
    let reps = pairs(d, case);
    if reps.is_empty() {
        return Ok(Err(Miss::Unsolvable));
    }
    let mut per_rep: Vec<(T, T, T, T, T)> = Vec::new();
    for (a, b) in reps {
        let cands = candidates(d, case, &a, &b, mode)?;
        if let Some((m, n, y)) = cands.into_iter().min_by(|p, q| (&p.2, p.1.abs(), p.0.abs()).cmp(&(&q.2, q.1.abs(), q.0.abs()))) {
            per_rep.push((a, b, m, n, y));
        }
    }
    let Some(best) = per_rep.iter().min_by(|p, q| p.4.cmp(&q.4)).cloned() else {
        return Ok(Err(match mode {
            Mode::Search { .. } => Miss::BoundExhausted,
            Mode::Reverse => Miss::Unsolvable,
        }));
    };
    let mut desc = finish(d, case, best)?;
    for (a, b, m, n, y) in per_rep {
        let x = square_root(&(d.clone() * y.sq() + T::one())).unwrap_or_else(T::zero);
        desc.related.push((format!("a={a}, b={b}, m={m}, n={n}"), PellSolution::new(d.clone(), T::one(), x, y)?));
    }
    Ok(Ok(desc))
}

fn finish<T: PellInt>(d: &T, case: Method, (a, b, m, n, y): (T, T, T, T, T)) -> Result<Descent<T>> {
    let x = square_root(&(d.clone() * y.sq() + T::one())).unwrap_or_else(T::zero);
    let certificate = Certificate::new(
        case,
        d.clone(),
        vec![("a", a), ("b", b), ("m", m), ("n", n), ("x", x.clone()), ("y", y.clone())],
    )?;
    let solution = PellSolution::new(d.clone(), T::one(), x, y)?;
    Ok(Descent::new(certificate, None, Some(solution)))
}
