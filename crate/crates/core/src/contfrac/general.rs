//! `x² − d·y² = n` for arbitrary non-zero `n`.
//!
//! Every solution class is located by running the PQa recurrence on
//! `(z + √d)/|m|` for each `f² | n`, `m = n/f²`, and each `z` with
//! `z² ≡ d (mod |m|)`: a class exists for that `z` exactly when some `Qᵢ = ±1`
//! appears, and the preceding `(Gᵢ₋₁, Bᵢ₋₁)` is then a solution (possibly of the
//! conjugate sign, repaired with the norm −1 unit). Classes are then walked along the
//! unit group to their smallest positive `y`.

use std::collections::HashSet;

use super::{cf_sqrt, fundamental_from, negative_unit_from};
use crate::error::{domain, Result};
use crate::scalar::PellInt;
use crate::solution::PellSolution;

/// `⌊(p + √d)/q⌋` given `s = ⌊√d⌋`, `d` non-square.
fn floor_quotient<T: PellInt>(p: &T, s: &T, q: &T) -> T {
    if q.is_positive() {
        (p.clone() + s.clone()).div_floor(q)
    } else {
        (p.clone() + s.clone() + T::one()).div_floor(q)
    }
}

/// Runs PQa from `(p0, q0)` until the first `Qᵢ = ±1` (`i ≥ 1`) or a repeated state.
fn pqa_unit_hit<T: PellInt>(d: &T, p0: &T, q0: &T) -> Option<(T, T)> {
    let s = d.sqrt();
    let (mut p, mut q) = (p0.clone(), q0.clone());
    let (mut g2, mut g1) = (-p0.clone(), q0.clone());
    let (mut b2, mut b1) = (T::one(), T::zero());
    let mut seen = HashSet::new();
    let mut first = true;
    loop {
        if !first && q.abs().is_one() {
            return Some((g1, b1));
        }
        first = false;
        if !seen.insert((p.clone(), q.clone())) {
            return None;
        }
        let a = floor_quotient(&p, &s, &q);
        let g = a.clone() * g1.clone() + g2;
        let b = a.clone() * b1.clone() + b2;
        g2 = std::mem::replace(&mut g1, g);
        b2 = std::mem::replace(&mut b1, b);
        p = a * q.clone() - p;
        q = (d.clone() - p.sq()) / q;
    }
}

fn check_d<T: PellInt>(d: &T) -> Result<()> {
    if *d < T::lit(2) || d.sqrt().sq() == *d {
        return Err(domain(format!("d = {d} must be a non-square ≥ 2")));
    }
    Ok(())
}

/// One solution (signed `x`, `y ≥ 0`) of `x² − d·y² = n` from every solution class.
///
/// Conjugate classes are listed separately; an empty list means no solution exists.
pub fn class_representatives<T: PellInt>(d: &T, n: &T) -> Result<Vec<(T, T)>> {
    check_d(d)?;
    if n.is_zero() {
        return Err(domain("right-hand side must be non-zero"));
    }
    let exp = cf_sqrt(d)?;
    let neg_unit = negative_unit_from(&exp).map(|u| (u.x().clone(), u.y().clone()));
    let mut out = Vec::new();
    let mut f = T::one();
    while f.sq() <= n.abs() {
        let f2 = f.sq();
        if !(n.clone() % f2.clone()).is_zero() {
            f = f + T::one();
            continue;
        }
        let m = n.clone() / f2;
        let mut found: Vec<(T, T)> = Vec::new();
        if m.is_one() {
            found.push((T::one(), T::zero()));
        } else if m == -T::one() {
            found.extend(neg_unit.clone());
        } else {
            let am = m.abs();
            let two = T::lit(2);
            // z ranges over (−|m|/2, |m|/2]
            let mut z = -(am.clone() - T::one()) / two.clone();
            let top = am.clone() / two;
            while z <= top {
                if (z.sq() - d.clone()).mod_floor(&am).is_zero() {
                    if let Some((r, s)) = pqa_unit_hit(d, &z, &am) {
                        let norm = r.sq() - d.clone() * s.sq();
                        if norm == m {
                            found.push((r, s));
                        } else if norm == -m.clone() {
                            if let Some((t, u)) = &neg_unit {
                                found.push((
                                    r.clone() * t.clone() + s.clone() * u.clone() * d.clone(),
                                    r * u.clone() + s * t.clone(),
                                ));
                            }
                        }
                    }
                }
                z = z + T::one();
            }
        }
        for (x, y) in found {
            let (x, y) = if y.is_negative() { (-x, -y) } else { (x, y) };
            let pair = (x * f.clone(), y * f.clone());
            if !out.contains(&pair) {
                out.push(pair);
            }
        }
        f = f + T::one();
    }
    Ok(out)
}

/// Multiplies `x + y√d` by the unit `u` (or its inverse).
pub(crate) fn times_unit<T: PellInt>(d: &T, (x, y): (&T, &T), u: (&T, &T), inverse: bool) -> (T, T) {
    let (ux, uy) = u;
    let cross = d.clone() * y.clone() * uy.clone();
    if inverse {
        (x.clone() * ux.clone() - cross, y.clone() * ux.clone() - x.clone() * uy.clone())
    } else {
        (x.clone() * ux.clone() + cross, y.clone() * ux.clone() + x.clone() * uy.clone())
    }
}

/// Smallest `(|x|, |y|)` with `y > 0` in the orbit of `x + y√d` under the unit `u`.
///
/// `|y|` along an orbit is unimodal, so walking each way while it does not grow, plus
/// one more step to get past a `y = 0` member, visits the minimum.
pub(crate) fn minimal_in_orbit<T: PellInt>(d: &T, start: (T, T), unit: (&T, &T)) -> Option<(T, T)> {
    let mut visited = vec![(start.0.abs(), start.1.abs())];
    for inverse in [false, true] {
        let mut cur = start.clone();
        let mut extra = 1;
        loop {
            let next = times_unit(d, (&cur.0, &cur.1), unit, inverse);
            let grew = next.1.abs() > cur.1.abs();
            visited.push((next.0.abs(), next.1.abs()));
            cur = next;
            if grew {
                if extra == 0 {
                    break;
                }
                extra -= 1;
            }
        }
    }
    visited
        .into_iter()
        .filter(|(_, y)| y.is_positive())
        .min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)))
}

/// The solution of `x² − d·y² = n` with the smallest `y > 0` (then smallest `x`).
///
/// No range restriction on `n`; see [`solve_small_rhs`] for the guarded variant.
pub fn solve_rhs<T: PellInt>(d: &T, n: &T) -> Result<Option<PellSolution<T>>> {
    let reps = class_representatives(d, n)?;
    if reps.is_empty() {
        return Ok(None);
    }
    let unit = fundamental_from(&cf_sqrt(d)?);
    let best = reps
        .into_iter()
        .filter_map(|rep| minimal_in_orbit(d, rep, (unit.x(), unit.y())))
        .min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    best.map(|(x, y)| PellSolution::new(d.clone(), n.clone(), x, y)).transpose()
}

/// [`solve_rhs`] restricted to `0 < |n| < 2√d`.
pub fn solve_small_rhs<T: PellInt>(d: &T, n: &T) -> Result<Option<PellSolution<T>>> {
    check_d(d)?;
    if n.is_zero() || n.sq() >= T::lit(4) * d.clone() {
        return Err(domain(format!("right-hand side {n} outside 0 < |n| < 2√{d}")));
    }
    solve_rhs(d, n)
}
