//! Euler's descents for `q² − d·p² ∈ {−1, −2, +2, −4}`.
//!
//! With `d = f² + k·g²` and `p² = b² + k·c²` the product identity
//! `(bf + k·cg)² + k·(bg − cf)² = (b² + k·c²)(f² + k·g²)` turns a unit condition
//! `bg − cf = ±u` into `q² − d·p² = −k·u²` for `q = bf + k·cg`.

use super::certificate::{Certificate, Method};
use super::{Attempt, Descent, Miss, Mode};
use crate::arith::{minus2_orbit_bound, representations, square_root, FormType, Representation};
use crate::contfrac::solve_rhs;
use crate::error::{domain, Result};
use crate::lifts::{lift_neg1, lift_neg2, lift_neg4, lift_pos2};
use crate::scalar::PellInt;
use crate::solution::PellSolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EulerVariant {
    Neg1,
    Neg2,
    Pos2,
    Neg4,
}

impl EulerVariant {
    pub const ALL: [EulerVariant; 4] = [EulerVariant::Neg1, EulerVariant::Neg2, EulerVariant::Pos2, EulerVariant::Neg4];

    pub fn method(self) -> Method {
        match self {
            EulerVariant::Neg1 => Method::EulerNeg1,
            EulerVariant::Neg2 => Method::EulerNeg2,
            EulerVariant::Pos2 => Method::EulerPos2,
            EulerVariant::Neg4 => Method::EulerNeg4,
        }
    }

    pub fn form(self) -> FormType {
        match self {
            EulerVariant::Neg2 => FormType::Plus2,
            EulerVariant::Pos2 => FormType::Minus2,
            _ => FormType::Plus1,
        }
    }

    /// Right-hand side of the auxiliary equation.
    pub fn rhs(self) -> i64 {
        match self {
            EulerVariant::Neg1 => -1,
            EulerVariant::Neg2 => -2,
            EulerVariant::Pos2 => 2,
            EulerVariant::Neg4 => -4,
        }
    }

    /// `u` in the unit condition `bg − cf = ±u`.
    fn unit(self) -> i64 {
        if self == EulerVariant::Neg4 {
            2
        } else {
            1
        }
    }
}

/// A candidate `(f, g, b, c)` together with `p` and `q`.
#[derive(Clone, Debug)]
struct Quad<T> {
    f: T,
    g: T,
    b: T,
    c: T,
    p: T,
    q: T,
}

pub fn euler_descent<T: PellInt>(d: &T, variant: EulerVariant, mode: Mode) -> Result<Attempt<T>> {
    super::check_d(d)?;
    let quad = match mode {
        Mode::Search { bound } => match search(d, variant, &T::lit(bound as i64))? {
            Some(q) => q,
            None if reps(d, variant).is_empty() => return Ok(Err(Miss::Unsolvable)),
            None => return Ok(Err(Miss::BoundExhausted)),
        },
        Mode::Reverse => {
            let Some(aux) = solve_rhs(d, &T::lit(variant.rhs()))? else {
                return Ok(Err(Miss::Unsolvable));
            };
            if reps(d, variant).is_empty() {
                // d = 2 with x² − 2y² = −2: the only representation 0² + 2·1² has f = 0
                return Ok(Err(Miss::NotApplicable(format!("{d} has no representation {}", variant.form()))));
            }
            match reconstruct(d, variant, aux.x(), aux.y()) {
                Some(q) => q,
                None => {
                    return Err(domain(format!(
                        "no {} certificate reconstructs from {aux}",
                        variant.method()
                    )))
                }
            }
        }
    };
    build(d, variant, quad).map(Ok)
}

fn reps<T: PellInt>(d: &T, variant: EulerVariant) -> Vec<Representation<T>> {
    let kind = variant.form();
    let bound = if kind == FormType::Minus2 { minus2_orbit_bound(d) } else { T::zero() };
    representations(d, kind, &bound)
}

fn ceil_div<T: PellInt>(a: &T, b: &T) -> T {
    -((-a.clone()).div_floor(b))
}

/// All `(b, c)`, `0 ≤ b, c ≤ bound`, on the line `bg − cf = e`.
fn unit_line<T: PellInt>(f: &T, g: &T, e: &T, bound: &T) -> Vec<(T, T)> {
    let egcd = g.extended_gcd(f);
    let h = egcd.gcd;
    if !(e.clone() % h.clone()).is_zero() {
        return Vec::new();
    }
    let scale = e.clone() / h.clone();
    let (b0, c0) = (egcd.x * scale.clone(), -egcd.y * scale);
    let (fs, gs) = (f.clone() / h.clone(), g.clone() / h);
    let lo = ceil_div(&-b0.clone(), &fs).max(ceil_div(&-c0.clone(), &gs));
    let hi = (bound.clone() - b0.clone()).div_floor(&fs).min((bound.clone() - c0.clone()).div_floor(&gs));
    crate::scalar::range_inclusive(lo, hi)
        .map(|t| (b0.clone() + fs.clone() * t.clone(), c0.clone() + gs.clone() * t))
        .collect()
}

/// `(p, negative unit, representation index, c)`, compared lexicographically.
type Rank<T> = (T, bool, usize, T);

fn search<T: PellInt>(d: &T, variant: EulerVariant, bound: &T) -> Result<Option<Quad<T>>> {
    let k = T::lit(variant.form().coefficient());
    let u = T::lit(variant.unit());
    let mut best: Option<(Rank<T>, Quad<T>)> = None;
    for (idx, rep) in reps(d, variant).into_iter().enumerate() {
        let (f, g) = (rep.f, rep.g);
        if g.is_zero() {
            continue;
        }
        for e in [u.clone(), -u.clone()] {
            for (b, c) in unit_line(&f, &g, &e, bound) {
                let Some(p) = square_root(&(b.sq() + k.clone() * c.sq())) else {
                    continue;
                };
                if p.is_zero() {
                    continue;
                }
                let q = b.clone() * f.clone() + k.clone() * c.clone() * g.clone();
                let rank = (p.clone(), e.is_negative(), idx, c.clone());
                if best.as_ref().is_none_or(|(r, _)| rank < *r) {
                    best = Some((rank, Quad { f: f.clone(), g: g.clone(), b, c, p, q }));
                }
            }
        }
    }
    Ok(best.map(|(_, q)| q))
}

/// Inverts `q = bf + k·cg`, `e = bg − cf` for `(b, c)` given `(f, g)`, `q`, `e`.
fn solve_bc<T: PellInt>(d: &T, k: &T, f: &T, g: &T, q: &T, e: &T) -> Option<(T, T)> {
    // the system matrix [[f, k·g], [g, −f]] has determinant −(f² + k·g²) = −d
    let b_num = f.clone() * q.clone() + k.clone() * g.clone() * e.clone();
    let c_num = g.clone() * q.clone() - f.clone() * e.clone();
    ((b_num.clone() % d.clone()).is_zero() && (c_num.clone() % d.clone()).is_zero())
        .then(|| (b_num / d.clone(), c_num / d.clone()))
}

fn reconstruct<T: PellInt>(d: &T, variant: EulerVariant, q: &T, p: &T) -> Option<Quad<T>> {
    let k = T::lit(variant.form().coefficient());
    let u = T::lit(variant.unit());
    let mut found: Vec<Quad<T>> = Vec::new();
    for rep in reps(d, variant) {
        for g in [rep.g.clone(), -rep.g.clone()] {
            for e in [u.clone(), -u.clone()] {
                if let Some((b, c)) = solve_bc(d, &k, &rep.f, &g, q, &e) {
                    found.push(Quad { f: rep.f.clone(), g: g.clone(), b, c, p: p.clone(), q: q.clone() });
                }
            }
        }
    }
    let natural = found.iter().position(|x| !x.b.is_negative() && !x.c.is_negative() && !x.g.is_negative());
    match natural {
        Some(i) => Some(found.swap_remove(i)),
        None => found.into_iter().next(),
    }
}

fn build<T: PellInt>(d: &T, variant: EulerVariant, x: Quad<T>) -> Result<Descent<T>> {
    let n = T::lit(variant.rhs());
    let qa = x.q.abs();
    let auxiliary = PellSolution::new(d.clone(), n, qa.clone(), x.p.clone())?;
    let (certificate, solution) = match variant {
        EulerVariant::Neg4 => {
            let (r, s) = (x.p.clone(), x.q.clone());
            let mut w = vec![("f", x.f), ("g", x.g), ("b", x.b), ("c", x.c), ("r", r.clone()), ("s", s.clone())];
            if r.is_odd() && s.is_odd() {
                w.push(("p", r.clone() * s.clone()));
                w.push(("q", s.sq() + T::lit(2)));
            }
            (Certificate::new(Method::EulerNeg4, d.clone(), w)?, lift_neg4(&r, &qa, d)?)
        }
        _ => {
            let lift = match variant {
                EulerVariant::Neg1 => lift_neg1(&x.p, &qa, d)?,
                EulerVariant::Neg2 => lift_neg2(&x.p, &qa, d)?,
                _ => lift_pos2(&x.p, &qa, d)?,
            };
            let w = vec![("f", x.f), ("g", x.g), ("b", x.b), ("c", x.c), ("p", x.p), ("q", x.q)];
            (Certificate::new(variant.method(), d.clone(), w)?, lift)
        }
    };
    Ok(Descent::new(certificate, Some(auxiliary), Some(solution)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn w(desc: &Descent<BigInt>, keys: &[&str]) -> Vec<i64> {
        keys.iter().map(|k| i64::try_from(desc.certificate.witness(k).unwrap().clone()).unwrap()).collect()
    }

    fn run(d: i64, v: EulerVariant, mode: Mode) -> Attempt<BigInt> {
        euler_descent(&BigInt::from(d), v, mode).unwrap()
    }

    #[test]
    fn table_one_column_13() {
        let desc = run(13, EulerVariant::Neg1, Mode::Search { bound: 100 }).unwrap();
        assert_eq!(w(&desc, &["f", "g", "b", "c", "p", "q"]), vec![2, 3, 3, 4, 5, 18]);
        let s = desc.solution.unwrap();
        assert_eq!((s.x().clone(), s.y().clone()), (649.into(), 180.into()));
    }

    #[test]
    fn table_two_column_19() {
        let desc = run(19, EulerVariant::Neg2, Mode::Search { bound: 100 }).unwrap();
        assert_eq!(w(&desc, &["f", "g", "b", "c", "p", "q"]), vec![1, 3, 1, 2, 3, 13]);
        let s = desc.solution.unwrap();
        assert_eq!((s.x().clone(), s.y().clone()), (170.into(), 39.into()));
    }

    #[test]
    fn chain_for_109() {
        let desc = run(109, EulerVariant::Neg4, Mode::Search { bound: 100 }).unwrap();
        assert_eq!(
            w(&desc, &["f", "g", "b", "c", "r", "s", "p", "q"]),
            vec![10, 3, 24, 7, 25, 261, 6525, 68123]
        );
        let s = desc.solution.unwrap();
        assert_eq!(s.x(), &"158070671986249".parse::<BigInt>().unwrap());
        assert_eq!(s.y(), &"15140424455100".parse::<BigInt>().unwrap());
    }

    #[test]
    fn search_misses_are_classified() {
        // 3 is not a sum of two squares
        assert_eq!(run(3, EulerVariant::Neg1, Mode::Search { bound: 50 }).unwrap_err(), Miss::Unsolvable);
        // 61 needs p = 3805
        assert_eq!(run(61, EulerVariant::Neg1, Mode::Search { bound: 100 }).unwrap_err(), Miss::BoundExhausted);
        assert!(run(61, EulerVariant::Neg1, Mode::Search { bound: 4000 }).is_ok());
    }

    #[test]
    fn reverse_mode_examples() {
        let desc = run(61, EulerVariant::Neg1, Mode::Reverse).unwrap();
        assert!(desc.certificate.is_valid());
        assert_eq!(desc.auxiliary.unwrap().y(), &BigInt::from(3805));
        assert_eq!(run(3, EulerVariant::Neg1, Mode::Reverse).unwrap_err(), Miss::Unsolvable);
        let desc = run(7, EulerVariant::Pos2, Mode::Reverse).unwrap();
        assert_eq!(desc.solution.unwrap().x(), &BigInt::from(8));
        let desc = run(2, EulerVariant::Neg4, Mode::Reverse).unwrap();
        assert!(desc.certificate.witness("p").is_none());
        assert_eq!(desc.solution.unwrap().x(), &BigInt::from(3));
    }

    #[test]
    fn reverse_mode_succeeds_whenever_the_auxiliary_equation_does() {
        for d in 2i64..=1000 {
            if crate::arith::is_square(&d) {
                continue;
            }
            let big = BigInt::from(d);
            for v in EulerVariant::ALL {
                let solvable = solve_rhs(&big, &BigInt::from(v.rhs())).unwrap().is_some();
                match euler_descent(&big, v, Mode::Reverse).unwrap() {
                    Ok(desc) => {
                        assert!(solvable);
                        assert!(desc.certificate.is_valid(), "d = {d} {v:?}");
                        assert!(desc.solution.unwrap().is_valid());
                    }
                    Err(Miss::NotApplicable(_)) => assert!(reps(&big, v).is_empty(), "d = {d} {v:?}"),
                    Err(miss) => {
                        assert_eq!(miss, Miss::Unsolvable);
                        assert!(!solvable, "d = {d} {v:?}");
                    }
                }
            }
        }
    }
}
