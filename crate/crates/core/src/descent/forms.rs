//! Binary quadratic forms `a·x² + 2b·xy + c·y²` with discriminant `D = b² − ac`.
//!
//! Every unit equation of the descent methods is such a form set equal to a small
//! constant, and in every case `D` is the `d` being solved.

use crate::arith::square_root;
use crate::contfrac::{class_representatives, fundamental, times_unit};
use crate::error::{domain, Result};
use crate::scalar::PellInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: PellInt> Form<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Form { a, b, c }
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        self.a.clone() * x.sq() + T::lit(2) * self.b.clone() * x.clone() * y.clone() + self.c.clone() * y.sq()
    }

    pub fn discriminant(&self) -> T {
        self.b.sq() - self.a.clone() * self.c.clone()
    }

    /// All integer `y` with `f(x, y) = t`, ascending.
    pub fn ys_for(&self, x: &T, t: &T) -> Vec<T> {
        let bx = self.b.clone() * x.clone();
        let rest = self.a.clone() * x.sq() - t.clone();
        if self.c.is_zero() {
            let lin = T::lit(2) * bx;
            if lin.is_zero() {
                return Vec::new();
            }
            return if (rest.clone() % lin.clone()).is_zero() { vec![-rest / lin] } else { Vec::new() };
        }
        let disc = bx.sq() - self.c.clone() * rest;
        let Some(s) = square_root(&disc) else {
            return Vec::new();
        };
        let mut out: Vec<T> = [-bx.clone() - s.clone(), -bx + s]
            .into_iter()
            .filter(|num| (num.clone() % self.c.clone()).is_zero())
            .map(|num| num / self.c.clone())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The solution of `f(x, y) = t` with the smallest `|y|`, then smallest `|x|`,
    /// normalized to `y ≥ 0` (and `x ≥ 0` when `y = 0`).
    pub fn min_solution(&self, t: &T) -> Result<Option<(T, T)>> {
        Ok(self.small_solutions(t, 2)?.into_iter().next())
    }

    /// Solutions of `f(x, y) = t` near the bottom of every unit orbit: the `per_side`
    /// nearest admissible members on each side of each orbit minimum, normalized, sorted
    /// by `|y|` then `|x|`, without duplicates.
    ///
    /// Exact: multiplying through by `a` turns the equation into `X² − D·Y² = a·t`
    /// with `X = a·x + b·y`, whose solutions are the classes times powers of the
    /// fundamental unit. A member yields an integral `x` iff `X ≡ b·Y (mod a)`, a
    /// condition periodic in the unit exponent, so only admissible members are formed.
    /// With `per_side ≥ 2` the first entry is the global minimum, since `|Y|` is
    /// unimodal along an orbit and can tie only at its bottom.
    pub fn small_solutions(&self, t: &T, per_side: usize) -> Result<Vec<(T, T)>> {
        if self.a.is_zero() {
            return Err(domain("exact form solver needs a ≠ 0"));
        }
        if t.is_zero() {
            return Err(domain("exact form solver needs a non-zero right-hand side"));
        }
        let d = self.discriminant();
        if !d.is_positive() || crate::arith::is_square(&d) {
            return Err(domain(format!("form discriminant {d} is not a positive non-square")));
        }
        let unit = fundamental(&d)?;
        let eps = (unit.x().clone(), unit.y().clone());
        let modulus = self.a.abs();
        let period = unit_period(&d, &eps, &modulus);
        let mut out: Vec<(T, T)> = Vec::new();
        for rep in class_representatives(&d, &(self.a.clone() * t.clone()))? {
            let low = orbit_minimum(&d, rep, &eps);
            let admissible = |k: usize| {
                let (x, y) = residue_power(&d, &low, &eps, k, &modulus);
                (x - self.b.clone() * y).mod_floor(&modulus).is_zero()
            };
            let hits: Vec<usize> = (0..period).filter(|&k| admissible(k)).collect();
            if hits.is_empty() {
                continue;
            }
            let len = hits.len();
            let ahead = |i: usize| hits[i % len] + period * (i / len);
            let behind = |i: usize| period * (1 + i / len) - hits[len - 1 - i % len];
            for (steps, inverse) in (0..per_side).flat_map(|i| [(ahead(i), false), (behind(i), true)]) {
                let (big_x, y) = walk(&d, &low, &eps, steps, inverse);
                let x = (big_x - self.b.clone() * y.clone()) / self.a.clone();
                out.push(normalize(x, y));
            }
        }
        out.sort_by_key(key);
        out.dedup();
        Ok(out)
    }

    /// [`Form::min_solution`] over `t` and `−t`; ties go to `t`.
    pub fn min_solution_pm(&self, t: &T) -> Result<Option<((T, T), T)>> {
        let pos = self.min_solution(t)?.map(|s| (s, t.clone()));
        let neg = self.min_solution(&-t.clone())?.map(|s| (s, -t.clone()));
        Ok(match (pos, neg) {
            (Some(p), Some(n)) => Some(if key(&n.0) < key(&p.0) { n } else { p }),
            (p, n) => p.or(n),
        })
    }
}

fn normalize<T: PellInt>(x: T, y: T) -> (T, T) {
    if y.is_negative() || (y.is_zero() && x.is_negative()) {
        (-x, -y)
    } else {
        (x, y)
    }
}

fn key<T: PellInt>((x, y): &(T, T)) -> (T, T, bool) {
    (y.abs(), x.abs(), x.is_negative())
}

/// Order of the unit modulo `m` (1 when `m = 1`).
fn unit_period<T: PellInt>(d: &T, eps: &(T, T), m: &T) -> usize {
    let start = (T::one().mod_floor(m), T::zero());
    let e = (eps.0.mod_floor(m), eps.1.mod_floor(m));
    let mut cur = start.clone();
    let mut k = 0;
    loop {
        cur = mul_mod(&cur, &e, m, d);
        k += 1;
        if cur == start {
            return k;
        }
    }
}

fn mul_mod<T: PellInt>(u: &(T, T), v: &(T, T), m: &T, d: &T) -> (T, T) {
    (
        (u.0.clone() * v.0.clone() + d.clone() * u.1.clone() * v.1.clone()).mod_floor(m),
        (u.0.clone() * v.1.clone() + u.1.clone() * v.0.clone()).mod_floor(m),
    )
}

fn residue_power<T: PellInt>(d: &T, start: &(T, T), eps: &(T, T), k: usize, m: &T) -> (T, T) {
    let e = (eps.0.mod_floor(m), eps.1.mod_floor(m));
    let mut cur = (start.0.mod_floor(m), start.1.mod_floor(m));
    for _ in 0..k {
        cur = mul_mod(&cur, &e, m, d);
    }
    cur
}

fn walk<T: PellInt>(d: &T, start: &(T, T), eps: &(T, T), steps: usize, inverse: bool) -> (T, T) {
    let mut cur = start.clone();
    for _ in 0..steps {
        cur = times_unit(d, (&cur.0, &cur.1), (&eps.0, &eps.1), inverse);
    }
    cur
}

/// The orbit member with the smallest `|y|`, keeping signs.
fn orbit_minimum<T: PellInt>(d: &T, start: (T, T), eps: &(T, T)) -> (T, T) {
    let mut best = start.clone();
    for inverse in [false, true] {
        let mut cur = start.clone();
        loop {
            let next = times_unit(d, (&cur.0, &cur.1), (&eps.0, &eps.1), inverse);
            if next.1.abs() > cur.1.abs() {
                break;
            }
            if next.1.abs() < best.1.abs() {
                best = next.clone();
            }
            cur = next;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use num_bigint::BigInt;

    fn form(a: i64, b: i64, c: i64) -> Form<BigInt> {
        Form::new(a.into(), b.into(), c.into())
    }

    fn brute_min(f: &Form<BigInt>, t: i64, bound: i64) -> Option<(i64, i64)> {
        let mut best: Option<(i64, i64)> = None;
        for y in 0..=bound {
            for x in -bound..=bound {
                if f.eval(&x.into(), &y.into()) == t.into() {
                    let better = match best {
                        None => true,
                        Some((bx, by)) => (y, x.abs(), x < 0) < (by, bx.abs(), bx < 0),
                    };
                    if better {
                        best = Some(if y == 0 { (x.abs(), 0) } else { (x, y) });
                    }
                }
            }
            if best.is_some() {
                break;
            }
        }
        best
    }

    #[test]
    fn ys_for_examples() {
        let hart61 = form(5, -6, -5);
        assert!(hart61.ys_for(&58.into(), &(-1).into()).contains(&21.into()));
        let f = form(0, 1, 1);
        // 2xy + y² = 3 at x = 1: y = 1 or −3
        assert_eq!(f.ys_for(&1.into(), &3.into()), vec![(-3).into(), 1.into()]);
    }

    #[test]
    fn exact_minimum_examples() {
        let hart61 = form(5, -6, -5);
        let ((x, y), t) = hart61.min_solution_pm(&1.into()).unwrap().unwrap();
        assert_eq!(hart61.eval(&x, &y), t);
        assert_eq!(x.sq() + y.sq(), 3805.into());
        assert_eq!(form(2, -5, -2).min_solution_pm(&1.into()).unwrap(), None);
        assert!(form(0, 1, 1).min_solution(&1.into()).is_err());
        assert!(form(1, 0, -4).min_solution(&1.into()).is_err());
    }

    #[test]
    fn exact_minimum_matches_brute_force() {
        for a in -6i64..=6 {
            for b in -4i64..=4 {
                for c in -6i64..=6 {
                    let f = form(a, b, c);
                    let d = f.discriminant();
                    if a == 0 || !d.is_positive() || crate::arith::is_square(&d) {
                        continue;
                    }
                    for t in [-3i64, -2, -1, 1, 2, 4] {
                        let exact = f.min_solution(&t.into()).unwrap();
                        let exact = exact.map(|(x, y)| (i64::try_from(x).unwrap(), i64::try_from(y).unwrap()));
                        let brute = brute_min(&f, t, 60);
                        match (exact, brute) {
                            (Some(e), Some(w)) => assert_eq!(e, w, "{a} {b} {c} t={t}"),
                            (None, Some(b)) => panic!("{a} {b:?} {c} t={t}: missed {b:?}"),
                            (Some(e), None) => assert!(e.1 > 60, "{a} {b} {c} t={t}: {e:?}"),
                            (None, None) => {}
                        }
                    }
                }
            }
        }
    }
}
