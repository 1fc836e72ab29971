//! Brute-force ground truth, independent of the continued-fraction and descent code.
//!
//! Only `isqrt` is shared.

use crate::arith::isqrt;
use crate::error::{domain, Result};
use crate::scalar::{range_inclusive, PellInt};
use crate::solution::PellSolution;

fn check_d<T: PellInt>(d: &T) -> Result<()> {
    let r = isqrt(d)?;
    if *d < T::lit(2) || r.clone() * r == *d {
        return Err(domain(format!("oracle needs a non-square d ≥ 2, got {d}")));
    }
    Ok(())
}

/// Every `(x, y)` with `0 ≤ y ≤ y_bound`, `x ≥ 0` and `x² − d·y² = n`, ascending in `y`.
pub fn brute_pell<T: PellInt>(d: &T, n: &T, y_bound: &T) -> Result<Vec<PellSolution<T>>> {
    check_d(d)?;
    let mut out = Vec::new();
    for y in range_inclusive(T::zero(), y_bound.clone()) {
        let v = d.clone() * y.clone() * y.clone() + n.clone();
        if v.is_negative() {
            continue;
        }
        let x = isqrt(&v)?;
        if x.clone() * x.clone() == v {
            out.push(PellSolution::new_unchecked(d.clone(), n.clone(), x, y));
        }
    }
    Ok(out)
}

/// Quadratic residues modulo 64, 63 and 65 as bit masks.
struct Residues {
    m64: u64,
    m63: u64,
    m65: u128,
}

impl Residues {
    fn new() -> Self {
        let mut r = Residues { m64: 0, m63: 0, m65: 0 };
        for i in 0u64..65 {
            r.m64 |= 1 << (i * i % 64);
            r.m63 |= 1 << (i * i % 63);
            r.m65 |= 1u128 << (i * i % 65);
        }
        r
    }

    fn maybe_square(&self, v: u64) -> bool {
        self.m64 >> (v % 64) & 1 == 1 && self.m63 >> (v % 63) & 1 == 1 && self.m65 >> (v % 65) & 1 == 1
    }
}

fn exact_sqrt_u64(v: u64) -> Option<u64> {
    let mut r = (v as f64).sqrt() as u64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    (r * r == v).then_some(r)
}

/// The smallest `(x, y)` with `1 ≤ y ≤ y_bound` and `x² − d·y² = 1`, by direct scan in
/// machine words. Needs `d·y_bound² + 1 < 2⁶³`.
pub fn brute_fundamental(d: u64, y_bound: u64) -> Result<Option<(u64, u64)>> {
    let r = (d as f64).sqrt() as u64;
    if d < 2 || (r * r == d) || ((r + 1) * (r + 1) == d) {
        return Err(domain(format!("oracle needs a non-square d ≥ 2, got {d}")));
    }
    let top = (y_bound as u128) * (y_bound as u128) * (d as u128) + 1;
    if top >= 1u128 << 63 {
        return Err(domain(format!("d = {d} with bound {y_bound} overflows the word-sized scan")));
    }
    let res = Residues::new();
    // v = d·y² + 1, stepped by d·(2y + 1)
    let mut v = d + 1;
    for y in 1..=y_bound {
        if res.maybe_square(v) {
            if let Some(x) = exact_sqrt_u64(v) {
                return Ok(Some((x, y)));
            }
        }
        v += d * (2 * y + 1);
    }
    Ok(None)
}

/// Every `(x, y)` with `|x|, |y| ≤ bound` and `a·x² + h·xy + c·y² = n`, lexicographic.
pub fn brute_form<T: PellInt>(a: &T, h: &T, c: &T, n: &T, bound: &T) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for x in range_inclusive(-bound.clone(), bound.clone()) {
        for y in range_inclusive(-bound.clone(), bound.clone()) {
            let v = a.clone() * x.clone() * x.clone() + h.clone() * x.clone() * y.clone() + c.clone() * y.clone() * y.clone();
            if v == *n {
                out.push((x.clone(), y));
            }
        }
    }
    out
}

/// Whether `x² − d·y² = −1` is solvable: the period of `√d` has odd length.
pub fn negpell_solvable<T: PellInt>(d: &T) -> Result<bool> {
    check_d(d)?;
    let root = isqrt(d)?;
    let (mut p, mut q) = (T::zero(), T::one());
    let mut len = 0u64;
    loop {
        let a = (p.clone() + root.clone()) / q.clone();
        p = a * q.clone() - p;
        q = (d.clone() - p.clone() * p.clone()) / q;
        len += 1;
        if q.is_one() {
            return Ok(len % 2 == 1);
        }
    }
}
