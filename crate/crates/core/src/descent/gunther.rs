//! Günther's reading of `2x² − 1 = y²` through `p² + 2pq − q² = z`, `z = ±1`.
//!
//! Only `d = 2` is handled directly; for `d = a² + b²` the method is Hart's.

use super::certificate::{Certificate, Method};
use super::hart::hart_tagged;
use super::{Attempt, Descent, Miss, Mode};
use crate::arith::square_root;
use crate::error::{domain, Result};
use crate::lifts::lift_neg1;
use crate::scalar::{range_inclusive, PellInt};
use crate::solution::PellSolution;

pub fn gunther<T: PellInt>(d: &T, mode: Mode) -> Result<Attempt<T>> {
    super::check_d(d)?;
    if *d != T::lit(2) {
        return hart_tagged(d, mode, Method::Gunther);
    }
    let bound = match mode {
        Mode::Search { bound } => T::lit(bound as i64),
        // (1, 0) already works
        Mode::Reverse => T::one(),
    };
    let pairs = gunther_pairs(&bound);
    let mut it = pairs.into_iter();
    let Some((p, q)) = it.next() else {
        return Ok(Err(Miss::BoundExhausted));
    };
    let mut desc = gunther_pair(&p, &q)?;
    for (p, q) in it {
        let more = gunther_pair(&p, &q)?;
        if let Some(aux) = more.auxiliary {
            desc.related.push((format!("p={p}, q={q}"), aux));
        }
    }
    Ok(Ok(desc))
}

/// All `(p, q)` with `0 ≤ p, q ≤ bound` and `p² + 2pq − q² = ±1`, by `q` then `p`.
pub fn gunther_pairs<T: PellInt>(bound: &T) -> Vec<(T, T)> {
    let two = T::lit(2);
    let mut out = Vec::new();
    for q in range_inclusive(T::zero(), bound.clone()) {
        // p = −q ± √(2q² + z)
        let mut ps: Vec<T> = [T::one(), -T::one()]
            .into_iter()
            .filter_map(|z| square_root(&(two.clone() * q.sq() + z)))
            .flat_map(|r| [r.clone() - q.clone(), -r - q.clone()])
            .filter(|p| !p.is_negative() && p <= bound)
            .collect();
        ps.sort();
        ps.dedup();
        out.extend(ps.into_iter().map(|p| (p, q.clone())));
    }
    out
}

/// The certificate and solution of `2x² − 1 = y²` produced by one pair.
pub fn gunther_pair<T: PellInt>(p: &T, q: &T) -> Result<Descent<T>> {
    let two = T::lit(2);
    let z = p.sq() + two.clone() * p.clone() * q.clone() - q.sq();
    if !z.abs().is_one() {
        return Err(domain(format!("p² + 2pq − q² = {z} for (p, q) = ({p}, {q}), expected ±1")));
    }
    // 2q² + z = (p + q)²
    let root = (p.clone() + q.clone()).abs();
    let four_q2 = T::lit(4) * q.sq();
    let x = ((four_q2.clone() + z.clone() - two * q.clone() * root.clone()) * z.clone()).abs();
    let y = ((-four_q2 - z.clone() + T::lit(4) * q.clone() * root) * z.clone()).abs();
    let d = T::lit(2);
    let certificate = Certificate::new(
        Method::Gunther,
        d.clone(),
        vec![("p", p.clone()), ("q", q.clone()), ("z", z), ("x", x.clone()), ("y", y.clone())],
    )?;
    let auxiliary = PellSolution::new(d.clone(), -T::one(), y.clone(), x.clone())?;
    let solution = lift_neg1(&x, &y, &d)?;
    Ok(Descent::new(certificate, Some(auxiliary), Some(solution)))
}
