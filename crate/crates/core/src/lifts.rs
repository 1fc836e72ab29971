//! From auxiliary equations back to `x² − d·y² = 1`.
//!
//! Each lemma takes the auxiliary witness in Euler's naming (`q² − a·p² = N`) and
//! returns the Pell solution in the crate's orientation, `x² − a·y² = 1`; Euler's
//! own `axx + 1 = yy` has the two coordinates the other way round.

use crate::error::{contract, domain, Result};
use crate::scalar::PellInt;
use crate::solution::PellSolution;

fn require_residual<T: PellInt>(p: &T, q: &T, a: &T, expected: i64) -> Result<()> {
    let value = q.sq() - a.clone() * p.sq();
    if value != T::lit(expected) {
        return Err(contract(format!(
            "q² − a·p² = {q}² − {a}·{p}² = {value}, expected {expected} (residual {})",
            value.clone() - T::lit(expected)
        )));
    }
    Ok(())
}

fn one<T: PellInt>(a: &T, x: T, y: T) -> Result<PellSolution<T>> {
    PellSolution::from_signed(a.clone(), T::one(), x, y)
}

/// `q² − a·p² = −1` gives `(2q² + 1, 2pq)`.
pub fn lift_neg1<T: PellInt>(p: &T, q: &T, a: &T) -> Result<PellSolution<T>> {
    require_residual(p, q, a, -1)?;
    let two = T::lit(2);
    one(a, two.clone() * q.sq() + T::one(), two * p.clone() * q.clone())
}

/// `q² − a·p² = −2` gives `(q² + 1, pq)`.
pub fn lift_neg2<T: PellInt>(p: &T, q: &T, a: &T) -> Result<PellSolution<T>> {
    require_residual(p, q, a, -2)?;
    one(a, q.sq() + T::one(), p.clone() * q.clone())
}

/// `q² − a·p² = 2` gives `(q² − 1, pq)`.
pub fn lift_pos2<T: PellInt>(p: &T, q: &T, a: &T) -> Result<PellSolution<T>> {
    require_residual(p, q, a, 2)?;
    one(a, q.sq() - T::one(), p.clone() * q.clone())
}

/// `q² − a·p² = 4` with `p, q` odd gives `(q(q² − 3)/2, p(q² − 1)/2)`.
pub fn lift_pos4<T: PellInt>(p: &T, q: &T, a: &T) -> Result<PellSolution<T>> {
    if p.is_even() || q.is_even() {
        return Err(domain(format!("lift for +4 needs p and q odd, got p = {p}, q = {q}")));
    }
    require_residual(p, q, a, 4)?;
    let two = T::lit(2);
    let q2 = q.sq();
    one(
        a,
        q.clone() * (q2.clone() - T::lit(3)) / two.clone(),
        p.clone() * (q2 - T::one()) / two,
    )
}

/// `s² − a·r² = −4`.
///
/// With `r, s` odd this goes through `p = rs`, `q = s² + 2` and [`lift_pos4`]. An even
/// `s` makes the equation a disguised −1 case: both even halves to `(r/2, s/2)`, and
/// `r` odd forces `4 | a`, solved over `a/4` with the resulting `y` halved.
pub fn lift_neg4<T: PellInt>(r: &T, s: &T, a: &T) -> Result<PellSolution<T>> {
    require_residual(r, s, a, -4)?;
    let two = T::lit(2);
    if s.is_odd() {
        let p = r.clone() * s.clone();
        let q = s.sq() + two;
        return lift_pos4(&p, &q, a);
    }
    let half_s = s.clone() / two.clone();
    if r.is_even() {
        return lift_neg1(&(r.clone() / two), &half_s, a);
    }
    let quarter = a.clone() / T::lit(4);
    let inner = lift_neg1(r, &half_s, &quarter)?;
    one(a, inner.x().clone(), inner.y().clone() / two)
}

/// `r·x² − s·y² ∈ {1, 2}` gives a solution for `d = rs`.
pub fn lift_legendre<T: PellInt>(r: &T, s: &T, x: &T, y: &T) -> Result<PellSolution<T>> {
    let value = r.clone() * x.sq() - s.clone() * y.sq();
    let d = r.clone() * s.clone();
    let sum = r.clone() * x.sq() + s.clone() * y.sq();
    if value.is_one() {
        one(&d, sum, T::lit(2) * x.clone() * y.clone())
    } else if value == T::lit(2) {
        one(&d, sum / T::lit(2), x.clone() * y.clone())
    } else {
        Err(contract(format!("r·x² − s·y² = {r}·{x}² − {s}·{y}² = {value}, expected 1 or 2")))
    }
}

/// The Legendre equation behind a solution of `x² − d·y² = 1`.
///
/// Splits `(x − 1)(x + 1) = d·y²` into coprime halves and returns `(r, s, u, v)` with
/// `r·u² − s·v² ∈ {1, 2}` and `rs = d`. Returns `None` when the split does not produce
/// squares, which can happen for non-squarefree `d`.
pub fn legendre_from_solution<T: PellInt>(sol: &PellSolution<T>) -> Option<(T, T, T, T)> {
    if !sol.n().is_one() || sol.y().is_zero() {
        return None;
    }
    let (d, x) = (sol.d(), sol.x());
    let (plus, minus) = if x.is_odd() {
        let two = T::lit(2);
        ((x.clone() + T::one()) / two.clone(), (x.clone() - T::one()) / two)
    } else {
        (x.clone() + T::one(), x.clone() - T::one())
    };
    let r = plus.gcd(d);
    let s = d.clone() / r.clone();
    if !(minus.clone() % s.clone()).is_zero() || minus.is_zero() {
        return None;
    }
    let u = crate::arith::square_root(&(plus / r.clone()))?;
    let v = crate::arith::square_root(&(minus / s.clone()))?;
    let value = r.clone() * u.sq() - s.clone() * v.sq();
    (value.is_one() || value == T::lit(2)).then_some((r, s, u, v))
}

/// Brahmagupta composition.
pub fn compose<T: PellInt>(s1: &PellSolution<T>, s2: &PellSolution<T>) -> Result<PellSolution<T>> {
    if s1.d() != s2.d() {
        return Err(domain(format!("cannot compose solutions for d = {} and d = {}", s1.d(), s2.d())));
    }
    let d = s1.d().clone();
    let (x1, y1, x2, y2) = (s1.x(), s1.y(), s2.x(), s2.y());
    PellSolution::new(
        d.clone(),
        s1.n().clone() * s2.n().clone(),
        x1.clone() * x2.clone() + d * y1.clone() * y2.clone(),
        x1.clone() * y2.clone() + x2.clone() * y1.clone(),
    )
}

/// The `e ≥ 1` with `sol = fundᵉ`, if any.
pub fn power_index<T: PellInt>(sol: &PellSolution<T>, fund: &PellSolution<T>) -> Option<u64> {
    if sol.d() != fund.d() || !sol.n().is_one() || !fund.n().is_one() || fund.y().is_zero() {
        return None;
    }
    let mut cur = fund.clone();
    let mut e = 1;
    while cur.y() < sol.y() {
        cur = compose(&cur, fund).ok()?;
        e += 1;
    }
    (cur == *sol).then_some(e)
}


#[cfg(test)]
mod props {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn units(d: i64) -> Vec<PellSolution<BigInt>> {
        let fund = crate::contfrac::fundamental(&BigInt::from(d)).unwrap();
        let mut out = vec![fund.clone()];
        for _ in 0..4 {
            let next = compose(out.last().unwrap(), &fund).unwrap();
            out.push(next);
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]
        #[test]
        fn compose_is_commutative_and_associative(d in 2i64..300, i in 0usize..5, j in 0usize..5, k in 0usize..5) {
            prop_assume!(!crate::arith::is_square(&d));
            let u = units(d);
            let (a, b, c) = (&u[i], &u[j], &u[k]);
            prop_assert_eq!(compose(a, b).unwrap(), compose(b, a).unwrap());
            prop_assert_eq!(
                compose(&compose(a, b).unwrap(), c).unwrap(),
                compose(a, &compose(b, c).unwrap()).unwrap()
            );
            prop_assert_eq!(power_index(&compose(a, b).unwrap(), &u[0]), Some((i + j + 2) as u64));
        }
    }
}
