//! Gérardin's auxiliary equations `z² − A·t² ∈ {−1, +2, −4}`.
//!
//! Case A: `A = m² + n²`, `mα² + 2nαβ − mβ² = ±1`, `z = nα² − 2mαβ − nβ²`.
//! Case B: `A = m² − 2n²`, `nα² − 2mαβ + 2nβ² = ±1`, `z = mα² − 4nαβ + 2mβ²`.
//! Case C: `A = m² + n²`, `nα² − 2mαβ − nβ² = ±2`, `z = mα² + 2nαβ − mβ²`.
//! In A and C, `t = α² + β²`; in B, `t = α² − 2β²`.

use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, Method};
use super::forms::Form;
use super::{Attempt, Descent, Miss, Mode};
use crate::arith::{minus2_orbit_bound, representations, FormType};
use crate::error::Result;
use crate::lifts::{lift_neg1, lift_neg4, lift_pos2};
use crate::scalar::{range_inclusive, PellInt};
use crate::solution::PellSolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GerardinCase {
    A,
    B,
    C,
}

impl GerardinCase {
    pub const ALL: [GerardinCase; 3] = [GerardinCase::A, GerardinCase::B, GerardinCase::C];

    pub fn method(self) -> Method {
        match self {
            GerardinCase::A => Method::GerardinA,
            GerardinCase::B => Method::GerardinB,
            GerardinCase::C => Method::GerardinC,
        }
    }

    /// `z² − A·t²`.
    pub fn target(self) -> i64 {
        match self {
            GerardinCase::A => -1,
            GerardinCase::B => 2,
            GerardinCase::C => -4,
        }
    }

    fn unit(self) -> i64 {
        if self == GerardinCase::C {
            2
        } else {
            1
        }
    }

    fn form_type(self) -> FormType {
        if self == GerardinCase::B {
            FormType::Minus2
        } else {
            FormType::Plus1
        }
    }

    /// The bilinear unit form in `(α, β)`.
    fn unit_form<T: PellInt>(self, m: &T, n: &T) -> Form<T> {
        let (m, n) = (m.clone(), n.clone());
        match self {
            GerardinCase::A => Form::new(m.clone(), n, -m),
            GerardinCase::B => Form::new(n.clone(), -m, T::lit(2) * n),
            GerardinCase::C => Form::new(n.clone(), -m, -n),
        }
    }

    /// `(z, t)` from the witnesses.
    fn zt<T: PellInt>(self, m: &T, n: &T, al: &T, be: &T) -> (T, T) {
        let two = T::lit(2);
        let ab = al.clone() * be.clone();
        match self {
            GerardinCase::A => (
                n.clone() * al.sq() - two * m.clone() * ab - n.clone() * be.sq(),
                al.sq() + be.sq(),
            ),
            GerardinCase::B => (
                m.clone() * al.sq() - T::lit(4) * n.clone() * ab + two.clone() * m.clone() * be.sq(),
                al.sq() - two * be.sq(),
            ),
            GerardinCase::C => (
                m.clone() * al.sq() + two * n.clone() * ab - m.clone() * be.sq(),
                al.sq() + be.sq(),
            ),
        }
    }
}

/// Both sides of the case's identity: `z² − A·t²` against `−u²` (A), `2u²` (B) or
/// `−v²` (C), where `u`/`v` is the unit form's value. `A` is `m² ± n²` per case.
pub fn gerardin_identity<T: PellInt>(case: GerardinCase, m: &T, n: &T, al: &T, be: &T) -> (T, T, bool) {
    let a = match case {
        GerardinCase::B => m.sq() - T::lit(2) * n.sq(),
        _ => m.sq() + n.sq(),
    };
    let (z, t) = case.zt(m, n, al, be);
    let u = case.unit_form(m, n).eval(al, be);
    let lhs = z.sq() - a * t.sq();
    let rhs = match case {
        GerardinCase::B => T::lit(2) * u.sq(),
        _ => -u.sq(),
    };
    let ok = lhs == rhs;
    (lhs, rhs, ok)
}

pub fn gerardin_solve<T: PellInt>(a: &T, case: GerardinCase, mode: Mode) -> Result<Attempt<T>> {
    super::check_d(a)?;
    let kind = case.form_type();
    let rep_bound = if kind == FormType::Minus2 { minus2_orbit_bound(a) } else { T::zero() };
    let reps = representations(a, kind, &rep_bound);
    if reps.is_empty() {
        return Ok(Err(Miss::Unsolvable));
    }
    let u = T::lit(case.unit());
    let mut best: Option<(T, T, T, T)> = None;
    for rep in reps {
        let (m, n) = (rep.f, rep.g);
        let form = case.unit_form(&m, &n);
        match mode {
            Mode::Search { bound } => {
                if let Some((al, be)) = scan(&form, &u, &T::lit(bound as i64)) {
                    return finish(a, case, m, n, al, be).map(Ok);
                }
            }
            Mode::Reverse => {
                if let Some(((al, be), _)) = form.min_solution_pm(&u)? {
                    let t = case.zt(&m, &n, &al, &be).1.abs();
                    if best.as_ref().is_none_or(|b| t < case.zt(&b.0, &b.1, &b.2, &b.3).1.abs()) {
                        best = Some((m, n, al, be));
                    }
                }
            }
        }
    }
    match (best, mode) {
        (Some((m, n, al, be)), _) => finish(a, case, m, n, al, be).map(Ok),
        (None, Mode::Reverse) => Ok(Err(Miss::Unsolvable)),
        (None, _) => Ok(Err(Miss::BoundExhausted)),
    }
}

/// `β` ascending from 0, then the smallest `|α|`, positive first.
fn scan<T: PellInt>(form: &Form<T>, u: &T, bound: &T) -> Option<(T, T)> {
    let swapped = Form::new(form.c.clone(), form.b.clone(), form.a.clone());
    for be in range_inclusive(T::zero(), bound.clone()) {
        let best = [u.clone(), -u.clone()]
            .iter()
            .flat_map(|t| swapped.ys_for(&be, t))
            .filter(|al| al.abs() <= *bound && !(al.is_zero() && be.is_zero()))
            .min_by_key(|al| (al.abs(), al.is_negative()));
        if let Some(al) = best {
            return Some((al, be));
        }
    }
    None
}

fn finish<T: PellInt>(a: &T, case: GerardinCase, m: T, n: T, al: T, be: T) -> Result<Descent<T>> {
    let (z, t) = case.zt(&m, &n, &al, &be);
    let certificate = Certificate::new(
        case.method(),
        a.clone(),
        vec![("m", m), ("n", n), ("alpha", al), ("beta", be), ("z", z.clone()), ("t", t.clone())],
    )?;
    let (za, ta) = (z.abs(), t.abs());
    let auxiliary = PellSolution::new(a.clone(), T::lit(case.target()), za.clone(), ta.clone())?;
    let solution = match case {
        GerardinCase::A => lift_neg1(&ta, &za, a)?,
        GerardinCase::B => lift_pos2(&ta, &za, a)?,
        GerardinCase::C => lift_neg4(&ta, &za, a)?,
    };
    Ok(Descent::new(certificate, Some(auxiliary), Some(solution)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn w(desc: &Descent<BigInt>) -> Vec<i64> {
        ["m", "n", "alpha", "beta", "z", "t"]
            .iter()
            .map(|k| i64::try_from(desc.certificate.witness(k).unwrap().clone()).unwrap())
            .collect()
    }

    #[test]
    fn identity_examples() {
        let (lhs, rhs, ok) = gerardin_identity(GerardinCase::C, &big(29), &big(10), &big(6), &big(1));
        assert!(ok);
        assert_eq!((lhs, rhs), (big(-4), big(-4)));
        assert_eq!(gerardin_identity(GerardinCase::B, &big(3), &big(1), &big(1), &big(0)), (big(2), big(2), true));
        assert_eq!(gerardin_identity(GerardinCase::A, &big(2), &big(1), &big(2), &big(1)), (big(-100), big(-100), true));
    }

    #[test]
    fn identities_hold_on_a_grid() {
        for case in GerardinCase::ALL {
            for m in -6i64..=6 {
                for n in -6i64..=6 {
                    for al in -6i64..=6 {
                        for be in -6i64..=6 {
                            assert!(gerardin_identity(case, &m, &n, &al, &be).2, "{case:?} {m} {n} {al} {be}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn example_941() {
        let desc = gerardin_solve(&big(941), GerardinCase::C, Mode::Search { bound: 10 }).unwrap().unwrap();
        assert_eq!(w(&desc), vec![29, 10, 6, 1, 1135, 37]);
        let aux = desc.auxiliary.unwrap();
        assert_eq!((aux.x().clone(), aux.y().clone()), (big(1135), big(37)));
        assert!(desc.solution.unwrap().is_valid());
        let rev = gerardin_solve(&big(941), GerardinCase::C, Mode::Reverse).unwrap().unwrap();
        assert_eq!(w(&rev), vec![29, 10, 6, 1, 1135, 37]);
    }

    #[test]
    fn small_examples() {
        let desc = gerardin_solve(&big(5), GerardinCase::A, Mode::Search { bound: 5 }).unwrap().unwrap();
        assert_eq!(w(&desc), vec![1, 2, 1, 0, 2, 1]);
        let desc = gerardin_solve(&big(7), GerardinCase::B, Mode::Search { bound: 6 }).unwrap().unwrap();
        assert_eq!(w(&desc), vec![3, 1, 1, 0, 3, 1]);
        // the second representation 7 = 5² − 2·3² with (α, β) = (5, 2)
        let cert = Certificate::new(
            Method::GerardinB,
            big(7),
            vec![("m", big(5)), ("n", big(3)), ("alpha", big(5)), ("beta", big(2)), ("z", big(45)), ("t", big(17))],
        )
        .unwrap();
        assert!(cert.is_valid());
    }

    #[test]
    fn case_a_matches_negative_pell() {
        for d in 2i64..=600 {
            if crate::arith::is_square(&d) {
                continue;
            }
            let neg = crate::contfrac::negative_unit(&big(d)).unwrap().is_some();
            let got = gerardin_solve(&big(d), GerardinCase::A, Mode::Reverse).unwrap();
            assert_eq!(got.is_ok(), neg, "d = {d}");
        }
    }
}
