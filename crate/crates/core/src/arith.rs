//! Exact integer primitives: square roots, factorization, residue symbols and the
//! enumeration of representations `d = f² + k·g²`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::scalar::{dec, range_inclusive, PellInt};

/// `⌊√n⌋` for `n ≥ 0`.
pub fn isqrt<T: PellInt>(n: &T) -> Result<T> {
    if n.is_negative() {
        return Err(domain(format!("isqrt of negative value {n}")));
    }
    Ok(n.sqrt())
}

pub fn is_square<T: PellInt>(n: &T) -> bool {
    square_root(n).is_some()
}

/// The exact square root of `n`, when `n` is a perfect square.
pub fn square_root<T: PellInt>(n: &T) -> Option<T> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (r.sq() == *n).then_some(r)
}

fn to_u64<T: PellInt>(n: &T, what: &str) -> Result<u64> {
    n.to_u64()
        .ok_or_else(|| domain(format!("{what} {n} is outside the supported range")))
}

/// Prime factorization as `(prime, exponent)` pairs in ascending prime order.
///
/// Supported for `1 ≤ n < 2⁶⁴`; the primality of each factor is certified by a
/// deterministic test for that range.
pub fn factorize<T: PellInt>(n: &T) -> Result<Vec<(T, u32)>> {
    if !n.is_positive() {
        return Err(domain(format!("factorize needs n ≥ 1, got {n}")));
    }
    let n = to_u64(n, "factorize input")?;
    Ok(num_prime::nt_funcs::factorize64(n)
        .into_iter()
        .map(|(p, e)| (T::from_u64(p).expect("prime below n"), e as u32))
        .collect())
}

pub fn is_prime<T: PellInt>(n: &T) -> bool {
    match n.to_u64() {
        Some(v) => num_prime::nt_funcs::is_prime64(v),
        None => false,
    }
}

pub fn is_squarefree<T: PellInt>(n: &T) -> Result<bool> {
    Ok(factorize(n)?.iter().all(|(_, e)| *e == 1))
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi<T: PellInt>(a: &T, n: &T) -> Result<i32> {
    if !n.is_positive() || n.is_even() {
        return Err(domain(format!("Jacobi symbol needs an odd positive modulus, got {n}")));
    }
    let (eight, three, four, five) = (T::lit(8), T::lit(3), T::lit(4), T::lit(5));
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut sign = 1;
    while !a.is_zero() {
        while a.is_even() {
            a = a / T::lit(2);
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { sign } else { 0 })
}

/// Which binary form `f² + k·g²` a representation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FormType {
    Plus1,
    Plus2,
    Minus2,
}

impl FormType {
    pub fn coefficient(self) -> i64 {
        match self {
            FormType::Plus1 => 1,
            FormType::Plus2 => 2,
            FormType::Minus2 => -2,
        }
    }

    pub fn evaluate<T: PellInt>(self, f: &T, g: &T) -> T {
        f.sq() + T::lit(self.coefficient()) * g.sq()
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(match self {
            FormType::Plus1 => "f²+g²",
            FormType::Plus2 => "f²+2g²",
            FormType::Minus2 => "f²−2g²",
        })
    }
}

/// `d = f² + k·g²` with `f > 0`, `g ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct Representation<T> {
    #[serde(with = "dec")]
    pub d: T,
    pub kind: FormType,
    #[serde(with = "dec")]
    pub f: T,
    #[serde(with = "dec")]
    pub g: T,
}

impl<T: PellInt> Representation<T> {
    pub fn holds(&self) -> bool {
        self.kind.evaluate(&self.f, &self.g) == self.d && self.f.is_positive() && !self.g.is_negative()
    }
}

/// All representations of `d` by the form `kind`, sorted by `f` ascending.
///
/// For `Plus1`/`Plus2` the list is finite and `search_bound` is ignored. Solutions of
/// `f² − 2g² = d` come in infinite orbits under `(f, g) ↦ (3f + 4g, 2f + 3g)`; for
/// `Minus2` each orbit is reported once by its member with the smallest `f > 0`
/// (and `g ≥ 0`), scanning `g ≤ search_bound`.
pub fn representations<T: PellInt>(d: &T, kind: FormType, search_bound: &T) -> Vec<Representation<T>> {
    if !d.is_positive() {
        return Vec::new();
    }
    let mut out: Vec<Representation<T>> = match kind {
        FormType::Plus1 | FormType::Plus2 => {
            let k = T::lit(kind.coefficient());
            let g_max = (d.clone() / k.clone()).sqrt();
            range_inclusive(T::zero(), g_max)
                .filter_map(|g| {
                    let rest = d.clone() - k.clone() * g.sq();
                    let f = square_root(&rest)?;
                    f.is_positive().then(|| Representation { d: d.clone(), kind, f, g })
                })
                .collect()
        }
        FormType::Minus2 => {
            let mut reps: Vec<Representation<T>> = Vec::new();
            for g in range_inclusive(T::zero(), search_bound.clone()) {
                let Some(f) = square_root(&(d.clone() + T::lit(2) * g.sq())) else {
                    continue;
                };
                let (f, g) = canonical_minus2(f, g);
                if !reps.iter().any(|r| r.f == f && r.g == g) {
                    reps.push(Representation { d: d.clone(), kind, f, g });
                }
            }
            reps
        }
    };
    out.sort_by(|a, b| a.f.cmp(&b.f).then_with(|| a.g.cmp(&b.g)));
    out
}

/// Walks `(f, g)` back along its automorph orbit to the member with smallest `f`
/// among those with `f > 0`, `g ≥ 0`.
fn canonical_minus2<T: PellInt>(mut f: T, mut g: T) -> (T, T) {
    let (two, three, four) = (T::lit(2), T::lit(3), T::lit(4));
    loop {
        let pf = three.clone() * f.clone() - four.clone() * g.clone();
        let pg = three.clone() * g.clone() - two.clone() * f.clone();
        if pf.is_positive() && !pg.is_negative() && pf < f {
            f = pf;
            g = pg;
        } else {
            return (f, g);
        }
    }
}

/// A `g` bound large enough for `representations(d, Minus2, ·)` to see every orbit.
///
/// Each orbit has a member with `|g| ≤ √(d/2)`; one automorph step from there lands on
/// the canonical member, whose `g` is then at most `2√(2d) + 3√(d/2)`.
pub fn minus2_orbit_bound<T: PellInt>(d: &T) -> T {
    let two = T::lit(2);
    T::lit(2) * (two.clone() * d.clone()).sqrt() + T::lit(3) * (d.clone() / two).sqrt() + T::lit(3)
}

/// Every ordered pair `(b, c)` with `b, c ≥ 0` and `b² + c² = p²`, by `b` descending.
pub fn hypotenuse_decompositions<T: PellInt>(p: &T) -> Vec<(T, T)> {
    if !p.is_positive() {
        return Vec::new();
    }
    let p2 = p.sq();
    range_inclusive(T::zero(), p.clone())
        .filter_map(|c| square_root(&(p2.clone() - c.sq())).map(|b| (b, c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn reps(d: i64, kind: FormType, bound: i64) -> Vec<(i64, i64)> {
        representations(&d, kind, &bound).into_iter().map(|r| (r.f, r.g)).collect()
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&0i64).unwrap(), 0);
        assert_eq!(isqrt(&61i64).unwrap(), 7);
        let big: BigInt = "1766319049".parse().unwrap();
        assert_eq!(isqrt(&(big.clone() * &big)).unwrap(), big);
        assert!(matches!(isqrt(&-1i64), Err(crate::PellError::Domain(_))));
    }

    #[test]
    fn is_square_examples() {
        assert!(is_square(&4096576i64));
        assert_eq!(2024i64 * 2024, 4096576);
        assert!(!is_square(&61i64));
        assert!(!is_square(&-4i64));
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(&2306i64).unwrap(), vec![(2, 1), (1153, 1)]);
        assert_eq!(factorize(&941i64).unwrap(), vec![(941, 1)]);
        assert!(factorize(&1i64).unwrap().is_empty());
        assert!(factorize(&0i64).is_err());
    }

    #[test]
    fn factorize_matches_trial_division() {
        for n in 1i64..3000 {
            let mut rest = n;
            let mut expected = Vec::new();
            let mut p = 2;
            while p * p <= rest {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                if e > 0 {
                    expected.push((p, e));
                }
                p += 1;
            }
            if rest > 1 {
                expected.push((rest, 1));
            }
            assert_eq!(factorize(&n).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn representation_examples() {
        assert_eq!(reps(13, FormType::Plus1, 0), vec![(2, 3), (3, 2)]);
        assert_eq!(reps(19, FormType::Plus2, 0), vec![(1, 3)]);
        assert_eq!(reps(7, FormType::Minus2, 10), vec![(3, 1), (5, 3)]);
    }

    #[test]
    fn representations_reconstruct_d() {
        for d in 1i64..=10_000 {
            for kind in [FormType::Plus1, FormType::Plus2, FormType::Minus2] {
                for r in representations(&d, kind, &60) {
                    assert!(r.holds(), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn two_square_existence_matches_factorization() {
        for d in 1i64..=10_000 {
            let expected = factorize(&d)
                .unwrap()
                .iter()
                .all(|(p, e)| p % 4 != 3 || e % 2 == 0);
            let found = !representations(&d, FormType::Plus1, &0).is_empty();
            assert_eq!(found, expected, "d = {d}");
        }
    }

    #[test]
    fn minus2_bound_reaches_every_orbit() {
        // every orbit member with g up to a generous bound canonicalizes into the list
        for d in 1i64..=400 {
            let listed = reps(d, FormType::Minus2, minus2_orbit_bound(&d));
            let wide = reps(d, FormType::Minus2, 3000);
            assert_eq!(listed, wide, "d = {d}");
        }
    }

    #[test]
    fn hypotenuse_examples() {
        assert_eq!(hypotenuse_decompositions(&5i64), vec![(5, 0), (4, 3), (3, 4), (0, 5)]);
        assert!(hypotenuse_decompositions(&25i64).contains(&(24, 7)));
        assert_eq!(hypotenuse_decompositions(&2i64), vec![(2, 0), (0, 2)]);
    }

    #[test]
    fn hypotenuse_matches_scan() {
        for p in 1i64..=1000 {
            let mut scan = Vec::new();
            for b in 0..=p {
                for c in (0..=p).take_while(|c| b * b + c * c <= p * p) {
                    if b * b + c * c == p * p {
                        scan.push((b, c));
                    }
                }
            }
            scan.sort_by_key(|x| std::cmp::Reverse(x.0));
            assert_eq!(hypotenuse_decompositions(&p), scan);
        }
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in [3i64, 5, 7, 11, 13, 17, 1153] {
            for a in 0..p {
                let e = (0..(p - 1) / 2).fold(1i64, |acc, _| acc * a % p);
                let expected = match e {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                };
                assert_eq!(jacobi(&a, &p).unwrap(), expected, "({a}/{p})");
            }
        }
        assert_eq!(jacobi(&3i64, &17).unwrap(), -1);
        assert_eq!(jacobi(&5i64, &17).unwrap(), -1);
        assert!(jacobi(&3i64, &8).is_err());
    }
}
