//! The polynomial identities behind the descents, checked exhaustively on small
//! boxes and on seeded random inputs of 64-bit size.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::descent::{gerardin_identity, GerardinCase};
use crate::scalar::PellInt;

/// `(bf + k·cg)² + k·(bg − cf)²` against `(b² + k·c²)(f² + k·g²)`.
pub fn product_identity<T: PellInt>(k: &T, b: &T, c: &T, f: &T, g: &T) -> (T, T) {
    let lhs = (b.clone() * f.clone() + k.clone() * c.clone() * g.clone()).sq()
        + k.clone() * (b.clone() * g.clone() - c.clone() * f.clone()).sq();
    let rhs = (b.sq() + k.clone() * c.sq()) * (f.sq() + k.clone() * g.sq());
    (lhs, rhs)
}

/// `(−bx² + 2akxy + kby²)² − (b² + ka²)(x² + ky²)²` against `−k(ax² + 2bxy − kay²)²`.
pub fn bapoungue_identity<T: PellInt>(k: &T, a: &T, b: &T, x: &T, y: &T) -> (T, T) {
    let two = T::lit(2);
    let z = -b.clone() * x.sq() + two.clone() * a.clone() * k.clone() * x.clone() * y.clone() + k.clone() * b.clone() * y.sq();
    let t = x.sq() + k.clone() * y.sq();
    let delta = b.sq() + k.clone() * a.sq();
    let u = a.clone() * x.sq() + two * b.clone() * x.clone() * y.clone() - k.clone() * a.clone() * y.sq();
    (z.sq() - delta * t.sq(), -k.clone() * u.sq())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub exhaustive_checked: u64,
    pub random_checked: u64,
    /// Up to ten failing inputs, rendered.
    pub failures: Vec<String>,
    pub failure_count: u64,
}

impl IdentityReport {
    fn new(name: &str) -> Self {
        IdentityReport { name: name.to_string(), exhaustive_checked: 0, random_checked: 0, failures: Vec::new(), failure_count: 0 }
    }

    fn record(&mut self, ok: bool, random: bool, input: impl FnOnce() -> String) {
        if random {
            self.random_checked += 1;
        } else {
            self.exhaustive_checked += 1;
        }
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < 10 {
                self.failures.push(input());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

fn grid4(r: i64) -> impl Iterator<Item = [i64; 4]> {
    (-r..=r).flat_map(move |a| (-r..=r).flat_map(move |b| (-r..=r).flat_map(move |c| (-r..=r).map(move |d| [a, b, c, d]))))
}

fn random_big(rng: &mut ChaCha8Rng) -> BigInt {
    BigInt::from(rng.gen::<i64>())
}

/// Product identities for `k = 1, 2, −2` over `[−range, range]⁴` plus `samples` random
/// 64-bit quadruples each.
pub fn check_products(range: i64, samples: u64, seed: u64) -> Vec<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    [1i64, 2, -2]
        .into_iter()
        .map(|k| {
            let mut rep = IdentityReport::new(&format!("product k={k}"));
            for [b, c, f, g] in grid4(range) {
                let (l, r) = product_identity(&k, &b, &c, &f, &g);
                rep.record(l == r, false, || format!("b={b} c={c} f={f} g={g}"));
            }
            let kk = BigInt::from(k);
            for _ in 0..samples {
                let v: Vec<BigInt> = (0..4).map(|_| random_big(&mut rng)).collect();
                let (l, r) = product_identity(&kk, &v[0], &v[1], &v[2], &v[3]);
                rep.record(l == r, true, || format!("{v:?}"));
            }
            rep
        })
        .collect()
}

/// The three sign-corrected Gérardin identities.
pub fn check_gerardin(range: i64, samples: u64, seed: u64) -> Vec<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6765_7261);
    GerardinCase::ALL
        .into_iter()
        .map(|case| {
            let mut rep = IdentityReport::new(&format!("gerardin {case:?}"));
            for [m, n, al, be] in grid4(range) {
                let ok = gerardin_identity(case, &m, &n, &al, &be).2;
                rep.record(ok, false, || format!("m={m} n={n} α={al} β={be}"));
            }
            for _ in 0..samples {
                let v: Vec<BigInt> = (0..4).map(|_| random_big(&mut rng)).collect();
                let ok = gerardin_identity(case, &v[0], &v[1], &v[2], &v[3]).2;
                rep.record(ok, true, || format!("{v:?}"));
            }
            rep
        })
        .collect()
}

/// The Bapoungué identity over `[−range, range]⁵`.
pub fn check_bapoungue(range: i64, samples: u64, seed: u64) -> IdentityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6261_706f);
    let mut rep = IdentityReport::new("bapoungue");
    for [k, a, b, x] in grid4(range) {
        for y in -range..=range {
            let (l, r) = bapoungue_identity(&k, &a, &b, &x, &y);
            rep.record(l == r, false, || format!("k={k} a={a} b={b} x={x} y={y}"));
        }
    }
    for _ in 0..samples {
        let v: Vec<BigInt> = (0..5).map(|_| random_big(&mut rng)).collect();
        let (l, r) = bapoungue_identity(&v[0], &v[1], &v[2], &v[3], &v[4]);
        rep.record(l == r, true, || format!("{v:?}"));
    }
    rep
}

/// Every suite with its customary box.
pub fn check_all(samples: u64, seed: u64) -> Vec<IdentityReport> {
    let mut out = check_products(30, samples, seed);
    out.extend(check_gerardin(20, samples, seed));
    out.push(check_bapoungue(10, samples, seed));
    out
}
