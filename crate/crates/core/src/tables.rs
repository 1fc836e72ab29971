//! Euler's tables: fix `p`, decompose `p²`, and list the `(f, g)` with `bg − cf = ±1`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::lifts::{lift_neg1, lift_neg2};
use crate::scalar::{dec, range_inclusive, PellInt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFamily {
    /// `p² = b² + c²`, `q² − a·p² = −1`.
    Euler1,
    /// `p² = b² + 2c²`, `q² − a·p² = −2`.
    Euler2,
}

impl TableFamily {
    fn k(self) -> i64 {
        match self {
            TableFamily::Euler1 => 1,
            TableFamily::Euler2 => 2,
        }
    }

    pub fn default_columns(self) -> usize {
        match self {
            TableFamily::Euler1 => 6,
            TableFamily::Euler2 => 7,
        }
    }
}

/// One column of the table, with `x`, `y` as printed: `y² − a·x² = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct TableRow<T: PellInt> {
    #[serde(with = "dec")]
    pub f: T,
    #[serde(with = "dec")]
    pub g: T,
    #[serde(with = "dec")]
    pub a: T,
    #[serde(with = "dec")]
    pub q: T,
    #[serde(with = "dec")]
    pub x: T,
    #[serde(with = "dec")]
    pub y: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct EulerTable<T: PellInt> {
    pub family: TableFamily,
    #[serde(with = "dec")]
    pub p: T,
    #[serde(with = "dec")]
    pub b: T,
    #[serde(with = "dec")]
    pub c: T,
    pub rows: Vec<TableRow<T>>,
}

/// The primitive `(b, c)` with `p² = b² + k·c²`, `b` odd, `c > 0` and `b` smallest.
pub fn primitive_decomposition<T: PellInt>(family: TableFamily, p: &T) -> Option<(T, T)> {
    let k = T::lit(family.k());
    let p2 = p.sq();
    range_inclusive(T::one(), p.clone())
        .filter(|b| b.is_odd())
        .find_map(|b| {
            let rest = p2.clone() - b.sq();
            if !rest.is_positive() || !(rest.clone() % k.clone()).is_zero() {
                return None;
            }
            let c = crate::arith::square_root(&(rest / k.clone()))?;
            (c.is_positive() && b.gcd(&c).is_one()).then_some((b, c))
        })
}

/// The first `columns` entries, `f` ascending and then `g` ascending.
///
/// `None` when `p²` has no primitive decomposition.
pub fn euler_table<T: PellInt>(family: TableFamily, p: &T, columns: usize) -> Result<Option<EulerTable<T>>> {
    if !p.is_positive() {
        return Err(domain(format!("p must be positive, got {p}")));
    }
    let Some((b, c)) = primitive_decomposition(family, p) else {
        return Ok(None);
    };
    let k = T::lit(family.k());
    let mut rows = Vec::new();
    let mut f = T::one();
    while rows.len() < columns {
        let mut gs: Vec<T> = [T::one(), -T::one()]
            .into_iter()
            .map(|e| c.clone() * f.clone() + e)
            .filter(|num| (num.clone() % b.clone()).is_zero())
            .map(|num| num / b.clone())
            .filter(|g| g.is_positive())
            .collect();
        gs.sort();
        for g in gs {
            if rows.len() == columns {
                break;
            }
            let a = f.sq() + k.clone() * g.sq();
            let q = b.clone() * f.clone() + k.clone() * c.clone() * g.clone();
            let sol = match family {
                TableFamily::Euler1 => lift_neg1(p, &q, &a)?,
                TableFamily::Euler2 => lift_neg2(p, &q, &a)?,
            };
            rows.push(TableRow { f: f.clone(), g, a, q, x: sol.y().clone(), y: sol.x().clone() });
        }
        f = f + T::one();
    }
    Ok(Some(EulerTable { family, p: p.clone(), b, c, rows }))
}

impl<T: PellInt> EulerTable<T> {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("f,g,a,q,x,y\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{},{}", r.f, r.g, r.a, r.q, r.x, r.y);
        }
        out
    }

    /// The table laid out as printed: one line per quantity.
    pub fn to_text(&self) -> String {
        let cells: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|r| [&r.f, &r.g, &r.a, &r.q, &r.x, &r.y].map(ToString::to_string))
            .collect();
        let widths: Vec<usize> = cells.iter().map(|c| c.iter().map(String::len).max().unwrap_or(1)).collect();
        let mut out = String::new();
        for (i, label) in ["f", "g", "a", "q", "x", "y"].iter().enumerate() {
            let _ = write!(out, "{label} |");
            for (col, w) in cells.iter().zip(&widths) {
                let _ = write!(out, " {:>w$}", col[i], w = w);
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn cols(t: &EulerTable<BigInt>) -> Vec<[i64; 6]> {
        t.rows
            .iter()
            .map(|r| [&r.f, &r.g, &r.a, &r.q, &r.x, &r.y].map(|v| i64::try_from(v.clone()).unwrap()))
            .collect()
    }

    #[test]
    fn first_table() {
        let t = euler_table(TableFamily::Euler1, &BigInt::from(5), 6).unwrap().unwrap();
        assert_eq!(
            cols(&t),
            vec![
                [1, 1, 2, 7, 70, 99],
                [2, 3, 13, 18, 180, 649],
                [4, 5, 41, 32, 320, 2049],
                [5, 7, 74, 43, 430, 3699],
                [7, 9, 130, 57, 570, 6499],
                [8, 11, 185, 68, 680, 9249],
            ]
        );
    }

    #[test]
    fn second_table() {
        let t = euler_table(TableFamily::Euler2, &BigInt::from(3), 7).unwrap().unwrap();
        assert_eq!(
            cols(&t),
            vec![
                [1, 1, 3, 5, 15, 26],
                [1, 3, 19, 13, 39, 170],
                [2, 3, 22, 14, 42, 197],
                [2, 5, 54, 22, 66, 485],
                [3, 5, 59, 23, 69, 530],
                [3, 7, 107, 31, 93, 962],
                [4, 7, 114, 32, 96, 1025],
            ]
        );
    }

    #[test]
    fn decompositions() {
        let dec = |fam, p: i64| primitive_decomposition(fam, &p);
        assert_eq!(dec(TableFamily::Euler1, 13), Some((5, 12)));
        assert_eq!(dec(TableFamily::Euler1, 25), Some((7, 24)));
        assert_eq!(dec(TableFamily::Euler1, 9), None);
        assert_eq!(dec(TableFamily::Euler2, 9), Some((7, 4)));
        let t = euler_table(TableFamily::Euler1, &BigInt::from(13), 4).unwrap().unwrap();
        assert!(t.rows.iter().any(|r| r.a == BigInt::from(58)));
    }
}
