//! The integer scalar every solver is generic over.
//!
//! `BigInt` is the exact workhorse (see the aliases at the crate root). Fixed-width
//! types such as `i64` and `i128` also satisfy [`PellInt`] and are handy for bounded
//! scans where the magnitudes are known up front; they panic on overflow in debug
//! builds rather than wrapping silently.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait PellInt:
    Integer
    + Signed
    + Roots
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Small literal conversion; every scalar in use holds the whole `i64` range.
    fn lit(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type holds i64 literals")
    }

    fn sq(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl<T> PellInt for T where
    T: Integer
        + Signed
        + Roots
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Iterates `from..=to` for any scalar.
pub(crate) fn range_inclusive<T: PellInt>(from: T, to: T) -> impl Iterator<Item = T> {
    let mut cur = from;
    std::iter::from_fn(move || {
        if cur > to {
            return None;
        }
        let out = cur.clone();
        cur = cur.clone() + T::one();
        Some(out)
    })
}

/// Serde adapters writing integers as decimal strings.
pub mod dec {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T: FromStr, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse()
            .map_err(|_| D::Error::custom(format!("invalid decimal integer {raw:?}")))
    }

    pub mod opt {
        use super::*;

        pub fn serialize<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, T: FromStr, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Option<T>, D::Error> {
            match Option::<String>::deserialize(d)? {
                None => Ok(None),
                Some(raw) => raw
                    .parse()
                    .map(Some)
                    .map_err(|_| D::Error::custom(format!("invalid decimal integer {raw:?}"))),
            }
        }
    }

    pub mod pair {
        use super::*;
        use serde::ser::SerializeTuple;

        pub fn serialize<T: Display, S: Serializer>(v: &Option<(T, T)>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some((a, b)) => {
                    let mut t = s.serialize_tuple(2)?;
                    t.serialize_element(&a.to_string())?;
                    t.serialize_element(&b.to_string())?;
                    t.end()
                }
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, T: FromStr, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Option<(T, T)>, D::Error> {
            match Option::<(String, String)>::deserialize(d)? {
                None => Ok(None),
                Some((a, b)) => {
                    let pa = a.parse().map_err(|_| D::Error::custom(format!("invalid decimal integer {a:?}")))?;
                    let pb = b.parse().map_err(|_| D::Error::custom(format!("invalid decimal integer {b:?}")))?;
                    Ok(Some((pa, pb)))
                }
            }
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for item in v {
                seq.serialize_element(&item.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, T: FromStr, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
            Vec::<String>::deserialize(d)?
                .into_iter()
                .map(|raw| {
                    raw.parse()
                        .map_err(|_| D::Error::custom(format!("invalid decimal integer {raw:?}")))
                })
                .collect()
        }
    }
}
