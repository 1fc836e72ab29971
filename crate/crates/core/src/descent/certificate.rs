use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{contract, Result};
use crate::scalar::{dec, PellInt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    EulerNeg1,
    EulerNeg2,
    EulerPos2,
    EulerNeg4,
    Hart,
    Sylvester,
    Gunther,
    GerardinA,
    GerardinB,
    GerardinC,
    HardyWilliams,
    Bapoungue,
    #[serde(rename = "ARTEHA_1MOD4")]
    Arteha1Mod4,
    #[serde(rename = "ARTEHA_3MOD8")]
    Arteha3Mod8,
    #[serde(rename = "ARTEHA_7MOD8")]
    Arteha7Mod8,
}

impl Method {
    pub const ALL: [Method; 15] = [
        Method::EulerNeg1,
        Method::EulerNeg2,
        Method::EulerPos2,
        Method::EulerNeg4,
        Method::Hart,
        Method::Sylvester,
        Method::Gunther,
        Method::GerardinA,
        Method::GerardinB,
        Method::GerardinC,
        Method::HardyWilliams,
        Method::Bapoungue,
        Method::Arteha1Mod4,
        Method::Arteha3Mod8,
        Method::Arteha7Mod8,
    ];

    /// Lower-case id used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            Method::EulerNeg1 => "euler_neg1",
            Method::EulerNeg2 => "euler_neg2",
            Method::EulerPos2 => "euler_pos2",
            Method::EulerNeg4 => "euler_neg4",
            Method::Hart => "hart",
            Method::Sylvester => "sylvester",
            Method::Gunther => "gunther",
            Method::GerardinA => "gerardin_a",
            Method::GerardinB => "gerardin_b",
            Method::GerardinC => "gerardin_c",
            Method::HardyWilliams => "hardy_williams",
            Method::Bapoungue => "bapoungue",
            Method::Arteha1Mod4 => "arteha_1mod4",
            Method::Arteha3Mod8 => "arteha_3mod8",
            Method::Arteha7Mod8 => "arteha_7mod8",
        }
    }

    pub fn from_id(id: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.id() == id)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One defining equation of a certificate: `value` must be one of `required`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct Residual<T: PellInt> {
    pub label: String,
    #[serde(with = "dec")]
    pub value: T,
    #[serde(with = "dec::vec")]
    pub required: Vec<T>,
}

impl<T: PellInt> Residual<T> {
    pub fn new(label: impl Into<String>, value: T, required: Vec<T>) -> Self {
        Residual { label: label.into(), value, required }
    }

    /// `value ∈ {−1, 1}`, and similarly for any `±k`.
    pub fn plus_minus(label: impl Into<String>, value: T, k: T) -> Self {
        Residual::new(label, value, vec![-k.clone(), k])
    }

    pub fn equals(label: impl Into<String>, value: T, required: T) -> Self {
        Residual::new(label, value, vec![required])
    }

    pub fn holds(&self) -> bool {
        self.required.contains(&self.value)
    }
}

/// Named witnesses, kept in insertion order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witnesses<T>(pub Vec<(String, T)>);

impl<T: PellInt> Witnesses<T> {
    pub fn get(&self, key: &str) -> Option<&T> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub(crate) fn need(&self, key: &str) -> Result<&T> {
        self.get(key).ok_or_else(|| contract(format!("certificate is missing witness `{key}`")))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(k, _)| k.as_str())
    }
}

impl<T: PellInt> Serialize for Witnesses<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, &v.to_string())?;
        }
        map.end()
    }
}

impl<'de, T: PellInt> Deserialize<'de> for Witnesses<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V<T>(std::marker::PhantomData<T>);
        impl<'de, T: PellInt> Visitor<'de> for V<T> {
            type Value = Witnesses<T>;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from witness names to decimal strings")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    let value = v
                        .parse::<T>()
                        .map_err(|_| serde::de::Error::custom(format!("witness `{k}`: not an integer: {v}")))?;
                    out.push((k, value));
                }
                Ok(Witnesses(out))
            }
        }
        d.deserialize_map(V(std::marker::PhantomData))
    }
}

/// A method-tagged witness record; re-verifiable from `d` and the witnesses alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct Certificate<T: PellInt> {
    pub method: Method,
    #[serde(with = "dec")]
    pub d: T,
    pub witnesses: Witnesses<T>,
    pub defining_residuals: Vec<Residual<T>>,
}

impl<T: PellInt> Certificate<T> {
    /// Computes the residuals for `method` and refuses to build an invalid certificate.
    pub fn new(method: Method, d: T, witnesses: Vec<(&str, T)>) -> Result<Self> {
        let witnesses = Witnesses(witnesses.into_iter().map(|(k, v)| (k.to_string(), v)).collect());
        let defining_residuals = super::residuals::compute(method, &d, &witnesses)?;
        let cert = Certificate { method, d, witnesses, defining_residuals };
        if let Some(bad) = cert.defining_residuals.iter().find(|r| !r.holds()) {
            return Err(contract(format!(
                "{} certificate for d = {}: {} = {}, expected one of {:?}",
                method,
                cert.d,
                bad.label,
                bad.value,
                bad.required.iter().map(ToString::to_string).collect::<Vec<_>>()
            )));
        }
        Ok(cert)
    }

    pub fn witness(&self, key: &str) -> Option<&T> {
        self.witnesses.get(key)
    }

    /// Recomputes every residual from the witnesses and checks it.
    ///
    /// A certificate passes only if the stored residuals are exactly the recomputed
    /// ones and each takes a required value.
    pub fn verify(&self) -> Result<()> {
        let fresh = super::residuals::compute(self.method, &self.d, &self.witnesses)?;
        if fresh != self.defining_residuals {
            return Err(contract(format!(
                "{} certificate for d = {}: stored residuals disagree with recomputation",
                self.method, self.d
            )));
        }
        match fresh.iter().find(|r| !r.holds()) {
            Some(bad) => Err(contract(format!(
                "{} certificate for d = {}: {} = {}",
                self.method, self.d, bad.label, bad.value
            ))),
            None => Ok(()),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_ok()
    }
}

impl<T: PellInt> fmt::Display for Certificate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.witnesses.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{} d={} {{{}}}", self.method, self.d, parts.join(", "))
    }
}
