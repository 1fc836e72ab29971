//! `MethodReport`: the outcome of one method on one `d`, in a JSON-stable shape.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::contfrac::fundamental;
use crate::descent::{self, Attempt, Certificate, Method, Miss, Mode};
use crate::error::Result;
use crate::lifts::power_index;
use crate::scalar::{dec, PellInt};
use crate::solution::PellSolution;

pub const SCHEMA: &str = "v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Solved,
    Unsolvable,
    BoundExhausted,
    NotApplicable,
}

impl Outcome {
    pub const ALL: [Outcome; 4] = [Outcome::Solved, Outcome::Unsolvable, Outcome::BoundExhausted, Outcome::NotApplicable];

    pub fn label(self) -> &'static str {
        match self {
            Outcome::Solved => "SOLVED",
            Outcome::Unsolvable => "UNSOLVABLE",
            Outcome::BoundExhausted => "BOUND_EXHAUSTED",
            Outcome::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: PellInt")]
pub struct MethodReport<T: PellInt> {
    pub schema: String,
    pub method: String,
    #[serde(with = "dec")]
    pub d: T,
    pub mode: String,
    pub outcome: Outcome,
    pub reason: Option<String>,
    pub certificate: Option<Certificate<T>>,
    pub auxiliary: Option<PellSolution<T>>,
    pub solution: Option<PellSolution<T>>,
    /// `(x, y)` with `y² − d·x² = 1`, Euler's labelling.
    #[serde(with = "dec::pair")]
    pub paper_orientation: Option<(T, T)>,
    pub power_index: Option<u64>,
    pub elapsed_micros: u64,
}

pub fn mode_label(mode: Mode) -> String {
    match mode {
        Mode::Search { bound } => format!("search({bound})"),
        Mode::Reverse => "reverse".to_string(),
    }
}

impl<T: PellInt> MethodReport<T> {
    /// Runs `method` on `d` and records the result.
    pub fn run(method: Method, d: &T, mode: Mode) -> Result<Self> {
        let start = Instant::now();
        let attempt = descent::run(method, d, mode)?;
        let elapsed = start.elapsed().as_micros() as u64;
        Self::from_attempt(method, d, mode, attempt, elapsed)
    }

    pub fn from_attempt(method: Method, d: &T, mode: Mode, attempt: Attempt<T>, elapsed_micros: u64) -> Result<Self> {
        let mut report = MethodReport {
            schema: SCHEMA.to_string(),
            method: method.id().to_string(),
            d: d.clone(),
            mode: mode_label(mode),
            outcome: Outcome::Solved,
            reason: None,
            certificate: None,
            auxiliary: None,
            solution: None,
            paper_orientation: None,
            power_index: None,
            elapsed_micros,
        };
        match attempt {
            Ok(desc) => {
                let solution = desc.solution.or_else(|| desc.auxiliary.clone());
                if let Some(sol) = solution.as_ref().filter(|s| s.n().is_one()) {
                    report.paper_orientation = Some(sol.swapped());
                    report.power_index = power_index(sol, &fundamental(sol.d())?);
                }
                report.certificate = Some(desc.certificate);
                report.auxiliary = desc.auxiliary;
                report.solution = solution;
            }
            Err(miss) => {
                let (outcome, reason) = match miss {
                    Miss::BoundExhausted => (Outcome::BoundExhausted, None),
                    Miss::Unsolvable => (Outcome::Unsolvable, None),
                    Miss::NotApplicable(why) => (Outcome::NotApplicable, Some(why)),
                };
                report.outcome = outcome;
                report.reason = reason;
            }
        }
        Ok(report)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} d={} [{}]: {}", self.method, self.d, self.mode, self.outcome.label());
        if let Some(r) = &self.reason {
            out.push_str(&format!(" ({r})"));
        }
        out.push('\n');
        if let Some(c) = &self.certificate {
            let w: Vec<String> = c.witnesses.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("  certificate: {}\n", w.join(", ")));
            for r in &c.defining_residuals {
                let req: Vec<String> = r.required.iter().map(ToString::to_string).collect();
                out.push_str(&format!("    {} = {} (want {})\n", r.label, r.value, req.join(" or ")));
            }
        }
        if let Some(a) = &self.auxiliary {
            out.push_str(&format!("  auxiliary: {a}\n"));
        }
        if let Some(s) = &self.solution {
            out.push_str(&format!("  solution: {s}\n"));
        }
        if let Some((x, y)) = &self.paper_orientation {
            out.push_str(&format!("  paper orientation: x={x}, y={y}\n"));
        }
        if let Some(e) = self.power_index {
            out.push_str(&format!("  power index: {e}\n"));
        }
        out.push_str(&format!("  elapsed: {} µs\n", self.elapsed_micros));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn json_round_trip() {
        for (m, d) in [(Method::EulerNeg4, 109), (Method::Hart, 61), (Method::Sylvester, 15), (Method::Hart, 3)] {
            let r = MethodReport::run(m, &BigInt::from(d), Mode::Reverse).unwrap();
            let back = MethodReport::<BigInt>::from_json(&r.to_json()).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn paper_orientation_for_109() {
        let r = MethodReport::run(Method::EulerNeg4, &BigInt::from(109), Mode::Search { bound: 100 }).unwrap();
        let (x, y) = r.paper_orientation.clone().unwrap();
        assert_eq!(x.to_string(), "15140424455100");
        assert_eq!(y.to_string(), "158070671986249");
        assert_eq!(r.power_index, Some(1));
        assert!(r.to_json().contains("\"schema\":\"v1\""));
    }
}
