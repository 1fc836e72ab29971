//! Cross-method harness: every method, both modes, every non-square `d ≤ dmax`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::is_square;
use crate::descent::{Method, Mode};
use crate::identities::{check_all, IdentityReport};
use crate::oracle::negpell_solvable;
use crate::report::{MethodReport, Outcome};
use crate::solution::PellSolution;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub dmax: u64,
    pub search_bound: u64,
    pub seed: u64,
    /// Random samples per identity; 0 skips the identity suites.
    pub identity_samples: u64,
    /// Perturb every lifted solution before checking it (harness self-test).
    pub inject_wrong_lift: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { dmax: 100, search_bound: 100, seed: 2024, identity_samples: 0, inject_wrong_lift: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub d: u64,
    pub method: String,
    pub mode: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub dmax: u64,
    pub reports: u64,
    /// `"method mode" → outcome → count`.
    pub matrix: BTreeMap<String, BTreeMap<Outcome, u64>>,
    pub failures: Vec<Failure>,
    pub identities: Vec<IdentityReport>,
    pub elapsed_millis: u64,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.identities.iter().all(IdentityReport::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verify d ≤ {}: {} reports in {} ms\n", self.dmax, self.reports, self.elapsed_millis);
        out.push_str(&format!(
            "{:<28} {:>8} {:>11} {:>16} {:>15}\n",
            "method / mode", "SOLVED", "UNSOLVABLE", "BOUND_EXHAUSTED", "NOT_APPLICABLE"
        ));
        for (key, row) in &self.matrix {
            let c = |o: Outcome| row.get(&o).copied().unwrap_or(0);
            out.push_str(&format!(
                "{:<28} {:>8} {:>11} {:>16} {:>15}\n",
                key,
                c(Outcome::Solved),
                c(Outcome::Unsolvable),
                c(Outcome::BoundExhausted),
                c(Outcome::NotApplicable)
            ));
        }
        for id in &self.identities {
            out.push_str(&format!(
                "identity {}: {} exhaustive, {} random, {} failures\n",
                id.name, id.exhaustive_checked, id.random_checked, id.failure_count
            ));
        }
        for f in &self.failures {
            out.push_str(&format!("FAIL d={} {} [{}]: {}\n", f.d, f.method, f.mode, f.message));
        }
        out.push_str(if self.passed() { "ok\n" } else { "FAILED\n" });
        out
    }
}

/// Methods whose reverse mode must succeed exactly when `x² − d·y² = −1` does.
const NEGATIVE_PELL_EQUIVALENT: [Method; 5] =
    [Method::EulerNeg1, Method::Hart, Method::Gunther, Method::HardyWilliams, Method::GerardinA];

fn check_solution(sol: &PellSolution<BigInt>, what: &str, errors: &mut Vec<String>) {
    if !sol.is_valid() {
        errors.push(format!("{what} {sol} fails substitution"));
    }
}

fn check_report(r: &MethodReport<BigInt>, inject: bool) -> Vec<String> {
    let mut errors = Vec::new();
    if r.outcome != Outcome::Solved {
        return errors;
    }
    match &r.certificate {
        Some(c) => {
            if let Err(e) = c.verify() {
                errors.push(e.to_string());
            }
        }
        None => errors.push("solved without a certificate".into()),
    }
    if let Some(a) = &r.auxiliary {
        check_solution(a, "auxiliary", &mut errors);
    }
    match &r.solution {
        Some(sol) => {
            let sol = if inject {
                PellSolution::new_unchecked(sol.d().clone(), sol.n().clone(), sol.x() + 1, sol.y().clone())
            } else {
                sol.clone()
            };
            check_solution(&sol, "solution", &mut errors);
            if sol.n() == &BigInt::from(1) && r.power_index.is_none() {
                errors.push(format!("{sol} is not a power of the fundamental solution"));
            }
        }
        None => errors.push("solved without a solution".into()),
    }
    errors
}

fn verify_d(d: u64, opts: &VerifyOptions) -> (Vec<MethodReport<BigInt>>, Vec<Failure>) {
    let big = BigInt::from(d);
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    let fail = |method: &str, mode: &str, message: String| Failure { d, method: method.into(), mode: mode.into(), message };
    let negpell = negpell_solvable(&big).unwrap_or(false);
    for method in Method::ALL {
        let mut solved_by_mode = Vec::new();
        for mode in [Mode::Reverse, Mode::Search { bound: opts.search_bound }] {
            let r = match MethodReport::run(method, &big, mode) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(fail(method.id(), &crate::report::mode_label(mode), e.to_string()));
                    continue;
                }
            };
            for msg in check_report(&r, opts.inject_wrong_lift) {
                failures.push(fail(&r.method, &r.mode, msg));
            }
            let solved = r.outcome == Outcome::Solved;
            if mode == Mode::Reverse && NEGATIVE_PELL_EQUIVALENT.contains(&method) && solved != negpell {
                failures.push(fail(&r.method, &r.mode, format!("solved = {solved} but negative Pell solvable = {negpell}")));
            }
            solved_by_mode.push(solved);
            reports.push(r);
        }
        if let [reverse, search] = solved_by_mode[..] {
            if search && !reverse {
                failures.push(fail(method.id(), "both", "search succeeded where reverse did not".into()));
            }
        }
    }
    (reports, failures)
}

pub fn verify(opts: &VerifyOptions) -> VerifySummary {
    let start = Instant::now();
    let ds: Vec<u64> = (2..=opts.dmax).filter(|&d| !is_square(&(d as i64))).collect();
    let per_d: Vec<(Vec<MethodReport<BigInt>>, Vec<Failure>)> = ds.par_iter().map(|&d| verify_d(d, opts)).collect();
    let mut matrix: BTreeMap<String, BTreeMap<Outcome, u64>> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut count = 0;
    for (reports, fails) in per_d {
        for r in reports {
            let mode = if r.mode == "reverse" { "reverse" } else { "search" };
            *matrix.entry(format!("{} {}", r.method, mode)).or_default().entry(r.outcome).or_default() += 1;
            count += 1;
        }
        failures.extend(fails);
    }
    let identities = if opts.identity_samples > 0 { check_all(opts.identity_samples, opts.seed) } else { Vec::new() };
    VerifySummary {
        dmax: opts.dmax,
        reports: count,
        matrix,
        failures,
        identities,
        elapsed_millis: start.elapsed().as_millis() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let s = verify(&VerifyOptions { dmax: 60, ..Default::default() });
        assert!(s.passed(), "{}", s.to_text());
        assert!(s.matrix["hart reverse"][&Outcome::Solved] > 0);
    }

    #[test]
    fn injected_fault_is_reported() {
        let s = verify(&VerifyOptions { dmax: 10, inject_wrong_lift: true, ..Default::default() });
        assert!(!s.passed());
        assert!(s.failures.iter().any(|f| f.message.contains("fails substitution")));
    }
}
