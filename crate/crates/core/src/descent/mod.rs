//! Descent engines: each turns `d` into a certificate for an auxiliary equation and
//! lifts it to a Pell solution.

mod arteha;
mod bapoungue;
mod certificate;
mod criteria;
mod euler;
pub mod forms;
mod gerardin;
mod gunther;
mod hardy_williams;
mod hart;
mod residuals;
mod sylvester;

use serde::{Deserialize, Serialize};

use crate::arith::is_square;
use crate::error::{domain, Result};
use crate::scalar::PellInt;
use crate::solution::PellSolution;

pub use arteha::{arteha, arteha_as, arteha_case};
pub use bapoungue::{bapoungue, bapoungue_for, bapoungue_pairs, CLASS_NUMBER_ONE};
pub use certificate::{Certificate, Method, Residual, Witnesses};
pub use criteria::{negpell_criteria, CriteriaVerdict};
pub use euler::{euler_descent, EulerVariant};
pub use gerardin::{gerardin_identity, gerardin_solve, GerardinCase};
pub use gunther::{gunther, gunther_pair, gunther_pairs};
pub use hardy_williams::{hardy_williams, solvable_representations, HwTrial};
pub use hart::{hart, hart_aux};
pub use sylvester::sylvester;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Blind search with every witness coordinate bounded.
    Search { bound: u64 },
    /// Witnesses reconstructed from the continued-fraction solution.
    Reverse,
}

/// Why a method produced nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Miss {
    BoundExhausted,
    Unsolvable,
    NotApplicable(String),
}

/// A successful descent: the certificate, the auxiliary solution it proves, and the
/// lifted `N = 1` solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descent<T: PellInt> {
    pub certificate: Certificate<T>,
    pub auxiliary: Option<PellSolution<T>>,
    pub solution: Option<PellSolution<T>>,
    /// Further equations the method derives on the way, by label.
    pub related: Vec<(String, PellSolution<T>)>,
}

impl<T: PellInt> Descent<T> {
    pub fn new(certificate: Certificate<T>, auxiliary: Option<PellSolution<T>>, solution: Option<PellSolution<T>>) -> Self {
        Descent { certificate, auxiliary, solution, related: Vec::new() }
    }
}

pub type Attempt<T> = std::result::Result<Descent<T>, Miss>;

pub(crate) fn check_d<T: PellInt>(d: &T) -> Result<()> {
    if *d < T::lit(2) {
        return Err(domain(format!("d = {d} must be at least 2")));
    }
    if is_square(d) {
        return Err(domain(format!("d = {d} is a perfect square")));
    }
    Ok(())
}

/// Runs one method on `d`. Bapoungué tries `k = 1` then `k = 2`, the values whose
/// auxiliary equation lifts to `N = 1`.
pub fn run<T: PellInt>(method: Method, d: &T, mode: Mode) -> Result<Attempt<T>> {
    match method {
        Method::EulerNeg1 => euler_descent(d, EulerVariant::Neg1, mode),
        Method::EulerNeg2 => euler_descent(d, EulerVariant::Neg2, mode),
        Method::EulerPos2 => euler_descent(d, EulerVariant::Pos2, mode),
        Method::EulerNeg4 => euler_descent(d, EulerVariant::Neg4, mode),
        Method::Hart => hart(d, mode),
        Method::Sylvester => sylvester(d, mode),
        Method::Gunther => gunther(d, mode),
        Method::GerardinA => gerardin_solve(d, GerardinCase::A, mode),
        Method::GerardinB => gerardin_solve(d, GerardinCase::B, mode),
        Method::GerardinC => gerardin_solve(d, GerardinCase::C, mode),
        Method::HardyWilliams => Ok(hardy_williams(d, mode)?.0),
        Method::Bapoungue => bapoungue_for(d, &[1, 2], mode),
        Method::Arteha1Mod4 | Method::Arteha3Mod8 | Method::Arteha7Mod8 => arteha_as(d, method, mode),
    }
}
