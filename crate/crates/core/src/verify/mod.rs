//! The verification registry: every theorem check end-to-end, golden
//! fixtures, and structured reports.

mod checks;
mod fixtures;
mod lambda;

pub use checks::MainTheoremScope;
pub use lambda::{derive_lambda_w, LambdaData};

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

/// The fixed check registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    KostantIdeal,
    Fixtures,
    Mapdet,
    Dtoj,
    MainTheorem,
    JacobiTrudi,
    Positivity,
    Hopf,
}

impl CheckId {
    pub const ALL: [CheckId; 8] = [
        CheckId::KostantIdeal,
        CheckId::Fixtures,
        CheckId::Mapdet,
        CheckId::Dtoj,
        CheckId::MainTheorem,
        CheckId::JacobiTrudi,
        CheckId::Positivity,
        CheckId::Hopf,
    ];
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckId::KostantIdeal => "kostant-ideal",
            CheckId::Fixtures => "fixtures",
            CheckId::Mapdet => "mapdet",
            CheckId::Dtoj => "dtoj",
            CheckId::MainTheorem => "main-theorem",
            CheckId::JacobiTrudi => "jacobi-trudi",
            CheckId::Positivity => "positivity",
            CheckId::Hopf => "hopf",
        };
        write!(f, "{s}")
    }
}

impl FromStr for CheckId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "kostant-ideal" => CheckId::KostantIdeal,
            "fixtures" => CheckId::Fixtures,
            "mapdet" => CheckId::Mapdet,
            "dtoj" => CheckId::Dtoj,
            "main-theorem" => CheckId::MainTheorem,
            "jacobi-trudi" => CheckId::JacobiTrudi,
            "positivity" => CheckId::Positivity,
            "hopf" => CheckId::Hopf,
            other => return Err(format!("unknown check id `{other}`")),
        })
    }
}

/// One scheduled run of a registry check.
#[derive(Debug, Clone)]
pub struct CheckCase {
    pub id: CheckId,
    pub n: usize,
    pub config: Config,
}

/// Cutoffs; defaults match the desk-scale acceptance criteria.
#[derive(Debug, Clone)]
pub struct Config {
    /// Length cutoff for positivity and coproduct scans.
    pub max_len: u32,
    /// Truncation degree for the symmetric function suite.
    pub truncation: u32,
    /// Partition size bound for the symmetric function suite.
    pub schur_size: u32,
    /// Scope of the main-theorem sweep.
    pub main_scope: MainTheoremScope,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_len: 6,
            truncation: 8,
            schur_size: 6,
            main_scope: MainTheoremScope::Full,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Structured result of one check case; failures always carry a witness.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub case: String,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Run one check case.
pub fn run_case(case: &CheckCase) -> VerificationReport {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(|| checks::dispatch(case));
    let (status, witness) = match outcome {
        Ok(Ok(())) => (Status::Pass, None),
        Ok(Err(w)) => (Status::Fail, Some(w)),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            (Status::Fail, Some(format!("internal panic: {msg}")))
        }
    };
    VerificationReport {
        case: case.id.to_string(),
        n: case.n,
        status,
        witness,
        millis: start.elapsed().as_millis(),
    }
}

/// Execute the registry (or a selection) for a given rank; cases run in a
/// work pool, reports come back in registry order.
pub fn run_all(n: usize, selection: Option<&[CheckId]>, config: &Config) -> Vec<VerificationReport> {
    let ids: Vec<CheckId> = match selection {
        Some(sel) => sel.to_vec(),
        None => CheckId::ALL.to_vec(),
    };
    let cases: Vec<CheckCase> = ids
        .into_iter()
        .map(|id| CheckCase {
            id,
            n,
            config: config.clone(),
        })
        .collect();
    cases.par_iter().map(run_case).collect()
}
