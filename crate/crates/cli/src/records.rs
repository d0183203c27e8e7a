//! Report lines. Output is JSON Lines: one record per pair, then a summary.

use std::io::Write;

use mobius_lattice::linalg::MatrixRepr;
use mobius_lattice::theory::TheoremReport;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::load::GroupDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupDescriptor {
    pub key: String,
    pub order: usize,
    pub index: usize,
    pub generators: Vec<MatrixRepr>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub group: GroupDescriptor,
    pub subgroup: SubgroupDescriptor,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<TheoremReport>,
    /// Why the pair was skipped or errored.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// The skip was caused by a cap (these escalate under --strict).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub cap: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl PairRecord {
    /// Equal up to timing.
    pub fn same_result(&self, other: &Self) -> bool {
        self.group == other.group
            && self.subgroup == other.subgroup
            && self.status == other.status
            && self.report == other.report
            && self.reason == other.reason
            && self.cap == other.cap
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkipEntry {
    pub key: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub group: Option<GroupDescriptor>,
    pub pairs_checked: usize,
    pub passed: usize,
    pub failures: usize,
    pub errors: usize,
    pub skips: Vec<SkipEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inputs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_millis: Option<u64>,
}

impl Summary {
    pub fn of(group: Option<GroupDescriptor>, pairs: &[PairRecord]) -> Self {
        let count = |s: Status| pairs.iter().filter(|p| p.status == s).count();
        Self {
            group,
            pairs_checked: pairs.len() - count(Status::Skip),
            passed: count(Status::Pass),
            failures: count(Status::Fail),
            errors: count(Status::Error),
            skips: pairs
                .iter()
                .filter(|p| p.status == Status::Skip)
                .map(|p| SkipEntry {
                    key: p.subgroup.key.clone(),
                    reason: p.reason.clone().unwrap_or_default(),
                })
                .collect(),
            inputs: None,
            wall_millis: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Line {
    Pair(PairRecord),
    Summary(Summary),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    group: &'a str,
    group_key: &'a str,
    subgroup_key: &'a str,
    subgroup_order: usize,
    subgroup_index: usize,
    status: Status,
    reducible: Option<bool>,
    mu_hat: Option<i64>,
    sum_psi_prime: Option<i64>,
    sum_psi: Option<i64>,
    sum_psi_complement: Option<i64>,
    chi1_reduced: Option<i64>,
    chi2_reduced: Option<i64>,
    mu_full: Option<i64>,
    eq3_residual: Option<i64>,
    reason: Option<&'a str>,
}

pub fn write_records(
    out: &mut dyn Write,
    format: Format,
    pairs: &[PairRecord],
    summary: &Summary,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            for p in pairs {
                let line = serde_json::to_string(&Line::Pair(p.clone())).expect("records serialize");
                writeln!(out, "{line}")?;
            }
            let line = serde_json::to_string(&Line::Summary(summary.clone())).expect("records serialize");
            writeln!(out, "{line}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for p in pairs {
                let r = p.report.as_ref();
                w.serialize(CsvRow {
                    group: &p.group.name,
                    group_key: &p.group.key,
                    subgroup_key: &p.subgroup.key,
                    subgroup_order: p.subgroup.order,
                    subgroup_index: p.subgroup.index,
                    status: p.status,
                    reducible: r.map(|r| r.reducible),
                    mu_hat: r.map(|r| r.mu_hat),
                    sum_psi_prime: r.map(|r| r.sum_psi_prime),
                    sum_psi: r.map(|r| r.sum_psi),
                    sum_psi_complement: r.map(|r| r.sum_psi_complement),
                    chi1_reduced: r.map(|r| r.chi1_reduced),
                    chi2_reduced: r.map(|r| r.chi2_reduced),
                    mu_full: r.and_then(|r| r.mu_full),
                    eq3_residual: r.and_then(|r| r.eq3_residual),
                    reason: p.reason.as_deref(),
                })
                .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
