use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::Args;

use crate::error::CliError;
use crate::records::{Format, Line, PairRecord, Summary};

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    /// Reports written by `verify` (JSON Lines).
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

/// Merges reports: one row per (group, subgroup). Duplicates must agree up
/// to timing; a disagreement is a malformed input.
pub fn merge(args: &ReportArgs) -> Result<(Vec<PairRecord>, Summary), CliError> {
    let mut rows: BTreeMap<(String, String, usize, String), PairRecord> = BTreeMap::new();
    for path in &args.inputs {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::MalformedReport(format!("{}: {e}", path.display())))?;
        let mut saw_summary = false;
        for (no, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() {
                continue;
            }
            let line: Line = serde_json::from_str(raw)
                .map_err(|e| CliError::MalformedReport(format!("{}:{}: {e}", path.display(), no + 1)))?;
            match line {
                Line::Summary(_) => saw_summary = true,
                Line::Pair(mut p) => {
                    p.millis = None;
                    let key = (p.group.key.clone(), p.group.name.clone(), p.subgroup.order, p.subgroup.key.clone());
                    match rows.get(&key) {
                        Some(existing) if !existing.same_result(&p) => {
                            return Err(CliError::MalformedReport(format!(
                                "{}:{}: conflicting result for subgroup {} of {}",
                                path.display(),
                                no + 1,
                                p.subgroup.key,
                                p.group.name
                            )))
                        }
                        Some(_) => {}
                        None => {
                            rows.insert(key, p);
                        }
                    }
                }
            }
        }
        if !saw_summary {
            return Err(CliError::MalformedReport(format!("{}: no summary line", path.display())));
        }
    }
    let pairs: Vec<PairRecord> = rows.into_values().collect();
    let mut summary = Summary::of(None, &pairs);
    summary.inputs = Some(args.inputs.len());
    Ok((pairs, summary))
}
