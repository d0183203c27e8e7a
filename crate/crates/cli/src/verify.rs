use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use mobius_lattice::group::{GroupSet, Subgroup, DEFAULT_INTERVAL_CAP, DEFAULT_POWERSET_BOUND};
use mobius_lattice::theory::{Caps, Verifier};
use mobius_lattice::Error;
use rayon::prelude::*;

use crate::error::{is_cap, CliError};
use crate::load::{load_group, load_subgroups, subgroup_key, GroupArgs, GroupDescriptor};
use crate::records::{Format, PairRecord, Status, SubgroupDescriptor, Summary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    /// Every subgroup of G, G itself included (reported as skipped).
    All,
    /// Subgroups fixing a proper nontrivial subspace.
    Reducible,
    /// Subgroups listed in --subgroup-file.
    File,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub subgroups: Scope,
    #[arg(long, value_name = "FILE", required_if_eq("subgroups", "file"))]
    pub subgroup_file: Option<PathBuf>,
    /// Keep only subgroups of index at most this.
    #[arg(long)]
    pub max_index: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_INTERVAL_CAP)]
    pub max_interval: usize,
    #[arg(long, default_value_t = DEFAULT_POWERSET_BOUND)]
    pub max_powerset: usize,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Exit 3 if any pair was skipped because of a cap.
    #[arg(long)]
    pub strict: bool,
    /// Record per-pair and total wall time (makes output nondeterministic).
    #[arg(long)]
    pub timings: bool,
}

pub struct VerifyOutcome {
    pub pairs: Vec<PairRecord>,
    pub summary: Summary,
}

impl VerifyOutcome {
    pub fn exit_code(&self, strict: bool) -> u8 {
        if self.summary.failures > 0 || self.summary.errors > 0 {
            1
        } else if strict && self.pairs.iter().any(|p| p.cap) {
            3
        } else {
            0
        }
    }
}

fn describe(group: &GroupSet, desc: &GroupDescriptor, h: &Subgroup) -> SubgroupDescriptor {
    SubgroupDescriptor {
        key: subgroup_key(&desc.key, h),
        order: h.order(),
        index: group.order() / h.order(),
        generators: h.gens().iter().map(|&g| group.element(g).to_repr()).collect(),
    }
}

fn evaluate(v: &Verifier, desc: &GroupDescriptor, h: &Subgroup, timings: bool) -> PairRecord {
    let start = Instant::now();
    let group = v.group();
    let mut record = PairRecord {
        group: desc.clone(),
        subgroup: describe(group, desc, h),
        status: Status::Skip,
        report: None,
        reason: None,
        cap: false,
        millis: None,
    };
    match v.verify_pair(h) {
        Ok(report) => {
            record.status = if report.passed() { Status::Pass } else { Status::Fail };
            record.report = Some(report);
        }
        Err(Error::WholeGroup) => record.reason = Some("H = G".into()),
        Err(e) if is_cap(&e) => {
            record.reason = Some(e.to_string());
            record.cap = true;
        }
        Err(e) => {
            record.status = Status::Error;
            record.reason = Some(e.to_string());
        }
    }
    if timings {
        record.millis = Some(start.elapsed().as_millis() as u64);
    }
    record
}

pub fn run(args: &VerifyArgs) -> Result<VerifyOutcome, CliError> {
    let start = Instant::now();
    if args.max_interval == 0 || args.max_powerset == 0 || args.group.max_order == 0 {
        return Err(CliError::Config("caps must be positive".into()));
    }
    let loaded = load_group(&args.group)?;
    let group = &loaded.group;
    let caps = Caps {
        max_interval: args.max_interval,
        max_powerset: args.max_powerset,
    };
    let verifier = Verifier::new(group, caps).map_err(|e| match e {
        Error::ReducibleAmbientGroup => CliError::Config("the group is reducible; the identities need an irreducible G".into()),
        other => other.into(),
    })?;

    let mut subgroups = match args.subgroups {
        Scope::All | Scope::Reducible => group.overgroup_interval(&group.trivial_subgroup(), args.max_interval)?,
        Scope::File => {
            let path = args.subgroup_file.as_ref().expect("clap enforces --subgroup-file");
            load_subgroups(group, path)?
        }
    };
    if args.subgroups == Scope::Reducible {
        let mut kept = Vec::new();
        for h in subgroups {
            if !group.invariant_subspaces_of(&h)?.is_empty() {
                kept.push(h);
            }
        }
        subgroups = kept;
    }
    if let Some(bound) = args.max_index {
        subgroups.retain(|h| group.order() / h.order() <= bound);
    }
    if subgroups.is_empty() {
        return Err(CliError::Config("no subgroups in scope".into()));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    // collect keeps input order whatever the scheduling
    let pairs: Vec<PairRecord> = pool.install(|| {
        subgroups
            .par_iter()
            .map(|h| evaluate(&verifier, &loaded.descriptor, h, args.timings))
            .collect()
    });
    let mut summary = Summary::of(Some(loaded.descriptor.clone()), &pairs);
    if args.timings {
        summary.wall_millis = Some(start.elapsed().as_millis() as u64);
    }
    Ok(VerifyOutcome { pairs, summary })
}
