//! `mobius-lattice`: batch verification of the Möbius identities for
//! subgroups of irreducible linear groups over finite fields.
//!
//! Exit codes: 0 all identities hold, 1 an identity failed, 2 bad input or
//! configuration, 3 a cap was exceeded (or, with `--strict`, a pair was
//! skipped because of one).

mod error;
mod load;
mod records;
mod report;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mobius_lattice::group::DEFAULT_INTERVAL_CAP;
use mobius_lattice::theory::mobius_between;
use serde::Serialize;

use crate::error::CliError;
use crate::load::{load_group, parse_subgroup_spec, subgroup_key, GroupArgs, GroupDescriptor};
use crate::records::{write_records, SubgroupDescriptor};

#[derive(Parser)]
#[command(name = "mobius-lattice", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the identities for every subgroup in scope.
    Verify(verify::VerifyArgs),
    /// Möbius function between two subgroups.
    Mobius(MobiusArgs),
    /// Merge verify reports into one table.
    Report(report::ReportArgs),
}

#[derive(Args)]
struct MobiusArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// `1`, `G`, or a JSON file with a list of generator matrices.
    #[arg(long, default_value = "1")]
    from: String,
    #[arg(long, default_value = "G")]
    to: String,
    #[arg(long, default_value_t = DEFAULT_INTERVAL_CAP)]
    max_interval: usize,
}

#[derive(Serialize)]
struct MobiusOutput {
    group: GroupDescriptor,
    from: SubgroupDescriptor,
    to: SubgroupDescriptor,
    mu: i64,
    interval_size: usize,
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run_mobius(args: &MobiusArgs) -> Result<(), CliError> {
    let loaded = load_group(&args.group)?;
    let g = &loaded.group;
    let from = parse_subgroup_spec(g, &args.from)?;
    let to = parse_subgroup_spec(g, &args.to)?;
    if !from.is_subgroup_of(&to) {
        return Err(CliError::Config("NotASubgroup: --from is not contained in --to".into()));
    }
    let (mu, interval_size) = mobius_between(g, &from, &to, args.max_interval)?;
    let describe = |h: &mobius_lattice::group::Subgroup| SubgroupDescriptor {
        key: subgroup_key(&loaded.descriptor.key, h),
        order: h.order(),
        index: g.order() / h.order(),
        generators: h.gens().iter().map(|&i| g.element(i).to_repr()).collect(),
    };
    let out = MobiusOutput {
        group: loaded.descriptor.clone(),
        from: describe(&from),
        to: describe(&to),
        mu,
        interval_size,
    };
    println!("{}", serde_json::to_string(&out).expect("output serializes"));
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Verify(args) => {
            let outcome = verify::run(&args)?;
            let mut out = output(args.out.as_deref())?;
            write_records(&mut out, args.format, &outcome.pairs, &outcome.summary)?;
            out.flush()?;
            let s = &outcome.summary;
            eprintln!(
                "{} pairs checked: {} passed, {} failed, {} errors, {} skipped",
                s.pairs_checked,
                s.passed,
                s.failures,
                s.errors,
                s.skips.len()
            );
            Ok(outcome.exit_code(args.strict))
        }
        Command::Mobius(args) => run_mobius(&args).map(|_| 0),
        Command::Report(args) => {
            let (pairs, summary) = report::merge(&args)?;
            let mut out = output(args.out.as_deref())?;
            write_records(&mut out, args.format, &pairs, &summary)?;
            out.flush()?;
            Ok(if summary.failures + summary.errors > 0 { 1 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
