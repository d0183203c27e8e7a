//! Group and subgroup inputs: presets, generator files, and the closure cache.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, ValueEnum};
use mobius_lattice::gfq::{FieldSpec, FqField};
use mobius_lattice::group::{
    general_linear_generators, special_linear_generators, ClosureDump, GroupSet, Subgroup,
    DEFAULT_ORDER_CAP,
};
use mobius_lattice::linalg::{Matrix, MatrixRepr};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const CACHE_ENV: &str = "MOBIUS_LATTICE_CACHE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    #[value(name = "GL")]
    Gl,
    #[value(name = "SL")]
    Sl,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// Standard group over the field given by --q or --p/--u/--modulus.
    #[arg(long, value_enum, conflicts_with = "gens")]
    pub preset: Option<Preset>,
    /// JSON file with `generators` (and optionally `field`).
    #[arg(long, value_name = "FILE")]
    pub gens: Option<PathBuf>,
    /// Dimension for --preset.
    #[arg(long)]
    pub n: Option<usize>,
    /// Field order (prime or one of the built-in prime powers).
    #[arg(long, conflicts_with_all = ["p", "u", "modulus"])]
    pub q: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, requires = "p")]
    pub u: Option<u32>,
    /// Monic modulus coefficients, low degree first, comma separated.
    #[arg(long, requires = "p", value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// Largest group order the closure may reach.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub max_order: usize,
    /// Seed for the closure spot checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Identifies a group in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub name: String,
    pub n: usize,
    pub field: FieldSpec,
    pub order: usize,
    /// Hash of the canonical element list, so equal groups share a key.
    pub key: String,
}

pub struct LoadedGroup {
    pub group: GroupSet,
    pub descriptor: GroupDescriptor,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorFile {
    #[serde(default)]
    field: Option<FieldSpec>,
    #[serde(default)]
    name: Option<String>,
    generators: Vec<MatrixRepr>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SubgroupFile {
    Wrapped { subgroups: Vec<Vec<MatrixRepr>> },
    Bare(Vec<Vec<MatrixRepr>>),
}

fn field_from_args(args: &GroupArgs) -> Result<Option<FqField>, CliError> {
    if let Some(q) = args.q {
        return Ok(Some(FqField::of_order(q)?));
    }
    if let Some(p) = args.p {
        let u = args.u.unwrap_or(1);
        return Ok(Some(FqField::new(p, u, args.modulus.as_deref())?));
    }
    Ok(None)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn short_hash(bytes: &[u8]) -> String {
    hex::encode(&Sha256::digest(bytes)[..8])
}

fn generator_hash(field: &FqField, n: usize, gens: &[Matrix]) -> String {
    let mut h = Sha256::new();
    h.update(serde_json::to_vec(&field.spec()).expect("field specs serialize"));
    h.update((n as u64).to_le_bytes());
    for g in gens {
        for &x in g.data() {
            h.update(x.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

fn group_key(group: &GroupSet) -> String {
    let mut h = Sha256::new();
    h.update(serde_json::to_vec(&group.field().spec()).expect("field specs serialize"));
    h.update((group.dim() as u64).to_le_bytes());
    for m in group.elements() {
        for &x in m.data() {
            h.update(x.to_le_bytes());
        }
    }
    hex::encode(&h.finalize()[..8])
}

/// Closure with an optional on-disk cache. A cache entry that fails to load
/// or validate is recomputed and overwritten.
fn cached_closure(
    field: &Arc<FqField>,
    n: usize,
    gens: &[Matrix],
    cap: usize,
    seed: u64,
) -> Result<GroupSet, CliError> {
    let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let path = dir
        .as_ref()
        .map(|d| d.join(format!("{}.json", generator_hash(field, n, gens))));
    if let Some(path) = &path {
        if let Ok(text) = fs::read_to_string(path) {
            let loaded = serde_json::from_str::<ClosureDump>(&text)
                .ok()
                .and_then(|dump| GroupSet::from_dump(&dump, 1000, seed).ok());
            match loaded {
                Some(g) if g.order() > cap => {
                    return Err(CliError::Cap(format!("group order {} exceeds --max-order {cap}", g.order())))
                }
                Some(g) if g.field() == field && g.dim() == n => return Ok(g),
                _ => eprintln!("warning: ignoring invalid cache entry {}", path.display()),
            }
        }
    }
    let group = GroupSet::closure(field, n, gens, cap)?;
    if !group.verify_closed(seed) {
        return Err(CliError::Internal("closure is not closed under multiplication".into()));
    }
    if let (Some(dir), Some(path)) = (&dir, &path) {
        fs::create_dir_all(dir)?;
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec(&group.to_dump()).expect("dumps serialize"))?;
        fs::rename(&tmp, path)?;
    }
    Ok(group)
}

pub fn load_group(args: &GroupArgs) -> Result<LoadedGroup, CliError> {
    let (field, n, gens, name) = match (&args.preset, &args.gens) {
        (Some(preset), None) => {
            let field = field_from_args(args)?
                .ok_or_else(|| CliError::Config("--preset needs --q or --p".into()))?;
            let n = args.n.ok_or_else(|| CliError::Config("--preset needs --n".into()))?;
            if n == 0 {
                return Err(CliError::Config("--n must be positive".into()));
            }
            let field = Arc::new(field);
            let (gens, label) = match preset {
                Preset::Gl => (general_linear_generators(&field, n), "GL"),
                Preset::Sl => (special_linear_generators(&field, n), "SL"),
            };
            let name = format!("{label}({n},{})", field.order());
            (field, n, gens, name)
        }
        (None, Some(path)) => {
            let file: GeneratorFile = read_json(path)?;
            let field = match (file.field, field_from_args(args)?) {
                (Some(spec), _) => spec.build()?,
                (None, Some(f)) => f,
                (None, None) => {
                    return Err(CliError::Config(format!(
                        "{}: no field given in the file or on the command line",
                        path.display()
                    )))
                }
            };
            let field = Arc::new(field);
            if file.generators.is_empty() {
                return Err(CliError::Config(format!("{}: no generators", path.display())));
            }
            let gens = file
                .generators
                .iter()
                .map(|r| Matrix::from_repr(&field, r))
                .collect::<Result<Vec<_>, _>>()?;
            let n = gens[0].rows();
            if let Some(want) = args.n {
                if want != n {
                    return Err(CliError::Config(format!("--n {want} but generators are {n}x{n}")));
                }
            }
            (field, n, gens, file.name.unwrap_or_else(|| "custom".into()))
        }
        _ => return Err(CliError::Config("give exactly one of --preset or --gens".into())),
    };
    let group = cached_closure(&field, n, &gens, args.max_order, args.seed)?;
    let descriptor = GroupDescriptor {
        name,
        n,
        field: field.spec(),
        order: group.order(),
        key: group_key(&group),
    };
    Ok(LoadedGroup { group, descriptor })
}

/// Subgroups listed by generators in a JSON file.
pub fn load_subgroups(group: &GroupSet, path: &Path) -> Result<Vec<Subgroup>, CliError> {
    let lists = match read_json::<SubgroupFile>(path)? {
        SubgroupFile::Wrapped { subgroups } | SubgroupFile::Bare(subgroups) => subgroups,
    };
    lists
        .iter()
        .enumerate()
        .map(|(i, reprs)| {
            let mats = reprs
                .iter()
                .map(|r| Matrix::from_repr(group.field(), r))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Config(format!("{} subgroup {i}: {e}", path.display())))?;
            group
                .subgroup_from_matrices(&mats)
                .map_err(|e| CliError::Config(format!("{} subgroup {i}: {e}", path.display())))
        })
        .collect()
}

/// `1`, `G`, or a JSON file holding one generator list.
pub fn parse_subgroup_spec(group: &GroupSet, spec: &str) -> Result<Subgroup, CliError> {
    match spec {
        "1" | "trivial" => Ok(group.trivial_subgroup()),
        "G" | "whole" => Ok(group.whole_group()),
        path => {
            let path = Path::new(path);
            let reprs: Vec<MatrixRepr> = read_json(path)?;
            let mats = reprs
                .iter()
                .map(|r| Matrix::from_repr(group.field(), r))
                .collect::<Result<Vec<_>, _>>()?;
            group
                .subgroup_from_matrices(&mats)
                .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
        }
    }
}

/// Stable key of a subgroup within a group: hash of the group key and the
/// canonical member indices.
pub fn subgroup_key(group_key: &str, h: &Subgroup) -> String {
    let mut bytes = group_key.as_bytes().to_vec();
    for i in h.member_ids() {
        bytes.extend_from_slice(&(i as u32).to_le_bytes());
    }
    short_hash(&bytes)
}
