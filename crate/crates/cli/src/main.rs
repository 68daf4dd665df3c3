use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kschur::exactalg::Ring;
use kschur::kschur::{k_schur, k_split_poly, KSchurError};
use kschur::macdonald::{macdonald_h, macdonald_j, MacError};
use kschur::partitions::{Partition, PartitionError, PartitionSequence};
use kschur::symfunc::{to_basis, Basis, SymError, SymExpansion};
use kschur::tables::{compute_table, TableError, TableKind};
use kschur::vertex::{h_s, hall_littlewood};
use kschur::{cache, verify};

const CACHE_ENV: &str = "KSCHUR_CACHE";

#[derive(Parser)]
#[command(name = "kschur", version, about = "Exact k-Schur function computations")]
struct Cli {
    /// Cache file; overrides the KSCHUR_CACHE environment variable.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand one symmetric function in a chosen basis.
    Expand {
        #[arg(value_enum)]
        object: Object,
        #[arg(long)]
        k: Option<usize>,
        /// Partition such as "3,2,1" (empty string for the empty partition);
        /// for `hs` a sequence such as "2,1;1".
        #[arg(long, allow_hyphen_values = true)]
        index: String,
        /// schur, h, e, m, p, hl, ksplit or kschur (the last two use --k).
        #[arg(long, default_value = "schur")]
        target: String,
        /// Specialize t = 1 in the result.
        #[arg(long)]
        t1: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print a full coefficient table for one k and degree.
    Table {
        kind: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Largest degree accepted.
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Run theorem and conjecture checks over bounded ranges.
    Verify {
        /// A check name or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Worker threads (default: one per core).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Object {
    Kschur,
    Ksplit,
    Hall,
    MacdonaldH,
    MacdonaldJ,
    Hs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn malformed(m: impl Into<String>) -> Self {
        Failure { code: 3, message: m.into() }
    }

    fn computation(m: impl Into<String>) -> Self {
        Failure { code: 2, message: m.into() }
    }
}

impl From<PartitionError> for Failure {
    fn from(e: PartitionError) -> Self {
        match e {
            PartitionError::InvalidInput(_) => Failure::malformed(e.to_string()),
            _ => Failure::computation(e.to_string()),
        }
    }
}

impl From<SymError> for Failure {
    fn from(e: SymError) -> Self {
        match e {
            SymError::Malformed(_) => Failure::malformed(e.to_string()),
            _ => Failure::computation(e.to_string()),
        }
    }
}

impl From<KSchurError> for Failure {
    fn from(e: KSchurError) -> Self {
        match e {
            KSchurError::Partition(p) => p.into(),
            KSchurError::Sym(s) => s.into(),
            other => Failure::computation(other.to_string()),
        }
    }
}

impl From<MacError> for Failure {
    fn from(e: MacError) -> Self {
        match e {
            MacError::Partition(p) => p.into(),
            MacError::Sym(s) => s.into(),
            MacError::KSchur(k) => k.into(),
            other => Failure::computation(other.to_string()),
        }
    }
}

impl From<TableError> for Failure {
    fn from(e: TableError) -> Self {
        match e {
            TableError::Malformed(m) => Failure::malformed(m),
            TableError::KSchur(k) => k.into(),
            TableError::Macdonald(m) => m.into(),
            other => Failure::computation(other.to_string()),
        }
    }
}

fn with_meta(body: Value) -> Value {
    let mut doc = json!({"meta": {"version": env!("CARGO_PKG_VERSION")}});
    if let (Some(d), Value::Object(b)) = (doc.as_object_mut(), body) {
        d.extend(b);
    }
    doc
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn need_k(k: Option<usize>, what: &str) -> Result<usize, Failure> {
    k.ok_or_else(|| Failure::malformed(format!("--k is required for {what}")))
}

fn parse_target(name: &str, k: Option<usize>) -> Result<Basis, Failure> {
    let lower = name.to_ascii_lowercase();
    if (lower == "kschur" || lower == "ksplit") && k.is_none() {
        return Err(Failure::malformed(format!("--k is required for target {name}")));
    }
    match Basis::from_name(&lower, k) {
        Some(Basis::MacH | Basis::MacJ) | None => {
            Err(Failure::malformed(format!("unsupported target basis {name:?}")))
        }
        Some(b) => Ok(b),
    }
}

/// Convert to the target basis, then optionally set `t = 1`.
/// Returns the JSON document and a one-line text rendering.
fn finish<C: Ring>(f: &SymExpansion<C>, target: Basis, t1: bool) -> Result<(Value, String), Failure> {
    let mut g = to_basis(f, target)?;
    if t1 {
        g = g
            .try_map_coeffs(|c| c.at_t_one())
            .ok_or_else(|| Failure::computation("a coefficient has no value at t = 1"))?;
    }
    Ok((g.to_json(), g.to_string()))
}

fn expand(
    object: Object,
    k: Option<usize>,
    index: &str,
    target: &str,
    t1: bool,
    format: Format,
) -> Result<(), Failure> {
    let basis = parse_target(target, k)?;
    let (label, (expansion, text)) = if object == Object::Hs {
        let s: PartitionSequence = index.parse()?;
        (json!(s.to_string()), finish(&*h_s(&s), basis, t1)?)
    } else {
        let lam: Partition = index.parse()?;
        let e = match object {
            Object::Kschur => finish(&*k_schur(need_k(k, "kschur")?, &lam)?, basis, t1)?,
            Object::Ksplit => finish(&*k_split_poly(need_k(k, "ksplit")?, &lam)?, basis, t1)?,
            Object::Hall => finish(&*hall_littlewood(&lam), basis, t1)?,
            Object::MacdonaldH => finish(&*macdonald_h(&lam)?, basis, t1)?,
            Object::MacdonaldJ => finish(&*macdonald_j(&lam), basis, t1)?,
            Object::Hs => unreachable!(),
        };
        (json!(lam.parts()), e)
    };
    match format {
        Format::Json => print_json(&with_meta(json!({
            "object": object.to_possible_value().expect("no skipped variants").get_name(),
            "k": k,
            "index": label,
            "t1": t1,
            "expansion": expansion,
        }))),
        Format::Text | Format::Csv => println!("{text}"),
    }
    Ok(())
}

fn table(kind: &str, k: usize, degree: usize, format: Format, max: usize) -> Result<(), Failure> {
    let kind: TableKind = kind.parse()?;
    if degree > max {
        return Err(Failure::malformed(format!("degree {degree} exceeds the limit {max}")));
    }
    if k == 0 {
        return Err(Failure::malformed("k must be positive"));
    }
    let t = compute_table(kind, k, degree)?;
    match format {
        Format::Json => print_json(&with_meta(t.to_json())),
        Format::Text => print!("{}", t.to_text()),
        Format::Csv => print!("{}", t.to_csv()),
    }
    Ok(())
}

fn run_verify(
    check: &str,
    k: Option<usize>,
    max_degree: Option<usize>,
    jobs: Option<usize>,
    format: Format,
) -> Result<bool, Failure> {
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| Failure::computation(e.to_string()))?;
    }
    let params = verify::Params { k, max_degree };
    let reports = if check == "all" {
        verify::run_all(params)
    } else {
        vec![verify::run(check.parse().map_err(Failure::malformed)?, params)]
    };
    match format {
        Format::Json => print_json(&with_meta(json!({
            "reports": reports.iter().map(verify::Report::to_json).collect::<Vec<_>>(),
        }))),
        Format::Text | Format::Csv => {
            for r in &reports {
                print!("{}", r.to_text());
            }
        }
    }
    Ok(!reports.iter().any(verify::Report::is_theorem_failure))
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    if cli.no_cache {
        return None;
    }
    cli.cache
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .or_else(|| {
            std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache/kschur/cache.json"))
        })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let path = cache_path(&cli);
    if let Some(p) = &path {
        if let Err(e) = cache::load(p) {
            eprintln!("warning: ignoring cache {}: {e}", p.display());
        }
    }
    let result = match &cli.command {
        Command::Expand { object, k, index, target, t1, format } => {
            expand(*object, *k, index, target, *t1, *format).map(|_| true)
        }
        Command::Table { kind, k, degree, format, max_degree } => {
            table(kind, *k, *degree, *format, *max_degree).map(|_| true)
        }
        Command::Verify { check, k, max_degree, jobs, format } => {
            run_verify(check, *k, *max_degree, *jobs, *format)
        }
    };
    if let Some(p) = &path {
        if let Err(e) = cache::save(p) {
            eprintln!("warning: could not write cache {}: {e}", p.display());
        }
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
