//! Front end for the `kostka` binary.
//!
//! [`run`] parses arguments, executes one subcommand, writes to the given
//! streams and returns the process exit code: 0 on success, 1 for usage or
//! parse errors, 2 for verification failures and rejected cache files.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use kostka_foulkes::kostka::{kostka_auto_traced, CacheFileError, Route};
use kostka_foulkes::oracles::{enumerate_ssyt, kostka_number, kostka_via_charge};
use kostka_foulkes::sweep::{compute_table, verify, TableRow};
use kostka_foulkes::{kostka, FastPaths, KostkaCache, Partition, TPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Environment variable that overrides `--cache`.
pub const CACHE_ENV: &str = "KOSTKA_CACHE";

#[derive(Debug, Parser)]
#[command(
    name = "kostka",
    version,
    about = "Exact Kostka-Foulkes polynomials K_{λμ}(t)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Shape λ, e.g. `3,2,1` or `2^2,1^2`.
    #[arg(long, global = true)]
    pub shape: Option<Partition>,

    /// Content μ, same syntax as --shape.
    #[arg(long, global = true)]
    pub content: Option<Partition>,

    /// Weight for `table`.
    #[arg(long = "n", global = true)]
    pub n: Option<u32>,

    /// Largest weight for `verify`.
    #[arg(long, global = true)]
    pub max_n: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Closed forms to allow: none, all, or a comma list of one-row, hook, column.
    #[arg(long, global = true, default_value = "none", value_parser = parse_fast_paths)]
    pub fast_paths: FastPaths,

    /// Cache file to load before and save after computing.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,

    /// Print every tableau as JSON on stderr (`compute` only).
    #[arg(long, global = true)]
    pub dump_tableaux: bool,

    /// `bench` skips the charge oracle above this many tableaux.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub oracle_ceiling: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// One polynomial K_{shape,content}(t).
    Compute,
    /// CSV of K_{λμ}(t) for every λ ≥ μ of weight n.
    Table,
    /// Check the recursion against the oracles for every pair up to max-n.
    Verify,
    /// Time the recursion against the charge oracle.
    Bench,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Latex,
}

fn parse_fast_paths(s: &str) -> Result<FastPaths, String> {
    let mut flags = FastPaths::empty();
    for name in s.split(',').map(str::trim) {
        flags |= match name {
            "none" => FastPaths::empty(),
            "all" => FastPaths::all(),
            "one-row" => FastPaths::ONE_ROW,
            "hook" => FastPaths::HOOK,
            "column" => FastPaths::COLUMN,
            other => return Err(format!("unknown fast path `{other}`")),
        };
    }
    Ok(flags)
}

/// A failure that ends the run with a non-zero exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<CacheFileError> for Failure {
    fn from(e: CacheFileError) -> Self {
        Failure {
            code: EXIT_MISMATCH,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("i/o error: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(
    args: I,
    cache_env: Option<OsString>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let cache_path = cache_env.map(PathBuf::from).or_else(|| cli.cache.clone());
    let result = match cli.command {
        Command::Compute => cmd_compute(&cli, cache_path, out, err),
        Command::Table => cmd_table(&cli, cache_path, out),
        Command::Verify => cmd_verify(&cli, cache_path, out),
        Command::Bench => cmd_bench(&cli, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load_cache(path: Option<&PathBuf>) -> Result<KostkaCache, Failure> {
    match path {
        Some(p) if p.exists() => Ok(KostkaCache::load(p)?),
        _ => Ok(KostkaCache::new()),
    }
}

fn save_cache(path: Option<&PathBuf>, cache: &KostkaCache) -> Result<(), Failure> {
    if let Some(p) = path {
        cache
            .save(p)
            .map_err(|e| Failure::usage(format!("cannot write cache {}: {e}", p.display())))?;
    }
    Ok(())
}

fn required_pair(cli: &Cli) -> Result<(&Partition, &Partition), Failure> {
    match (&cli.shape, &cli.content) {
        (Some(s), Some(c)) => Ok((s, c)),
        _ => Err(Failure::usage("this command needs --shape and --content")),
    }
}

fn render(poly: &TPoly, format: Format) -> String {
    match format {
        Format::Latex => poly.to_latex(),
        Format::Json => serde_json::to_string(poly).expect("TPoly serializes"),
        Format::Plain | Format::Csv => poly.to_string(),
    }
}

fn cmd_compute(
    cli: &Cli,
    cache_path: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let (shape, content) = required_pair(cli)?;
    let mut cache = load_cache(cache_path.as_ref())?;
    let (value, _) = kostka_auto_traced(shape, content, &mut cache, cli.fast_paths);
    if cli.format == Format::Csv {
        let rows = [TableRow {
            shape: shape.clone(),
            content: content.clone(),
            value,
        }];
        write_csv(&rows, Format::Plain, out)?;
    } else {
        writeln!(out, "{}", render(&value, cli.format))?;
    }
    if cli.dump_tableaux {
        for t in enumerate_ssyt(shape, content) {
            writeln!(
                err,
                "{}",
                serde_json::to_string(&t).expect("tableau serializes")
            )?;
        }
    }
    save_cache(cache_path.as_ref(), &cache)?;
    Ok(EXIT_OK)
}

fn write_csv(rows: &[TableRow], poly_format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Failure::usage(format!("csv: {e}"));
    w.write_record(["shape", "content", "polynomial"])
        .map_err(csv_err)?;
    for row in rows {
        w.write_record([
            row.shape.to_string(),
            row.content.to_string(),
            render(&row.value, poly_format),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_table(cli: &Cli, cache_path: Option<PathBuf>, out: &mut dyn Write) -> Result<i32, Failure> {
    let n = match cli.n {
        Some(n) if n >= 1 => n,
        Some(n) => {
            return Err(Failure::usage(format!(
                "--n must be a positive integer, got {n}"
            )))
        }
        None => return Err(Failure::usage("table needs --n")),
    };
    let seed = load_cache(cache_path.as_ref())?;
    let (rows, cache) = compute_table(n, cli.threads as usize, cli.fast_paths, &seed)
        .map_err(|e| Failure::usage(e.to_string()))?;
    match cli.format {
        Format::Json => {
            let records: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "shape": r.shape.parts(),
                        "content": r.content.parts(),
                        "polynomial": r.value,
                    })
                })
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string(&records).expect("rows serialize")
            )?;
        }
        Format::Latex => write_csv(&rows, Format::Latex, out)?,
        Format::Plain | Format::Csv => write_csv(&rows, Format::Plain, out)?,
    }
    save_cache(cache_path.as_ref(), &cache)?;
    Ok(EXIT_OK)
}

fn cmd_verify(cli: &Cli, cache_path: Option<PathBuf>, out: &mut dyn Write) -> Result<i32, Failure> {
    let max_n = cli
        .max_n
        .ok_or_else(|| Failure::usage("verify needs --max-n"))?;
    let seed = load_cache(cache_path.as_ref())?;
    let report = verify(max_n, cli.threads as usize, &seed).map_err(|e| Failure {
        code: EXIT_MISMATCH,
        message: e.to_string(),
    })?;
    for m in &report.mismatches {
        writeln!(out, "mismatch {m}")?;
    }
    write!(
        out,
        "{} mismatches / {} pairs",
        report.mismatches.len(),
        report.pairs
    )?;
    if report.cache_entries > 0 {
        write!(out, " ({} cache entries checked)", report.cache_entries)?;
    }
    writeln!(out)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn millis(d: Duration) -> String {
    format!("{:.3} ms", d.as_secs_f64() * 1e3)
}

fn cmd_bench(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let (shape, content) = required_pair(cli)?;
    let mut cache = KostkaCache::new();
    let start = Instant::now();
    let (value, route) = if cli.fast_paths.is_empty() {
        (kostka(shape, content, &mut cache), Route::Recursion)
    } else {
        kostka_auto_traced(shape, content, &mut cache, cli.fast_paths)
    };
    let recursion_time = start.elapsed();
    let stats = cache.stats();
    writeln!(out, "pair: ({shape}; {content})")?;
    writeln!(out, "route: {}", route.name())?;
    writeln!(out, "recursion: {}", millis(recursion_time))?;
    writeln!(
        out,
        "cache: {} entries, {} hits, {} misses",
        stats.entries, stats.hits, stats.misses
    )?;
    let tableaux = kostka_number(shape, content);
    writeln!(out, "tableaux: {tableaux}")?;
    if tableaux > cli.oracle_ceiling {
        writeln!(
            out,
            "charge oracle: skipped ({tableaux} tableaux exceeds ceiling {})",
            cli.oracle_ceiling
        )?;
        return Ok(EXIT_OK);
    }
    let start = Instant::now();
    let oracle = kostka_via_charge(shape, content);
    let oracle_time = start.elapsed();
    writeln!(out, "charge oracle: {}", millis(oracle_time))?;
    writeln!(out, "agree: {}", oracle == value)?;
    if recursion_time.as_nanos() > 0 {
        writeln!(
            out,
            "speedup: {:.1}x",
            oracle_time.as_secs_f64() / recursion_time.as_secs_f64()
        )?;
    }
    Ok(EXIT_OK)
}
