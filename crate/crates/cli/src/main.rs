//! `psv`: batch verification of principal subspace presentations.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use psv_core::cache::Cache;
use psv_core::ideal::{is_member, IdealSpec};
use psv_core::text::{format_elem, parse_elem};
use psv_core::verifier::{
    lemma_check_sigma, lemma_check_tau, qseries, qseries_json, qseries_tsv, sample_commutators,
    verify_presentation, VerifyOptions,
};
use psv_core::{AffineWeight, Error, LieData};

#[derive(Parser, Debug)]
#[command(
    name = "psv",
    version,
    about = "Principal subspace verification for affine sl(n+1)"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(clap::Args, Debug)]
struct WeightArgs {
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    level: u32,
    /// Comma-separated k0,k1,...,kn.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare dim U(nbar)/I_L with dim W(L) in every graded component.
    Verify {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long)]
        max_weight: Option<i64>,
        #[arg(long)]
        max_charge: Option<i64>,
        #[arg(long)]
        mode_bound: Option<i64>,
        /// How often the ideal window may grow after a mismatch.
        #[arg(long, default_value_t = 3)]
        max_growth: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cache root (default: $PSV_CACHE, or no cache).
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Graded dimensions of W(L).
    Qseries {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long)]
        max_weight: i64,
        #[arg(long)]
        max_charge: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ideal membership of an element given in canonical text form.
    Member {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, conflicts_with = "elem_file", allow_hyphen_values = true)]
        elem: Option<String>,
        #[arg(long)]
        elem_file: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        max_growth: u32,
    },
    /// Translation lemma checks (rank 2).
    Lemma {
        #[arg(long, value_enum)]
        which: Which,
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, default_value_t = 5)]
        max_weight: i64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random commutator checks of the lattice action against the structure constants.
    Selfcheck {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        max_weight: i64,
        #[arg(long, default_value_t = 3)]
        mode_bound: i64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Tau,
    Sigma,
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn parse_weight(w: &WeightArgs) -> Result<(LieData, AffineWeight), Usage> {
    if w.rank == 0 {
        return Err(Usage("--rank must be at least 1".into()));
    }
    if w.level == 0 {
        return Err(Usage(
            "--level must be positive (level 0 has only the trivial module)".into(),
        ));
    }
    let lambda = AffineWeight::parse(&w.weight, w.rank)?;
    if lambda.level() != w.level {
        return Err(Usage(format!(
            "weight {} has level {}, but --level is {}",
            w.weight,
            lambda.level(),
            w.level
        )));
    }
    Ok((LieData::new(w.rank)?, lambda))
}

fn default_max_weight(rank: usize, level: u32) -> i64 {
    match (rank, level) {
        (2, 1) => 6,
        (2, 2) => 5,
        _ => 4,
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Usage> {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Usage(format!("cannot write {}: {e}", p.display())))
        }
        None => {
            let mut o = std::io::stdout().lock();
            o.write_all(text.as_bytes())
                .map_err(|e| Usage(e.to_string()))
        }
    }
}

fn run(cli: Cli) -> Result<u8, Usage> {
    let started = Instant::now();
    match cli.command {
        Command::Verify {
            w,
            max_weight,
            max_charge,
            mode_bound,
            max_growth,
            format,
            out,
            cache,
        } => {
            let (lie, lambda) = parse_weight(&w)?;
            let w_max = max_weight.unwrap_or_else(|| default_max_weight(w.rank, w.level));
            if w_max < 0 || max_charge.is_some_and(|c| c < 0) || mode_bound.is_some_and(|m| m < 0) {
                return Err(Usage("budgets must be nonnegative".into()));
            }
            let mut opts = VerifyOptions::new(w_max, max_charge.unwrap_or(w.rank as i64 * w_max));
            opts.mode_bound = mode_bound;
            opts.max_growth = max_growth;
            opts.cache = cache.map(Cache::new).or_else(Cache::from_env);
            let report = verify_presentation(&lie, &lambda, &opts)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Tsv => report.to_tsv(),
            };
            emit(&out, &text)?;
            eprintln!(
                "{} {} components, {:.2}s",
                report.status.as_str(),
                report.components.len(),
                started.elapsed().as_secs_f64()
            );
            if let Some(m) = &report.mismatch {
                eprintln!(
                    "first mismatch at weight {} charges {:?}: quotient {} vs principal {}",
                    m.weight, m.charges, m.quotient_dim, m.principal_dim
                );
            }
            Ok(report.status.exit_code() as u8)
        }
        Command::Qseries {
            w,
            max_weight,
            max_charge,
            format,
            out,
        } => {
            let (lie, lambda) = parse_weight(&w)?;
            if max_weight < 0 || max_charge.is_some_and(|c| c < 0) {
                return Err(Usage("budgets must be nonnegative".into()));
            }
            let rows = qseries(
                &lie,
                &lambda,
                max_weight,
                max_charge.unwrap_or(w.rank as i64 * max_weight),
            )?;
            let text = match format {
                Format::Json => qseries_json(&rows),
                Format::Tsv => qseries_tsv(&rows),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Member {
            w,
            elem,
            elem_file,
            max_growth,
        } => {
            let (lie, lambda) = parse_weight(&w)?;
            let src = match (elem, elem_file) {
                (Some(e), _) => e,
                (None, Some(p)) => std::fs::read_to_string(&p)
                    .map_err(|e| Usage(format!("cannot read {}: {e}", p.display())))?,
                (None, None) => {
                    return Err(Usage("one of --elem or --elem-file is required".into()))
                }
            };
            let a = parse_elem(&lie, src.trim())?;
            let spec = IdealSpec::for_weight(&lie, &lambda)?;
            let member = is_member(&lie, &spec, &a, max_growth)?;
            println!("{member}");
            eprintln!("element: {}", format_elem(&lie.roots, &a));
            Ok(0)
        }
        Command::Lemma {
            which,
            w,
            max_weight,
            format,
            out,
        } => {
            let (lie, lambda) = parse_weight(&w)?;
            let report = match which {
                Which::Tau => lemma_check_tau(&lie, &lambda, max_weight)?,
                Which::Sigma => {
                    if lambda.k(0) != 0 {
                        return Err(Usage(
                            "sigma lemma needs a weight of the form 0,k1,k2".into(),
                        ));
                    }
                    lemma_check_sigma(&lie, lambda.k(1), lambda.k(2), max_weight)?
                }
            };
            let text = match format {
                Format::Json => report.to_json(),
                Format::Tsv => report.to_tsv(),
            };
            emit(&out, &text)?;
            for f in report.failures() {
                eprintln!("not a member: {} {}", f.map, f.generator);
            }
            Ok(if report.pass { 0 } else { 2 })
        }
        Command::Selfcheck {
            rank,
            samples,
            max_weight,
            mode_bound,
        } => {
            let lie = LieData::new(rank)?;
            let r = sample_commutators(&lie, samples, cli.seed, max_weight, mode_bound);
            for f in &r.failures {
                println!("FAIL {f}");
            }
            println!("{} checked, {} failed", r.checked, r.failures.len());
            Ok(if r.failures.is_empty() { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
