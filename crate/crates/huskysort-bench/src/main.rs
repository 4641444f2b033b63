//! The `huskysort` command-line tool: sort files, run benchmarks, print the
//! access cost model, count inversions, inspect keys.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use ordered_float::OrderedFloat;

use huskysort::analysis::{
    model_husky_accesses, model_merge_accesses, CostModelParams, FITTED_LINEARITHMIC_COEFF,
};
use huskysort::coder::NanoTimestamp;
use huskysort::decimal::BigDecimal;
use huskysort::pipeline::{CleanupStrategy, HuskySortConfig, AUTO_CLEANUP_THRESHOLD};
use huskysort::{husky_sort, husky_sort_stable, HuskyCoder};
use huskysort_bench::bench::{compare_algorithms, BenchmarkConfig};
use huskysort_bench::coders::{self, CoderSpec, Family, KNOWN_CODERS};
use huskysort_bench::config::{load_config, FileConfig};
use huskysort_bench::corpus::CorpusSpec;
use huskysort_bench::report::ReportFormat;
use huskysort_bench::runner::Algorithm;

#[derive(Parser)]
#[command(
    name = "huskysort",
    version,
    about = "Sort with 64-bit husky codes: encode, sort the keys, clean up the stragglers"
)]
struct Cli {
    /// Seed for input generation and the optional pre-sort shuffle.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Timed repetitions per benchmark cell.
    #[arg(long, global = true)]
    runs: Option<usize>,
    /// Untimed repetitions before the timed ones.
    #[arg(long, global = true)]
    warmups: Option<usize>,
    /// Coder id (one of: ascii, english, english6, unicode, long, int,
    /// double, bigint, bigdecimal, date, tuple, perturb:<q>:<inner>).
    #[arg(long, global = true)]
    coder: Option<String>,
    /// Cleanup strategy for the husky pipeline.
    #[arg(long, global = true, value_parser = ["auto", "merge", "insertion"])]
    cleanup: Option<String>,
    /// Auto-cleanup switch point: below it insertion, at or above it merge.
    #[arg(long, global = true)]
    threshold: Option<usize>,
    /// Report format.
    #[arg(long, global = true, value_parser = ["csv", "markdown"])]
    format: Option<String>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sort the lines of a file with the chosen coder.
    Sort {
        /// Input file; stdin when absent.
        file: Option<PathBuf>,
        /// Use the stable variant (merge key phase).
        #[arg(long)]
        stable: bool,
        /// Shuffle before encoding, in case the input is pre-ordered.
        #[arg(long)]
        may_be_sorted: bool,
    },
    /// Run a benchmark grid and emit a report.
    Bench {
        /// key=value config file; command-line flags override it.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated algorithm ids (husky_intro, husky_merge,
        /// dual_pivot, adaptive_merge, insertion).
        #[arg(long, value_delimiter = ',')]
        algorithms: Option<Vec<String>>,
        /// Comma-separated input sizes.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        /// Leipzig-format corpus for the English-words family.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Algorithm whose median is the 1.00 reference.
        #[arg(long)]
        normalize_to: Option<String>,
    },
    /// Print the access-cost model for a list of sizes.
    Model {
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        /// Extra fields read per comparison in the baseline sort.
        #[arg(long, default_value_t = 4.0)]
        j: f64,
        /// Accesses to encode one element.
        #[arg(long, default_value_t = 7.0)]
        k: f64,
        /// Residual-inversion fraction after the key phase.
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        /// Husky linearithmic coefficient; defaults to the fitted 20/3.
        #[arg(long)]
        c: Option<f64>,
    },
    /// Count inversions among the lines of a file.
    Inversions {
        /// Input file; stdin when absent.
        file: Option<PathBuf>,
    },
    /// Print each line's 64-bit key under the chosen coder.
    Encode {
        /// Input file; stdin when absent.
        file: Option<PathBuf>,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Err(err) = run(Cli::parse()) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    match &cli.command {
        Command::Sort {
            file,
            stable,
            may_be_sorted,
        } => {
            let text = read_input(file.as_deref())?;
            let out = sort_lines(&cli, text.lines(), *stable, *may_be_sorted)?;
            write_output(&cli, &out)
        }
        Command::Bench {
            config,
            algorithms,
            sizes,
            corpus,
            normalize_to,
        } => {
            let (bench_cfg, format, output) = resolve_bench(
                &cli,
                config.as_deref(),
                algorithms,
                sizes,
                corpus,
                normalize_to,
            )?;
            let report = compare_algorithms(&bench_cfg)?;
            let text = report.emit(format);
            match output {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
        Command::Model { n, j, k, p, c } => {
            let text = model_table(n, *j, *k, *p, *c);
            write_output(&cli, &text)
        }
        Command::Inversions { file } => {
            let text = read_input(file.as_deref())?;
            let lines: Vec<&str> = text.lines().collect();
            let count = huskysort::analysis::count_inversions(&lines);
            write_output(&cli, &format!("{count}\n"))
        }
        Command::Encode { file } => {
            let spec = coder_spec(&cli)?;
            let coder = coders::string_coder(&spec, cli.seed.unwrap_or(0))?;
            let text = read_input(file.as_deref())?;
            let mut out = String::new();
            for line in text.lines() {
                let key = coder.encode(&line.to_owned());
                out.push_str(&format!("{key} / {key:#018x}\n"));
            }
            write_output(&cli, &out)
        }
    }
}

fn coder_spec(cli: &Cli) -> Result<CoderSpec> {
    CoderSpec::parse(cli.coder.as_deref().unwrap_or("ascii"))
}

fn cleanup_strategy(name: &str) -> Result<CleanupStrategy> {
    Ok(match name {
        "auto" => CleanupStrategy::Auto,
        "merge" => CleanupStrategy::AdaptiveMerge,
        "insertion" => CleanupStrategy::Insertion,
        _ => bail!("unknown cleanup strategy '{name}' (known: auto, merge, insertion)"),
    })
}

fn pipeline_config(cli: &Cli, may_be_sorted: bool) -> Result<HuskySortConfig> {
    Ok(HuskySortConfig {
        may_be_sorted,
        cleanup: cleanup_strategy(cli.cleanup.as_deref().unwrap_or("auto"))?,
        auto_threshold: cli.threshold.unwrap_or(AUTO_CLEANUP_THRESHOLD),
        seed: cli.seed.unwrap_or(0),
        ..HuskySortConfig::default()
    })
}

fn read_input(file: Option<&std::path::Path>) -> Result<String> {
    match file {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn write_output(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .context("writing stdout")?;
            Ok(())
        }
    }
}

/// Sorts parsed lines with the pipeline and renders them back, one per line.
fn sort_lines<'a>(
    cli: &Cli,
    lines: impl Iterator<Item = &'a str>,
    stable: bool,
    may_be_sorted: bool,
) -> Result<String> {
    let spec = coder_spec(cli)?;
    let cfg = pipeline_config(cli, may_be_sorted)?;
    let seed = cli.seed.unwrap_or(0);

    fn sort_typed<T: Ord + ToString>(
        mut values: Vec<T>,
        coder: &dyn HuskyCoder<T>,
        cfg: &HuskySortConfig,
        stable: bool,
    ) -> String {
        if stable {
            husky_sort_stable(&mut values, coder, cfg);
        } else {
            husky_sort(&mut values, coder, cfg);
        }
        let mut out = String::new();
        for v in values {
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    fn parse_all<'a, T: FromStr>(
        lines: impl Iterator<Item = &'a str>,
        what: &str,
    ) -> Result<Vec<T>> {
        lines
            .enumerate()
            .map(|(i, line)| {
                line.trim()
                    .parse::<T>()
                    .map_err(|_| anyhow::anyhow!("line {}: '{line}' is not {what}", i + 1))
            })
            .collect()
    }

    Ok(match spec.family() {
        Family::EnglishWords | Family::CjkWords => {
            let values: Vec<String> = lines.map(str::to_owned).collect();
            sort_typed(values, &coders::string_coder(&spec, seed)?, &cfg, stable)
        }
        Family::Longs => {
            let values: Vec<i64> = parse_all(lines, "a 64-bit integer")?;
            sort_typed(values, &coders::long_coder(&spec, seed)?, &cfg, stable)
        }
        Family::Ints => {
            let values: Vec<i32> = parse_all(lines, "a 32-bit integer")?;
            sort_typed(values, &coders::int_coder(&spec, seed)?, &cfg, stable)
        }
        Family::Doubles => {
            let raw: Vec<f64> = parse_all(lines, "a floating-point number")?;
            let values: Vec<OrderedFloat<f64>> = raw.into_iter().map(OrderedFloat).collect();
            let coder = coders::double_coder(&spec, seed)?;
            let mut values = values;
            if stable {
                husky_sort_stable(&mut values, &coder, &cfg);
            } else {
                husky_sort(&mut values, &coder, &cfg);
            }
            values.into_iter().map(|v| format!("{}\n", v.0)).collect()
        }
        Family::BigInts => {
            let values: Vec<BigInt> = parse_all(lines, "an integer")?;
            sort_typed(values, &coders::bigint_coder(&spec, seed)?, &cfg, stable)
        }
        Family::BigDecimals => {
            let values: Vec<BigDecimal> = parse_all(lines, "a decimal number")?;
            sort_typed(
                values,
                &coders::bigdecimal_coder(&spec, seed)?,
                &cfg,
                stable,
            )
        }
        Family::Dates => {
            let raw: Vec<i128> = parse_all(lines, "a nanosecond timestamp")?;
            let values: Vec<NanoTimestamp> = raw.into_iter().map(NanoTimestamp).collect();
            let coder = coders::date_coder(&spec, seed)?;
            let mut values = values;
            if stable {
                husky_sort_stable(&mut values, &coder, &cfg);
            } else {
                husky_sort(&mut values, &coder, &cfg);
            }
            values.into_iter().map(|v| format!("{}\n", v.0)).collect()
        }
        Family::Tuples => {
            let values: Vec<(i64, String)> = lines
                .enumerate()
                .map(|(i, line)| {
                    let (num, word) = line.split_once('\t').ok_or_else(|| {
                        anyhow::anyhow!("line {}: expected '<integer><TAB><word>'", i + 1)
                    })?;
                    let num: i64 = num.trim().parse().map_err(|_| {
                        anyhow::anyhow!("line {}: '{num}' is not a 64-bit integer", i + 1)
                    })?;
                    Ok((num, word.to_owned()))
                })
                .collect::<Result<_>>()?;
            let coder = coders::tuple_coder(&spec, seed)?;
            let mut values = values;
            if stable {
                husky_sort_stable(&mut values, &coder, &cfg);
            } else {
                husky_sort(&mut values, &coder, &cfg);
            }
            values
                .into_iter()
                .map(|(n, w)| format!("{n}\t{w}\n"))
                .collect()
        }
    })
}

/// Builds the model table: one row per size, columns for the raw `n·ln n`,
/// the merge-sort access model, and the husky access model.
fn model_table(sizes: &[u64], j: f64, k: f64, p: f64, c: Option<f64>) -> String {
    let mut params = CostModelParams::with_jkp(j, k, p);
    params.husky_linearithmic_coeff = c.unwrap_or(FITTED_LINEARITHMIC_COEFF);
    let mut out = String::new();
    out.push_str(&format!(
        "{:>14} {:>16} {:>16} {:>16}\n",
        "n", "n_ln_n", "merge", "husky"
    ));
    for &n in sizes {
        let nf = n as f64;
        let nlnn = if n == 0 { 0.0 } else { nf * nf.ln() };
        let merge = model_merge_accesses(n.max(1), &params);
        let husky = model_husky_accesses(n.max(1), &params);
        out.push_str(&format!(
            "{:>14} {:>16.0} {:>16.0} {:>16.0}\n",
            n,
            nlnn.round(),
            merge.round(),
            husky.round()
        ));
    }
    let c_used = params.husky_linearithmic_coeff;
    out.push_str(&format!(
        "husky column coefficient: {c_used} (fitted default 20/3 ≈ {FITTED_LINEARITHMIC_COEFF:.4}; \
         nominal model value 6.4 — override with --c)\n"
    ));
    out
}

/// Merges defaults ← config file ← command-line flags into a benchmark
/// configuration (rightmost wins).
fn resolve_bench(
    cli: &Cli,
    config: Option<&std::path::Path>,
    algorithms: &Option<Vec<String>>,
    sizes: &Option<Vec<usize>>,
    corpus: &Option<PathBuf>,
    normalize_to: &Option<String>,
) -> Result<(BenchmarkConfig, ReportFormat, Option<PathBuf>)> {
    let file = match config {
        Some(path) => load_config(path)?,
        None => FileConfig::default(),
    };
    let mut cfg = BenchmarkConfig::default();

    let algorithm_ids: Option<Vec<String>> = algorithms.clone().or_else(|| file.algorithms.clone());
    if let Some(ids) = algorithm_ids {
        cfg.algorithms = ids
            .iter()
            .map(|id| {
                Algorithm::parse(id).ok_or_else(|| anyhow::anyhow!("unknown algorithm '{id}'"))
            })
            .collect::<Result<_>>()?;
    }
    if let Some(id) = cli.coder.clone().or_else(|| file.coder.clone()) {
        cfg.coder = CoderSpec::parse(&id)?;
    }
    if let Some(s) = sizes.clone().or_else(|| file.sizes.clone()) {
        cfg.sizes = s;
    }
    if let Some(runs) = cli.runs.or(file.runs) {
        cfg.runs = runs;
    }
    if let Some(warmups) = cli.warmups.or(file.warmups) {
        cfg.warmups = warmups;
    }
    if let Some(seed) = cli.seed.or(file.seed) {
        cfg.seed = seed;
    }
    if let Some(name) = cli.cleanup.clone().or_else(|| file.cleanup.clone()) {
        cfg.cleanup = cleanup_strategy(&name)?;
    }
    if let Some(threshold) = cli.threshold.or(file.threshold) {
        cfg.threshold = threshold;
    }
    if let Some(id) = normalize_to.clone().or_else(|| file.normalize.clone()) {
        cfg.normalize_to =
            Algorithm::parse(&id).ok_or_else(|| anyhow::anyhow!("unknown algorithm '{id}'"))?;
    }
    if let Some(path) = corpus.clone().or_else(|| file.corpus.clone()) {
        cfg.corpus = CorpusSpec::new(path);
    }
    let format = match cli.format.clone().or_else(|| file.format.clone()) {
        Some(name) => ReportFormat::parse(&name)?,
        None => ReportFormat::Csv,
    };
    let output = cli.output.clone().or_else(|| file.output.clone());
    let _ = KNOWN_CODERS; // referenced by coder parse errors
    Ok((cfg, format, output))
}
