//! `linecode`: build, verify and export additive quaternary line codes.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use linecode::io::{code_to_json, load_code};
use linecode::matrix::weights_csv;
use linecode::verify::{VerifyOptions, DEFAULT_ORACLE_LIMIT};
use linecode::{
    concatenated_binary_generator, format_k, lambda_k, quaternary_generator_matrix, s_k,
    sum_construction_check, verify_code, verify_construction, weight_distribution,
    AdditiveLineCode, CodeParameters, ExactRatio, Family, HyperplaneLoads, Strategy,
    VerificationReport,
};

#[derive(Parser, Debug)]
#[command(
    name = "linecode",
    version,
    about = "Additive quaternary codes from lines of PG(l-1, 2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code family and write it as a JSON code file.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Measure a family (or a code file) and check it against its claims.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// Table of lambda_k, s_k and the optimal witness codes.
    Params {
        #[arg(long, default_value_t = 8)]
        max_two_k: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Export a code as JSON, a weight table, or a generator matrix.
    Export {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Sum construction: juxtapose copies of a family code, or union code files.
    Sum {
        #[command(flatten)]
        source: SourceArgs,
        /// Number of copies of the family code.
        #[arg(long, default_value_t = 2)]
        copies: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        eval: EvalArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Ambient dimension l = 2k (all-lines, spread, three-cover).
    #[arg(long, visible_alias = "two-k")]
    l: Option<u32>,
    /// Variant family parameter; the code lives in PG(2m, 2).
    #[arg(long)]
    m: Option<u32>,
}

#[derive(Args, Debug, Clone)]
struct SourceArgs {
    #[arg(long, value_parser = parse_family, conflicts_with = "input")]
    family: Option<Family>,
    #[arg(long, visible_alias = "two-k")]
    l: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// JSON code file(s).
    #[arg(short, long)]
    input: Vec<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct EvalArgs {
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    /// Largest ambient dimension for the brute-force binary oracle.
    #[arg(long, env = "LINECODE_ORACLE_LIMIT", default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: u32,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum StrategyArg {
    Scan,
    Dual,
    Auto,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Scan => Strategy::Scan,
            StrategyArg::Dual => Strategy::Dual,
            StrategyArg::Auto => Strategy::default(),
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum ExportFormat {
    Json,
    CsvWeights,
    Gf4Genmat,
    BinGenmat,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TableFormat {
    Text,
    Json,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: linecode::Error| e.to_string())
}

fn family_size(family: Family, l: Option<u32>, m: Option<u32>) -> Result<Option<u32>> {
    match (family.size_name(), l, m) {
        (None, None, None) => Ok(None),
        (None, Some(3), None) => Ok(Some(3)),
        (None, ..) => bail!("family {family} takes no size parameter"),
        (Some("m"), None, Some(m)) => Ok(Some(m)),
        (Some("m"), ..) => bail!("family {family} needs --m (and no --l)"),
        (Some(_), Some(l), None) => Ok(Some(l)),
        (Some(_), ..) => bail!("family {family} needs --l (and no --m)"),
    }
}

impl SourceArgs {
    fn family(&self) -> Result<Option<(Family, Option<u32>)>> {
        match self.family {
            Some(f) => Ok(Some((f, family_size(f, self.l, self.m)?))),
            None => {
                if self.l.is_some() || self.m.is_some() {
                    bail!("--l/--m need --family");
                }
                Ok(None)
            }
        }
    }

    fn codes(&self) -> Result<Vec<AdditiveLineCode>> {
        if let Some((f, size)) = self.family()? {
            return Ok(vec![f.build(size)?]);
        }
        if self.input.is_empty() {
            bail!("give either --family or --input");
        }
        self.input
            .iter()
            .map(|p| load_code(p).map_err(anyhow::Error::from))
            .collect()
    }

    fn single_code(&self) -> Result<AdditiveLineCode> {
        let mut codes = self.codes()?;
        if codes.len() != 1 {
            bail!("expected exactly one code, got {}", codes.len());
        }
        Ok(codes.pop().unwrap())
    }
}

impl EvalArgs {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            strategy: self.strategy.into(),
            oracle_limit: self.oracle_limit,
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .context("writing to stdout"),
    }
}

fn print_report(report: &VerificationReport) -> Result<bool> {
    let json = serde_json::to_string_pretty(report).context("serializing report")?;
    println!("{json}");
    for m in &report.mismatches {
        eprintln!("mismatch: {m}");
    }
    Ok(report.pass)
}

#[derive(serde::Serialize)]
struct ParamsRow {
    two_k: u32,
    k: String,
    lambda: ExactRatio,
    s_k: u64,
    witness: Family,
    witness_parameters: String,
    witness_ratio: Option<ExactRatio>,
}

/// One row per `two_k`; the witness is measured, not assumed.
fn params_table(max_two_k: u32) -> Result<Vec<ParamsRow>> {
    if !(3..=12).contains(&max_two_k) {
        return Err(anyhow!("--max-two-k must lie in 3..=12, got {max_two_k}"));
    }
    let mut rows = Vec::new();
    for two_k in 3..=max_two_k {
        let witness = match two_k {
            3 => Family::Fano,
            t if t % 2 == 0 => Family::Spread,
            _ => Family::ThreeCover,
        };
        let size = (witness != Family::Fano).then_some(two_k);
        let code = witness.build(size)?;
        let params: CodeParameters =
            HyperplaneLoads::compute(&code, Strategy::default()).parameters();
        rows.push(ParamsRow {
            two_k,
            k: format_k(two_k),
            lambda: lambda_k(two_k)?,
            s_k: s_k(two_k)?,
            witness,
            witness_parameters: params.to_string(),
            witness_ratio: (params.s > 0).then(|| ExactRatio::new(params.n, params.s)),
        });
    }
    Ok(rows)
}

fn run_command(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Construct { family, output } => {
            let size = family_size(family.family, family.l, family.m)?;
            let code = family.family.build(size)?;
            emit(output.as_deref(), &code_to_json(&code))?;
            Ok(true)
        }
        Command::Verify { source, eval } => {
            let opts = eval.options();
            let report = match source.family()? {
                Some((f, size)) => verify_construction(f, size, &opts)?,
                None => verify_code(&source.single_code()?, &opts)?,
            };
            print_report(&report)
        }
        Command::Params { max_two_k, format } => {
            let rows = params_table(max_two_k)?;
            let ok = rows.iter().all(|r| r.witness_ratio == Some(r.lambda));
            match format {
                TableFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&rows).context("serializing table")?
                    )
                }
                TableFormat::Text => {
                    println!(
                        "{:<4} {:<5} {:<10} {:<6} {:<12} parameters",
                        "2k", "k", "lambda", "s_k", "witness"
                    );
                    for r in &rows {
                        println!(
                            "{:<4} {:<5} {:<10} {:<6} {:<12} {}",
                            r.two_k,
                            r.k,
                            r.lambda.to_string(),
                            r.s_k,
                            r.witness.name(),
                            r.witness_parameters
                        );
                    }
                }
            }
            Ok(ok)
        }
        Command::Export {
            source,
            format,
            output,
            strategy,
        } => {
            let code = source.single_code()?;
            let text = match format {
                ExportFormat::Json => code_to_json(&code),
                ExportFormat::CsvWeights => {
                    weights_csv(&weight_distribution(&code, strategy.into()))
                }
                ExportFormat::Gf4Genmat => quaternary_generator_matrix(&code).to_text(),
                ExportFormat::BinGenmat => concatenated_binary_generator(&code).to_text(),
            };
            emit(output.as_deref(), &text)?;
            Ok(true)
        }
        Command::Sum {
            source,
            copies,
            output,
            eval,
        } => {
            if source.family.is_some() {
                let code = source.single_code()?;
                let report = sum_construction_check(&code, copies, &eval.options())?;
                if let Some(path) = &output {
                    emit(Some(path), &code_to_json(&code.repeated(copies)?))?;
                }
                print_report(&report)
            } else {
                let codes = source.codes()?;
                if codes.len() < 2 {
                    return Err(anyhow!("sum needs at least two --input files"));
                }
                let mut total = codes[0].clone();
                for c in &codes[1..] {
                    total = total.sum(c)?;
                }
                emit(output.as_deref(), &code_to_json(&total))?;
                Ok(true)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run_command(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
