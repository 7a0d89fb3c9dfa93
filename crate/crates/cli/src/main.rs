use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use wallcross::colreg::{column_regularize, BoxSet};
use wallcross::cores::{core, quotient};
use wallcross::mullineux::{mullineux_transpose, wallcross_map};
use wallcross::render::{render_trajectories, render_trajectory, render_verdicts, OutputFormat};
use wallcross::verify::{Claim, Verdict, Verifier};
use wallcross::wallcross::{trajectory, Algorithm};
use wallcross::{enumerate_partitions, Error, Partition};

const EXIT_INPUT: u8 = 1;
const EXIT_COLREG: u8 = 2;
const EXIT_THEOREM: u8 = 3;
const EXIT_CONJECTURE: u8 = 4;

/// Partition maps, wall-crossing trajectories and exhaustive checks.
#[derive(Debug, Parser)]
#[command(name = "wallcross", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,

    /// Worker threads for verification sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    parallel: usize,

    /// Seed for randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Markdown,
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Markdown => OutputFormat::Markdown,
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MapKind {
    Mullineux,
    WallcrossMap,
    Colreg,
    Core,
    Quotient,
    Transpose,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    Wallcross,
    Colreg,
    First,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Wallcross => Algorithm::Wallcross,
            Algo::Colreg => Algorithm::Colreg,
            Algo::First => Algorithm::First,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClaimArg {
    Main,
    Monotone,
    Quotient,
    Conjecture,
    Equivalence,
    CoreFixedpoint,
    ColregTotality,
    Lemmas,
    Properties,
    All,
}

impl ClaimArg {
    fn claims(self) -> Vec<Claim> {
        match self {
            ClaimArg::Main => vec![Claim::Main],
            ClaimArg::Monotone => vec![Claim::Monotone],
            ClaimArg::Quotient => vec![Claim::Quotient],
            ClaimArg::Conjecture => vec![Claim::Conjecture],
            ClaimArg::Equivalence => vec![Claim::Equivalence],
            ClaimArg::CoreFixedpoint => vec![Claim::CoreFixedpoint],
            ClaimArg::ColregTotality => vec![Claim::ColregTotality],
            ClaimArg::Lemmas => vec![Claim::Lemmas],
            ClaimArg::Properties => vec![Claim::Properties],
            ClaimArg::All => Claim::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply one map to a partition.
    Map {
        kind: MapKind,
        /// Partition such as "5,4,2", "2^2,1" or "" for the empty partition.
        #[arg(long = "p", allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
    },
    /// Follow a partition across every Farey wall of order n.
    Trajectory {
        #[arg(long, value_enum, default_value_t = Algo::Wallcross)]
        algo: Algo,
        /// Starting partition; omit with --all.
        #[arg(long = "p")]
        partition: Option<String>,
        /// Order of the Farey sequence; defaults to the size of the partition.
        #[arg(long)]
        n: Option<usize>,
        /// Run every partition of n as a start.
        #[arg(long)]
        all: bool,
    },
    /// Run exhaustive checks for 2 <= n <= n-max.
    Verify {
        #[arg(value_enum)]
        claim: ClaimArg,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotAPartition(_) | Error::ColregFailure { .. } => EXIT_COLREG,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse().map_err(Failure::from)
}

fn need(value: Option<usize>, flag: &str, kind: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::input(format!("map {kind} needs --{flag}")))
}

fn partition_output(p: &Partition, format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => format!("{p}\n"),
        OutputFormat::Csv => format!("partition\n\"{p}\"\n"),
        OutputFormat::Json => format!("{}\n", json!(p.parts())),
    }
}

fn quotient_output(q: &[Partition], format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => {
            let items: Vec<String> = q.iter().map(Partition::exponential).collect();
            format!("{}\n", items.join(","))
        }
        OutputFormat::Csv => {
            let mut out = String::from("k,partition\n");
            for (k, p) in q.iter().enumerate() {
                out.push_str(&format!("{k},\"{p}\"\n"));
            }
            out
        }
        OutputFormat::Json => {
            let parts: Vec<&[usize]> = q.iter().map(Partition::parts).collect();
            format!("{}\n", json!(parts))
        }
    }
}

fn boxset_output(boxes: &BoxSet, format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => {
            format!("not a partition: {boxes}\n\n```\n{}```\n", boxes.picture())
        }
        OutputFormat::Csv => {
            let mut out = String::from("row,col\n");
            for c in &boxes.boxes {
                out.push_str(&format!("{},{}\n", c.row, c.col));
            }
            out
        }
        OutputFormat::Json => {
            let cells: Vec<[usize; 2]> = boxes.boxes.iter().map(|c| [c.row, c.col]).collect();
            format!(
                "{}\n",
                json!({ "error": "not-a-partition", "boxes": cells })
            )
        }
    }
}

fn run_map(
    kind: MapKind,
    text: &str,
    a: Option<usize>,
    b: Option<usize>,
    format: OutputFormat,
) -> Result<String, Failure> {
    let lambda = parse_partition(text)?;
    let name = kind
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let out = match kind {
        MapKind::Mullineux => mullineux_transpose(&lambda, need(b, "b", &name)?)?,
        MapKind::WallcrossMap => wallcross_map(&lambda, need(b, "b", &name)?)?,
        MapKind::Core => core(&lambda, need(b, "b", &name)?)?,
        MapKind::Transpose => lambda.transpose(),
        MapKind::Quotient => {
            let q = quotient(&lambda, need(b, "b", &name)?)?;
            return Ok(quotient_output(&q, format));
        }
        MapKind::Colreg => {
            let (a, b) = (need(a, "a", &name)?, need(b, "b", &name)?);
            match column_regularize(&lambda, a, b) {
                Ok(p) => p,
                Err(Error::NotAPartition(boxes)) => {
                    print!("{}", boxset_output(&boxes, format));
                    return Err(Failure {
                        code: EXIT_COLREG,
                        message: format!(
                            "column regularization of {lambda} at {a}/{b} is not a partition"
                        ),
                    });
                }
                Err(e) => return Err(e.into()),
            }
        }
    };
    Ok(partition_output(&out, format))
}

fn run_trajectory(
    algo: Algo,
    text: Option<&str>,
    n: Option<usize>,
    all: bool,
    format: OutputFormat,
) -> Result<String, Failure> {
    let algo = Algorithm::from(algo);
    if all {
        let n = n.ok_or_else(|| Failure::input("trajectory --all needs --n"))?;
        if text.is_some() {
            return Err(Failure::input("trajectory --all takes no --p"));
        }
        let ts = enumerate_partitions(n)
            .map(|lambda| trajectory(algo, &lambda, n))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(render_trajectories(&ts, format));
    }
    let text = text.ok_or_else(|| Failure::input("trajectory needs --p or --all"))?;
    let lambda = parse_partition(text)?;
    let n = n.unwrap_or(lambda.size());
    let t = trajectory(algo, &lambda, n)?;
    Ok(render_trajectory(&t, format))
}

fn verdict_code(verdicts: &[Verdict]) -> u8 {
    if verdicts
        .iter()
        .any(|v| !v.holds && !v.claim.is_conjecture())
    {
        EXIT_THEOREM
    } else if verdicts.iter().any(|v| !v.holds) {
        EXIT_CONJECTURE
    } else {
        0
    }
}

fn run_verify(
    claim: ClaimArg,
    n_max: usize,
    workers: usize,
    seed: u64,
    format: OutputFormat,
) -> Result<(String, u8), Failure> {
    if n_max < 2 {
        return Err(Failure::input(format!(
            "--n-max must be at least 2, got {n_max}"
        )));
    }
    let verifier = Verifier::new(workers, seed)?;
    let verdicts = claim
        .claims()
        .into_iter()
        .map(|c| verifier.check(c, 2..=n_max))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((render_verdicts(&verdicts, format), verdict_code(&verdicts)))
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let format = OutputFormat::from(cli.format);
    if cli.parallel == 0 {
        return Err(Failure::input("--parallel must be at least 1"));
    }
    match cli.command {
        Command::Map {
            kind,
            partition,
            a,
            b,
        } => Ok((run_map(kind, &partition, a, b, format)?, 0)),
        Command::Trajectory {
            algo,
            partition,
            n,
            all,
        } => Ok((
            run_trajectory(algo, partition.as_deref(), n, all, format)?,
            0,
        )),
        Command::Verify { claim, n_max } => {
            run_verify(claim, n_max, cli.parallel, cli.seed, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_INPUT);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
