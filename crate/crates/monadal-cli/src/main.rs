//! `monadal`: runs the verification pipelines on JSON inputs and writes reports and dumps.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use monadal::hopfmonad::{HopfMonad, Sampling};
use monadal::io::{load_category, load_hopf_algebra, load_hopf_monad};
use monadal::{Category, Error, Report, Result};
use monadal_cli::pipelines::{self, emit_report, write_outcome, Format, Outcome};
use monadal_cli::verify::{verify_all, Context};

#[derive(Parser)]
#[command(name = "monadal", version, about = "Exact verification of Hopf monads, centralizers and doubles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for the randomized object-level checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Random objects per identity.
    #[arg(long, global = true, default_value_t = 4)]
    samples: usize,
    /// Directory for the report and dumps; without it the report goes to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(clap::Args)]
struct Inputs {
    /// Category JSON file.
    #[arg(long)]
    category: PathBuf,
    /// Hopf algebra JSON file over the category.
    #[arg(long)]
    hopf: Option<PathBuf>,
    /// Hopf monad JSON file, or the literal `identity`.
    #[arg(long)]
    monad: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    CheckCategory(Inputs),
    CheckHopfAlgebra(Inputs),
    CheckHopfMonad(Inputs),
    Centralize(Inputs),
    Double {
        #[command(flatten)]
        inputs: Inputs,
        /// Check the R-matrix axioms on pairs of simples only.
        #[arg(long)]
        r_simple_only: bool,
    },
    Coend {
        #[command(flatten)]
        inputs: Inputs,
        /// The coend of the braided category itself rather than of its center.
        #[arg(long)]
        braided: bool,
    },
    DoubleAlgebra(Inputs),
    VerifyAll {
        /// Directory holding the shipped fixtures.
        #[arg(long, default_value = "fixtures")]
        fixtures: PathBuf,
    },
}

fn monad(inputs: &Inputs, c: &Category, opts: &Sampling, rep: &mut Report) -> Result<HopfMonad> {
    match (&inputs.monad, &inputs.hopf) {
        (Some(m), _) if m == "identity" => Ok(HopfMonad::identity(c)),
        (Some(m), _) => load_hopf_monad(&PathBuf::from(m), c, opts),
        (None, Some(h)) => pipelines::monad_of_algebra(&load_hopf_algebra(h, c)?, rep),
        (None, None) => Err(Error::Invalid("--monad or --hopf is required".into())),
    }
}

fn hopf(inputs: &Inputs) -> Result<&PathBuf> {
    inputs.hopf.as_ref().ok_or_else(|| Error::Invalid("--hopf is required".into()))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let opts = Sampling { samples: cli.samples, seed: cli.seed, ..Sampling::default() };
    let mut cover = Report::new("");
    let mut o = match &cli.command {
        Command::CheckCategory(i) => pipelines::run_check_category(&load_category(&i.category)?, &opts),
        Command::CheckHopfAlgebra(i) => {
            pipelines::run_check_hopf_algebra(&load_hopf_algebra(hopf(i)?, &load_category(&i.category)?)?)
        }
        Command::CheckHopfMonad(i) => {
            let c = load_category(&i.category)?;
            pipelines::run_check_hopf_monad(&monad(i, &c, &opts, &mut cover)?, &opts)
        }
        Command::Centralize(i) => {
            let c = load_category(&i.category)?;
            pipelines::run_centralize(&monad(i, &c, &opts, &mut cover)?, &opts)?
        }
        Command::Double { inputs, r_simple_only } => {
            let c = load_category(&inputs.category)?;
            let r_opts = if *r_simple_only { Sampling { seed: opts.seed, ..Sampling::simple_only() } } else { opts };
            pipelines::run_double(&monad(inputs, &c, &opts, &mut cover)?, &opts, &r_opts)?
        }
        Command::Coend { inputs, braided } => pipelines::run_coend(&load_category(&inputs.category)?, *braided, &opts)?,
        Command::DoubleAlgebra(i) => {
            pipelines::run_double_algebra(&load_hopf_algebra(hopf(i)?, &load_category(&i.category)?)?, &opts)?
        }
        Command::VerifyAll { fixtures } => verify_all(&Context::new(fixtures, opts)),
    };
    o.report.coverage.extend(cover.coverage);
    Ok(o)
}

/// A failed validation or a falsified identity is a FAIL report; anything else is a usage or
/// input error.
fn classify(e: Error) -> std::result::Result<Outcome, String> {
    match e {
        Error::Validation(r) => Ok(Outcome { report: *r, dumps: Vec::new() }),
        Error::Falsified(_) | Error::Solve(_) => {
            let mut report = Report::new("error");
            report.fail("falsification", "construction", e.to_string());
            Ok(Outcome { report, dumps: Vec::new() })
        }
        e => Err(e.to_string()),
    }
}

fn init_threads() -> std::result::Result<(), String> {
    if let Ok(v) = std::env::var("MONADAL_THREADS") {
        let n: usize = v.parse().map_err(|_| format!("MONADAL_THREADS: not a count: {v}"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let format = match cli.format {
        OutFormat::Text => Format::Text,
        OutFormat::Json => Format::Json,
    };
    let outcome = init_threads().and_then(|()| run(&cli).or_else(classify));
    match outcome {
        Ok(o) => {
            match &cli.out {
                Some(dir) => {
                    if let Err(e) = write_outcome(&o, dir, format) {
                        eprintln!("error: {}: {e}", dir.display());
                        return ExitCode::from(2);
                    }
                    let (p, f) = o.report.counts();
                    println!("{}: {p} passed, {f} failed", o.report.pipeline);
                }
                None => print!("{}", emit_report(&o.report, format)),
            }
            if o.report.passed() {
                ExitCode::SUCCESS
            } else {
                for c in o.report.failures() {
                    eprintln!("FAIL {} [{}]", c.id, c.location);
                }
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
