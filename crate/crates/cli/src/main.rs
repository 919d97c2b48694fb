use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use scaled_hypercomplex::text::{parse_hypercomplex, DEFAULT_PRECISION};
use scaled_hypercomplex::verify::Fault;
use scaled_hypercomplex::{Error, Scale, StarWord, DEFAULT_TOL};

mod commands;
mod table;

const CSV_HELP: &str = "\
CSV columns:
  eval      a_re,a_im,b_re,b_im
  spectrum  t,R,value_re,value_im,conjugate_re,conjugate_im,spectral_class,algebraic_class,det,similarity_residual
  moments   word,oracle_re,oracle_im,closed,gap,diagnostic
  sweep     t,det,algebraic_class,R,spectral_class,self_adjoint,projection,normal,unitary,diagnostic
  verify    invariant,checked,failures,max_residual,worst_ratio,passed

Empty cells mean \"not defined\"; the diagnostic column says why.

Exit codes: 0 success, 1 domain error, 2 parse error, 3 verification failure.";

/// Arithmetic, spectra and free moments in the t-scaled hypercomplex rings.
#[derive(Parser, Debug)]
#[command(name = "shc", version, after_help = CSV_HELP)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Scale t of the multiplication
    #[arg(short = 't', long = "scale", global = true, allow_hyphen_values = true)]
    scale: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Significant digits in rendered numbers
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: usize,

    /// Tolerance of the classification predicates
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression such as "(0,1)*(0,1)" or "inv((1+i,2))"
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Spectral value, spectrum and classes of an element "(a, b)"
    Spectrum {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Star-word moments τ(T^r1 ... T^rn), by matrix products and in closed form
    Moments {
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Comma-separated words over {1,*}, e.g. "11,1*"
        #[arg(long, conflicts_with = "nmax", required_unless_present = "nmax")]
        words: Option<String>,
        /// Emit τ(T^k) for k = 1..=N
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Tabulate classifications of one element across a range of scales
    Sweep {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        step: f64,
    },
    /// Run the randomized invariant suite
    Verify {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FaultArg {
    MulSign,
}

pub struct Ctx {
    pub format: Format,
    pub precision: usize,
    pub tol: f64,
}

pub enum Failure {
    Domain(String),
    Parse(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn scale(g: &Global) -> Result<Scale, Failure> {
    let t = g
        .scale
        .ok_or_else(|| Failure::Parse("missing -t/--scale".into()))?;
    Scale::new(t).map_err(|e| Failure::Parse(e.to_string()))
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let g = &cli.global;
    if !(g.tol >= 0.0) {
        return Err(Failure::Parse("--tol must be a nonnegative number".into()));
    }
    let ctx = Ctx {
        format: g.format,
        precision: g.precision.max(1),
        tol: g.tol,
    };
    match cli.command {
        Command::Eval { expr } => commands::eval(&ctx, scale(g)?, &expr, out),
        Command::Spectrum { x } => {
            commands::spectrum(&ctx, scale(g)?, parse_hypercomplex(&x)?, out)
        }
        Command::Moments { x, words, nmax } => {
            let t = scale(g)?;
            let x = parse_hypercomplex(&x)?;
            let words = match (words, nmax) {
                (Some(list), _) => list
                    .split(',')
                    .map(str::parse)
                    .collect::<Result<Vec<StarWord>, _>>()?,
                (None, Some(0)) => return Err(Failure::Parse("--nmax must be at least 1".into())),
                (None, Some(n)) => (1..=n)
                    .map(StarWord::power)
                    .collect::<Result<Vec<_>, _>>()?,
                (None, None) => unreachable!("clap requires one of --words/--nmax"),
            };
            commands::moments(&ctx, t, x, &words, out)
        }
        Command::Sweep { x, from, to, step } => {
            if !(step > 0.0) || !from.is_finite() || !to.is_finite() || to < from {
                return Err(Failure::Parse(
                    "sweep needs a finite range with --from <= --to and --step > 0".into(),
                ));
            }
            commands::sweep(&ctx, parse_hypercomplex(&x)?, from, to, step, out)
        }
        Command::Verify {
            samples,
            inject_fault,
        } => {
            if samples == 0 {
                return Err(Failure::Parse("--samples must be at least 1".into()));
            }
            let fault = inject_fault.map(|FaultArg::MulSign| Fault::MulSign);
            commands::verify(&ctx, g.seed, samples, fault, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let res = run(cli, &mut out);
    let _ = out.flush();
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
