use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use horokit::commands::{self, exit, CliError, Outcome};
use horokit::parse;
use horokit::verify::VerifyConfig;
use horokit::Format;
use horokit_core::diophantine::{SolParams, Solution};
use horokit_core::hurwitz::{Factorization, DEFAULT_DEPTH};
use horokit_core::torus::{CurveClass, Sign};
use num_bigint::BigInt;

/// Horizontal-decomposition toolkit: twist factorizations on the torus,
/// their solution sets and the cobordisms they describe.
#[derive(Parser)]
#[command(name = "horokit", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Bound {
    /// Box bound |x|, |y| ≤ BOUND.
    #[arg(long, env = "HOROKIT_BOUND", default_value_t = 200,
          value_parser = clap::value_parser!(u64).range(1..))]
    bound: u64,
}

#[derive(Args)]
struct Params {
    #[arg(long, allow_hyphen_values = true, value_parser = parse::integer)]
    n: BigInt,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::sign)]
    eps: Sign,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::sign)]
    d2: Sign,
    #[arg(long, allow_hyphen_values = true, value_parser = parse::sign)]
    d1: Sign,
}

impl Params {
    fn get(&self) -> SolParams {
        SolParams::new(self.n.clone(), self.eps, self.d2, self.d1)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a one- or two-handle datum.
    Classify {
        /// Lower curve as p,q.
        #[arg(long, allow_hyphen_values = true, value_parser = parse::curve)]
        g1: CurveClass,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::sign)]
        d1: Sign,
        /// Upper curve as p,q (omit for a single 2-handle).
        #[arg(long, allow_hyphen_values = true, value_parser = parse::curve, requires = "d2")]
        g2: Option<CurveClass>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::sign, requires = "g2")]
        d2: Option<Sign>,
    },
    /// List the members of a solution set inside a box.
    Enumerate {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        bound: Bound,
    },
    /// Replay the descent of a member to the bottom set.
    Descend {
        #[command(flatten)]
        params: Params,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::integer)]
        x: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::integer)]
        y: BigInt,
    },
    /// Search for Hurwitz moves between two factorizations.
    Hurwitz {
        /// Twists in attachment order, e.g. "1,0:+1 0,1:-1".
        #[arg(long, allow_hyphen_values = true, value_parser = parse::factorization)]
        from: Factorization,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::factorization)]
        to: Factorization,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Tabulate the rational ball pairs and their lens space boundaries.
    Families {
        #[arg(long, default_value_t = 15)]
        m_max: u32,
    },
    /// Describe the Kirby diagram of a factorization.
    EmitKirby {
        #[arg(long, allow_hyphen_values = true, value_parser = parse::factorization)]
        factorization: Factorization,
        /// Leave out the dotted unknot.
        #[arg(long)]
        no_one_handle: bool,
    },
    /// Run every self-check suite.
    Verify {
        #[command(flatten)]
        bound: Bound,
        #[arg(long, default_value_t = DEFAULT_DEPTH, value_parser = positive)]
        depth: usize,
        #[arg(long, default_value_t = 15)]
        m_max: u32,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Classify { g1, d1, g2, d2 } => commands::classify(&g1, d1, g2.zip(d2)),
        Command::Enumerate { params, bound } => commands::enumerate(&params.get(), bound.bound),
        Command::Descend { params, x, y } => commands::descend_cmd(&params.get(), &Solution::new(x, y)),
        Command::Hurwitz { from, to, depth } => commands::hurwitz(&from, &to, depth),
        Command::Families { m_max } => commands::families(m_max),
        Command::EmitKirby {
            factorization,
            no_one_handle,
        } => commands::emit_kirby_cmd(&factorization, !no_one_handle),
        Command::Verify {
            bound,
            depth,
            m_max,
            seed,
        } => commands::verify_cmd(&VerifyConfig {
            bound: bound.bound,
            depth,
            m_max,
            seed,
            ..VerifyConfig::default()
        }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::MALFORMED } else { exit::OK });
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.table.render(cli.format).as_bytes()).is_err() {
                return ExitCode::from(exit::MALFORMED);
            }
            if outcome.code != exit::OK {
                eprintln!("horokit: one or more verification suites failed");
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("horokit: {e}");
            ExitCode::from(e.code)
        }
    }
}
