//! Command-line driver: run `.ssc` scripts and law suites.

mod exec;
mod script;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use subschemes::laws;
use subschemes::report::Status;
use subschemes::MonomialOrder;

#[derive(Parser)]
#[command(name = "subscheme-calc", version, about = "Exact arithmetic of closed subschemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Subcommand)]
enum Command {
    /// Run a script file.
    Run {
        /// Path to the `.ssc` script.
        file: PathBuf,
        /// Also check the triple-overlap cocycle condition of every scheme.
        #[arg(long)]
        cocycle_check: bool,
        /// Canonical monomial order for rings declared in the script.
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
    },
    /// Run every module law suite.
    Laws {
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = laws::DEFAULT_SEED)]
        seed: u64,
        /// Upper bound of the exhaustive cyclic-ring sweep.
        #[arg(long, default_value_t = laws::DEFAULT_MAX_N)]
        max_n: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run {
            file,
            cocycle_check,
            order,
        } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("cannot read {}: {e}", file.display());
                    return ExitCode::from(exec::EXIT_PARSE_ERROR as u8);
                }
            };
            let options = exec::Options {
                cocycle_check,
                order: match order {
                    OrderArg::Lex => MonomialOrder::Lex,
                    OrderArg::Grevlex => MonomialOrder::GrevLex,
                },
                ..exec::Options::default()
            };
            match script::parse_script(&text) {
                Ok(parsed) => {
                    let mut out = std::io::stdout().lock();
                    let mut err = std::io::stderr().lock();
                    exec::execute(&parsed, &options, &mut out, &mut err)
                }
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    exec::EXIT_PARSE_ERROR
                }
            }
        }
        Command::Laws { seed, max_n } => {
            let mut out = std::io::stdout().lock();
            let mut failed = false;
            for module in ["polyring", "groebner", "algebra", "scheme", "subscheme", "oracle"] {
                writeln!(out, "== {module} ==").ok();
                let report = laws::run_module(module, seed, max_n).expect("known module");
                write!(out, "{report}").ok();
                failed |= report.entries().iter().any(|e| e.status == Status::Fail);
            }
            if failed {
                exec::EXIT_FAILURE
            } else {
                exec::EXIT_OK
            }
        }
    };
    ExitCode::from(code as u8)
}
