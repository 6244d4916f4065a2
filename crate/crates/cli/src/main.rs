use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lpcoh::engine::{EngineConfig, DEFAULT_BUDGET, DEFAULT_MAX_DEGREE};
use lpcoh_cli::{
    cmd_cohom, cmd_examples_list, cmd_les, cmd_validate, envelope, example_file, read_input, CliError, Output, Which,
};

#[derive(Parser)]
#[command(
    name = "lpcoh",
    version,
    about = "Exact cohomology of Leibniz pairs and their modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Limits {
    /// Highest degree to compute
    #[arg(short = 'N', default_value_t = 3)]
    n: usize,
    /// Largest cochain space (columns) the engine may assemble
    #[arg(long, env = "LPCOH_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Largest degree that may be requested with -N
    #[arg(long = "max-n", env = "LPCOH_MAX_N", default_value_t = DEFAULT_MAX_DEGREE, hide = true)]
    max_n: usize,
}

impl Limits {
    fn config(&self) -> EngineConfig {
        EngineConfig {
            max_degree: self.max_n,
            budget: self.budget,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Lp,
    Ce,
    Hochschild,
    Qext,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of the pair and module in a file
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cohomology dimensions in degrees 0..=N
    Cohom {
        which: WhichArg,
        path: PathBuf,
        #[command(flatten)]
        limits: Limits,
        /// Also print representative cocycles
        #[arg(long)]
        reps: bool,
        #[arg(long)]
        json: bool,
    },
    /// The long exact sequence relating Ext, H_LP and HL
    Les {
        path: PathBuf,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        json: bool,
    },
    /// Bundled example inputs
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// List the bundled examples
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print an example file, or write it to --out
    Emit {
        name: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn finish(command: &[String], sha: Option<&str>, json: bool, result: Result<Output, CliError>) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            if json {
                let report = envelope(command, sha, ("result", out.result));
                let _ = writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                let _ = write!(stdout, "{}", out.human);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if json {
                let body =
                    serde_json::json!({ "kind": e.kind(), "message": e.to_string(), "exit_code": e.exit_code() });
                let report = envelope(command, sha, ("error", body));
                let _ = writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            }
            eprintln!("lpcoh: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn with_input(
    path: &Path,
    command: &[String],
    json: bool,
    run: impl FnOnce(&lpcoh_cli::Input) -> Result<Output, CliError>,
) -> ExitCode {
    match read_input(path) {
        Ok(input) => {
            let result = run(&input);
            finish(command, Some(&input.sha256), json, result)
        }
        Err(e) => finish(command, None, json, Err(e)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    match cli.command {
        Command::Validate { path, json } => with_input(&path, &command, json, cmd_validate),
        Command::Cohom {
            which,
            path,
            limits,
            reps,
            json,
        } => {
            let which = match which {
                WhichArg::Lp => Which::Lp,
                WhichArg::Ce => Which::Ce,
                WhichArg::Hochschild => Which::Hochschild,
                WhichArg::Qext => Which::Qext,
            };
            with_input(&path, &command, json, |input| {
                cmd_cohom(input, which, limits.n, reps, &limits.config())
            })
        }
        Command::Les { path, limits, json } => with_input(&path, &command, json, |input| {
            cmd_les(input, limits.n, &limits.config())
        }),
        Command::Examples { action } => match action {
            ExamplesAction::List { json } => finish(&command, None, json, Ok(cmd_examples_list())),
            ExamplesAction::Emit { name, out } => match example_file(&name) {
                Ok(text) => match out {
                    Some(path) => match std::fs::write(&path, text) {
                        Ok(()) => ExitCode::SUCCESS,
                        Err(e) => {
                            eprintln!("lpcoh: cannot write {}: {e}", path.display());
                            ExitCode::from(2)
                        }
                    },
                    None => {
                        print!("{text}");
                        ExitCode::SUCCESS
                    }
                },
                Err(e) => finish(&command, None, false, Err(e)),
            },
        },
    }
}
