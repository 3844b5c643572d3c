use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use supclose::{report, run_command, verify_suites, CliError, ExitStatus, Session, COMMANDS};

#[derive(Parser)]
#[command(name = "supclose", version, about = "Support closures, Oda ideals and friends, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites.
    Verify {
        /// Suite names (repeatable or comma separated), or `all`.
        #[arg(long = "suite", value_delimiter = ',', default_value = "all")]
        suites: Vec<String>,
        /// Random cases per randomized suite; 0 runs nothing.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a session file in canonical form.
    Print {
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
    },
    /// Any engine command, e.g. `support-closure E -f session.json`.
    #[command(external_subcommand)]
    Engine(Vec<String>),
}

/// Splits `-f PATH` / `--file PATH` / `--file=PATH` out of the arguments.
fn take_file(args: &[String]) -> Result<(PathBuf, Vec<String>), CliError> {
    let mut file = None;
    let mut rest = Vec::new();
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "-f" || a == "--file" {
            let path = it.next().ok_or_else(|| CliError::parse(format!("{a} needs a path")))?;
            file = Some(PathBuf::from(path));
        } else if let Some(path) = a.strip_prefix("--file=") {
            file = Some(PathBuf::from(path));
        } else {
            rest.push(a.clone());
        }
    }
    let file = file.ok_or_else(|| CliError::parse("missing session file (-f PATH)"))?;
    Ok((file, rest))
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn run(cli: Cli) -> Result<ExitStatus, CliError> {
    match cli.command {
        Command::Verify { suites, count, seed } => {
            let start = Instant::now();
            let (result, passed) = verify_suites(&suites, seed, count)?;
            for suite in result["suites"].as_array().into_iter().flatten() {
                if let Some(w) = suite.get("warning").and_then(|w| w.as_str()) {
                    eprintln!("warning: suite {}: {w}", suite["name"].as_str().unwrap_or("?"));
                }
            }
            let mut args = vec![format!("--suite={}", suites.join(",")), format!("--seed={seed}")];
            if let Some(c) = count {
                args.push(format!("--count={c}"));
            }
            emit(&report("verify", &args, result, start.elapsed().as_millis()));
            Ok(if passed { ExitStatus::Ok } else { ExitStatus::VerifyFailed })
        }
        Command::Print { file } => {
            println!("{}", Session::load(&file)?.print());
            Ok(ExitStatus::Ok)
        }
        Command::Engine(argv) => {
            let (command, rest) = argv.split_first().expect("clap passes the subcommand name");
            if !COMMANDS.contains(&command.as_str()) {
                return Err(CliError::parse(format!("unknown command `{command}`")));
            }
            let (file, args) = take_file(rest)?;
            let session = Session::load(&file)?;
            emit(&run_command(&session, command, &args)?);
            Ok(ExitStatus::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // engine invariant violations surface as panics; report them as internal
    let outcome = std::panic::catch_unwind(|| run(cli)).unwrap_or_else(|_| Err(CliError::internal("internal error")));
    let status = match outcome {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            e.status
        }
    };
    ExitCode::from(status.code() as u8)
}
