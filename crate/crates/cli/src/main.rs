mod cli;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use ltab::verify::VerifyBounds;

use cli::{Cli, Command};
use commands::Outcome;

/// A bad flag combination, reported like a clap error.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let start = Instant::now();
    let timed = |mut report: report::RunReport| {
        if cli.timing {
            report.elapsed_ms = Some(start.elapsed().as_millis());
        }
        commands::finish_report(report, cli.format)
    };
    match &cli.command {
        Command::Count { family, params } => timed(commands::count(*family, *params)?),
        Command::Enumerate { family, params, sign, limit } => {
            Ok(Outcome { text: commands::enumerate(*family, *params, *sign, *limit, cli.format)?, ok: true })
        }
        Command::Map { map, input, word, params } => {
            let text = commands::map(*map, input.as_deref(), word.clone(), *params, cli.format)?;
            Ok(Outcome { text, ok: true })
        }
        Command::Verify { suite, g_max, r_max, d_slack, k_max, inject_fault } => {
            let bounds = VerifyBounds { g_max: *g_max, r_max: *r_max, d_slack: *d_slack, k_max: *k_max };
            timed(commands::verify(*suite, bounds, *inject_fault)?)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text) {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
