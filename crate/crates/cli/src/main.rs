use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use knotcert_core::batch::{
    analyze_source, map_records, parse_records, summarize, BatchOptions, InputFormat,
};
use knotcert_core::report::{
    bridge_report, invariants_report, render_bridges_text, render_certificates_text,
    render_invariants_text, render_json_lines,
};

#[derive(Parser)]
#[command(
    name = "knotcert",
    version,
    about = "Certify splitness and primeness of links from positive diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify every record of a file.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Treat every record as a non-trivial link when no criterion fires.
        #[arg(long)]
        assume_nontrivial: bool,
    },
    /// Invariants of each record under its given orientation.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Bridge decomposition of each record.
    Bridges {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file with one record per line, or a JSON array.
    file: PathBuf,
    /// Input grammar; detected per record when omitted.
    #[arg(long, value_parser = parse_format)]
    format: Option<InputFormat>,
    /// Emit JSON lines (the default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit a human-readable report.
    #[arg(long)]
    text: bool,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

fn parse_format(s: &str) -> Result<InputFormat, String> {
    s.parse()
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Renders the report and returns it with the exit status.
fn run(command: Command) -> anyhow::Result<(String, u8)> {
    match command {
        Command::Analyze {
            input,
            assume_nontrivial,
        } => {
            let text = read(&input.file)?;
            let options = BatchOptions {
                format: input.format,
                assume_nontrivial,
                jobs: input.jobs.map(|n| n as usize),
            };
            let report = analyze_source(&text, &options);
            let out = if input.text {
                render_certificates_text(&report.outcomes, &report.summary)
            } else {
                render_json_lines(&report.outcomes, &report.summary)
            };
            Ok((out, report.exit_code() as u8))
        }
        Command::Invariants { input } => {
            let records = parse_records(&read(&input.file)?, input.format);
            let outcomes = map_records(&records, input.jobs.map(|n| n as usize), invariants_report);
            let summary = summarize(&outcomes, |_| None);
            let out = if input.text {
                render_invariants_text(&outcomes, &summary)
            } else {
                render_json_lines(&outcomes, &summary)
            };
            Ok((out, u8::from(summary.errors > 0)))
        }
        Command::Bridges { input } => {
            let records = parse_records(&read(&input.file)?, input.format);
            let outcomes = map_records(&records, input.jobs.map(|n| n as usize), bridge_report);
            let summary = summarize(&outcomes, |_| None);
            let out = if input.text {
                render_bridges_text(&outcomes, &summary)
            } else {
                render_json_lines(&outcomes, &summary)
            };
            Ok((out, u8::from(summary.errors > 0)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("knotcert: {e:#}");
            ExitCode::from(2)
        }
    }
}
