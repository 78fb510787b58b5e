use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use argchange::change_syntax::parse_change;
use argchange::run::{run, Command, Input, RunSpec, EXIT_USAGE};
use argchange::whatif::Target;
use argchange_core::{Change, ChangeKind, SemanticsKind};
use clap::{Parser, Subcommand, ValueEnum};

/// Analyse how changes to an abstract argumentation framework alter its
/// extensions.
#[derive(Parser)]
#[command(name = "argchange", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,

    /// Write the report here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    AddAtt,
    DelAtt,
    AddArg,
    DelArg,
    Any,
}

impl KindArg {
    fn kind(self) -> Option<ChangeKind> {
        match self {
            KindArg::AddAtt => Some(ChangeKind::AddAttack),
            KindArg::DelAtt => Some(ChangeKind::RemoveAttack),
            KindArg::AddArg => Some(ChangeKind::AddArgument),
            KindArg::DelArg => Some(ChangeKind::RemoveArgument),
            KindArg::Any => None,
        }
    }
}

#[derive(clap::Args)]
struct FrameworkArgs {
    /// APX file; `-` or absent reads standard input.
    input: Option<PathBuf>,

    #[arg(short, long, default_value = "preferred")]
    semantics: SemanticsKind,
}

#[derive(Subcommand)]
enum Sub {
    /// Print the extensions and argument statuses.
    Extensions {
        #[command(flatten)]
        fw: FrameworkArgs,
    },
    /// Classify the effect of one change.
    Classify {
        #[command(flatten)]
        fw: FrameworkArgs,
        /// e.g. add-att:a>b, del-att:a>b, del-arg:a, add-arg:z:z>a,b>z
        #[arg(short, long, value_parser = parse_change)]
        change: Change,
    },
    /// Evaluate the sufficient and necessary conditions for an argument addition.
    Conditions {
        #[command(flatten)]
        fw: FrameworkArgs,
        #[arg(short, long, value_parser = parse_change)]
        change: Change,
    },
    /// List argument additions within a budget that achieve a target property.
    Whatif {
        #[command(flatten)]
        fw: FrameworkArgs,
        #[arg(short, long)]
        target: Target,
        #[arg(short, long, default_value_t = 1)]
        budget: usize,
        /// Name of the added argument.
        #[arg(short, long, default_value = "z")]
        argument: String,
    },
    /// Check the propositions on random frameworks and changes.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long)]
        max_args: Option<usize>,
        #[arg(long, value_enum, default_value = "add-arg")]
        kind: KindArg,
    },
    /// Compare the extension engine against brute-force enumeration.
    OracleCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long)]
        max_args: Option<usize>,
    },
}

fn input(path: Option<PathBuf>) -> Input {
    match path {
        Some(p) if p.as_os_str() != "-" => Input::Path(p),
        _ => Input::Stdin,
    }
}

fn spec(sub: Sub) -> RunSpec {
    match sub {
        Sub::Extensions { fw } => RunSpec {
            input: input(fw.input),
            semantics: fw.semantics,
            ..RunSpec::new(Command::Extensions)
        },
        Sub::Classify { fw, change } => RunSpec {
            input: input(fw.input),
            semantics: fw.semantics,
            change: Some(change),
            ..RunSpec::new(Command::Classify)
        },
        Sub::Conditions { fw, change } => RunSpec {
            input: input(fw.input),
            semantics: fw.semantics,
            change: Some(change),
            ..RunSpec::new(Command::Conditions)
        },
        Sub::Whatif { fw, target, budget, argument } => RunSpec {
            input: input(fw.input),
            semantics: fw.semantics,
            target: Some(target),
            budget,
            argument,
            ..RunSpec::new(Command::WhatIf)
        },
        Sub::Verify { seed, count, max_args, kind } => RunSpec {
            seed,
            count,
            max_args,
            kind: kind.kind(),
            ..RunSpec::new(Command::Verify)
        },
        Sub::OracleCheck { seed, count, max_args } => RunSpec {
            seed,
            count,
            max_args,
            ..RunSpec::new(Command::OracleCheck)
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let outcome = run(&spec(cli.command));
    for d in &outcome.diagnostics {
        eprintln!("{d}");
    }
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.report),
        None => std::io::stdout().write_all(outcome.report.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(outcome.code as u8)
}
