use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use subcanon_cli::report::{EXIT_INTERNAL, EXIT_USAGE};
use subcanon_cli::run::{run_analyze, run_betti, run_cohom, run_construct};
use subcanon_cli::{generate_example, parse_input, CorpusError, InputDocument, Kind};

#[derive(Parser)]
#[command(name = "subcanon", version, about = "Complete-intersection certificates for codimension two subschemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Saturation, d-vector, canonical twist, M_1, socle and criteria verdicts.
    Analyze {
        file: PathBuf,
        /// Degrees LO:HI shown for M_1 when it is not of finite length.
        #[arg(long, value_parser = parse_window)]
        window: Option<(i32, i32)>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the JSON report.
        #[arg(long)]
        machine: bool,
    },
    /// Builds the rank two bundle module and the scheme Z, then verifies it.
    Construct {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        machine: bool,
    },
    /// Graded Betti numbers of R/I.
    Betti {
        file: PathBuf,
        #[arg(long)]
        machine: bool,
    },
    /// Sheaf cohomology h^i(I(j)) of the ideal sheaf.
    Cohom {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_i: usize,
        #[arg(long, value_parser = parse_window)]
        window: (i32, i32),
        #[arg(long)]
        machine: bool,
    },
    /// Prints an example input.
    Gen {
        /// ci, twisted-cubic, skew-lines, double-line, pfaffian-quintic,
        /// bundle-section, quad-square, quad-mixed or quad-reduced.
        kind: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_window(s: &str) -> Result<(i32, i32), String> {
    let (a, b) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo: i32 = a.trim().parse().map_err(|_| format!("bad bound `{a}`"))?;
    let hi: i32 = b.trim().parse().map_err(|_| format!("bad bound `{b}`"))?;
    if lo > hi {
        return Err("LO exceeds HI".into());
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(anyhow::Error),
    Internal(anyhow::Error),
}

fn load(path: &PathBuf) -> Result<InputDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Usage)?;
    parse_input(&text).map_err(|e| Failure::Usage(anyhow::anyhow!("{}:{e}", path.display())))
}

fn emit(doc: &subcanon_cli::ReportDocument, machine: bool) -> i32 {
    if machine {
        print!("{}", doc.to_machine());
    } else {
        print!("{}", doc.to_human());
    }
    doc.exit_code()
}

fn execute(cli: Cli) -> Result<i32, Failure> {
    let internal = |e: subcanon::AlgebraError| Failure::Internal(e.into());
    match cli.command {
        Command::Analyze {
            file,
            window,
            seed,
            machine,
        } => {
            let doc = load(&file)?;
            let rep = run_analyze(&doc, seed, window).map_err(internal)?;
            Ok(emit(&rep, machine))
        }
        Command::Construct {
            file,
            seed,
            out,
            machine,
        } => {
            let doc = load(&file)?;
            let rep = run_construct(&doc, seed).map_err(internal)?;
            if let Some(path) = out {
                std::fs::write(&path, rep.to_machine())
                    .with_context(|| format!("writing {}", path.display()))
                    .map_err(Failure::Internal)?;
            }
            Ok(emit(&rep, machine))
        }
        Command::Betti { file, machine } => {
            let doc = load(&file)?;
            Ok(emit(&run_betti(&doc), machine))
        }
        Command::Cohom {
            file,
            max_i,
            window,
            machine,
        } => {
            let doc = load(&file)?;
            Ok(emit(&run_cohom(&doc, max_i, window.0, window.1), machine))
        }
        Command::Gen { kind, params, seed } => {
            let doc = Kind::parse(&kind)
                .and_then(|k| generate_example(k, &params, seed))
                .map_err(|e| match e {
                    CorpusError::UnknownKind(_) | CorpusError::BadParams { .. } => Failure::Usage(e.into()),
                    other => Failure::Internal(other.into()),
                })?;
            print!("{doc}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match execute(cli) {
        Ok(c) => c,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            EXIT_INTERNAL
        }
    };
    ExitCode::from(code as u8)
}
