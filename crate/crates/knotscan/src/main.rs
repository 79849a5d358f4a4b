use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knotscan::parse::{parse_alexander, parse_conway, InputError, Variable};
use knotscan::report::{analyze, render_text, to_json, DEFAULT_HORIZON};
use knotscan::table::{load_table, Format, KnotRecord, ProblemKind, TableError};
use knotscan::selftest;

const EXIT_USAGE: u8 = 1;
const EXIT_FORM: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "knotscan", version, about = "Amphicheirality obstructions from the Conway polynomial")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze every knot in a CSV or JSON table.
    Analyze {
        file: PathBuf,
        /// Table format; guessed from the extension when omitted.
        #[arg(long, value_enum)]
        format: Option<TableFormat>,
        #[arg(long, value_enum, default_value = "text")]
        out: Output,
        /// Abort on the first malformed row instead of skipping it.
        #[arg(long)]
        strict: bool,
        /// List pc_{4i} parities up to this degree in z.
        #[arg(long, default_value_t = DEFAULT_HORIZON)]
        horizon: usize,
    },
    /// Analyze a single polynomial.
    Poly {
        #[arg(long, conflicts_with = "alexander", required_unless_present = "alexander")]
        conway: Option<String>,
        #[arg(long)]
        alexander: Option<String>,
        #[arg(long, default_value = "input")]
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        out: Output,
        #[arg(long, default_value_t = DEFAULT_HORIZON)]
        horizon: usize,
    },
    /// Re-check known values and analyze the bundled sample table.
    Selftest {
        #[arg(long, value_enum, default_value = "text")]
        out: Output,
    },
}

fn input_exit(err: &InputError) -> u8 {
    match err {
        InputError::Syntax(_) => EXIT_USAGE,
        InputError::Form(_) => EXIT_FORM,
    }
}

fn emit(out: Output, text: String, json: String) {
    match out {
        Output::Text => print!("{text}"),
        Output::Json => print!("{json}"),
    }
}

fn run(cli: Cli) -> Result<(), u8> {
    match cli.command {
        Command::Analyze {
            file,
            format,
            out,
            strict,
            horizon,
        } => {
            let format = format.map(|f| match f {
                TableFormat::Csv => Format::Csv,
                TableFormat::Json => Format::Json,
            });
            let table = load_table(&file, format, strict).map_err(|e| {
                eprintln!("knotscan: {e}");
                match e {
                    TableError::Io { .. } => EXIT_IO,
                    TableError::Strict(p) if p.kind == ProblemKind::Form => EXIT_FORM,
                    _ => EXIT_USAGE,
                }
            })?;
            for problem in &table.problems {
                eprintln!("knotscan: skipped {problem}");
            }
            let reports = analyze(&table.records, horizon);
            emit(out, render_text(&reports), to_json(&reports));
            Ok(())
        }
        Command::Poly {
            conway,
            alexander,
            name,
            out,
            horizon,
        } => {
            let (var, text) = match (&conway, &alexander) {
                (Some(c), _) => (Variable::Z, c),
                (None, Some(a)) => (Variable::T, a),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let parsed = match var {
                Variable::Z => parse_conway(text).map(|_| ()),
                Variable::T => parse_alexander(text).map(|_| ()),
            };
            parsed.map_err(|e| {
                eprintln!("knotscan: {e}");
                input_exit(&e)
            })?;
            let record = KnotRecord::new(&name, None, var, text).expect("validated above");
            let reports = analyze(&[record], horizon);
            emit(out, render_text(&reports), to_json(&reports));
            Ok(())
        }
        Command::Selftest { out } => {
            let result = selftest::run();
            emit(out, selftest::render_text(&result), to_json(&result));
            if result.passed {
                Ok(())
            } else {
                Err(EXIT_USAGE)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
