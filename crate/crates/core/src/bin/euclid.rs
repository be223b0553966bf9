use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use euclid_core::cfield::DEFAULT_DEPTH_LIMIT;
use euclid_core::render::{render_svg, DEFAULT_DIGITS};
use euclid_core::script::{self, Options, Program};

#[derive(Parser)]
#[command(name = "euclid", version, about = "Run, check and format construction scripts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a script; the trace goes to stdout unless --trace is given.
    Run {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "OUT.json")]
        trace: Option<PathBuf>,
        #[arg(long, value_name = "OUT.svg")]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: usize,
        #[arg(long, default_value_t = DEFAULT_DEPTH_LIMIT)]
        max_depth: u32,
    },
    /// Parse and lint without executing.
    Check { file: PathBuf },
    /// Print the script in canonical form.
    Fmt {
        file: PathBuf,
        /// Rewrite the file instead of printing.
        #[arg(short, long)]
        write: bool,
    },
}

const FAILURE: u8 = 1;
const USAGE: u8 = 2;

fn load(path: &Path) -> Result<Program, u8> {
    let source = fs::read_to_string(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        USAGE
    })?;
    script::parse(&source).map_err(|e| {
        eprintln!("{}:{e}", path.display());
        USAGE
    })
}

fn write(path: &Path, text: &str) -> Result<(), u8> {
    fs::write(path, text).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        USAGE
    })
}

fn run(cli: Cli) -> Result<(), u8> {
    match cli.command {
        Command::Run { file, seed, trace, svg, digits, max_depth } => {
            let program = load(&file)?;
            let opts = Options { seed, digits, max_depth };
            let result = script::execute(&program, &opts);
            let (t, failure) = match result {
                Ok(t) => (t, None),
                Err(f) => (*f.trace, Some(f.error)),
            };
            match &trace {
                Some(out) => write(out, &t.to_json())?,
                None => println!("{}", t.to_json()),
            }
            if let Some(error) = failure {
                eprintln!("{}: {error}", file.display());
                return Err(FAILURE);
            }
            if let Some(out) = svg {
                let doc = render_svg(&t, digits).map_err(|e| {
                    eprintln!("{}: {e}", file.display());
                    FAILURE
                })?;
                write(&out, &doc)?;
            }
            Ok(())
        }
        Command::Check { file } => {
            let program = load(&file)?;
            let lints = script::lint(&program);
            for l in &lints {
                eprintln!("{}:{}:{}: {}", file.display(), l.line, l.col, l.message);
            }
            if lints.is_empty() {
                Ok(())
            } else {
                Err(FAILURE)
            }
        }
        Command::Fmt { file, write: in_place } => {
            let text = script::print(&load(&file)?);
            if in_place {
                write(&file, &text)
            } else {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
