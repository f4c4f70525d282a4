use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use thickgen_cli::{run_script, Options};

/// Homology, supports and generation-level certificates for perfect complexes.
#[derive(Parser)]
#[command(name = "thickgen", version)]
struct Args {
    /// Emit `key: value` blocks separated by blank lines.
    #[arg(long)]
    machine: bool,
    /// Worker threads for independent obstruction certificates.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Script file, or `-` for standard input.
    script: PathBuf,
    /// A command to run after the script's own commands.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    command: Vec<String>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let mut text = String::new();
    let read = if args.script.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(&args.script).map(|t| text = t)
    };
    if let Err(e) = read {
        eprintln!("thickgen: cannot read {}: {e}", args.script.display());
        return ExitCode::from(1);
    }
    let opts = Options { machine: args.machine, jobs: args.jobs as usize };
    match run_script(&text, &args.command, &opts) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("thickgen: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
