//! Script front end for the `thickgen` engine.

pub mod commands;
pub mod script;

pub use commands::{run_command, Block, Report};
pub use script::{parse_script, Command, Session, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    /// A binding whose value fails its construction checks.
    #[error("line {line}: {source}")]
    Definition { line: usize, source: thickgen::Error },
    #[error("line {line}: {source}")]
    Engine { line: usize, source: thickgen::Error },
}

impl CliError {
    /// 1 for parse errors, 2 for errors reported by the engine while running a command.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax { .. } | CliError::Definition { .. } => 1,
            CliError::Engine { .. } => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub machine: bool,
    pub jobs: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self { machine: false, jobs: 1 }
    }
}

/// Parses the script, appends `extra` as one more command when non-empty,
/// runs every command and returns the whole rendered output.
pub fn run_script(text: &str, extra: &[String], opts: &Options) -> Result<String, CliError> {
    let mut session = parse_script(text)?;
    if !extra.is_empty() {
        let line = text.lines().count() + 1;
        session.commands.push(Command::parse(line, &extra.join(" ")));
    }
    let mut reports = Vec::new();
    for cmd in &session.commands {
        reports.push(run_command(&session, cmd, opts)?);
    }
    let parts: Vec<String> = reports.iter().map(|r| if opts.machine { r.machine() } else { r.human() }).collect();
    Ok(parts.join("\n"))
}
