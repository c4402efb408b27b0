//! The JSON envelope shared by every subcommand, and exit codes.

use serde::Serialize;
use serde_json::Value;
use surfgroups::{AlgebraError, ParseError};

pub const SCHEMA_VERSION: &str = "1.0";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub token: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub schema_version: &'static str,
    pub status: Status,
    pub command: String,
    pub data: Value,
    pub diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

/// What a subcommand hands back on success. `pass = false` marks a
/// completed check that found a failure: the data is still reported, but
/// the status is `error` and the exit code 1.
pub struct Report {
    pub data: Value,
    pub human: String,
    pub diagnostics: Vec<String>,
    pub pass: bool,
}

impl Report {
    pub fn new(data: impl Serialize, human: impl Into<String>) -> Self {
        Report {
            data: serde_json::to_value(data).expect("report data serializes"),
            human: human.into(),
            diagnostics: Vec::new(),
            pass: true,
        }
    }

    pub fn with_pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    pub fn diagnostic(mut self, line: impl Into<String>) -> Self {
        self.diagnostics.push(line.into());
        self
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Domain(String),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse(p) => CliError::Parse(p),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Domain(_) => EXIT_FAILURE,
        }
    }

    fn info(&self) -> ErrorInfo {
        match self {
            CliError::Parse(p) => ErrorInfo {
                kind: "parse",
                message: p.to_string(),
                column: Some(p.column),
                token: Some(p.token.clone()),
            },
            CliError::Domain(m) => ErrorInfo {
                kind: "domain",
                message: m.clone(),
                column: None,
                token: None,
            },
        }
    }
}

/// Prints the outcome and returns the process exit code.
pub fn emit(command: &str, json: bool, outcome: Result<Report, CliError>) -> i32 {
    match outcome {
        Ok(report) => {
            let status = if report.pass {
                Status::Ok
            } else {
                Status::Error
            };
            if json {
                print_json(&CommandResult {
                    schema_version: SCHEMA_VERSION,
                    status,
                    command: command.to_string(),
                    data: report.data,
                    diagnostics: report.diagnostics,
                    error: (!report.pass).then(|| ErrorInfo {
                        kind: "verification",
                        message: "one or more checks failed".into(),
                        column: None,
                        token: None,
                    }),
                });
            } else {
                write_stdout(report.human.trim_end());
                for d in &report.diagnostics {
                    eprintln!("note: {d}");
                }
                if !report.pass {
                    eprintln!("error: one or more checks failed");
                }
            }
            if report.pass {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(err) => {
            let info = err.info();
            if json {
                print_json(&CommandResult {
                    schema_version: SCHEMA_VERSION,
                    status: Status::Error,
                    command: command.to_string(),
                    data: Value::Null,
                    diagnostics: vec![info.message.clone()],
                    error: Some(info),
                });
            } else {
                eprintln!("error: {}", info.message);
            }
            err.exit_code()
        }
    }
}

fn print_json(result: &CommandResult) {
    write_stdout(&serde_json::to_string_pretty(result).expect("envelope serializes"));
}

// A closed pipe (e.g. `| head`) is not an error worth a panic.
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}
