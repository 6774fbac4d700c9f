use orbifold_core::action::ActionError;
use orbifold_core::corpus::CorpusError;
use orbifold_core::verify::VerifyError;
use orbifold_core::Violation;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("invalid orbifold:\n{}", list(.0))]
    Invalid(Vec<Violation>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The computation ran but at least one check failed; the report is
    /// still printed.
    #[error("{failed} check(s) failed")]
    ChecksFailed { report: String, failed: usize },
    #[error("cannot write output: {0}")]
    Write(String),
}

fn list(v: &[Violation]) -> String {
    v.iter().map(|x| format!("  {x}")).collect::<Vec<_>>().join("\n")
}

impl CliError {
    /// 0 success, 1 parse error, 2 validation or check failure, 3
    /// precondition violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::Invalid(_) | CliError::ChecksFailed { .. } => 2,
            CliError::Precondition(_) | CliError::Write(_) => 3,
        }
    }
}

impl From<ActionError> for CliError {
    fn from(e: ActionError) -> Self {
        match e {
            ActionError::UnknownVertex(_) | ActionError::NotBijection(_) => CliError::Parse(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<CorpusError> for CliError {
    fn from(e: CorpusError) -> Self {
        CliError::Precondition(e.to_string())
    }
}
