use std::fmt;
use std::process::ExitCode;

/// Command failures, each tied to a stable exit code.
#[derive(Debug)]
pub enum Failure {
    /// A consistency check found a counterexample (exit 1).
    Inconsistent(String),
    /// Bad input, flags or parameters (exit 2).
    Input(String),
    /// A wall-clock or size budget ran out (exit 3).
    Budget(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Inconsistent(_) => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Inconsistent(m) => write!(f, "inconsistency: {m}"),
            Failure::Input(m) => write!(f, "input error: {m}"),
            Failure::Budget(m) => write!(f, "budget exceeded: {m}"),
        }
    }
}

impl From<primegraph::Error> for Failure {
    fn from(e: primegraph::Error) -> Self {
        match e {
            primegraph::Error::BudgetExceeded(m) => Failure::Budget(m),
            other => Failure::Input(other.to_string()),
        }
    }
}
