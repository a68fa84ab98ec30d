use std::path::PathBuf;

use thiserror::Error;

/// Process exit status. The numeric values are part of the interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass = 0,
    /// `m > δ` observed for a non-soluble group.
    OpenAnomaly = 1,
    Input = 2,
    Budget = 3,
    /// An identity that must hold has failed.
    Violation = 4,
}

impl Status {
    fn severity(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Input => 1,
            Status::Budget => 2,
            Status::OpenAnomaly => 3,
            Status::Violation => 4,
        }
    }

    /// The more serious of two outcomes.
    pub fn worst(self, other: Status) -> Status {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }

    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Format {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] indgen::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Io { .. } | CliError::Format { .. } | CliError::Usage(_) => Status::Input,
            CliError::Core(e) => core_status(e),
        }
    }
}

pub fn core_status(e: &indgen::Error) -> Status {
    use indgen::Error as E;
    match e {
        E::Budget { .. } | E::Factorization(_) | E::Interrupted => Status::Budget,
        E::OutOfRange { .. } | E::InvalidInput(_) | E::Parse(_) => Status::Input,
        E::Violation(_) => Status::Violation,
    }
}
