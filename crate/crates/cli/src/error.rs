use lincount_core::Error as CoreError;

/// Failures before or during a computation. All of these exit with
/// status 2; usage errors and failed checks are handled separately.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("cannot parse {what} {input:?}: {reason}")]
    Parse { what: &'static str, input: String, reason: String },

    #[error("{name} = {value} exceeds the cap of {cap}; raise it with --max-{flag} or LINCOUNT_MAX_{env}")]
    CapExceeded { name: &'static str, value: u32, cap: u32, flag: &'static str, env: &'static str },

    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        CliError::Parse { what, input: input.to_string(), reason: reason.into() }
    }
}
