//! Error taxonomy mapped onto process exit codes: 0 success, 1 selfcheck
//! failure, 2 configuration error, 3 numerical failure. Bad input never
//! panics.

use vdw_core::instantaneous::InstantaneousError;
use vdw_core::kato::KatoError;
use vdw_core::retarded::RetardedError;
use vdw_core::specfun::QuadratureError;
use vdw_core::units::UnitsError;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numerics(String),
    SelfcheckFailed,
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        Self::Config(msg.into())
    }

    pub fn numerics(msg: impl Into<String>) -> Self {
        Self::Numerics(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::SelfcheckFailed => 1,
            Self::Config(_) => 2,
            Self::Numerics(_) => 3,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            Self::Config(m) | Self::Numerics(m) => Some(m),
            Self::SelfcheckFailed => None,
        }
    }
}

impl From<UnitsError> for CliError {
    fn from(e: UnitsError) -> Self {
        Self::Config(e.to_string())
    }
}

impl From<QuadratureError> for CliError {
    fn from(e: QuadratureError) -> Self {
        match e {
            QuadratureError::InvalidSpec(_) | QuadratureError::InvalidInterval { .. } => {
                Self::Config(e.to_string())
            }
            _ => Self::Numerics(e.to_string()),
        }
    }
}

impl From<RetardedError> for CliError {
    fn from(e: RetardedError) -> Self {
        match e {
            RetardedError::Quadrature(q) => q.into(),
            RetardedError::NonPositiveSeparation(_)
            | RetardedError::NegativeCoupling(_)
            | RetardedError::InvalidGrid(_) => Self::Config(e.to_string()),
            RetardedError::SpecFun(_) => Self::Numerics(e.to_string()),
        }
    }
}

impl From<InstantaneousError> for CliError {
    fn from(e: InstantaneousError) -> Self {
        match e {
            InstantaneousError::Quadrature(q) => q.into(),
            _ => Self::Config(e.to_string()),
        }
    }
}

impl From<KatoError> for CliError {
    fn from(e: KatoError) -> Self {
        match e {
            KatoError::SubtractionIdentity { .. } => Self::Numerics(e.to_string()),
            _ => Self::Config(e.to_string()),
        }
    }
}
