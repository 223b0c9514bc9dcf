use std::fmt::Display;

use cactus_core::cactus::CactusError;
use cactus_core::demos::DemoError;
use cactus_core::growth::GrowthError;
use cactus_core::hecke::HeckeError;
use cactus_core::localrules::LocalRuleError;
use cactus_core::oracles::OracleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Verification(_) => "verification_failed",
            CliError::Parse(_) => "parse_error",
            CliError::Io(_) => "io_error",
            CliError::Domain(_) => "domain_error",
        }
    }

    pub fn domain(e: impl Display) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<LocalRuleError> for CliError {
    fn from(e: LocalRuleError) -> Self {
        match e {
            LocalRuleError::Parse(_) => CliError::Parse(e.to_string()),
            other => CliError::domain(other),
        }
    }
}

impl From<CactusError> for CliError {
    fn from(e: CactusError) -> Self {
        match e {
            CactusError::Parse(_) => CliError::Parse(e.to_string()),
            other => CliError::domain(other),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Parse(_) => CliError::Parse(e.to_string()),
            other => CliError::domain(other),
        }
    }
}

impl From<GrowthError> for CliError {
    fn from(e: GrowthError) -> Self {
        match e {
            GrowthError::LocalRule(inner) => inner.into(),
            GrowthError::Cactus(inner) => inner.into(),
            GrowthError::BadPath(_) => CliError::Parse(e.to_string()),
            other => CliError::domain(other),
        }
    }
}

impl From<HeckeError> for CliError {
    fn from(e: HeckeError) -> Self {
        CliError::domain(e)
    }
}

impl From<DemoError> for CliError {
    fn from(e: DemoError) -> Self {
        match e {
            DemoError::Unknown(_) | DemoError::UnknownName(_) => CliError::Parse(e.to_string()),
            other => CliError::domain(other),
        }
    }
}
