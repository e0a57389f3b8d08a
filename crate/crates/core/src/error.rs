use thiserror::Error;

use crate::finset::Value;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructed enumeration would exceed the configured element cap.
    #[error("enumeration budget exceeded: {what} needs {needed} elements (cap {cap})")]
    BudgetExceeded { what: String, needed: u128, cap: u64 },

    /// A model failed load-time validation; names the first failed law and a
    /// witness tuple.
    #[error("axiom violation [{law}] witnessed by ({})", witness.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))]
    AxiomViolation { law: String, witness: Vec<Value> },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("unsupported rule shape: {0}")]
    ShapeUnsupported(String),

    /// An internal consistency check failed that, per the underlying theory,
    /// must never fail. Firing indicates a bug, not bad input.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// A symbolic evaluation failed (partial lookup, sort mismatch, missing
    /// valuation, ...).
    #[error("evaluation error: {0}")]
    Eval(String),
}

impl Error {
    pub fn eval(msg: impl Into<String>) -> Self {
        Error::Eval(msg.into())
    }

    pub fn axiom(law: &str, witness: Vec<Value>) -> Self {
        Error::AxiomViolation { law: law.to_string(), witness }
    }

    pub fn budget(what: impl Into<String>, needed: u128, cap: u64) -> Self {
        Error::BudgetExceeded { what: what.into(), needed, cap }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
