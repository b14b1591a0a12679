//! Validation reports and the engine-wide error type.
//!
//! Reports distinguish structural malformation (an index out of range, a
//! missing table entry) from axiom failure (a law that does not hold, with
//! the witnessing tuple). Theorem violations are a third class: a property
//! that is guaranteed for valid input has failed, which always indicates a
//! bug in the engine, never a property of the input.

use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// A single finding produced by a validator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Issue {
    /// The tables are not even well-formed (dangling index, wrong arity).
    Structural { detail: String },
    /// A law fails; `law` names it, `witness` names the offending tuple.
    Axiom { law: String, witness: String },
}

impl Issue {
    pub fn is_structural(&self) -> bool {
        matches!(self, Issue::Structural { .. })
    }
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::Structural { detail } => write!(f, "structural: {detail}"),
            Issue::Axiom { law, witness } => write!(f, "{law} fails at {witness}"),
        }
    }
}

/// Outcome of a validator run. Empty issue list means the object is valid.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub context: String,
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn new(context: impl Into<String>) -> Self {
        ValidationReport { context: context.into(), issues: Vec::new() }
    }

    pub fn structural(&mut self, detail: impl Into<String>) {
        self.issues.push(Issue::Structural { detail: detail.into() });
    }

    pub fn axiom(&mut self, law: impl Into<String>, witness: impl Into<String>) {
        self.issues.push(Issue::Axiom { law: law.into(), witness: witness.into() });
    }

    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn has_structural(&self) -> bool {
        self.issues.iter().any(Issue::is_structural)
    }

    /// Merge another report into this one, keeping its context as a prefix.
    pub fn absorb(&mut self, other: ValidationReport) {
        for issue in other.issues {
            match issue {
                Issue::Structural { detail } => {
                    self.structural(format!("{}: {}", other.context, detail))
                }
                Issue::Axiom { law, witness } => {
                    self.axiom(format!("{}: {}", other.context, law), witness)
                }
            }
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "{}: ok", self.context)
        } else {
            writeln!(f, "{}: {} issue(s)", self.context, self.issues.len())?;
            for issue in &self.issues {
                writeln!(f, "  - {issue}")?;
            }
            Ok(())
        }
    }
}

/// Errors surfaced by engine operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngineError {
    /// Malformed input tables.
    #[error("structural error: {0}")]
    Structural(String),
    /// An operation was called outside its stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A stated hypothesis of the construction fails for this input.
    /// This is an honest negative answer, not a bug (e.g. a self-duality
    /// condition that the given morphism simply does not satisfy).
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    /// A property that is guaranteed to hold for valid input failed.
    /// Always an engine bug; tests assert this never fires.
    #[error("theorem violation (engine bug): {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
