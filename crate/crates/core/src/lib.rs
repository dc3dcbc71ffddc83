//! Machine-readable interface descriptions for AI-enabled cyber-physical
//! components: the data model, file format, validator, completeness scoring,
//! version diffing and compatibility assessment against a host context.

#[macro_use]
pub mod model;

pub mod compat;
pub mod completeness;
pub mod envelope;
pub mod findings;
pub mod io;
pub mod validate;

#[cfg(feature = "testgen")]
pub mod testgen;

pub use compat::{assess_compatibility, CompatError, CompatibilityReport, Verdict};
pub use completeness::{score_completeness, CompletenessScore, Ratio};
pub use findings::{Code, Dimension, Finding, Severity};
pub use validate::{validate_context, validate_document};
