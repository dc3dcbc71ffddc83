//! Reading and writing description files and reports.

pub mod canonical;
pub mod decode;
pub mod diff;
pub mod document;
pub mod json;
pub mod report;
pub mod scaffold;

pub use decode::{DiagnosticSeverity, ParseDiagnostic, ParseMode, Parsed};
pub use diff::{diff_documents, ChangeKind, DiffEntry, DocumentDiff};
pub use document::{parse_context, parse_document, serialize_context, serialize_document};
pub use report::{ReportJson, ValidationReport};
pub use scaffold::{scaffold_template, TemplateKind};
