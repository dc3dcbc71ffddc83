//! The `aicd` command line: validate, check, diff and scaffold interface
//! description documents.
//!
//! Exit codes: 0 success, 1 domain failure (Error findings, an Incompatible
//! verdict, or breaking changes with `--fail-on-breaking`), 2 usage, read or
//! parse failure.

pub mod render;

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use aicd_core::io::{
    diff_documents, parse_context, parse_document, scaffold_template, serialize_document, ParseDiagnostic,
    ParseMode, Parsed, TemplateKind, ValidationReport,
};
use aicd_core::model::{InterfaceDescription, SystemContext};
use aicd_core::{
    assess_compatibility, score_completeness, validate_document, CompatError, Severity, Verdict,
};
use clap::{Parser, Subcommand};

pub use render::{render_report, Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "aicd",
    version,
    about = "Interface descriptions for AI-enabled components"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a document against the semantic rules and score its completeness.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Treat unknown fields as errors instead of warnings.
        #[arg(long)]
        strict_parse: bool,
    },
    /// Assess a component document against a host context.
    Check {
        #[arg(long)]
        component: PathBuf,
        #[arg(long)]
        context: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Fail on a ConditionallyCompatible verdict as well.
        #[arg(long)]
        strict: bool,
    },
    /// Compare two versions of a document.
    Diff {
        old: PathBuf,
        new: PathBuf,
        #[arg(long)]
        fail_on_breaking: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a skeleton document for a component kind.
    Scaffold {
        #[arg(long, value_parser = parse_kind)]
        kind: TemplateKind,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_kind(text: &str) -> Result<TemplateKind, String> {
    text.parse()
}

/// Failure that ends a command before a report is produced.
struct Abort;

struct Session<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    color: bool,
}

impl Session<'_> {
    fn note(&mut self, line: &str) {
        let _ = writeln!(self.err, "{line}");
    }

    fn read(&mut self, path: &Path) -> Result<String, Abort> {
        std::fs::read_to_string(path).map_err(|e| {
            self.note(&format!("aicd: cannot read {}: {e}", path.display()));
            Abort
        })
    }

    fn parsed<T>(
        &mut self,
        path: &Path,
        result: Result<Parsed<T>, Vec<ParseDiagnostic>>,
    ) -> Result<T, Abort> {
        match result {
            Ok(parsed) => {
                for w in &parsed.warnings {
                    self.note(&format!("{}: {w}", path.display()));
                }
                Ok(parsed.value)
            }
            Err(diagnostics) => {
                for d in &diagnostics {
                    self.note(&format!("{}: {d}", path.display()));
                }
                Err(Abort)
            }
        }
    }

    fn document(&mut self, path: &Path, mode: ParseMode) -> Result<InterfaceDescription, Abort> {
        let text = self.read(path)?;
        self.parsed(path, parse_document(&text, mode))
    }

    fn context(&mut self, path: &Path) -> Result<SystemContext, Abort> {
        let text = self.read(path)?;
        self.parsed(path, parse_context(&text, ParseMode::Lax))
    }

    fn emit(&mut self, report: Report<'_>, format: Format) {
        let color = self.color && format == Format::Text;
        let _ = self
            .out
            .write_all(render_report(report, format, color).as_bytes());
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut session = Session { out, err, color };
    match dispatch(cli.command, &mut session) {
        Ok(code) => code,
        Err(Abort) => EXIT_USAGE,
    }
}

fn dispatch(command: Command, s: &mut Session<'_>) -> Result<i32, Abort> {
    match command {
        Command::Validate {
            file,
            format,
            strict_parse,
        } => {
            let mode = if strict_parse {
                ParseMode::Strict
            } else {
                ParseMode::Lax
            };
            let doc = s.document(&file, mode)?;
            let report = ValidationReport {
                findings: validate_document(&doc),
                completeness: score_completeness(&doc),
            };
            s.emit(Report::Validation(&report), format);
            let failed = report.findings.iter().any(|f| f.severity == Severity::Error);
            Ok(if failed { EXIT_NEGATIVE } else { EXIT_OK })
        }
        Command::Check {
            component,
            context,
            format,
            strict,
        } => {
            let doc = s.document(&component, ParseMode::Lax)?;
            let ctx = s.context(&context)?;
            match assess_compatibility(&doc, &ctx) {
                Ok(report) => {
                    s.emit(Report::Compatibility(&report), format);
                    let failed = match report.verdict {
                        Verdict::Incompatible => true,
                        Verdict::ConditionallyCompatible => strict,
                        Verdict::Compatible => false,
                    };
                    Ok(if failed { EXIT_NEGATIVE } else { EXIT_OK })
                }
                Err(e @ CompatError::InvalidInput { .. }) => {
                    s.note(&format!("aicd: {e}; nothing was assessed"));
                    let CompatError::InvalidInput { findings } = e;
                    s.emit(Report::Findings(&findings), format);
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Diff {
            old,
            new,
            fail_on_breaking,
            format,
        } => {
            let old = s.document(&old, ParseMode::Lax)?;
            let new = s.document(&new, ParseMode::Lax)?;
            let diff = diff_documents(&old, &new);
            s.emit(Report::Diff(&diff), format);
            Ok(if fail_on_breaking && diff.breaking_count() > 0 {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            })
        }
        Command::Scaffold { kind, out } => {
            let text = serialize_document(&scaffold_template(kind));
            write_atomically(&out, text.as_bytes()).map_err(|e| {
                s.note(&format!("aicd: cannot write {}: {e}", out.display()));
                Abort
            })?;
            let _ = writeln!(s.out, "wrote {kind} scaffold to {}", out.display());
            Ok(EXIT_OK)
        }
    }
}

/// Writes to a temporary file beside `path`, then renames it into place.
fn write_atomically(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    if !dir.is_dir() {
        return Err(io::Error::new(
            io::ErrorKind::NotFound,
            "directory does not exist",
        ));
    }
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
