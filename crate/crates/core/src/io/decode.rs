//! Typed reading of position-annotated JSON with located diagnostics.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::json::{self, Member, Node, NodeKind, Pos};

/// How unknown object members are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    /// Unknown members are errors.
    Strict,
    /// Unknown members are reported as warnings and ignored.
    Lax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagnosticSeverity {
    Error,
    Warning,
}

impl fmt::Display for DiagnosticSeverity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagnosticSeverity::Error => "error",
            DiagnosticSeverity::Warning => "warning",
        })
    }
}

/// A problem found while reading a document, located in the input text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub severity: DiagnosticSeverity,
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// Document path such as `signals[0].kind`; empty for the root.
    pub path: String,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}:{}", self.severity, self.line, self.column)?;
        if !self.path.is_empty() {
            write!(f, " at {}", self.path)?;
        }
        write!(f, ": {}", self.message)
    }
}

/// A successfully read value plus any warnings raised while reading it.
#[derive(Debug, Clone, PartialEq)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<ParseDiagnostic>,
}

pub(crate) fn child(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

pub(crate) fn item(path: &str, index: usize) -> String {
    format!("{path}[{index}]")
}

pub(crate) type Reader<T> = fn(&mut Decoder, &Node, &str) -> Option<T>;

pub(crate) struct Decoder {
    mode: ParseMode,
    diagnostics: Vec<ParseDiagnostic>,
}

/// The members of one object, after unknown-field screening.
pub(crate) struct Fields<'n> {
    pos: Pos,
    path: String,
    members: &'n [Member],
}

impl<'n> Fields<'n> {
    fn get(&self, key: &str) -> Option<&'n Member> {
        self.members.iter().find(|m| m.key == key)
    }

    pub fn has(&self, key: &str) -> bool {
        self.get(key).is_some()
    }
}

impl Decoder {
    pub fn new(mode: ParseMode) -> Self {
        Decoder {
            mode,
            diagnostics: Vec::new(),
        }
    }

    fn push(&mut self, severity: DiagnosticSeverity, pos: Pos, path: &str, message: String) {
        self.diagnostics.push(ParseDiagnostic {
            severity,
            line: pos.line,
            column: pos.column,
            message,
            path: path.to_string(),
        });
    }

    pub fn error(&mut self, pos: Pos, path: &str, message: impl Into<String>) {
        self.push(DiagnosticSeverity::Error, pos, path, message.into());
    }

    pub fn warning(&mut self, pos: Pos, path: &str, message: impl Into<String>) {
        self.push(DiagnosticSeverity::Warning, pos, path, message.into());
    }

    fn type_error(&mut self, node: &Node, path: &str, expected: &str) {
        self.error(
            node.pos,
            path,
            format!("expected {expected}, found {}", node.type_name()),
        );
    }

    /// Screens an object node against its known member names.
    pub fn object<'n>(&mut self, node: &'n Node, path: &str, known: &[&str]) -> Option<Fields<'n>> {
        let NodeKind::Object(members) = &node.kind else {
            self.type_error(node, path, "an object");
            return None;
        };
        let mut seen: Vec<&str> = Vec::with_capacity(members.len());
        for member in members {
            let member_path = child(path, &member.key);
            if seen.contains(&member.key.as_str()) {
                self.error(
                    member.key_pos,
                    &member_path,
                    format!("duplicate field '{}'", member.key),
                );
            } else if !known.contains(&member.key.as_str()) {
                let message = format!("unknown field '{}'", member.key);
                match self.mode {
                    ParseMode::Strict => self.error(member.key_pos, &member_path, message),
                    ParseMode::Lax => {
                        self.warning(member.key_pos, &member_path, format!("{message} ignored"))
                    }
                }
            }
            seen.push(&member.key);
        }
        Some(Fields {
            pos: node.pos,
            path: path.to_string(),
            members,
        })
    }

    /// Reads a required member.
    pub fn req<T>(&mut self, fields: &Fields<'_>, key: &str, read: Reader<T>) -> Option<T> {
        let path = child(&fields.path, key);
        match fields.get(key) {
            Some(member) => read(self, &member.value, &path),
            None => {
                self.error(fields.pos, &path, format!("missing field '{key}'"));
                None
            }
        }
    }

    /// Reads an optional member; absent and `null` both mean `None`.
    pub fn opt<T>(&mut self, fields: &Fields<'_>, key: &str, read: Reader<T>) -> Option<Option<T>> {
        let path = child(&fields.path, key);
        match fields.get(key) {
            None => Some(None),
            Some(member) if member.value.kind == NodeKind::Null => Some(None),
            Some(member) => read(self, &member.value, &path).map(Some),
        }
    }

    pub fn list<T>(&mut self, node: &Node, path: &str, read: Reader<T>) -> Option<Vec<T>> {
        let NodeKind::Array(items) = &node.kind else {
            self.type_error(node, path, "an array");
            return None;
        };
        let mut out = Vec::with_capacity(items.len());
        let mut ok = true;
        for (i, element) in items.iter().enumerate() {
            match read(self, element, &item(path, i)) {
                Some(value) => out.push(value),
                None => ok = false,
            }
        }
        ok.then_some(out)
    }

    /// Reads an array as a set; repeated entries are collapsed with a warning.
    pub fn set<T: Ord>(&mut self, node: &Node, path: &str, read: Reader<T>) -> Option<BTreeSet<T>> {
        let NodeKind::Array(items) = &node.kind else {
            self.type_error(node, path, "an array");
            return None;
        };
        let mut out = BTreeSet::new();
        let mut ok = true;
        for (i, element) in items.iter().enumerate() {
            let element_path = item(path, i);
            match read(self, element, &element_path) {
                Some(value) => {
                    if !out.insert(value) {
                        self.warning(element.pos, &element_path, "duplicate set entry ignored");
                    }
                }
                None => ok = false,
            }
        }
        ok.then_some(out)
    }

    pub fn finish<T>(mut self, value: Option<T>) -> Result<Parsed<T>, Vec<ParseDiagnostic>> {
        self.diagnostics.sort_by(|a, b| {
            (a.line, a.column, &a.path, a.severity).cmp(&(b.line, b.column, &b.path, b.severity))
        });
        let has_error = self
            .diagnostics
            .iter()
            .any(|d| d.severity == DiagnosticSeverity::Error);
        match value {
            Some(value) if !has_error => Ok(Parsed {
                value,
                warnings: self.diagnostics,
            }),
            _ => Err(self.diagnostics),
        }
    }
}

/// Parses text and runs a root reader over it.
pub(crate) fn read_root<T>(
    input: &str,
    mode: ParseMode,
    read: Reader<T>,
) -> Result<Parsed<T>, Vec<ParseDiagnostic>> {
    let root = json::parse(input).map_err(|e| {
        vec![ParseDiagnostic {
            severity: DiagnosticSeverity::Error,
            line: e.pos.line,
            column: e.pos.column,
            message: e.message,
            path: String::new(),
        }]
    })?;
    let mut decoder = Decoder::new(mode);
    let value = read(&mut decoder, &root, "");
    decoder.finish(value)
}

pub(crate) fn string(d: &mut Decoder, node: &Node, path: &str) -> Option<String> {
    match &node.kind {
        NodeKind::String(s) => Some(s.clone()),
        _ => {
            d.type_error(node, path, "a string");
            None
        }
    }
}

pub(crate) fn strings(d: &mut Decoder, node: &Node, path: &str) -> Option<Vec<String>> {
    d.list(node, path, string)
}

pub(crate) fn boolean(d: &mut Decoder, node: &Node, path: &str) -> Option<bool> {
    match node.kind {
        NodeKind::Bool(b) => Some(b),
        _ => {
            d.type_error(node, path, "a boolean");
            None
        }
    }
}

pub(crate) fn real(d: &mut Decoder, node: &Node, path: &str) -> Option<f64> {
    let NodeKind::Number(text) = &node.kind else {
        d.type_error(node, path, "a number");
        return None;
    };
    match text.parse::<f64>() {
        Ok(value) if value.is_finite() => Some(value),
        _ => {
            d.error(node.pos, path, format!("number {text} is out of range"));
            None
        }
    }
}

fn unsigned(d: &mut Decoder, node: &Node, path: &str, max: u64) -> Option<u64> {
    let NodeKind::Number(text) = &node.kind else {
        d.type_error(node, path, "a non-negative integer");
        return None;
    };
    match text.parse::<u64>() {
        Ok(value) if value <= max => Some(value),
        Ok(_) => {
            d.error(node.pos, path, format!("integer {text} is too large"));
            None
        }
        Err(_) => {
            d.error(
                node.pos,
                path,
                format!("expected a non-negative integer, found {text}"),
            );
            None
        }
    }
}

pub(crate) fn uint32(d: &mut Decoder, node: &Node, path: &str) -> Option<u32> {
    unsigned(d, node, path, u64::from(u32::MAX)).map(|v| v as u32)
}

/// Reads a string and converts it with `FromStr`, reporting the parse message.
pub(crate) fn token<T: FromStr<Err = String>>(d: &mut Decoder, node: &Node, path: &str) -> Option<T> {
    let text = string(d, node, path)?;
    match text.parse() {
        Ok(value) => Some(value),
        Err(message) => {
            d.error(node.pos, path, message);
            None
        }
    }
}
