//! Structural difference between two documents.
//!
//! Lists whose elements carry an identifier (signals, characteristics,
//! software elements, metrics, feedback cycles, interactions) are matched by
//! that identifier, and diff paths address their elements as `[key]`. The
//! two autonomy sets are compared element by element. Bounds and plain text
//! lists are compared as whole values.
//!
//! Envelopes follow contravariance: an accepting envelope may only widen and
//! an emitting envelope may only narrow without breaking integrators.

use std::collections::BTreeSet;
use std::fmt;

use super::canonical::{format_real, Json};
use super::decode::child;
use super::document::document_json;
use crate::envelope::containment;
use crate::model::{Bounds, Direction, InterfaceDescription, UncertaintyClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChangeKind {
    Added,
    Removed,
    Modified,
}

impl ChangeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ChangeKind::Added => "Added",
            ChangeKind::Removed => "Removed",
            ChangeKind::Modified => "Modified",
        }
    }
}

impl fmt::Display for ChangeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ChangeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Added" => Ok(ChangeKind::Added),
            "Removed" => Ok(ChangeKind::Removed),
            "Modified" => Ok(ChangeKind::Modified),
            _ => Err(format!("'{s}' is not one of Added, Removed, Modified")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffEntry {
    pub path: String,
    pub change: ChangeKind,
    pub breaking: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DocumentDiff {
    /// Sorted by path; paths are unique.
    pub entries: Vec<DiffEntry>,
}

impl DocumentDiff {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn breaking_count(&self) -> usize {
        self.entries.iter().filter(|e| e.breaking).count()
    }
}

/// Which way values flow through the envelope currently being compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Neutral,
    Accepting,
    Emitting,
    Both,
}

impl Role {
    fn from_direction(direction: Direction) -> Role {
        match direction {
            Direction::In => Role::Accepting,
            Direction::Out => Role::Emitting,
            Direction::Bidirectional => Role::Both,
        }
    }

    fn accepts(self) -> bool {
        matches!(self, Role::Accepting | Role::Both)
    }

    fn emits(self) -> bool {
        matches!(self, Role::Emitting | Role::Both)
    }
}

const ENVELOPE_LISTS: [&str; 6] = [
    "characteristics",
    "electrical_emc",
    "electrical_communication",
    "mechanical",
    "thermal",
    "particulate",
];

fn key_field(list: &str) -> Option<&'static str> {
    match list {
        "signals" => Some("signal_id"),
        "properties" | "operations" | "events" | "ilities" | "metrics" => Some("name"),
        "feedback_cycles" => Some("source"),
        "interactions" => Some("peer"),
        l if ENVELOPE_LISTS.contains(&l) => Some("name"),
        _ => None,
    }
}

fn member<'a>(value: &'a Json, key: &str) -> Option<&'a Json> {
    match value {
        Json::Obj(members) => members.iter().find(|(k, _)| k == key).map(|(_, v)| v),
        _ => None,
    }
}

fn scalar_text(value: &Json) -> String {
    match value {
        Json::Null => "null".to_string(),
        Json::Bool(b) => b.to_string(),
        Json::Int(i) => i.to_string(),
        Json::Real(r) => format_real(*r),
        Json::Str(s) => s.clone(),
        Json::Arr(items) => format!(
            "[{}]",
            items.iter().map(scalar_text).collect::<Vec<_>>().join(", ")
        ),
        Json::Obj(members) => format!(
            "{{{}}}",
            members
                .iter()
                .map(|(k, v)| format!("{k}: {}", scalar_text(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

fn bounds_of(value: &Json) -> Option<Bounds> {
    if let Some(Json::Arr(labels)) = member(value, "labels") {
        return Some(Bounds::Labels(labels.iter().map(scalar_text).collect()));
    }
    match (member(value, "min"), member(value, "max")) {
        (Some(Json::Real(min)), Some(Json::Real(max))) => Some(Bounds::Interval { min: *min, max: *max }),
        _ => None,
    }
}

/// Elements of a keyed list, with repeated keys disambiguated as `key#2`, `key#3`…
fn keyed<'a>(items: &'a [Json], field: &str) -> Vec<(String, &'a Json)> {
    let mut seen: Vec<String> = Vec::new();
    items
        .iter()
        .map(|element| {
            let base = member(element, field).map(scalar_text).unwrap_or_default();
            let repeats = seen.iter().filter(|k| **k == base).count();
            seen.push(base.clone());
            let key = if repeats == 0 {
                base
            } else {
                format!("{base}#{}", repeats + 1)
            };
            (key, element)
        })
        .collect()
}

struct Differ<'a> {
    new_change_types: &'a BTreeSet<UncertaintyClass>,
    old_doc: &'a InterfaceDescription,
    new_doc: &'a InterfaceDescription,
    entries: Vec<DiffEntry>,
}

impl Differ<'_> {
    fn push(&mut self, path: &str, change: ChangeKind, breaking: bool, detail: String) {
        self.entries.push(DiffEntry {
            path: path.to_string(),
            change,
            breaking,
            detail,
        });
    }

    fn signal_role(&self, id: &str) -> Role {
        self.new_doc
            .signals
            .iter()
            .chain(&self.old_doc.signals)
            .find(|s| s.signal_id == id)
            .map_or(Role::Neutral, |s| Role::from_direction(s.direction))
    }

    /// `field` names the member holding the value; list elements carry the
    /// list's name.
    fn value(&mut self, path: &str, field: &str, old: &Json, new: &Json, role: Role) {
        match (old, new) {
            (Json::Null, Json::Null) => {}
            (Json::Null, _) => self.added(path, field, new, role),
            (_, Json::Null) => self.removed(path, field, old, role),
            (Json::Obj(_), Json::Obj(_)) if field != "bounds" => self.object(path, old, new, role),
            (Json::Arr(a), Json::Arr(b)) => {
                if let Some(key) = key_field(field) {
                    self.keyed_list(path, field, a, b, key, role);
                } else if field == "change_types_handled" || field == "verification_strategies" {
                    self.set(path, field, a, b);
                } else if old != new {
                    self.modified(path, field, old, new, role);
                }
            }
            _ if old != new => self.modified(path, field, old, new, role),
            _ => {}
        }
    }

    fn object(&mut self, path: &str, old: &Json, new: &Json, role: Role) {
        let (Json::Obj(a), Json::Obj(b)) = (old, new) else {
            return;
        };
        let keys: Vec<&String> = a
            .iter()
            .map(|(k, _)| k)
            .chain(
                b.iter()
                    .map(|(k, _)| k)
                    .filter(|k| !a.iter().any(|(ka, _)| ka == *k)),
            )
            .collect();
        for key in keys {
            let role = match (path, key.as_str()) {
                ("hardware.physical_layer", "in") => Role::Accepting,
                ("hardware.physical_layer", "out") => Role::Emitting,
                _ => role,
            };
            let old_member = member(old, key).unwrap_or(&Json::Null);
            let new_member = member(new, key).unwrap_or(&Json::Null);
            self.value(&child(path, key), key, old_member, new_member, role);
        }
    }

    fn keyed_list(
        &mut self,
        path: &str,
        list: &str,
        old: &[Json],
        new: &[Json],
        key_field: &str,
        role: Role,
    ) {
        let old_items = keyed(old, key_field);
        let new_items = keyed(new, key_field);
        let is_signals = path == "signals";
        for (key, old_item) in &old_items {
            let item_path = format!("{path}[{key}]");
            let role = if is_signals { self.signal_role(key) } else { role };
            match new_items.iter().find(|(k, _)| k == key) {
                Some((_, new_item)) => self.value(&item_path, list, old_item, new_item, role),
                None => self.removed(&item_path, list, old_item, role),
            }
        }
        for (key, new_item) in &new_items {
            if !old_items.iter().any(|(k, _)| k == key) {
                let role = if is_signals { self.signal_role(key) } else { role };
                self.added(&format!("{path}[{key}]"), list, new_item, role);
            }
        }
    }

    fn set(&mut self, path: &str, field: &str, old: &[Json], new: &[Json]) {
        let change_types = field == "change_types_handled";
        for element in old.iter().filter(|e| !new.contains(e)) {
            let key = scalar_text(element);
            let breaking = if change_types {
                let class = key.parse::<UncertaintyClass>().ok();
                !class.is_some_and(|c| crate::model::covers_uncertainty(self.new_change_types, c))
            } else {
                true
            };
            let detail = if change_types {
                if breaking {
                    format!("class {key} removed and no longer covered")
                } else {
                    format!("class {key} removed but still covered")
                }
            } else {
                format!("{key} removed")
            };
            self.push(&format!("{path}[{key}]"), ChangeKind::Removed, breaking, detail);
        }
        for element in new.iter().filter(|e| !old.contains(e)) {
            let key = scalar_text(element);
            let detail = if change_types {
                format!("class {key} added")
            } else {
                format!("{key} added")
            };
            self.push(&format!("{path}[{key}]"), ChangeKind::Added, false, detail);
        }
    }

    fn added(&mut self, path: &str, field: &str, new: &Json, role: Role) {
        let (breaking, detail) = if ENVELOPE_LISTS.contains(&field) && role.accepts() {
            (true, "new constraint on an accepted input".to_string())
        } else {
            (false, describe(new, "added"))
        };
        self.push(path, ChangeKind::Added, breaking, detail);
    }

    fn removed(&mut self, path: &str, field: &str, old: &Json, role: Role) {
        let (breaking, detail) = match field {
            "signals" => (true, "signal removed".to_string()),
            "operations" | "events" if path.starts_with("software.") => {
                (true, format!("{} removed", &field[..field.len() - 1]))
            }
            "software" => {
                let lost = ["operations", "events"]
                    .iter()
                    .any(|l| matches!(member(old, l), Some(Json::Arr(items)) if !items.is_empty()));
                (lost, "software section removed".to_string())
            }
            "autonomy" => {
                let lost = ["verification_strategies", "change_types_handled"]
                    .iter()
                    .any(|l| matches!(member(old, l), Some(Json::Arr(items)) if !items.is_empty()));
                (lost, "autonomy section removed".to_string())
            }
            "hardware" => {
                let emits = member(old, "physical_layer")
                    .and_then(|p| member(p, "out"))
                    .is_some_and(|out| match out {
                        Json::Obj(members) => members
                            .iter()
                            .any(|(_, v)| matches!(v, Json::Arr(items) if !items.is_empty())),
                        _ => false,
                    });
                (emits, "hardware section removed".to_string())
            }
            _ if ENVELOPE_LISTS.contains(&field) && role.emits() => {
                (true, "emitted output is no longer bounded".to_string())
            }
            _ => (false, describe(old, "removed")),
        };
        self.push(path, ChangeKind::Removed, breaking, detail);
    }

    fn modified(&mut self, path: &str, field: &str, old: &Json, new: &Json, role: Role) {
        let transition = format!("{} -> {}", scalar_text(old), scalar_text(new));
        let in_signal = path.starts_with("signals[");
        let (breaking, reason) = if in_signal && (field == "kind" || field == "direction") {
            (true, Some("signal interface changed"))
        } else if field == "unit" {
            (role != Role::Neutral, Some("unit changed"))
        } else if field == "bounds" {
            match (bounds_of(old), bounds_of(new)) {
                (Some(before), Some(after)) => {
                    let widened = containment(&before, &after).map(|c| c.contained);
                    let narrowed = containment(&after, &before).map(|c| c.contained);
                    match (widened, narrowed) {
                        (Some(new_covers_old), Some(old_covers_new)) => {
                            if role.accepts() && !new_covers_old {
                                (true, Some("accepted range narrowed"))
                            } else if role.emits() && !old_covers_new {
                                (true, Some("emitted range widened"))
                            } else {
                                (false, None)
                            }
                        }
                        _ => (role != Role::Neutral, Some("bounds form changed")),
                    }
                }
                _ => (false, None),
            }
        } else {
            (false, None)
        };
        let detail = match reason {
            Some(reason) => format!("{transition} ({reason})"),
            None => transition,
        };
        self.push(path, ChangeKind::Modified, breaking, detail);
    }
}

fn describe(value: &Json, verb: &str) -> String {
    match value {
        Json::Obj(_) | Json::Arr(_) => verb.to_string(),
        scalar => format!("{verb}: {}", scalar_text(scalar)),
    }
}

/// Lists every changed path between `old` and `new`, flagging changes that
/// can break an existing integration.
pub fn diff_documents(old: &InterfaceDescription, new: &InterfaceDescription) -> DocumentDiff {
    let empty = BTreeSet::new();
    let new_change_types = new.autonomy.as_ref().map_or(&empty, |a| &a.change_types_handled);
    let mut differ = Differ {
        new_change_types,
        old_doc: old,
        new_doc: new,
        entries: Vec::new(),
    };
    differ.value("", "", &document_json(old), &document_json(new), Role::Neutral);
    let mut entries = differ.entries;
    entries.sort_by(|a, b| a.path.cmp(&b.path));
    DocumentDiff { entries }
}
