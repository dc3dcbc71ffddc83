//! Semantic validation of documents and host contexts.
//!
//! Structural contradictions are errors. Missing diligence (unmitigated
//! risks, leftover placeholders, undeclared verification) is a warning.

use std::collections::HashSet;

use crate::findings::{normalize, Code, Dimension, Finding};
use crate::io::canonical::Json;
use crate::io::decode::{child, item};
use crate::io::document::document_json;
use crate::model::*;

pub fn validate_document(doc: &InterfaceDescription) -> Vec<Finding> {
    let mut out = Vec::new();

    if doc.meta.component_id.trim().is_empty() {
        out.push(Finding::new(
            Code::EmptyComponentId,
            Dimension::Meta,
            "meta.component_id",
            "component_id must not be empty",
        ));
    }

    if doc.signals.is_empty() {
        out.push(Finding::new(
            Code::NoSignals,
            Dimension::Signal,
            "signals",
            "at least one signal must be declared",
        ));
    }
    check_signals(&doc.signals, "signals", Code::DupSignalId, &mut out);

    if doc.hardware.is_none() && doc.software.is_none() {
        out.push(Finding::new(
            Code::NoInterfaceSection,
            Dimension::Meta,
            "software",
            "a hardware or a software section is required",
        ));
    }
    if let Some(hw) = &doc.hardware {
        for (direction, group) in [
            ("in", &hw.physical_layer.inbound),
            ("out", &hw.physical_layer.outbound),
        ] {
            for (category, i, envelope) in group.iter() {
                let path = item(&format!("hardware.physical_layer.{direction}.{category}"), i);
                check_envelope(envelope, &path, Dimension::Physical, &mut out);
            }
        }
    }
    if let Some(sw) = &doc.software {
        check_software(sw, &mut out);
    }

    if let Some(card) = &doc.model_card {
        for (i, metric) in card.metrics.iter().flatten().enumerate() {
            if !metric.value.is_finite() {
                out.push(Finding::new(
                    Code::NonFiniteNumber,
                    Dimension::Autonomy,
                    format!("model_card.metrics[{i}].value"),
                    format!("metric '{}' has a non-finite value", metric.name),
                ));
            }
        }
    }

    if doc.meta.ai_enabled {
        let required = [
            (
                doc.model_card.is_none(),
                Code::MissingModelCard,
                Dimension::Autonomy,
                "model_card",
            ),
            (
                doc.autonomy.is_none(),
                Code::MissingAutonomy,
                Dimension::Autonomy,
                "autonomy",
            ),
            (
                doc.considerations.is_none(),
                Code::MissingConsiderations,
                Dimension::Consideration,
                "considerations",
            ),
        ];
        for (missing, code, dimension, section) in required {
            if missing {
                out.push(Finding::new(
                    code,
                    dimension,
                    section,
                    format!("AI-enabled components must provide a {section} section"),
                ));
            }
        }
    }

    if let Some(autonomy) = &doc.autonomy {
        check_autonomy(autonomy, doc.meta.ai_enabled, &mut out);
    }
    if let Some(considerations) = &doc.considerations {
        check_considerations(considerations, &mut out);
    }

    collect_placeholders(&document_json(doc), "", &mut out);
    normalize(out)
}

/// Validates a host context. Paths are prefixed with `context.`.
pub fn validate_context(ctx: &SystemContext) -> Vec<Finding> {
    let mut out = Vec::new();
    if ctx.context_id.trim().is_empty() {
        out.push(Finding::new(
            Code::EmptyContextId,
            Dimension::Meta,
            "context.context_id",
            "context_id must not be empty",
        ));
    }
    check_signals(
        &ctx.offered_signals,
        "context.offered_signals",
        Code::DupContextSignalId,
        &mut out,
    );
    check_signals(
        &ctx.accepted_signals,
        "context.accepted_signals",
        Code::DupContextSignalId,
        &mut out,
    );
    for (i, envelope) in ctx.environment.iter().enumerate() {
        check_envelope(
            envelope,
            &item("context.environment", i),
            Dimension::Physical,
            &mut out,
        );
    }
    if ctx.change_profile.is_empty() {
        out.push(Finding::new(
            Code::EmptyChangeProfile,
            Dimension::Autonomy,
            "context.change_profile",
            "the host must state at least one change-uncertainty class",
        ));
    }
    normalize(out)
}

fn check_signals(signals: &[SignalSpec], base: &str, dup_code: Code, out: &mut Vec<Finding>) {
    let mut ids = HashSet::new();
    for (i, signal) in signals.iter().enumerate() {
        let path = item(base, i);
        if !ids.insert(signal.signal_id.as_str()) {
            out.push(Finding::new(
                dup_code,
                Dimension::Signal,
                child(&path, "signal_id"),
                format!("signal_id '{}' is already used", signal.signal_id),
            ));
        }
        let mut names = HashSet::new();
        for (j, characteristic) in signal.characteristics.iter().enumerate() {
            let c_path = item(&child(&path, "characteristics"), j);
            if !names.insert(characteristic.name.as_str()) {
                out.push(Finding::new(
                    Code::DupCharacteristic,
                    Dimension::Signal,
                    child(&c_path, "name"),
                    format!(
                        "characteristic '{}' is declared twice on signal '{}'",
                        characteristic.name, signal.signal_id
                    ),
                ));
            }
            check_envelope(characteristic, &c_path, Dimension::Signal, out);
        }
    }
}

fn check_envelope(envelope: &QuantityEnvelope, path: &str, dimension: Dimension, out: &mut Vec<Finding>) {
    let bounds_path = child(path, "bounds");
    match &envelope.bounds {
        Bounds::Interval { min, max } => {
            if !min.is_finite() || !max.is_finite() {
                out.push(Finding::new(
                    Code::NonFiniteNumber,
                    dimension,
                    bounds_path,
                    format!("'{}' has a non-finite bound", envelope.name),
                ));
            } else if min > max {
                out.push(Finding::new(
                    Code::BadRange,
                    dimension,
                    bounds_path,
                    format!("'{}' has min {min:?} greater than max {max:?}", envelope.name),
                ));
            }
        }
        Bounds::Labels(labels) => {
            let mut seen = HashSet::new();
            let repeated = labels.iter().find(|l| !seen.insert(l.as_str()));
            if labels.is_empty() {
                out.push(Finding::new(
                    Code::BadLabelSet,
                    dimension,
                    bounds_path,
                    format!("'{}' lists no labels", envelope.name),
                ));
            } else if let Some(label) = repeated {
                out.push(Finding::new(
                    Code::BadLabelSet,
                    dimension,
                    bounds_path,
                    format!("'{}' repeats label '{label}'", envelope.name),
                ));
            }
        }
    }
}

fn check_unique_names<'a>(names: impl Iterator<Item = &'a str>, base: &str, out: &mut Vec<Finding>) {
    let mut seen = HashSet::new();
    for (i, name) in names.enumerate() {
        if !seen.insert(name) {
            out.push(Finding::new(
                Code::DupSoftwareName,
                Dimension::Software,
                child(&item(base, i), "name"),
                format!("name '{name}' is already used in {base}"),
            ));
        }
    }
}

fn check_software(sw: &SoftwareInterfaceSpec, out: &mut Vec<Finding>) {
    check_unique_names(
        sw.properties.iter().map(|p| p.name.as_str()),
        "software.properties",
        out,
    );
    check_unique_names(
        sw.operations.iter().map(|o| o.name.as_str()),
        "software.operations",
        out,
    );
    check_unique_names(sw.events.iter().map(|e| e.name.as_str()), "software.events", out);
    check_unique_names(
        sw.ilities.iter().map(|i| i.name.as_str()),
        "software.ilities",
        out,
    );
    if let Some(packaging) = &sw.packaging {
        if packaging.supported_contexts.is_empty() {
            out.push(Finding::new(
                Code::EmptySupportedContexts,
                Dimension::Software,
                "software.packaging.supported_contexts",
                "packaging must name at least one supported context",
            ));
        }
    }
}

fn check_autonomy(autonomy: &AutonomySpec, ai_enabled: bool, out: &mut Vec<Finding>) {
    if ai_enabled && autonomy.change_types_handled.is_empty() {
        out.push(Finding::new(
            Code::NoChangeTypes,
            Dimension::Autonomy,
            "autonomy.change_types_handled",
            "an AI-enabled component must handle at least one change-uncertainty class",
        ));
    }
    for (i, cycle) in autonomy.feedback_cycles.iter().enumerate() {
        let path = format!("autonomy.feedback_cycles[{i}].latency_bound");
        if !cycle.latency_bound.is_finite() {
            out.push(Finding::new(
                Code::NonFiniteNumber,
                Dimension::Autonomy,
                path,
                format!("feedback cycle '{}' has a non-finite latency bound", cycle.source),
            ));
        } else if cycle.latency_bound <= 0.0 {
            out.push(Finding::new(
                Code::BadLatency,
                Dimension::Autonomy,
                path,
                format!(
                    "feedback cycle '{}' has latency bound {:?} s; it must be positive",
                    cycle.source, cycle.latency_bound
                ),
            ));
        }
    }
    if autonomy.verification_strategies.is_empty() {
        out.push(Finding::new(
            Code::NoVerificationDeclared,
            Dimension::Verification,
            "autonomy.verification_strategies",
            "no verification strategy is declared",
        ));
    }
}

fn check_considerations(considerations: &ConsiderationsSpec, out: &mut Vec<Finding>) {
    for (kind, entry) in considerations.entries() {
        let path = child("considerations", kind.as_str());
        if entry.status == RiskStatus::Assessed && entry.likelihood == Likelihood::Unknown {
            out.push(Finding::new(
                Code::InconsistentRisk,
                Dimension::Consideration,
                child(&path, "likelihood"),
                format!("{kind} is marked Assessed but its likelihood is Unknown"),
            ));
        }
        if entry.likelihood == Likelihood::High && is_blank(&entry.mitigation) {
            out.push(Finding::new(
                Code::UnmitigatedHighRisk,
                Dimension::Consideration,
                child(&path, "mitigation"),
                format!("{kind} has High likelihood and no mitigation"),
            ));
        }
    }
}

fn dimension_of(path: &str) -> Dimension {
    let head = path.split(['.', '[']).next().unwrap_or_default();
    match head {
        "signals" => Dimension::Signal,
        "hardware" if path.starts_with("hardware.transport_layer") => Dimension::Transport,
        "hardware" => Dimension::Physical,
        "software" => Dimension::Software,
        "model_card" | "autonomy" => Dimension::Autonomy,
        "considerations" => Dimension::Consideration,
        _ => Dimension::Meta,
    }
}

fn collect_placeholders(value: &Json, path: &str, out: &mut Vec<Finding>) {
    match value {
        Json::Str(text) if text.trim() == PLACEHOLDER => out.push(Finding::new(
            Code::PlaceholderText,
            dimension_of(path),
            path,
            "placeholder text TBD has not been replaced",
        )),
        Json::Arr(items) => {
            for (i, element) in items.iter().enumerate() {
                collect_placeholders(element, &item(path, i), out);
            }
        }
        Json::Obj(members) => {
            for (key, member) in members {
                collect_placeholders(member, &child(path, key), out);
            }
        }
        _ => {}
    }
}
