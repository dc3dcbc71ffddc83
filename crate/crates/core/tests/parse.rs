use aicd_core::io::{parse_document, DiagnosticSeverity, ParseMode};
use aicd_core::model::*;
use aicd_core::validate_document;

const MINIMAL: &str = include_str!("data/minimal.aicd.json");

#[test]
fn minimal_document_parses() {
    let parsed = parse_document(MINIMAL, ParseMode::Strict).unwrap();
    assert!(parsed.warnings.is_empty());
    let doc = parsed.value;
    assert_eq!(doc.meta.component_id, "lane-camera");
    assert_eq!(doc.meta.version, Version::new(1, 0, 0));
    assert_eq!(doc.signals.len(), 1);
    assert_eq!(doc.signals[0].kind, SignalKind::Information);
    assert_eq!(
        doc.signals[0].characteristics[0].bounds,
        Bounds::Interval { min: 10.0, max: 30.0 }
    );
    assert!(doc.software.is_some());
    assert!(doc.hardware.is_none() && doc.model_card.is_none());
    assert!(validate_document(&doc).is_empty());
}

#[test]
fn unterminated_string_reports_opening_quote() {
    // Break the string on line 7 of the fixture.
    let line7 = MINIMAL.lines().nth(6).unwrap();
    assert_eq!(line7, "    \"authors\": [\"Integration team\"],");
    let broken = MINIMAL.replacen("[\"Integration team\"]", "[\"Integration team", 1);
    let diagnostics = parse_document(&broken, ParseMode::Strict).unwrap_err();
    assert_eq!(diagnostics.len(), 1);
    let d = &diagnostics[0];
    assert_eq!(d.severity, DiagnosticSeverity::Error);
    assert_eq!((d.line, d.column), (7, line7.find("[\"").unwrap() + 2));
}

#[test]
fn unterminated_string_at_end_of_input() {
    let diagnostics = parse_document("{\n  \"meta\": \"abc", ParseMode::Strict).unwrap_err();
    assert_eq!((diagnostics[0].line, diagnostics[0].column), (2, 11));
}

#[test]
fn unknown_field_strict_and_lax() {
    let text = MINIMAL.replacen(
        "\"name\": \"Lane camera\",",
        "\"name\": \"Lane camera\",\n    \"colour\": \"red\",",
        1,
    );
    let diagnostics = parse_document(&text, ParseMode::Strict).unwrap_err();
    assert_eq!(diagnostics.len(), 1);
    assert_eq!(diagnostics[0].path, "meta.colour");
    assert_eq!(diagnostics[0].severity, DiagnosticSeverity::Error);
    assert_eq!((diagnostics[0].line, diagnostics[0].column), (5, 5));

    let parsed = parse_document(&text, ParseMode::Lax).unwrap();
    assert_eq!(parsed.warnings.len(), 1);
    assert_eq!(parsed.warnings[0].path, "meta.colour");
    assert_eq!(parsed.warnings[0].severity, DiagnosticSeverity::Warning);
    assert_eq!(
        parsed.value,
        parse_document(MINIMAL, ParseMode::Strict).unwrap().value
    );
}

#[test]
fn wrong_primitive_type() {
    let text = MINIMAL.replacen("\"ai_enabled\": false", "\"ai_enabled\": \"no\"", 1);
    let diagnostics = parse_document(&text, ParseMode::Strict).unwrap_err();
    assert_eq!(diagnostics.len(), 1);
    assert_eq!(diagnostics[0].path, "meta.ai_enabled");
    assert!(
        diagnostics[0].message.contains("boolean"),
        "{}",
        diagnostics[0].message
    );
}

#[test]
fn several_errors_are_sorted_by_position() {
    let text = MINIMAL
        .replacen("\"Information\"", "\"Informatoin\"", 1)
        .replacen("\"version\": \"1.0.0\"", "\"version\": \"1.0\"", 1)
        .replacen("\"Out\"", "\"Sideways\"", 1);
    let diagnostics = parse_document(&text, ParseMode::Strict).unwrap_err();
    let paths: Vec<&str> = diagnostics.iter().map(|d| d.path.as_str()).collect();
    assert_eq!(paths, ["meta.version", "signals[0].kind", "signals[0].direction"]);
    let positions: Vec<(usize, usize)> = diagnostics.iter().map(|d| (d.line, d.column)).collect();
    let mut sorted = positions.clone();
    sorted.sort();
    assert_eq!(positions, sorted);
}

#[test]
fn uncertainty_class_accepts_index_or_token() {
    let mut doc = parse_document(MINIMAL, ParseMode::Strict).unwrap().value;
    doc.autonomy = Some(AutonomySpec::default());
    let text = aicd_core::io::serialize_document(&doc).replacen(
        "\"change_types_handled\": []",
        "\"change_types_handled\": [\"UUK\", 2]",
        1,
    );
    let parsed = parse_document(&text, ParseMode::Strict).unwrap().value;
    let handled: Vec<u8> = parsed
        .autonomy
        .unwrap()
        .change_types_handled
        .iter()
        .map(|c| c.index())
        .collect();
    assert_eq!(handled, [2, 6]);
    let out = aicd_core::io::serialize_document(&parse_document(&text, ParseMode::Strict).unwrap().value);
    assert!(
        out.contains("\"change_types_handled\": [\n      2,\n      6\n    ]"),
        "{out}"
    );
}

#[test]
fn unsupported_schema_major_is_rejected() {
    let text = MINIMAL.replacen(
        "\"schema_version\": \"1.0.0\"",
        "\"schema_version\": \"2.0.0\"",
        1,
    );
    let diagnostics = parse_document(&text, ParseMode::Strict).unwrap_err();
    assert_eq!(diagnostics[0].path, "meta.schema_version");
}

#[test]
fn energy_needs_subkind() {
    let text = MINIMAL.replacen("\"Information\"", "\"Energy\"", 1);
    let diagnostics = parse_document(&text, ParseMode::Strict).unwrap_err();
    assert!(diagnostics[0].message.contains("subkind"));
    let text = MINIMAL.replacen("\"Information\"", "\"Energy:Electrical\"", 1);
    let doc = parse_document(&text, ParseMode::Strict).unwrap().value;
    assert_eq!(doc.signals[0].kind, SignalKind::Energy(EnergyKind::Electrical));
}
