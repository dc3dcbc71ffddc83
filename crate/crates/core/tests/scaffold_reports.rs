use aicd_core::findings::registry_table;
use aicd_core::io::{diff_documents, scaffold_template, DocumentDiff, ReportJson, TemplateKind};
use aicd_core::model::ConsiderationKind;
use aicd_core::testgen::Gen;
use aicd_core::{score_completeness, validate_document, CompletenessScore, Finding, Severity};
use proptest::prelude::*;

#[test]
fn scaffolds_self_validate() {
    for kind in [TemplateKind::Hw, TemplateKind::Sw, TemplateKind::Ai] {
        let doc = scaffold_template(kind);
        let findings = validate_document(&doc);
        assert!(
            findings.iter().all(|f| f.severity != Severity::Error),
            "{kind}: {findings:?}"
        );
        assert_eq!(doc.signals.len(), 1);
    }
}

#[test]
fn scaffold_sections_follow_kind() {
    let hw = scaffold_template(TemplateKind::Hw);
    assert!(hw.hardware.is_some() && hw.software.is_none() && hw.model_card.is_none());
    let sw = scaffold_template(TemplateKind::Sw);
    assert!(sw.software.is_some() && sw.hardware.is_none());

    let ai = scaffold_template(TemplateKind::Ai);
    assert!(ai.meta.ai_enabled);
    let considerations = ai.considerations.as_ref().unwrap();
    assert_eq!(considerations.entries().count(), 7);
    assert_eq!(ConsiderationKind::ALL.len(), 7);
    let handled: Vec<u8> = ai
        .autonomy
        .as_ref()
        .unwrap()
        .change_types_handled
        .iter()
        .map(|c| c.index())
        .collect();
    assert_eq!(handled, [1]);
}

#[test]
fn published_registry_is_current() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/finding-codes.md");
    if std::env::var_os("AICD_BLESS").is_some() {
        std::fs::write(path, registry_table()).unwrap();
    }
    let published = std::fs::read_to_string(path).expect("docs/finding-codes.md exists");
    assert_eq!(
        published,
        registry_table(),
        "rerun with AICD_BLESS=1 to regenerate"
    );
}

proptest! {
    #[test]
    fn report_json_round_trips(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let a = g.document();
        let b = g.document();

        let findings: Vec<Finding> = validate_document(&a);
        prop_assert_eq!(Vec::<Finding>::from_json_text(&findings.to_json_text()).unwrap(), findings);

        let diff = diff_documents(&a, &b);
        prop_assert_eq!(DocumentDiff::from_json_text(&diff.to_json_text()).unwrap(), diff);

        let score = score_completeness(&a);
        prop_assert_eq!(CompletenessScore::from_json_text(&score.to_json_text()).unwrap(), score);
    }
}
