use std::collections::BTreeSet;

use aicd_core::compat::*;
use aicd_core::io::ReportJson;
use aicd_core::model::*;
use aicd_core::testgen::Gen;
use aicd_core::{Code, Dimension, Finding, Severity};
use proptest::prelude::*;

fn class(i: u8) -> UncertaintyClass {
    UncertaintyClass::from_index(i).unwrap()
}

fn context() -> SystemContext {
    SystemContext {
        context_id: "host".into(),
        offered_signals: Vec::new(),
        accepted_signals: Vec::new(),
        environment: Vec::new(),
        available_transports: Vec::new(),
        change_profile: [class(1)].into(),
        required_ilities: Vec::new(),
        required_verification: BTreeSet::new(),
        requires_online_adaptation: false,
        peer_interface_count: 0,
        human_interaction_expected: false,
    }
}

fn signal(id: &str, kind: SignalKind, direction: Direction, env: QuantityEnvelope) -> SignalSpec {
    SignalSpec {
        signal_id: id.into(),
        kind,
        direction,
        characteristics: vec![env],
    }
}

fn codes(findings: &[Finding]) -> Vec<Code> {
    findings.iter().map(|f| f.code).collect()
}

// ---------------------------------------------------------------- signals

#[test]
fn accepted_range_contains_offer() {
    let component = signal(
        "t",
        SignalKind::Information,
        Direction::In,
        QuantityEnvelope::interval("temperature", "degC", -40.0, 85.0),
    );
    let mut ctx = context();
    ctx.offered_signals.push(signal(
        "h",
        SignalKind::Information,
        Direction::Out,
        QuantityEnvelope::interval("temperature", "degC", 0.0, 40.0),
    ));
    assert!(match_signal(&component, 0, &ctx).is_empty());
}

#[test]
fn kind_mismatch() {
    let env = QuantityEnvelope::interval("voltage", "V", 0.0, 5.0);
    let component = signal("v", SignalKind::Information, Direction::In, env.clone());
    let mut ctx = context();
    ctx.offered_signals.push(signal(
        "h",
        SignalKind::Energy(EnergyKind::Electrical),
        Direction::Out,
        env,
    ));
    let findings = match_signal(&component, 3, &ctx);
    assert_eq!(codes(&findings), [Code::SignalKindMismatch]);
    assert_eq!(findings[0].severity, Severity::Error);
    assert_eq!(findings[0].path, "signals[3].kind");
}

#[test]
fn range_exceeded_reports_overlap() {
    let component = signal(
        "p",
        SignalKind::Material,
        Direction::In,
        QuantityEnvelope::interval("flow", "l/min", 0.0, 85.0),
    );
    let mut ctx = context();
    ctx.offered_signals.push(signal(
        "h",
        SignalKind::Material,
        Direction::Out,
        QuantityEnvelope::interval("flow", "l/min", 0.0, 100.0),
    ));
    let findings = match_signal(&component, 0, &ctx);
    assert_eq!(codes(&findings), [Code::RangeExceeded, Code::RangeOverlap]);
    assert_eq!(findings[1].severity, Severity::Info);
    assert_eq!(overlap_of(&findings[1]), 0.85);
}

#[test]
fn unmatched_signal_warns() {
    let component = signal(
        "p",
        SignalKind::Material,
        Direction::Out,
        QuantityEnvelope::interval("flow", "l/min", 0.0, 85.0),
    );
    let findings = match_signal(&component, 0, &context());
    assert_eq!(codes(&findings), [Code::UnmatchedSignal]);
    assert_eq!(findings[0].severity, Severity::Warning);
}

#[test]
fn bidirectional_is_checked_both_ways() {
    let component = signal(
        "bus",
        SignalKind::Information,
        Direction::Bidirectional,
        QuantityEnvelope::interval("rate", "Hz", 0.0, 100.0),
    );
    let mut ctx = context();
    ctx.offered_signals.push(signal(
        "h1",
        SignalKind::Information,
        Direction::Out,
        QuantityEnvelope::interval("rate", "Hz", 0.0, 50.0),
    ));
    // Host accepts less than the component may emit.
    ctx.accepted_signals.push(signal(
        "h2",
        SignalKind::Information,
        Direction::In,
        QuantityEnvelope::interval("rate", "Hz", 0.0, 80.0),
    ));
    let findings = match_signal(&component, 0, &ctx);
    assert_eq!(codes(&findings), [Code::RangeExceeded, Code::RangeOverlap]);
    assert!(findings[0].message.contains("component emits"));
}

fn overlap_of(f: &Finding) -> f64 {
    f.message
        .strip_prefix("overlap fraction ")
        .unwrap()
        .parse()
        .unwrap()
}

// --------------------------------------------------------------- physical

fn hw_with(inbound: Vec<QuantityEnvelope>, outbound: Vec<QuantityEnvelope>) -> HardwareInterfaceSpec {
    let mut hw = HardwareInterfaceSpec::default();
    hw.physical_layer.inbound.mechanical = inbound;
    hw.physical_layer.outbound.electrical_emc = outbound;
    hw.transport_layer.protocol_name = "can".into();
    hw.transport_layer.protocol_version = "2.0".into();
    hw
}

#[test]
fn physical_examples() {
    let mut ctx = context();
    ctx.environment
        .push(QuantityEnvelope::interval("humidity", "%", 20.0, 60.0));
    ctx.environment
        .push(QuantityEnvelope::interval("shock", "g", 0.0, 80.0));

    let hw = hw_with(
        vec![QuantityEnvelope::interval("humidity", "%", 0.0, 95.0)],
        vec![],
    );
    assert!(check_physical_envelope(&hw, &ctx).is_empty());

    let hw = hw_with(vec![QuantityEnvelope::interval("shock", "g", 0.0, 50.0)], vec![]);
    let findings = check_physical_envelope(&hw, &ctx);
    assert_eq!(codes(&findings), [Code::EnvOutOfEnvelope]);
    assert_eq!(findings[0].path, "hardware.physical_layer.in.mechanical[0]");

    let hw = hw_with(
        vec![QuantityEnvelope::interval("ESD susceptibility", "kV", 0.0, 8.0)],
        vec![],
    );
    assert_eq!(codes(&check_physical_envelope(&hw, &ctx)), [Code::EnvUnspecified]);
}

#[test]
fn emissions() {
    let emitted = QuantityEnvelope::interval("radiated emission", "dBuV/m", 0.0, 40.0);
    let hw = hw_with(vec![], vec![emitted]);
    let mut ctx = context();
    assert_eq!(
        codes(&check_physical_envelope(&hw, &ctx)),
        [Code::EmissionUnchecked]
    );

    ctx.accepted_signals.push(signal(
        "emc",
        SignalKind::Energy(EnergyKind::Radiant),
        Direction::In,
        QuantityEnvelope::interval("radiated emission", "dBuV/m", 0.0, 30.0),
    ));
    assert_eq!(
        codes(&check_physical_envelope(&hw, &ctx)),
        [Code::EmissionOutOfAcceptance]
    );
}

// -------------------------------------------------------------- transport

#[test]
fn transport_examples() {
    let mut hw = hw_with(vec![], vec![]);
    let mut ctx = context();
    ctx.available_transports.push(TransportRef {
        protocol_name: "can".into(),
        protocol_version: "2.0".into(),
    });
    assert!(check_transport_compat(&hw, &ctx).is_empty());

    ctx.available_transports[0].protocol_version = "2.0B".into();
    let findings = check_transport_compat(&hw, &ctx);
    assert_eq!(codes(&findings), [Code::TransportVersionMismatch]);
    assert_eq!(findings[0].severity, Severity::Warning);

    hw.transport_layer.protocol_name = "spacewire".into();
    hw.transport_layer.protocol_version = "1".into();
    let findings = check_transport_compat(&hw, &ctx);
    assert_eq!(codes(&findings), [Code::TransportUnavailable]);
    assert_eq!(findings[0].severity, Severity::Error);
}

// --------------------------------------------------------------- autonomy

fn autonomy_handling(classes: &[u8]) -> AutonomySpec {
    AutonomySpec {
        change_types_handled: classes.iter().map(|&i| class(i)).collect(),
        ..AutonomySpec::default()
    }
}

#[test]
fn change_coverage_examples() {
    let mut ctx = context();
    ctx.change_profile = (1..=8).map(class).collect();
    let (score, findings) = score_change_coverage(&autonomy_handling(&[8]), &ctx);
    assert_eq!(score, 1.0);
    assert!(findings.is_empty());

    ctx.change_profile = [class(5)].into();
    let (score, findings) = score_change_coverage(&autonomy_handling(&[1]), &ctx);
    assert_eq!(score, 0.0);
    assert_eq!(codes(&findings), [Code::ChangeClassUncovered]);
    assert!(findings[0].message.contains("class 5"));

    ctx.change_profile = [class(2), class(3)].into();
    let (score, findings) = score_change_coverage(&autonomy_handling(&[2, 3]), &ctx);
    assert_eq!(score, 1.0);
    assert!(check_change_coverage(&autonomy_handling(&[2, 3]), &ctx).is_empty());
    assert!(findings.is_empty());
}

#[test]
fn change_coverage_agrees_with_brute_force() {
    let mut ctx = context();
    for mask in 0u16..256 {
        let handled: Vec<u8> = (1..=8).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let autonomy = autonomy_handling(&handled);
        for demanded in 1..=8u8 {
            ctx.change_profile = [class(demanded)].into();
            let oracle = handled.iter().any(|&h| {
                let (hu, du) = (class(h).unknown_mask(), class(demanded).unknown_mask());
                (0..3).all(|bit| du & (1 << bit) == 0 || hu & (1 << bit) != 0)
            });
            assert_eq!(check_change_coverage(&autonomy, &ctx).is_empty(), oracle);
        }
    }
}

#[test]
fn risk_rules() {
    let autonomy = autonomy_handling(&[8]);
    let mut considerations = ConsiderationsSpec::unassessed();
    let mut ctx = context();

    ctx.change_profile = [class(1)].into();
    assert!(!codes(&assess_autonomy_risks(&considerations, &autonomy, &ctx)).contains(&Code::DriftUnassessed));

    ctx.change_profile = [class(8)].into();
    assert!(codes(&assess_autonomy_risks(&considerations, &autonomy, &ctx)).contains(&Code::DriftUnassessed));

    ctx.requires_online_adaptation = true;
    considerations.catastrophic_inference = RiskEntry {
        status: RiskStatus::Assessed,
        likelihood: Likelihood::High,
        mitigation: String::new(),
    };
    let findings = assess_autonomy_risks(&considerations, &autonomy, &ctx);
    let f = findings
        .iter()
        .find(|f| f.code == Code::CatastrophicInferenceUnmitigated)
        .unwrap();
    assert_eq!(f.severity, Severity::Error);

    considerations.catastrophic_inference.mitigation = "rehearsal buffer".into();
    assert!(!codes(&assess_autonomy_risks(&considerations, &autonomy, &ctx))
        .contains(&Code::CatastrophicInferenceUnmitigated));
}

#[test]
fn cooperation_rules() {
    let mut autonomy = autonomy_handling(&[1]);
    let mut considerations = ConsiderationsSpec::unassessed();
    let mut ctx = context();
    ctx.peer_interface_count = 2;
    ctx.human_interaction_expected = true;
    considerations.decentralization = RiskEntry {
        status: RiskStatus::Assessed,
        likelihood: Likelihood::High,
        mitigation: "arbiter".into(),
    };
    let got: BTreeSet<Code> = codes(&assess_autonomy_risks(&considerations, &autonomy, &ctx))
        .into_iter()
        .collect();
    assert_eq!(
        got,
        BTreeSet::from([
            Code::CooperationInterfacesInsufficient,
            Code::HumanRulesMissing,
            Code::DecentralizationComplexity,
            Code::GoalDeviationUnassessed,
        ])
    );

    autonomy.interactions = vec![
        Interaction {
            peer: "a".into(),
            filter_transform: String::new(),
        },
        Interaction {
            peer: "b".into(),
            filter_transform: String::new(),
        },
    ];
    autonomy.human_interaction_rules = "operator override wins".into();
    considerations.goal_deviation = RiskEntry {
        status: RiskStatus::Assessed,
        likelihood: Likelihood::Low,
        mitigation: String::new(),
    };
    ctx.peer_interface_count = 1;
    assert!(assess_autonomy_risks(&considerations, &autonomy, &ctx).is_empty());
}

#[test]
fn verification_examples() {
    let mut autonomy = autonomy_handling(&[1]);
    let mut ctx = context();
    ctx.required_verification = VerificationCategory::ALL.iter().copied().collect();

    autonomy.verification_strategies = ctx.required_verification.clone();
    let (score, findings) = score_verification_coverage(&autonomy, &ctx);
    assert_eq!((score, findings.len()), (1.0, 0));

    autonomy.verification_strategies = [VerificationCategory::AgentBasedSimulation].into();
    let (score, findings) = score_verification_coverage(&autonomy, &ctx);
    assert_eq!(score, 0.25);
    assert_eq!(codes(&findings), [Code::VerificationGap; 3]);

    ctx.required_verification.clear();
    assert_eq!(score_verification_coverage(&autonomy, &ctx).0, 1.0);
}

// ---------------------------------------------------------------- reports

fn clean_pair() -> (InterfaceDescription, SystemContext) {
    let mut doc = Gen::new(1).document();
    doc.meta.ai_enabled = false;
    doc.model_card = None;
    doc.autonomy = None;
    doc.considerations = None;
    doc.hardware = None;
    doc.software = Some(SoftwareInterfaceSpec::default());
    doc.signals = vec![signal(
        "t",
        SignalKind::Information,
        Direction::In,
        QuantityEnvelope::interval("temperature", "degC", -40.0, 85.0),
    )];
    let mut ctx = context();
    ctx.offered_signals.push(signal(
        "h",
        SignalKind::Information,
        Direction::Out,
        QuantityEnvelope::interval("temperature", "degC", 0.0, 40.0),
    ));
    (doc, ctx)
}

#[test]
fn verdicts() {
    let (mut doc, mut ctx) = clean_pair();
    let report = assess_compatibility(&doc, &ctx).unwrap();
    assert!(report.findings.is_empty());
    assert_eq!(report.verdict, Verdict::Compatible);
    assert_eq!(report.dimension_scores[&Dimension::Signal], 1.0);

    doc.signals[0].signal_id = "t2".into();
    doc.signals.push(signal(
        "unmatched",
        SignalKind::Material,
        Direction::In,
        QuantityEnvelope::interval("grain", "kg", 0.0, 1.0),
    ));
    let report = assess_compatibility(&doc, &ctx).unwrap();
    assert!(report.findings.iter().all(|f| f.severity == Severity::Warning));
    assert_eq!(report.verdict, Verdict::ConditionallyCompatible);

    ctx.offered_signals[0].characteristics[0] = QuantityEnvelope::interval("temperature", "degC", 0.0, 100.0);
    let report = assess_compatibility(&doc, &ctx).unwrap();
    assert_eq!(report.verdict, Verdict::Incompatible);
    // One of the two signals fails its check.
    assert_eq!(report.dimension_scores[&Dimension::Signal], 0.5);
}

#[test]
fn invalid_inputs_are_refused() {
    let (mut doc, mut ctx) = clean_pair();
    doc.signals.push(doc.signals[0].clone());
    let Err(CompatError::InvalidInput { findings }) = assess_compatibility(&doc, &ctx) else {
        panic!("accepted an invalid document");
    };
    assert_eq!(codes(&findings), [Code::DupSignalId]);

    doc.signals.pop();
    ctx.change_profile.clear();
    let err = assess_compatibility(&doc, &ctx).unwrap_err();
    assert_eq!(err.code(), "INVALID_INPUT");
}

fn assess(doc: &InterfaceDescription, ctx: &SystemContext) -> CompatibilityReport {
    assess_compatibility(doc, ctx).expect("generated inputs are valid")
}

/// Independent interval arithmetic: length of `inner` outside `outer`
/// subtracted from the length of `inner`.
fn oracle(inner: (f64, f64), outer: (f64, f64)) -> (bool, f64) {
    let (a, b) = inner;
    let (lo, hi) = outer;
    let contained = lo <= a && b <= hi;
    let length = b - a;
    if length == 0.0 {
        return (contained, if contained { 1.0 } else { 0.0 });
    }
    let left = (lo.min(b) - a).max(0.0);
    let right = (b - hi.max(a)).max(0.0);
    (contained, (length - left - right) / length)
}

fn ordered(a: f64, b: f64) -> (f64, f64) {
    (a.min(b), a.max(b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn verdict_never_improves_when_context_tightens(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let doc = g.scenario_document();
        let ctx = g.context_for(&doc);
        let (tighter, how) = g.tighten(&ctx);
        let before = assess(&doc, &ctx).verdict;
        let after = assess(&doc, &tighter).verdict;
        prop_assert!(after <= before, "{:?}: {:?} -> {:?}", how, before, after);
    }

    #[test]
    fn reports_are_deterministic_and_bounded(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let doc = g.scenario_document();
        let ctx = g.context_for(&doc);
        let a = assess(&doc, &ctx);
        let b = assess(&doc, &ctx);
        prop_assert_eq!(a.to_json_text(), b.to_json_text());
        prop_assert!(a.dimension_scores.values().all(|s| (0.0..=1.0).contains(s)));
        let keys: BTreeSet<(Code, &str)> = a.findings.iter().map(|f| (f.code, f.path.as_str())).collect();
        prop_assert_eq!(keys.len(), a.findings.len());
        prop_assert_eq!(a.verdict, Verdict::from_findings(&a.findings));
        prop_assert_eq!(CompatibilityReport::from_json_text(&a.to_json_text()).unwrap(), a);
    }

    #[test]
    fn signal_containment_matches_oracle(
        c in (-1e3f64..1e3, -1e3f64..1e3),
        o in (-1e3f64..1e3, -1e3f64..1e3),
        degenerate in proptest::bool::weighted(0.05),
    ) {
        let accepted = ordered(c.0, c.1);
        let offered = if degenerate { (o.0, o.0) } else { ordered(o.0, o.1) };
        let component = signal("s", SignalKind::Information, Direction::In,
            QuantityEnvelope::interval("q", "u", accepted.0, accepted.1));
        let mut ctx = context();
        ctx.offered_signals.push(signal("h", SignalKind::Information, Direction::Out,
            QuantityEnvelope::interval("q", "u", offered.0, offered.1)));
        let findings = match_signal(&component, 0, &ctx);
        let (contained, overlap) = oracle(offered, accepted);
        let exceeded = findings.iter().any(|f| f.code == Code::RangeExceeded);
        prop_assert_eq!(exceeded, !contained);
        if let Some(f) = findings.iter().find(|f| f.code == Code::RangeOverlap) {
            prop_assert!((overlap_of(f) - overlap).abs() <= 1e-9);
        }
    }

    #[test]
    fn environment_containment_matches_oracle(
        t in (-1e3f64..1e3, -1e3f64..1e3),
        e in (-1e3f64..1e3, -1e3f64..1e3),
    ) {
        let tolerated = ordered(t.0, t.1);
        let guaranteed = ordered(e.0, e.1);
        let hw = hw_with(vec![QuantityEnvelope::interval("q", "u", tolerated.0, tolerated.1)], vec![]);
        let mut ctx = context();
        ctx.environment.push(QuantityEnvelope::interval("q", "u", guaranteed.0, guaranteed.1));
        let out = codes(&check_physical_envelope(&hw, &ctx)).contains(&Code::EnvOutOfEnvelope);
        prop_assert_eq!(out, !oracle(guaranteed, tolerated).0);
    }
}
