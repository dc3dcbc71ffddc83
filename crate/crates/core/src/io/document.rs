//! Document and context file format: readers and canonical writers.
//!
//! Members are written in declaration order. Absent optional sections are
//! written as `null`; on input they may also be omitted.

use chrono::NaiveDate;

use super::canonical::{self, Json, ObjBuilder};
use super::decode::{
    boolean, read_root, real, string, strings, token, uint32, Decoder, ParseDiagnostic, ParseMode, Parsed,
};
use super::json::{Node, NodeKind};
use crate::model::*;

// ---------------------------------------------------------------------------
// Reading

/// Parses a document.
///
/// On success the value is returned with any warnings (unknown fields in lax
/// mode, collapsed duplicate set entries). On failure every diagnostic found
/// is returned, sorted by line, column and path.
pub fn parse_document(
    input: &str,
    mode: ParseMode,
) -> Result<Parsed<InterfaceDescription>, Vec<ParseDiagnostic>> {
    read_root(input, mode, document)
}

/// Parses a host system context.
pub fn parse_context(input: &str, mode: ParseMode) -> Result<Parsed<SystemContext>, Vec<ParseDiagnostic>> {
    read_root(input, mode, context)
}

fn document(d: &mut Decoder, node: &Node, path: &str) -> Option<InterfaceDescription> {
    let f = d.object(
        node,
        path,
        &[
            "meta",
            "signals",
            "hardware",
            "software",
            "model_card",
            "autonomy",
            "considerations",
        ],
    )?;
    let meta = d.req(&f, "meta", meta);
    let signals = d.req(&f, "signals", signals);
    let hardware = d.opt(&f, "hardware", hardware);
    let software = d.opt(&f, "software", software);
    let model_card = d.opt(&f, "model_card", model_card);
    let autonomy = d.opt(&f, "autonomy", autonomy);
    let considerations = d.opt(&f, "considerations", considerations);
    Some(InterfaceDescription {
        meta: meta?,
        signals: signals?,
        hardware: hardware?,
        software: software?,
        model_card: model_card?,
        autonomy: autonomy?,
        considerations: considerations?,
    })
}

fn version(d: &mut Decoder, node: &Node, path: &str) -> Option<Version> {
    token(d, node, path)
}

fn date(d: &mut Decoder, node: &Node, path: &str) -> Option<NaiveDate> {
    let text = string(d, node, path)?;
    let parsed = (text.len() == 10)
        .then(|| NaiveDate::parse_from_str(&text, "%Y-%m-%d").ok())
        .flatten();
    if parsed.is_none() {
        d.error(
            node.pos,
            path,
            format!("'{text}' is not a calendar date of the form YYYY-MM-DD"),
        );
    }
    parsed
}

fn meta(d: &mut Decoder, node: &Node, path: &str) -> Option<DocumentMeta> {
    let f = d.object(
        node,
        path,
        &[
            "component_id",
            "name",
            "version",
            "date",
            "authors",
            "schema_version",
            "ai_enabled",
        ],
    )?;
    let component_id = d.req(&f, "component_id", string);
    let name = d.req(&f, "name", string);
    let version_value = d.req(&f, "version", version);
    let date = d.req(&f, "date", date);
    let authors = d.req(&f, "authors", strings);
    let schema_version = d.req(&f, "schema_version", version);
    let ai_enabled = d.req(&f, "ai_enabled", boolean);
    if let Some(found) = schema_version {
        if !found.readable_by(SCHEMA_VERSION) {
            d.error(
                node.pos,
                &super::decode::child(path, "schema_version"),
                format!("unsupported schema_version {found}; this reader supports {SCHEMA_VERSION}"),
            );
        }
    }
    Some(DocumentMeta {
        component_id: component_id?,
        name: name?,
        version: version_value?,
        date: date?,
        authors: authors?,
        schema_version: schema_version?,
        ai_enabled: ai_enabled?,
    })
}

fn bounds(d: &mut Decoder, node: &Node, path: &str) -> Option<Bounds> {
    let labelled = matches!(&node.kind, NodeKind::Object(m) if m.iter().any(|m| m.key == "labels"));
    if labelled {
        let f = d.object(node, path, &["labels"])?;
        let labels = d.req(&f, "labels", strings);
        Some(Bounds::Labels(labels?))
    } else {
        let f = d.object(node, path, &["min", "max"])?;
        let min = d.req(&f, "min", real);
        let max = d.req(&f, "max", real);
        Some(Bounds::Interval { min: min?, max: max? })
    }
}

fn envelope(d: &mut Decoder, node: &Node, path: &str) -> Option<QuantityEnvelope> {
    let f = d.object(node, path, &["name", "unit", "bounds"])?;
    let name = d.req(&f, "name", string);
    let unit = d.req(&f, "unit", string);
    let bounds = d.req(&f, "bounds", bounds);
    Some(QuantityEnvelope {
        name: name?,
        unit: unit?,
        bounds: bounds?,
    })
}

fn envelopes(d: &mut Decoder, node: &Node, path: &str) -> Option<Vec<QuantityEnvelope>> {
    d.list(node, path, envelope)
}

fn signal(d: &mut Decoder, node: &Node, path: &str) -> Option<SignalSpec> {
    let f = d.object(node, path, &["signal_id", "kind", "direction", "characteristics"])?;
    let signal_id = d.req(&f, "signal_id", string);
    let kind = d.req(&f, "kind", token);
    let direction = d.req(&f, "direction", token);
    let characteristics = d.req(&f, "characteristics", envelopes);
    Some(SignalSpec {
        signal_id: signal_id?,
        kind: kind?,
        direction: direction?,
        characteristics: characteristics?,
    })
}

fn signals(d: &mut Decoder, node: &Node, path: &str) -> Option<Vec<SignalSpec>> {
    d.list(node, path, signal)
}

fn physical_group(d: &mut Decoder, node: &Node, path: &str) -> Option<PhysicalGroup> {
    let names: Vec<&str> = PhysicalCategory::ALL.iter().map(|c| c.as_str()).collect();
    let f = d.object(node, path, &names)?;
    let mut group = PhysicalGroup::default();
    let mut ok = true;
    for &category in PhysicalCategory::ALL {
        match d.req(&f, category.as_str(), envelopes) {
            Some(list) => *group.category_mut(category) = list,
            None => ok = false,
        }
    }
    ok.then_some(group)
}

fn physical_layer(d: &mut Decoder, node: &Node, path: &str) -> Option<PhysicalLayer> {
    let f = d.object(node, path, &["in", "out"])?;
    let inbound = d.req(&f, "in", physical_group);
    let outbound = d.req(&f, "out", physical_group);
    Some(PhysicalLayer {
        inbound: inbound?,
        outbound: outbound?,
    })
}

fn transport_layer(d: &mut Decoder, node: &Node, path: &str) -> Option<TransportLayer> {
    let f = d.object(
        node,
        path,
        &[
            "encoding",
            "protocol_name",
            "protocol_version",
            "mapping_description",
        ],
    )?;
    let encoding = d.req(&f, "encoding", string);
    let protocol_name = d.req(&f, "protocol_name", string);
    let protocol_version = d.req(&f, "protocol_version", string);
    let mapping_description = d.req(&f, "mapping_description", string);
    Some(TransportLayer {
        encoding: encoding?,
        protocol_name: protocol_name?,
        protocol_version: protocol_version?,
        mapping_description: mapping_description?,
    })
}

fn hardware(d: &mut Decoder, node: &Node, path: &str) -> Option<HardwareInterfaceSpec> {
    let f = d.object(node, path, &["physical_layer", "transport_layer"])?;
    let physical = d.req(&f, "physical_layer", physical_layer);
    let transport = d.req(&f, "transport_layer", transport_layer);
    Some(HardwareInterfaceSpec {
        physical_layer: physical?,
        transport_layer: transport?,
    })
}

fn property(d: &mut Decoder, node: &Node, path: &str) -> Option<Property> {
    let f = d.object(node, path, &["name", "visibility", "description"])?;
    let name = d.req(&f, "name", string);
    let visibility = d.req(&f, "visibility", token);
    let description = d.req(&f, "description", string);
    Some(Property {
        name: name?,
        visibility: visibility?,
        description: description?,
    })
}

fn operation(d: &mut Decoder, node: &Node, path: &str) -> Option<Operation> {
    let f = d.object(node, path, &["name", "inputs", "outputs", "description"])?;
    let name = d.req(&f, "name", string);
    let inputs = d.req(&f, "inputs", string);
    let outputs = d.req(&f, "outputs", string);
    let description = d.req(&f, "description", string);
    Some(Operation {
        name: name?,
        inputs: inputs?,
        outputs: outputs?,
        description: description?,
    })
}

fn event(d: &mut Decoder, node: &Node, path: &str) -> Option<Event> {
    let f = d.object(node, path, &["name", "payload", "trigger"])?;
    let name = d.req(&f, "name", string);
    let payload = d.req(&f, "payload", string);
    let trigger = d.req(&f, "trigger", string);
    Some(Event {
        name: name?,
        payload: payload?,
        trigger: trigger?,
    })
}

fn constraints(d: &mut Decoder, node: &Node, path: &str) -> Option<Constraints> {
    let f = d.object(node, path, &["element_constraints", "relationship_constraints"])?;
    let element = d.req(&f, "element_constraints", strings);
    let relationship = d.req(&f, "relationship_constraints", strings);
    Some(Constraints {
        element_constraints: element?,
        relationship_constraints: relationship?,
    })
}

fn packaging(d: &mut Decoder, node: &Node, path: &str) -> Option<Packaging> {
    let f = d.object(node, path, &["role", "supported_contexts"])?;
    let role = d.req(&f, "role", string);
    let contexts = d.req(&f, "supported_contexts", strings);
    Some(Packaging {
        role: role?,
        supported_contexts: contexts?,
    })
}

fn ility(d: &mut Decoder, node: &Node, path: &str) -> Option<Ility> {
    let f = d.object(node, path, &["name", "level", "characterization"])?;
    let name = d.req(&f, "name", string);
    let level = d.req(&f, "level", token);
    let characterization = d.req(&f, "characterization", string);
    Some(Ility {
        name: name?,
        level: level?,
        characterization: characterization?,
    })
}

fn software(d: &mut Decoder, node: &Node, path: &str) -> Option<SoftwareInterfaceSpec> {
    let f = d.object(
        node,
        path,
        &[
            "properties",
            "operations",
            "events",
            "constraints",
            "packaging",
            "ilities",
        ],
    )?;
    let properties = d.req(&f, "properties", |d, n, p| d.list(n, p, property));
    let operations = d.req(&f, "operations", |d, n, p| d.list(n, p, operation));
    let events = d.req(&f, "events", |d, n, p| d.list(n, p, event));
    let constraints = d.req(&f, "constraints", constraints);
    let packaging = d.opt(&f, "packaging", packaging);
    let ilities = d.req(&f, "ilities", |d, n, p| d.list(n, p, ility));
    Some(SoftwareInterfaceSpec {
        properties: properties?,
        operations: operations?,
        events: events?,
        constraints: constraints?,
        packaging: packaging?,
        ilities: ilities?,
    })
}

fn model_details(d: &mut Decoder, node: &Node, path: &str) -> Option<ModelDetails> {
    let f = d.object(node, path, &["date", "version", "model_type", "training_info"])?;
    let date = d.req(&f, "date", string);
    let version = d.req(&f, "version", string);
    let model_type = d.req(&f, "model_type", string);
    let training_info = d.req(&f, "training_info", string);
    Some(ModelDetails {
        date: date?,
        version: version?,
        model_type: model_type?,
        training_info: training_info?,
    })
}

fn metric(d: &mut Decoder, node: &Node, path: &str) -> Option<Metric> {
    let f = d.object(node, path, &["name", "value", "threshold_note"])?;
    let name = d.req(&f, "name", string);
    let value = d.req(&f, "value", real);
    let threshold_note = d.req(&f, "threshold_note", string);
    Some(Metric {
        name: name?,
        value: value?,
        threshold_note: threshold_note?,
    })
}

fn evaluation_data(d: &mut Decoder, node: &Node, path: &str) -> Option<EvaluationData> {
    let f = d.object(node, path, &["datasets", "motivation", "preprocessing"])?;
    let datasets = d.req(&f, "datasets", strings);
    let motivation = d.req(&f, "motivation", string);
    let preprocessing = d.req(&f, "preprocessing", string);
    Some(EvaluationData {
        datasets: datasets?,
        motivation: motivation?,
        preprocessing: preprocessing?,
    })
}

fn quantitative_analyses(d: &mut Decoder, node: &Node, path: &str) -> Option<QuantitativeAnalyses> {
    let f = d.object(node, path, &["unitary", "intersectional"])?;
    let unitary = d.req(&f, "unitary", strings);
    let intersectional = d.req(&f, "intersectional", strings);
    Some(QuantitativeAnalyses {
        unitary: unitary?,
        intersectional: intersectional?,
    })
}

fn model_card(d: &mut Decoder, node: &Node, path: &str) -> Option<ModelCardReport> {
    let names: Vec<&str> = ModelCardSection::ALL.iter().map(|s| s.as_str()).collect();
    let f = d.object(node, path, &names)?;
    let model_details = d.opt(&f, "model_details", model_details);
    let intended_use = d.opt(&f, "intended_use", strings);
    let factors = d.opt(&f, "factors", strings);
    let metrics = d.opt(&f, "metrics", |d, n, p| d.list(n, p, metric));
    let evaluation_data = d.opt(&f, "evaluation_data", evaluation_data);
    let training_data = d.opt(&f, "training_data", string);
    let quantitative_analyses = d.opt(&f, "quantitative_analyses", quantitative_analyses);
    let ethical_considerations = d.opt(&f, "ethical_considerations", string);
    let caveats = d.opt(&f, "caveats", string);
    Some(ModelCardReport {
        model_details: model_details?,
        intended_use: intended_use?,
        factors: factors?,
        metrics: metrics?,
        evaluation_data: evaluation_data?,
        training_data: training_data?,
        quantitative_analyses: quantitative_analyses?,
        ethical_considerations: ethical_considerations?,
        caveats: caveats?,
    })
}

/// Accepts an index 1..=8 or a three-letter token such as `"UUK"`.
fn uncertainty_class(d: &mut Decoder, node: &Node, path: &str) -> Option<UncertaintyClass> {
    let parsed = match &node.kind {
        NodeKind::Number(text) | NodeKind::String(text) => text.parse::<UncertaintyClass>(),
        _ => {
            d.error(
                node.pos,
                path,
                format!(
                    "expected an uncertainty class index or token, found {}",
                    node.type_name()
                ),
            );
            return None;
        }
    };
    match parsed {
        Ok(class) => Some(class),
        Err(message) => {
            d.error(node.pos, path, message);
            None
        }
    }
}

pub(crate) fn uncertainty_set(
    d: &mut Decoder,
    node: &Node,
    path: &str,
) -> Option<std::collections::BTreeSet<UncertaintyClass>> {
    d.set(node, path, uncertainty_class)
}

pub(crate) fn verification_set(
    d: &mut Decoder,
    node: &Node,
    path: &str,
) -> Option<std::collections::BTreeSet<VerificationCategory>> {
    d.set(node, path, token)
}

fn exploration(d: &mut Decoder, node: &Node, path: &str) -> Option<ExplorationExploitation> {
    let f = d.object(node, path, &["mode", "mechanism"])?;
    let mode = d.req(&f, "mode", token);
    let mechanism = d.req(&f, "mechanism", string);
    Some(ExplorationExploitation {
        mode: mode?,
        mechanism: mechanism?,
    })
}

fn feedback_cycle(d: &mut Decoder, node: &Node, path: &str) -> Option<FeedbackCycle> {
    let f = d.object(node, path, &["source", "latency_bound", "purpose"])?;
    let source = d.req(&f, "source", string);
    let latency_bound = d.req(&f, "latency_bound", real);
    let purpose = d.req(&f, "purpose", string);
    Some(FeedbackCycle {
        source: source?,
        latency_bound: latency_bound?,
        purpose: purpose?,
    })
}

fn interaction(d: &mut Decoder, node: &Node, path: &str) -> Option<Interaction> {
    let f = d.object(node, path, &["peer", "filter_transform"])?;
    let peer = d.req(&f, "peer", string);
    let filter_transform = d.req(&f, "filter_transform", string);
    Some(Interaction {
        peer: peer?,
        filter_transform: filter_transform?,
    })
}

fn autonomy(d: &mut Decoder, node: &Node, path: &str) -> Option<AutonomySpec> {
    let names: Vec<&str> = AutonomyFeature::ALL.iter().map(|f| f.as_str()).collect();
    let f = d.object(node, path, &names)?;
    let exploration_exploitation = d.opt(&f, "exploration_exploitation", exploration);
    let flexibility_degree = d.opt(&f, "flexibility_degree", token);
    let sensitivity_level = d.opt(&f, "sensitivity_level", token);
    let adaptation_operations = d.req(&f, "adaptation_operations", string);
    let behavior_events = d.req(&f, "behavior_events", string);
    let spatial_connectivity = d.req(&f, "spatial_connectivity", string);
    let change_types_handled = d.req(&f, "change_types_handled", uncertainty_set);
    let feedback_cycles = d.req(&f, "feedback_cycles", |d, n, p| d.list(n, p, feedback_cycle));
    let interactions = d.req(&f, "interactions", |d, n, p| d.list(n, p, interaction));
    let noise_handling = d.req(&f, "noise_handling", string);
    let cooperation_trigger = d.req(&f, "cooperation_trigger", string);
    let local_interaction_rules = d.req(&f, "local_interaction_rules", string);
    let human_interaction_rules = d.req(&f, "human_interaction_rules", string);
    let verification_strategies = d.req(&f, "verification_strategies", verification_set);
    Some(AutonomySpec {
        exploration_exploitation: exploration_exploitation?,
        flexibility_degree: flexibility_degree?,
        sensitivity_level: sensitivity_level?,
        adaptation_operations: adaptation_operations?,
        behavior_events: behavior_events?,
        spatial_connectivity: spatial_connectivity?,
        change_types_handled: change_types_handled?,
        feedback_cycles: feedback_cycles?,
        interactions: interactions?,
        noise_handling: noise_handling?,
        cooperation_trigger: cooperation_trigger?,
        local_interaction_rules: local_interaction_rules?,
        human_interaction_rules: human_interaction_rules?,
        verification_strategies: verification_strategies?,
    })
}

fn risk_entry(d: &mut Decoder, node: &Node, path: &str) -> Option<RiskEntry> {
    let f = d.object(node, path, &["status", "likelihood", "mitigation"])?;
    let status = d.req(&f, "status", token);
    let likelihood = d.req(&f, "likelihood", token);
    let mitigation = d.req(&f, "mitigation", string);
    Some(RiskEntry {
        status: status?,
        likelihood: likelihood?,
        mitigation: mitigation?,
    })
}

fn considerations(d: &mut Decoder, node: &Node, path: &str) -> Option<ConsiderationsSpec> {
    let names: Vec<&str> = ConsiderationKind::ALL.iter().map(|k| k.as_str()).collect();
    let f = d.object(node, path, &names)?;
    let mut spec = ConsiderationsSpec::unassessed();
    let mut ok = true;
    for &kind in ConsiderationKind::ALL {
        match d.req(&f, kind.as_str(), risk_entry) {
            Some(entry) => *spec.entry_mut(kind) = entry,
            None => ok = false,
        }
    }
    ok.then_some(spec)
}

fn transport_ref(d: &mut Decoder, node: &Node, path: &str) -> Option<TransportRef> {
    let f = d.object(node, path, &["protocol_name", "protocol_version"])?;
    let protocol_name = d.req(&f, "protocol_name", string);
    let protocol_version = d.req(&f, "protocol_version", string);
    Some(TransportRef {
        protocol_name: protocol_name?,
        protocol_version: protocol_version?,
    })
}

fn required_ility(d: &mut Decoder, node: &Node, path: &str) -> Option<RequiredIlity> {
    let f = d.object(node, path, &["name", "minimum_level"])?;
    let name = d.req(&f, "name", string);
    let minimum_level = d.req(&f, "minimum_level", token);
    Some(RequiredIlity {
        name: name?,
        minimum_level: minimum_level?,
    })
}

fn context(d: &mut Decoder, node: &Node, path: &str) -> Option<SystemContext> {
    let f = d.object(
        node,
        path,
        &[
            "context_id",
            "offered_signals",
            "accepted_signals",
            "environment",
            "available_transports",
            "change_profile",
            "required_ilities",
            "required_verification",
            "requires_online_adaptation",
            "peer_interface_count",
            "human_interaction_expected",
        ],
    )?;
    let context_id = d.req(&f, "context_id", string);
    let offered_signals = d.req(&f, "offered_signals", signals);
    let accepted_signals = d.req(&f, "accepted_signals", signals);
    let environment = d.req(&f, "environment", envelopes);
    let available_transports = d.req(&f, "available_transports", |d, n, p| d.list(n, p, transport_ref));
    let change_profile = d.req(&f, "change_profile", uncertainty_set);
    let required_ilities = d.req(&f, "required_ilities", |d, n, p| d.list(n, p, required_ility));
    let required_verification = d.req(&f, "required_verification", verification_set);
    let requires_online_adaptation = d.req(&f, "requires_online_adaptation", boolean);
    let peer_interface_count = d.req(&f, "peer_interface_count", uint32);
    let human_interaction_expected = d.req(&f, "human_interaction_expected", boolean);
    Some(SystemContext {
        context_id: context_id?,
        offered_signals: offered_signals?,
        accepted_signals: accepted_signals?,
        environment: environment?,
        available_transports: available_transports?,
        change_profile: change_profile?,
        required_ilities: required_ilities?,
        required_verification: required_verification?,
        requires_online_adaptation: requires_online_adaptation?,
        peer_interface_count: peer_interface_count?,
        human_interaction_expected: human_interaction_expected?,
    })
}

// ---------------------------------------------------------------------------
// Writing

/// Canonical text of a document.
pub fn serialize_document(doc: &InterfaceDescription) -> String {
    canonical::to_text(&document_json(doc))
}

/// Canonical text of a host system context.
pub fn serialize_context(ctx: &SystemContext) -> String {
    canonical::to_text(&context_json(ctx))
}

pub(crate) fn document_json(doc: &InterfaceDescription) -> Json {
    ObjBuilder::new()
        .field("meta", meta_json(&doc.meta))
        .field(
            "signals",
            Json::Arr(doc.signals.iter().map(signal_json).collect()),
        )
        .field("hardware", Json::opt(doc.hardware.as_ref(), hardware_json))
        .field("software", Json::opt(doc.software.as_ref(), software_json))
        .field("model_card", Json::opt(doc.model_card.as_ref(), model_card_json))
        .field("autonomy", Json::opt(doc.autonomy.as_ref(), autonomy_json))
        .field(
            "considerations",
            Json::opt(doc.considerations.as_ref(), considerations_json),
        )
        .build()
}

fn meta_json(meta: &DocumentMeta) -> Json {
    ObjBuilder::new()
        .field("component_id", Json::str(&meta.component_id))
        .field("name", Json::str(&meta.name))
        .field("version", Json::str(meta.version.to_string()))
        .field("date", Json::str(meta.date.format("%Y-%m-%d").to_string()))
        .field("authors", Json::strings(&meta.authors))
        .field("schema_version", Json::str(meta.schema_version.to_string()))
        .field("ai_enabled", Json::Bool(meta.ai_enabled))
        .build()
}

pub(crate) fn bounds_json(bounds: &Bounds) -> Json {
    match bounds {
        Bounds::Interval { min, max } => ObjBuilder::new()
            .field("min", Json::Real(*min))
            .field("max", Json::Real(*max))
            .build(),
        Bounds::Labels(labels) => ObjBuilder::new().field("labels", Json::strings(labels)).build(),
    }
}

fn envelope_json(envelope: &QuantityEnvelope) -> Json {
    ObjBuilder::new()
        .field("name", Json::str(&envelope.name))
        .field("unit", Json::str(&envelope.unit))
        .field("bounds", bounds_json(&envelope.bounds))
        .build()
}

fn envelopes_json(list: &[QuantityEnvelope]) -> Json {
    Json::Arr(list.iter().map(envelope_json).collect())
}

fn signal_json(signal: &SignalSpec) -> Json {
    ObjBuilder::new()
        .field("signal_id", Json::str(&signal.signal_id))
        .field("kind", Json::str(signal.kind.to_string()))
        .field("direction", Json::str(signal.direction.as_str()))
        .field("characteristics", envelopes_json(&signal.characteristics))
        .build()
}

fn physical_group_json(group: &PhysicalGroup) -> Json {
    PhysicalCategory::ALL
        .iter()
        .fold(ObjBuilder::new(), |b, &category| {
            b.field(category.as_str(), envelopes_json(group.category(category)))
        })
        .build()
}

fn hardware_json(hw: &HardwareInterfaceSpec) -> Json {
    let physical = ObjBuilder::new()
        .field("in", physical_group_json(&hw.physical_layer.inbound))
        .field("out", physical_group_json(&hw.physical_layer.outbound))
        .build();
    let transport = &hw.transport_layer;
    let transport = ObjBuilder::new()
        .field("encoding", Json::str(&transport.encoding))
        .field("protocol_name", Json::str(&transport.protocol_name))
        .field("protocol_version", Json::str(&transport.protocol_version))
        .field("mapping_description", Json::str(&transport.mapping_description))
        .build();
    ObjBuilder::new()
        .field("physical_layer", physical)
        .field("transport_layer", transport)
        .build()
}

fn software_json(sw: &SoftwareInterfaceSpec) -> Json {
    let properties = sw
        .properties
        .iter()
        .map(|p| {
            ObjBuilder::new()
                .field("name", Json::str(&p.name))
                .field("visibility", Json::str(p.visibility.as_str()))
                .field("description", Json::str(&p.description))
                .build()
        })
        .collect();
    let operations = sw
        .operations
        .iter()
        .map(|o| {
            ObjBuilder::new()
                .field("name", Json::str(&o.name))
                .field("inputs", Json::str(&o.inputs))
                .field("outputs", Json::str(&o.outputs))
                .field("description", Json::str(&o.description))
                .build()
        })
        .collect();
    let events = sw
        .events
        .iter()
        .map(|e| {
            ObjBuilder::new()
                .field("name", Json::str(&e.name))
                .field("payload", Json::str(&e.payload))
                .field("trigger", Json::str(&e.trigger))
                .build()
        })
        .collect();
    let constraints = ObjBuilder::new()
        .field(
            "element_constraints",
            Json::strings(&sw.constraints.element_constraints),
        )
        .field(
            "relationship_constraints",
            Json::strings(&sw.constraints.relationship_constraints),
        )
        .build();
    let packaging = Json::opt(sw.packaging.as_ref(), |p| {
        ObjBuilder::new()
            .field("role", Json::str(&p.role))
            .field("supported_contexts", Json::strings(&p.supported_contexts))
            .build()
    });
    let ilities = sw
        .ilities
        .iter()
        .map(|i| {
            ObjBuilder::new()
                .field("name", Json::str(&i.name))
                .field("level", Json::str(i.level.as_str()))
                .field("characterization", Json::str(&i.characterization))
                .build()
        })
        .collect();
    ObjBuilder::new()
        .field("properties", Json::Arr(properties))
        .field("operations", Json::Arr(operations))
        .field("events", Json::Arr(events))
        .field("constraints", constraints)
        .field("packaging", packaging)
        .field("ilities", Json::Arr(ilities))
        .build()
}

fn model_card_json(card: &ModelCardReport) -> Json {
    let details = Json::opt(card.model_details.as_ref(), |d| {
        ObjBuilder::new()
            .field("date", Json::str(&d.date))
            .field("version", Json::str(&d.version))
            .field("model_type", Json::str(&d.model_type))
            .field("training_info", Json::str(&d.training_info))
            .build()
    });
    let metrics = Json::opt(card.metrics.as_ref(), |metrics: &Vec<Metric>| {
        Json::Arr(
            metrics
                .iter()
                .map(|m| {
                    ObjBuilder::new()
                        .field("name", Json::str(&m.name))
                        .field("value", Json::Real(m.value))
                        .field("threshold_note", Json::str(&m.threshold_note))
                        .build()
                })
                .collect(),
        )
    });
    let evaluation = Json::opt(card.evaluation_data.as_ref(), |e| {
        ObjBuilder::new()
            .field("datasets", Json::strings(&e.datasets))
            .field("motivation", Json::str(&e.motivation))
            .field("preprocessing", Json::str(&e.preprocessing))
            .build()
    });
    let analyses = Json::opt(card.quantitative_analyses.as_ref(), |q| {
        ObjBuilder::new()
            .field("unitary", Json::strings(&q.unitary))
            .field("intersectional", Json::strings(&q.intersectional))
            .build()
    });
    let text = |t: &String| Json::str(t);
    let list = |l: &Vec<String>| Json::strings(l);
    ObjBuilder::new()
        .field("model_details", details)
        .field("intended_use", Json::opt(card.intended_use.as_ref(), list))
        .field("factors", Json::opt(card.factors.as_ref(), list))
        .field("metrics", metrics)
        .field("evaluation_data", evaluation)
        .field("training_data", Json::opt(card.training_data.as_ref(), text))
        .field("quantitative_analyses", analyses)
        .field(
            "ethical_considerations",
            Json::opt(card.ethical_considerations.as_ref(), text),
        )
        .field("caveats", Json::opt(card.caveats.as_ref(), text))
        .build()
}

pub(crate) fn uncertainty_set_json<'a>(set: impl IntoIterator<Item = &'a UncertaintyClass>) -> Json {
    Json::Arr(set.into_iter().map(|c| Json::Int(i64::from(c.index()))).collect())
}

pub(crate) fn verification_set_json<'a>(set: impl IntoIterator<Item = &'a VerificationCategory>) -> Json {
    Json::Arr(set.into_iter().map(|c| Json::str(c.as_str())).collect())
}

fn autonomy_json(a: &AutonomySpec) -> Json {
    let exploration = Json::opt(a.exploration_exploitation.as_ref(), |e| {
        ObjBuilder::new()
            .field("mode", Json::str(e.mode.as_str()))
            .field("mechanism", Json::str(&e.mechanism))
            .build()
    });
    let feedback = a
        .feedback_cycles
        .iter()
        .map(|c| {
            ObjBuilder::new()
                .field("source", Json::str(&c.source))
                .field("latency_bound", Json::Real(c.latency_bound))
                .field("purpose", Json::str(&c.purpose))
                .build()
        })
        .collect();
    let interactions = a
        .interactions
        .iter()
        .map(|i| {
            ObjBuilder::new()
                .field("peer", Json::str(&i.peer))
                .field("filter_transform", Json::str(&i.filter_transform))
                .build()
        })
        .collect();
    ObjBuilder::new()
        .field("exploration_exploitation", exploration)
        .field(
            "flexibility_degree",
            Json::opt(a.flexibility_degree.as_ref(), |l| Json::str(l.as_str())),
        )
        .field(
            "sensitivity_level",
            Json::opt(a.sensitivity_level.as_ref(), |s| Json::str(s.as_str())),
        )
        .field("adaptation_operations", Json::str(&a.adaptation_operations))
        .field("behavior_events", Json::str(&a.behavior_events))
        .field("spatial_connectivity", Json::str(&a.spatial_connectivity))
        .field(
            "change_types_handled",
            uncertainty_set_json(&a.change_types_handled),
        )
        .field("feedback_cycles", Json::Arr(feedback))
        .field("interactions", Json::Arr(interactions))
        .field("noise_handling", Json::str(&a.noise_handling))
        .field("cooperation_trigger", Json::str(&a.cooperation_trigger))
        .field("local_interaction_rules", Json::str(&a.local_interaction_rules))
        .field("human_interaction_rules", Json::str(&a.human_interaction_rules))
        .field(
            "verification_strategies",
            verification_set_json(&a.verification_strategies),
        )
        .build()
}

fn considerations_json(c: &ConsiderationsSpec) -> Json {
    c.entries()
        .fold(ObjBuilder::new(), |b, (kind, entry)| {
            b.field(
                kind.as_str(),
                ObjBuilder::new()
                    .field("status", Json::str(entry.status.as_str()))
                    .field("likelihood", Json::str(entry.likelihood.as_str()))
                    .field("mitigation", Json::str(&entry.mitigation))
                    .build(),
            )
        })
        .build()
}

pub(crate) fn context_json(ctx: &SystemContext) -> Json {
    let transports = ctx
        .available_transports
        .iter()
        .map(|t| {
            ObjBuilder::new()
                .field("protocol_name", Json::str(&t.protocol_name))
                .field("protocol_version", Json::str(&t.protocol_version))
                .build()
        })
        .collect();
    let ilities = ctx
        .required_ilities
        .iter()
        .map(|r| {
            ObjBuilder::new()
                .field("name", Json::str(&r.name))
                .field("minimum_level", Json::str(r.minimum_level.as_str()))
                .build()
        })
        .collect();
    ObjBuilder::new()
        .field("context_id", Json::str(&ctx.context_id))
        .field(
            "offered_signals",
            Json::Arr(ctx.offered_signals.iter().map(signal_json).collect()),
        )
        .field(
            "accepted_signals",
            Json::Arr(ctx.accepted_signals.iter().map(signal_json).collect()),
        )
        .field("environment", envelopes_json(&ctx.environment))
        .field("available_transports", Json::Arr(transports))
        .field("change_profile", uncertainty_set_json(&ctx.change_profile))
        .field("required_ilities", Json::Arr(ilities))
        .field(
            "required_verification",
            verification_set_json(&ctx.required_verification),
        )
        .field(
            "requires_online_adaptation",
            Json::Bool(ctx.requires_online_adaptation),
        )
        .field(
            "peer_interface_count",
            Json::Int(i64::from(ctx.peer_interface_count)),
        )
        .field(
            "human_interaction_expected",
            Json::Bool(ctx.human_interaction_expected),
        )
        .build()
}
