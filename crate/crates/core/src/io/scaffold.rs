//! Skeleton documents for the three component kinds.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use chrono::NaiveDate;

use crate::model::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemplateKind {
    Hw,
    Sw,
    Ai,
}

impl fmt::Display for TemplateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TemplateKind::Hw => "hw",
            TemplateKind::Sw => "sw",
            TemplateKind::Ai => "ai",
        })
    }
}

impl FromStr for TemplateKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hw" => Ok(TemplateKind::Hw),
            "sw" => Ok(TemplateKind::Sw),
            "ai" => Ok(TemplateKind::Ai),
            _ => Err(format!("'{s}' is not one of hw, sw, ai")),
        }
    }
}

fn tbd() -> String {
    PLACEHOLDER.to_string()
}

fn hardware_skeleton() -> HardwareInterfaceSpec {
    HardwareInterfaceSpec {
        physical_layer: PhysicalLayer::default(),
        transport_layer: TransportLayer {
            encoding: tbd(),
            protocol_name: tbd(),
            protocol_version: tbd(),
            mapping_description: tbd(),
        },
    }
}

fn software_skeleton() -> SoftwareInterfaceSpec {
    SoftwareInterfaceSpec {
        properties: vec![Property {
            name: tbd(),
            visibility: Visibility::Observable,
            description: tbd(),
        }],
        operations: vec![Operation {
            name: tbd(),
            inputs: tbd(),
            outputs: tbd(),
            description: tbd(),
        }],
        events: vec![Event {
            name: tbd(),
            payload: tbd(),
            trigger: tbd(),
        }],
        constraints: Constraints {
            element_constraints: vec![tbd()],
            relationship_constraints: vec![tbd()],
        },
        packaging: Some(Packaging {
            role: tbd(),
            supported_contexts: vec![tbd()],
        }),
        ilities: vec![Ility {
            name: tbd(),
            level: Level::None,
            characterization: tbd(),
        }],
    }
}

fn model_card_skeleton() -> ModelCardReport {
    ModelCardReport {
        model_details: Some(ModelDetails {
            date: tbd(),
            version: tbd(),
            model_type: tbd(),
            training_info: tbd(),
        }),
        intended_use: Some(vec![tbd()]),
        factors: Some(vec![tbd()]),
        metrics: Some(vec![Metric {
            name: tbd(),
            value: 0.0,
            threshold_note: tbd(),
        }]),
        evaluation_data: Some(EvaluationData {
            datasets: vec![tbd()],
            motivation: tbd(),
            preprocessing: tbd(),
        }),
        training_data: Some(tbd()),
        quantitative_analyses: Some(QuantitativeAnalyses {
            unitary: vec![tbd()],
            intersectional: vec![tbd()],
        }),
        ethical_considerations: Some(tbd()),
        caveats: Some(tbd()),
    }
}

fn autonomy_skeleton() -> AutonomySpec {
    AutonomySpec {
        exploration_exploitation: Some(ExplorationExploitation {
            mode: ExplorationMode::Balanced,
            mechanism: tbd(),
        }),
        flexibility_degree: None,
        sensitivity_level: None,
        adaptation_operations: tbd(),
        behavior_events: tbd(),
        spatial_connectivity: tbd(),
        change_types_handled: BTreeSet::from([UncertaintyClass::ALL[0]]),
        feedback_cycles: Vec::new(),
        interactions: Vec::new(),
        noise_handling: tbd(),
        cooperation_trigger: tbd(),
        local_interaction_rules: tbd(),
        human_interaction_rules: tbd(),
        verification_strategies: BTreeSet::new(),
    }
}

/// Skeleton document for a component kind. Every free-text field holds the
/// `TBD` placeholder; the date is fixed so output is reproducible.
pub fn scaffold_template(kind: TemplateKind) -> InterfaceDescription {
    let signal_kind = match kind {
        TemplateKind::Hw => SignalKind::Energy(EnergyKind::Electrical),
        TemplateKind::Sw | TemplateKind::Ai => SignalKind::Information,
    };
    let ai = kind == TemplateKind::Ai;
    InterfaceDescription {
        meta: DocumentMeta {
            component_id: tbd(),
            name: tbd(),
            version: Version::new(0, 1, 0),
            date: NaiveDate::from_ymd_opt(1970, 1, 1).expect("valid date"),
            authors: vec![tbd()],
            schema_version: SCHEMA_VERSION,
            ai_enabled: ai,
        },
        signals: vec![SignalSpec {
            signal_id: "signal-1".to_string(),
            kind: signal_kind,
            direction: Direction::In,
            characteristics: vec![QuantityEnvelope::interval(tbd(), tbd(), 0.0, 0.0)],
        }],
        hardware: matches!(kind, TemplateKind::Hw | TemplateKind::Ai).then(hardware_skeleton),
        software: matches!(kind, TemplateKind::Sw | TemplateKind::Ai).then(software_skeleton),
        model_card: ai.then(model_card_skeleton),
        autonomy: ai.then(autonomy_skeleton),
        considerations: ai.then(ConsiderationsSpec::unassessed),
    }
}
