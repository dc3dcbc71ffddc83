//! Template completeness scoring.

use crate::model::*;

/// Number of model card sections.
pub const MODEL_CARD_SECTIONS: u32 = 9;
/// Number of autonomy interface features.
pub const AUTONOMY_FEATURES: u32 = 14;
/// Number of consideration entries.
pub const CONSIDERATION_ENTRIES: u32 = 7;
/// Hardware template items: the five physical categories and the transport layer.
pub const HARDWARE_ITEMS: u32 = 6;
/// Software template items: properties, operations, events, constraints,
/// packaging and ilities.
pub const SOFTWARE_ITEMS: u32 = 6;

/// Frozen required counts with the template items each one counts.
pub const TEMPLATE_REGISTRY: [(&str, u32, &str); 5] = [
    (
        "model_card",
        MODEL_CARD_SECTIONS,
        "model details, intended use, factors, metrics, evaluation data, training data, \
         quantitative analyses, ethical considerations, caveats and recommendations",
    ),
    (
        "autonomy",
        AUTONOMY_FEATURES,
        "exploration vs exploitation, flexibility, sensitivity, adaptation operations, \
         behaviour events, spatial connectivity, change types, feedback cycles, interactions, \
         noise handling, cooperation trigger, local rules, human rules, verification strategy",
    ),
    (
        "considerations",
        CONSIDERATION_ENTRIES,
        "catastrophic inference, drift of concept, decentralization, optimality trade-off, \
         unintended synergy, unintended competition, deviation from system goals",
    ),
    (
        "hardware",
        HARDWARE_ITEMS,
        "electrical EMC, electrical communication, mechanical, thermal, particulate, transport layer",
    ),
    (
        "software",
        SOFTWARE_ITEMS,
        "properties, operations, events, constraints, packaging and configuration, ilities",
    ),
];

/// `present` of `required` template items, kept as integers so ratios are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub present: u32,
    pub required: u32,
}

impl Ratio {
    pub fn value(self) -> f64 {
        f64::from(self.present) / f64::from(self.required)
    }
}

/// Per-template completeness. `None` marks a template that does not apply to
/// the document.
#[derive(Debug, Clone, PartialEq)]
pub struct CompletenessScore {
    pub model_card: Option<Ratio>,
    pub hardware: Option<Ratio>,
    pub software: Option<Ratio>,
    pub autonomy: Option<Ratio>,
    pub considerations: Option<Ratio>,
    /// Mean of the applicable ratios.
    pub overall: f64,
}

impl CompletenessScore {
    pub fn ratios(&self) -> [(&'static str, Option<Ratio>); 5] {
        [
            ("model_card", self.model_card),
            ("hardware", self.hardware),
            ("software", self.software),
            ("autonomy", self.autonomy),
            ("considerations", self.considerations),
        ]
    }
}

fn count(flags: impl IntoIterator<Item = bool>) -> u32 {
    flags.into_iter().filter(|&f| f).count() as u32
}

pub fn model_card_ratio(card: Option<&ModelCardReport>) -> Ratio {
    let present = card.map_or(0, |card| {
        count(ModelCardSection::ALL.iter().map(|&s| card.is_filled(s)))
    });
    Ratio {
        present,
        required: MODEL_CARD_SECTIONS,
    }
}

pub fn autonomy_ratio(autonomy: Option<&AutonomySpec>) -> Ratio {
    let present = autonomy.map_or(0, |a| count(AutonomyFeature::ALL.iter().map(|&f| a.is_filled(f))));
    Ratio {
        present,
        required: AUTONOMY_FEATURES,
    }
}

/// An entry counts once it has been assessed.
pub fn considerations_ratio(considerations: Option<&ConsiderationsSpec>) -> Ratio {
    let present = considerations.map_or(0, |c| {
        count(c.entries().map(|(_, e)| e.status == RiskStatus::Assessed))
    });
    Ratio {
        present,
        required: CONSIDERATION_ENTRIES,
    }
}

pub fn hardware_ratio(hw: &HardwareInterfaceSpec) -> Ratio {
    let layer = &hw.physical_layer;
    let categories = PhysicalCategory::ALL
        .iter()
        .map(|&c| !layer.inbound.category(c).is_empty() || !layer.outbound.category(c).is_empty());
    let transport = !is_blank(&hw.transport_layer.protocol_name);
    Ratio {
        present: count(categories.chain([transport])),
        required: HARDWARE_ITEMS,
    }
}

pub fn software_ratio(sw: &SoftwareInterfaceSpec) -> Ratio {
    let flags = [
        !sw.properties.is_empty(),
        !sw.operations.is_empty(),
        !sw.events.is_empty(),
        !sw.constraints.is_empty(),
        sw.packaging.as_ref().is_some_and(|p| !is_blank(&p.role)),
        !sw.ilities.is_empty(),
    ];
    Ratio {
        present: count(flags),
        required: SOFTWARE_ITEMS,
    }
}

pub fn score_completeness(doc: &InterfaceDescription) -> CompletenessScore {
    let ai = doc.meta.ai_enabled;
    let model_card = ai.then(|| model_card_ratio(doc.model_card.as_ref()));
    let autonomy = ai.then(|| autonomy_ratio(doc.autonomy.as_ref()));
    let considerations = ai.then(|| considerations_ratio(doc.considerations.as_ref()));
    let hardware = doc.hardware.as_ref().map(hardware_ratio);
    let software = doc.software.as_ref().map(software_ratio);
    let applicable: Vec<f64> = [model_card, hardware, software, autonomy, considerations]
        .into_iter()
        .flatten()
        .map(Ratio::value)
        .collect();
    let overall = if applicable.is_empty() {
        0.0
    } else {
        applicable.iter().sum::<f64>() / applicable.len() as f64
    };
    CompletenessScore {
        model_card,
        hardware,
        software,
        autonomy,
        considerations,
        overall,
    }
}
