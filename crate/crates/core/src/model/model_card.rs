//! Model card report carried by AI-enabled components.
//!
//! Each of the nine sections is independently optional so that a document
//! can record which parts of the report were actually provided.

use super::is_blank;

token_enum! {
    /// The nine top-level model card sections, in report order.
    pub enum ModelCardSection {
        ModelDetails => "model_details",
        IntendedUse => "intended_use",
        Factors => "factors",
        Metrics => "metrics",
        EvaluationData => "evaluation_data",
        TrainingData => "training_data",
        QuantitativeAnalyses => "quantitative_analyses",
        EthicalConsiderations => "ethical_considerations",
        Caveats => "caveats",
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ModelDetails {
    pub date: String,
    pub version: String,
    pub model_type: String,
    pub training_info: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Metric {
    pub name: String,
    pub value: f64,
    pub threshold_note: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EvaluationData {
    pub datasets: Vec<String>,
    pub motivation: String,
    pub preprocessing: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct QuantitativeAnalyses {
    pub unitary: Vec<String>,
    pub intersectional: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ModelCardReport {
    pub model_details: Option<ModelDetails>,
    pub intended_use: Option<Vec<String>>,
    pub factors: Option<Vec<String>>,
    pub metrics: Option<Vec<Metric>>,
    pub evaluation_data: Option<EvaluationData>,
    pub training_data: Option<String>,
    pub quantitative_analyses: Option<QuantitativeAnalyses>,
    pub ethical_considerations: Option<String>,
    pub caveats: Option<String>,
}

fn any_text(items: &[String]) -> bool {
    items.iter().any(|t| !is_blank(t))
}

impl ModelCardReport {
    /// Whether a section is present and carries at least one non-placeholder value.
    pub fn is_filled(&self, section: ModelCardSection) -> bool {
        match section {
            ModelCardSection::ModelDetails => self.model_details.as_ref().is_some_and(|d| {
                [&d.date, &d.version, &d.model_type, &d.training_info]
                    .iter()
                    .any(|t| !is_blank(t))
            }),
            ModelCardSection::IntendedUse => self.intended_use.as_deref().is_some_and(any_text),
            ModelCardSection::Factors => self.factors.as_deref().is_some_and(any_text),
            ModelCardSection::Metrics => self
                .metrics
                .as_ref()
                .is_some_and(|m| m.iter().any(|metric| !is_blank(&metric.name))),
            ModelCardSection::EvaluationData => self.evaluation_data.as_ref().is_some_and(|e| {
                any_text(&e.datasets) || !is_blank(&e.motivation) || !is_blank(&e.preprocessing)
            }),
            ModelCardSection::TrainingData => self.training_data.as_deref().is_some_and(|t| !is_blank(t)),
            ModelCardSection::QuantitativeAnalyses => self
                .quantitative_analyses
                .as_ref()
                .is_some_and(|q| any_text(&q.unitary) || any_text(&q.intersectional)),
            ModelCardSection::EthicalConsiderations => self
                .ethical_considerations
                .as_deref()
                .is_some_and(|t| !is_blank(t)),
            ModelCardSection::Caveats => self.caveats.as_deref().is_some_and(|t| !is_blank(t)),
        }
    }

    /// Removes one section, leaving the others untouched.
    pub fn clear(&mut self, section: ModelCardSection) {
        match section {
            ModelCardSection::ModelDetails => self.model_details = None,
            ModelCardSection::IntendedUse => self.intended_use = None,
            ModelCardSection::Factors => self.factors = None,
            ModelCardSection::Metrics => self.metrics = None,
            ModelCardSection::EvaluationData => self.evaluation_data = None,
            ModelCardSection::TrainingData => self.training_data = None,
            ModelCardSection::QuantitativeAnalyses => self.quantitative_analyses = None,
            ModelCardSection::EthicalConsiderations => self.ethical_considerations = None,
            ModelCardSection::Caveats => self.caveats = None,
        }
    }
}
