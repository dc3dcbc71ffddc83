use std::collections::BTreeSet;

use super::{is_blank, Level, Sensitivity, UncertaintyClass};

token_enum! {
    pub enum ExplorationMode {
        ExplorationDominant => "ExplorationDominant",
        ExploitationDominant => "ExploitationDominant",
        Balanced => "Balanced",
        Scheduled => "Scheduled",
    }
}

/// How the component trades exploring new information against exploiting
/// what it learned from training data.
#[derive(Debug, Clone, PartialEq)]
pub struct ExplorationExploitation {
    pub mode: ExplorationMode,
    pub mechanism: String,
}

/// A feedback loop the component relies on to adapt.
#[derive(Debug, Clone, PartialEq)]
pub struct FeedbackCycle {
    pub source: String,
    /// Upper bound on loop latency, seconds.
    pub latency_bound: f64,
    pub purpose: String,
}

/// An internal interface to another part of the system and how that peer
/// filters or transforms the environment before it reaches the component.
#[derive(Debug, Clone, PartialEq)]
pub struct Interaction {
    pub peer: String,
    pub filter_transform: String,
}

token_enum! {
    pub enum VerificationCategory {
        AbstractabilityGenerality => "AbstractabilityGenerality",
        MaintainabilityChangeabilityRobustness => "MaintainabilityChangeabilityRobustness",
        AgentBasedSimulation => "AgentBasedSimulation",
        CooperationTestCases => "CooperationTestCases",
    }
}

token_enum! {
    /// The fourteen autonomy features scored for completeness.
    pub enum AutonomyFeature {
        ExplorationExploitation => "exploration_exploitation",
        FlexibilityDegree => "flexibility_degree",
        SensitivityLevel => "sensitivity_level",
        AdaptationOperations => "adaptation_operations",
        BehaviorEvents => "behavior_events",
        SpatialConnectivity => "spatial_connectivity",
        ChangeTypesHandled => "change_types_handled",
        FeedbackCycles => "feedback_cycles",
        Interactions => "interactions",
        NoiseHandling => "noise_handling",
        CooperationTrigger => "cooperation_trigger",
        LocalInteractionRules => "local_interaction_rules",
        HumanInteractionRules => "human_interaction_rules",
        VerificationStrategies => "verification_strategies",
    }
}

/// Autonomy-specific interface description of an AI-enabled component.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AutonomySpec {
    pub exploration_exploitation: Option<ExplorationExploitation>,
    pub flexibility_degree: Option<Level>,
    pub sensitivity_level: Option<Sensitivity>,
    /// How the component uses new information received through its interfaces.
    pub adaptation_operations: String,
    /// What behaviour the component generates for other components to respond to.
    pub behavior_events: String,
    pub spatial_connectivity: String,
    pub change_types_handled: BTreeSet<UncertaintyClass>,
    pub feedback_cycles: Vec<FeedbackCycle>,
    pub interactions: Vec<Interaction>,
    pub noise_handling: String,
    pub cooperation_trigger: String,
    pub local_interaction_rules: String,
    pub human_interaction_rules: String,
    pub verification_strategies: BTreeSet<VerificationCategory>,
}

impl AutonomySpec {
    pub fn is_filled(&self, feature: AutonomyFeature) -> bool {
        use AutonomyFeature as F;
        match feature {
            F::ExplorationExploitation => self
                .exploration_exploitation
                .as_ref()
                .is_some_and(|e| !is_blank(&e.mechanism)),
            F::FlexibilityDegree => self.flexibility_degree.is_some(),
            F::SensitivityLevel => self.sensitivity_level.is_some(),
            F::AdaptationOperations => !is_blank(&self.adaptation_operations),
            F::BehaviorEvents => !is_blank(&self.behavior_events),
            F::SpatialConnectivity => !is_blank(&self.spatial_connectivity),
            F::ChangeTypesHandled => !self.change_types_handled.is_empty(),
            F::FeedbackCycles => !self.feedback_cycles.is_empty(),
            F::Interactions => !self.interactions.is_empty(),
            F::NoiseHandling => !is_blank(&self.noise_handling),
            F::CooperationTrigger => !is_blank(&self.cooperation_trigger),
            F::LocalInteractionRules => !is_blank(&self.local_interaction_rules),
            F::HumanInteractionRules => !is_blank(&self.human_interaction_rules),
            F::VerificationStrategies => !self.verification_strategies.is_empty(),
        }
    }
}
