use crate::findings::{Code, Dimension, Finding};
use crate::model::{
    covers_uncertainty, is_blank, AutonomySpec, ConsiderationsSpec, Likelihood, RiskStatus, SystemContext,
};

/// Change classes the host may exhibit that the component's handled set does
/// not cover, with the covered fraction of the demanded profile.
pub fn score_change_coverage(autonomy: &AutonomySpec, context: &SystemContext) -> (f64, Vec<Finding>) {
    let mut findings = Vec::new();
    let mut covered = 0usize;
    for (i, &demanded) in context.change_profile.iter().enumerate() {
        if covers_uncertainty(&autonomy.change_types_handled, demanded) {
            covered += 1;
        } else {
            findings.push(Finding::new(
                Code::ChangeClassUncovered,
                Dimension::Autonomy,
                format!("context.change_profile[{i}]"),
                format!("{demanded} is not covered by any handled class"),
            ));
        }
    }
    let demanded = context.change_profile.len();
    let score = if demanded == 0 {
        1.0
    } else {
        covered as f64 / demanded as f64
    };
    (score, findings)
}

pub fn check_change_coverage(autonomy: &AutonomySpec, context: &SystemContext) -> Vec<Finding> {
    score_change_coverage(autonomy, context).1
}

pub fn assess_autonomy_risks(
    considerations: &ConsiderationsSpec,
    autonomy: &AutonomySpec,
    context: &SystemContext,
) -> Vec<Finding> {
    let mut out = Vec::new();
    let peers = context.peer_interface_count;

    // An adaptive component may keep operating on stale assumptions when the
    // host changes in ways nobody fully knows in advance.
    let unknown_change = context.change_profile.iter().any(|c| c.unknown_count() > 0);
    if unknown_change && considerations.drift_of_concept.status == RiskStatus::NotAssessed {
        out.push(Finding::new(
            Code::DriftUnassessed,
            Dimension::Consideration,
            "considerations.drift_of_concept.status",
            "the host change profile has unknown dimensions but drift of concept is not assessed",
        ));
    }

    // Learning online can overwrite earlier knowledge.
    let catastrophic = &considerations.catastrophic_inference;
    if context.requires_online_adaptation
        && catastrophic.likelihood == Likelihood::High
        && is_blank(&catastrophic.mitigation)
    {
        out.push(Finding::new(
            Code::CatastrophicInferenceUnmitigated,
            Dimension::Consideration,
            "considerations.catastrophic_inference.mitigation",
            "the host requires online adaptation and catastrophic inference is High with no mitigation",
        ));
    }

    let declared = autonomy.interactions.len();
    if peers as usize > declared {
        out.push(Finding::new(
            Code::CooperationInterfacesInsufficient,
            Dimension::Autonomy,
            "autonomy.interactions",
            format!(
                "the host has {peers} peer interfaces but the component declares {declared} interactions"
            ),
        ));
    }

    if context.human_interaction_expected && is_blank(&autonomy.human_interaction_rules) {
        out.push(Finding::new(
            Code::HumanRulesMissing,
            Dimension::Autonomy,
            "autonomy.human_interaction_rules",
            "the host expects human interaction but no rules are declared",
        ));
    }

    if considerations.decentralization.likelihood == Likelihood::High && peers >= 2 {
        out.push(Finding::new(
            Code::DecentralizationComplexity,
            Dimension::Consideration,
            "considerations.decentralization.likelihood",
            format!("decentralization risk is High with {peers} peers"),
        ));
    }

    if considerations.goal_deviation.status == RiskStatus::NotAssessed && peers >= 1 {
        out.push(Finding::new(
            Code::GoalDeviationUnassessed,
            Dimension::Consideration,
            "considerations.goal_deviation.status",
            format!("goal deviation is not assessed while the host has {peers} peers"),
        ));
    }
    out
}

pub fn score_verification_coverage(autonomy: &AutonomySpec, context: &SystemContext) -> (f64, Vec<Finding>) {
    let mut findings = Vec::new();
    let mut present = 0usize;
    for (i, &required) in context.required_verification.iter().enumerate() {
        if autonomy.verification_strategies.contains(&required) {
            present += 1;
        } else {
            findings.push(Finding::new(
                Code::VerificationGap,
                Dimension::Verification,
                format!("context.required_verification[{i}]"),
                format!("required verification category {required} is not declared"),
            ));
        }
    }
    let required = context.required_verification.len();
    let score = if required == 0 {
        1.0
    } else {
        present as f64 / required as f64
    };
    (score, findings)
}

pub(crate) fn sensitivity_note(autonomy: &AutonomySpec) -> Option<Finding> {
    autonomy.sensitivity_level.map(|level| {
        Finding::new(
            Code::SensitivityLevelReported,
            Dimension::Autonomy,
            "autonomy.sensitivity_level",
            format!("declared sensitivity to prior is {level}"),
        )
    })
}
