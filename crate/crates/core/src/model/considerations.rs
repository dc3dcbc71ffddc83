token_enum! {
    pub enum RiskStatus {
        Assessed => "Assessed",
        NotAssessed => "NotAssessed",
    }
}

token_enum! {
    pub enum Likelihood {
        Low => "Low",
        Medium => "Medium",
        High => "High",
        Unknown => "Unknown",
    }
}

token_enum! {
    /// Edge scenarios an AI-enabled component must be assessed against.
    pub enum ConsiderationKind {
        CatastrophicInference => "catastrophic_inference",
        DriftOfConcept => "drift_of_concept",
        Decentralization => "decentralization",
        OptimalityTradeoff => "optimality_tradeoff",
        UnintendedSynergy => "unintended_synergy",
        UnintendedCompetition => "unintended_competition",
        GoalDeviation => "goal_deviation",
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RiskEntry {
    pub status: RiskStatus,
    pub likelihood: Likelihood,
    pub mitigation: String,
}

impl RiskEntry {
    pub fn not_assessed() -> Self {
        RiskEntry {
            status: RiskStatus::NotAssessed,
            likelihood: Likelihood::Unknown,
            mitigation: String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConsiderationsSpec {
    pub catastrophic_inference: RiskEntry,
    pub drift_of_concept: RiskEntry,
    pub decentralization: RiskEntry,
    pub optimality_tradeoff: RiskEntry,
    pub unintended_synergy: RiskEntry,
    pub unintended_competition: RiskEntry,
    pub goal_deviation: RiskEntry,
}

impl ConsiderationsSpec {
    /// All seven entries set to not-assessed with unknown likelihood.
    pub fn unassessed() -> Self {
        ConsiderationsSpec {
            catastrophic_inference: RiskEntry::not_assessed(),
            drift_of_concept: RiskEntry::not_assessed(),
            decentralization: RiskEntry::not_assessed(),
            optimality_tradeoff: RiskEntry::not_assessed(),
            unintended_synergy: RiskEntry::not_assessed(),
            unintended_competition: RiskEntry::not_assessed(),
            goal_deviation: RiskEntry::not_assessed(),
        }
    }

    pub fn entry(&self, kind: ConsiderationKind) -> &RiskEntry {
        match kind {
            ConsiderationKind::CatastrophicInference => &self.catastrophic_inference,
            ConsiderationKind::DriftOfConcept => &self.drift_of_concept,
            ConsiderationKind::Decentralization => &self.decentralization,
            ConsiderationKind::OptimalityTradeoff => &self.optimality_tradeoff,
            ConsiderationKind::UnintendedSynergy => &self.unintended_synergy,
            ConsiderationKind::UnintendedCompetition => &self.unintended_competition,
            ConsiderationKind::GoalDeviation => &self.goal_deviation,
        }
    }

    pub fn entry_mut(&mut self, kind: ConsiderationKind) -> &mut RiskEntry {
        match kind {
            ConsiderationKind::CatastrophicInference => &mut self.catastrophic_inference,
            ConsiderationKind::DriftOfConcept => &mut self.drift_of_concept,
            ConsiderationKind::Decentralization => &mut self.decentralization,
            ConsiderationKind::OptimalityTradeoff => &mut self.optimality_tradeoff,
            ConsiderationKind::UnintendedSynergy => &mut self.unintended_synergy,
            ConsiderationKind::UnintendedCompetition => &mut self.unintended_competition,
            ConsiderationKind::GoalDeviation => &mut self.goal_deviation,
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (ConsiderationKind, &RiskEntry)> {
        ConsiderationKind::ALL
            .iter()
            .map(move |&kind| (kind, self.entry(kind)))
    }
}
