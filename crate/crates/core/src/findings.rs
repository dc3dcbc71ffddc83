//! Findings and the registry of stable finding codes.
//!
//! Codes are part of the public output contract: once published a code keeps
//! its spelling and severity.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "Info",
            Severity::Warning => "Warning",
            Severity::Error => "Error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Severity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Info" => Ok(Severity::Info),
            "Warning" => Ok(Severity::Warning),
            "Error" => Ok(Severity::Error),
            _ => Err(format!("'{s}' is not one of Info, Warning, Error")),
        }
    }
}

/// Area of the interface description a finding concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dimension {
    Signal,
    Physical,
    Transport,
    Software,
    Autonomy,
    Consideration,
    Verification,
    Meta,
}

impl Dimension {
    pub const ALL: [Dimension; 8] = [
        Dimension::Signal,
        Dimension::Physical,
        Dimension::Transport,
        Dimension::Software,
        Dimension::Autonomy,
        Dimension::Consideration,
        Dimension::Verification,
        Dimension::Meta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Dimension::Signal => "Signal",
            Dimension::Physical => "Physical",
            Dimension::Transport => "Transport",
            Dimension::Software => "Software",
            Dimension::Autonomy => "Autonomy",
            Dimension::Consideration => "Consideration",
            Dimension::Verification => "Verification",
            Dimension::Meta => "Meta",
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Dimension {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Dimension::ALL
            .into_iter()
            .find(|d| d.as_str() == s)
            .ok_or_else(|| format!("'{s}' is not a finding dimension"))
    }
}

macro_rules! codes {
    ($($variant:ident => ($token:literal, $severity:ident, $summary:literal)),+ $(,)?) => {
        /// Stable finding codes.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Code {
            $($variant),+
        }

        impl Code {
            pub const ALL: &'static [Code] = &[$(Code::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(Code::$variant => $token),+
                }
            }

            /// Severity every finding with this code carries.
            pub fn severity(self) -> Severity {
                match self {
                    $(Code::$variant => Severity::$severity),+
                }
            }

            pub fn summary(self) -> &'static str {
                match self {
                    $(Code::$variant => $summary),+
                }
            }
        }
    };
}

codes! {
    // Document validation.
    EmptyComponentId => ("EMPTY_COMPONENT_ID", Error, "meta.component_id is empty"),
    NoSignals => ("NO_SIGNALS", Error, "the document declares no signals"),
    NoInterfaceSection => ("NO_INTERFACE_SECTION", Error, "neither a hardware nor a software section is present"),
    DupSignalId => ("DUP_SIGNAL_ID", Error, "two signals share a signal_id"),
    DupCharacteristic => ("DUP_CHARACTERISTIC", Error, "two characteristics of one signal share a name"),
    BadRange => ("BAD_RANGE", Error, "an interval envelope has min > max"),
    BadLabelSet => ("BAD_LABEL_SET", Error, "an enumerated envelope is empty or repeats a label"),
    NonFiniteNumber => ("NON_FINITE_NUMBER", Error, "a bound, metric or latency is not a finite number"),
    DupSoftwareName => ("DUP_SOFTWARE_NAME", Error, "a property, operation, event or ility name is repeated"),
    EmptySupportedContexts => ("EMPTY_SUPPORTED_CONTEXTS", Error, "packaging is present but lists no supported contexts"),
    MissingModelCard => ("MISSING_MODEL_CARD", Error, "an AI-enabled document has no model card"),
    MissingAutonomy => ("MISSING_AUTONOMY", Error, "an AI-enabled document has no autonomy section"),
    MissingConsiderations => ("MISSING_CONSIDERATIONS", Error, "an AI-enabled document has no considerations section"),
    NoChangeTypes => ("NO_CHANGE_TYPES", Error, "an AI-enabled document handles no change-uncertainty class"),
    BadLatency => ("BAD_LATENCY", Error, "a feedback cycle latency bound is not positive"),
    InconsistentRisk => ("INCONSISTENT_RISK", Error, "a risk is marked Assessed with Unknown likelihood"),
    UnmitigatedHighRisk => ("UNMITIGATED_HIGH_RISK", Warning, "a High-likelihood risk has no mitigation"),
    PlaceholderText => ("PLACEHOLDER_TEXT", Warning, "a text field still holds the TBD placeholder"),
    NoVerificationDeclared => ("NO_VERIFICATION_DECLARED", Warning, "the autonomy section declares no verification strategy"),
    // Context validation.
    EmptyContextId => ("EMPTY_CONTEXT_ID", Error, "context_id is empty"),
    DupContextSignalId => ("DUP_CONTEXT_SIGNAL_ID", Error, "two context signals in one list share a signal_id"),
    EmptyChangeProfile => ("EMPTY_CHANGE_PROFILE", Error, "the context change profile is empty"),
    // Compatibility assessment.
    SignalKindMismatch => ("SIGNAL_KIND_MISMATCH", Error, "the paired host signal conveys a different kind"),
    RangeExceeded => ("RANGE_EXCEEDED", Error, "an offered or emitted range is not contained in the accepting range"),
    RangeOverlap => ("RANGE_OVERLAP", Info, "overlap fraction of a range that was not contained"),
    UnmatchedSignal => ("UNMATCHED_SIGNAL", Warning, "the host has no counterpart for a component signal"),
    UnitMismatch => ("UNIT_MISMATCH", Warning, "paired quantities use different units and were not compared"),
    IncomparableBounds => ("INCOMPARABLE_BOUNDS", Warning, "paired quantities mix interval and enumerated bounds"),
    EnvOutOfEnvelope => ("ENV_OUT_OF_ENVELOPE", Error, "a guaranteed ambient condition exceeds the component's tolerance"),
    EnvUnspecified => ("ENV_UNSPECIFIED", Warning, "the host does not state a condition the component is sensitive to"),
    EmissionUnchecked => ("EMISSION_UNCHECKED", Warning, "the host states no acceptance for a physical emission"),
    EmissionOutOfAcceptance => ("EMISSION_OUT_OF_ACCEPTANCE", Error, "a physical emission exceeds what the host accepts"),
    TransportUnavailable => ("TRANSPORT_UNAVAILABLE", Error, "the host offers no transport with the component's protocol"),
    TransportVersionMismatch => ("TRANSPORT_VERSION_MISMATCH", Warning, "the host offers the protocol only in another version"),
    IlityBelowMinimum => ("ILITY_BELOW_MINIMUM", Error, "a declared ility level is below the host's minimum"),
    IlityUndeclared => ("ILITY_UNDECLARED", Warning, "the component does not declare an ility the host requires"),
    ChangeClassUncovered => ("CHANGE_CLASS_UNCOVERED", Error, "a change-uncertainty class of the host is not handled"),
    SensitivityLevelReported => ("SENSITIVITY_LEVEL_REPORTED", Info, "declared sensitivity to prior, reported for review"),
    DriftUnassessed => ("DRIFT_UNASSESSED", Warning, "drift of concept is unassessed while the host has unknown change dimensions"),
    CatastrophicInferenceUnmitigated => ("CATASTROPHIC_INFERENCE_UNMITIGATED", Error, "online adaptation with a High, unmitigated catastrophic-inference risk"),
    CooperationInterfacesInsufficient => ("COOPERATION_INTERFACES_INSUFFICIENT", Warning, "fewer declared interactions than host peer interfaces"),
    HumanRulesMissing => ("HUMAN_RULES_MISSING", Warning, "human interaction is expected but no rules are declared"),
    DecentralizationComplexity => ("DECENTRALIZATION_COMPLEXITY", Info, "High decentralization risk with several peers"),
    GoalDeviationUnassessed => ("GOAL_DEVIATION_UNASSESSED", Warning, "goal deviation is unassessed while peers are present"),
    VerificationGap => ("VERIFICATION_GAP", Warning, "a verification category required by the host is not declared"),
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Code {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Code::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("'{s}' is not a registered finding code"))
    }
}

/// A single located diagnostic.
#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub severity: Severity,
    pub code: Code,
    pub path: String,
    pub message: String,
    pub dimension: Dimension,
}

impl Finding {
    pub fn new(
        code: Code,
        dimension: Dimension,
        path: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        Finding {
            severity: code.severity(),
            code,
            path: path.into(),
            message: message.into(),
            dimension,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Tally {
    pub errors: usize,
    pub warnings: usize,
    pub infos: usize,
}

pub fn tally(findings: &[Finding]) -> Tally {
    findings.iter().fold(Tally::default(), |mut t, f| {
        match f.severity {
            Severity::Error => t.errors += 1,
            Severity::Warning => t.warnings += 1,
            Severity::Info => t.infos += 1,
        }
        t
    })
}

/// Sorts by dimension, then severity (most severe first), then path and code,
/// and folds findings that share a code and path into one.
pub fn normalize(findings: Vec<Finding>) -> Vec<Finding> {
    let mut findings = findings;
    findings.sort_by(|a, b| {
        (a.dimension, std::cmp::Reverse(a.severity), &a.path, a.code).cmp(&(
            b.dimension,
            std::cmp::Reverse(b.severity),
            &b.path,
            b.code,
        ))
    });
    let mut out: Vec<Finding> = Vec::with_capacity(findings.len());
    for finding in findings {
        if let Some(same) = out
            .iter_mut()
            .find(|f| f.code == finding.code && f.path == finding.path)
        {
            if !same.message.split("; ").any(|m| m == finding.message) {
                same.message.push_str("; ");
                same.message.push_str(&finding.message);
            }
        } else {
            out.push(finding);
        }
    }
    out
}

/// Markdown table of every registered code, used for the published registry.
pub fn registry_table() -> String {
    let mut out = String::from(
        "# Finding codes\n\n\
         Generated from the code registry; do not edit by hand.\n\n\
         | Code | Severity | Meaning |\n|---|---|---|\n",
    );
    for code in Code::ALL {
        out.push_str(&format!(
            "| `{}` | {} | {} |\n",
            code.as_str(),
            code.severity(),
            code.summary()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_unique_upper_snake() {
        let mut seen = std::collections::BTreeSet::new();
        for code in Code::ALL {
            let token = code.as_str();
            assert!(seen.insert(token), "{token}");
            assert!(
                token.chars().all(|c| c.is_ascii_uppercase() || c == '_'),
                "{token}"
            );
            assert_eq!(token.parse::<Code>().unwrap(), *code);
        }
    }

    #[test]
    fn normalize_sorts_and_merges() {
        let a = Finding::new(
            Code::UnmatchedSignal,
            Dimension::Signal,
            "signals[0]",
            "no offered counterpart",
        );
        let b = Finding::new(
            Code::UnmatchedSignal,
            Dimension::Signal,
            "signals[0]",
            "no accepted counterpart",
        );
        let c = Finding::new(Code::RangeExceeded, Dimension::Signal, "signals[1]", "x");
        let d = Finding::new(Code::TransportUnavailable, Dimension::Transport, "hardware", "y");
        let out = normalize(vec![d.clone(), a, c.clone(), b]);
        assert_eq!(out.len(), 3);
        assert_eq!(out[0], c);
        assert_eq!(out[1].message, "no offered counterpart; no accepted counterpart");
        assert_eq!(out[2], d);
    }
}
