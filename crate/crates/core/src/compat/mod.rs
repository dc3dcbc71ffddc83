//! Assessment of one component description against a host context.

mod autonomy;
mod physical;
mod signals;
mod software;
mod transport;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::findings::{normalize, Dimension, Finding, Severity};
use crate::model::{InterfaceDescription, SystemContext};
use crate::validate::{validate_context, validate_document};

pub use autonomy::{
    assess_autonomy_risks, check_change_coverage, score_change_coverage, score_verification_coverage,
};
pub use physical::check_physical_envelope;
pub use signals::match_signal;
pub use transport::check_transport_compat;

/// Three-level outcome, ordered from worst to best.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Incompatible,
    ConditionallyCompatible,
    Compatible,
}

impl Verdict {
    pub const ALL: [Verdict; 3] = [
        Verdict::Incompatible,
        Verdict::ConditionallyCompatible,
        Verdict::Compatible,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Incompatible => "Incompatible",
            Verdict::ConditionallyCompatible => "ConditionallyCompatible",
            Verdict::Compatible => "Compatible",
        }
    }

    /// Errors make it Incompatible, warnings ConditionallyCompatible.
    pub fn from_findings(findings: &[Finding]) -> Verdict {
        match findings.iter().map(|f| f.severity).max() {
            Some(Severity::Error) => Verdict::Incompatible,
            Some(Severity::Warning) => Verdict::ConditionallyCompatible,
            _ => Verdict::Compatible,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Verdict::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| format!("'{s}' is not one of Incompatible, ConditionallyCompatible, Compatible"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompatibilityReport {
    pub verdict: Verdict,
    pub findings: Vec<Finding>,
    /// Only dimensions that were actually assessed appear.
    pub dimension_scores: BTreeMap<Dimension, f64>,
    pub component_id: String,
    pub context_id: String,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CompatError {
    /// The document or the context has validation errors.
    #[error("INVALID_INPUT: {} validation error(s)", findings.len())]
    InvalidInput { findings: Vec<Finding> },
}

impl CompatError {
    pub fn code(&self) -> &'static str {
        "INVALID_INPUT"
    }
}

fn pass_fraction(checks: usize, failed: usize) -> f64 {
    if checks == 0 {
        1.0
    } else {
        (checks - failed) as f64 / checks as f64
    }
}

pub fn assess_compatibility(
    doc: &InterfaceDescription,
    context: &SystemContext,
) -> Result<CompatibilityReport, CompatError> {
    let invalid: Vec<Finding> = validate_document(doc)
        .into_iter()
        .chain(validate_context(context))
        .filter(|f| f.severity == Severity::Error)
        .collect();
    if !invalid.is_empty() {
        return Err(CompatError::InvalidInput {
            findings: normalize(invalid),
        });
    }

    let mut findings = Vec::new();
    let mut scores = BTreeMap::new();

    let (mut checks, mut failed) = (0, 0);
    for (i, signal) in doc.signals.iter().enumerate() {
        let outcome = signals::match_signal_at(signal, i, context);
        checks += outcome.checks;
        failed += outcome.failed;
        findings.extend(outcome.findings);
    }
    scores.insert(Dimension::Signal, pass_fraction(checks, failed));

    if let Some(hw) = &doc.hardware {
        let physical = physical::physical_checks(hw, context);
        scores.insert(Dimension::Physical, physical.score());
        findings.extend(physical.findings);

        let transport = check_transport_compat(hw, context);
        let broken = transport.iter().any(|f| f.severity == Severity::Error);
        scores.insert(Dimension::Transport, if broken { 0.0 } else { 1.0 });
        findings.extend(transport);
    }

    if let Some(sw) = &doc.software {
        let (score, ility) = software::ility_checks(sw, context);
        scores.insert(Dimension::Software, score);
        findings.extend(ility);
    }

    if let Some(auto) = &doc.autonomy {
        let (score, coverage) = score_change_coverage(auto, context);
        scores.insert(Dimension::Autonomy, score);
        findings.extend(coverage);

        let (score, gaps) = score_verification_coverage(auto, context);
        scores.insert(Dimension::Verification, score);
        findings.extend(gaps);

        if let Some(considerations) = &doc.considerations {
            findings.extend(assess_autonomy_risks(considerations, auto, context));
        }
        findings.extend(autonomy::sensitivity_note(auto));
    }

    let findings = normalize(findings);
    Ok(CompatibilityReport {
        verdict: Verdict::from_findings(&findings),
        findings,
        dimension_scores: scores,
        component_id: doc.meta.component_id.clone(),
        context_id: context.context_id.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findings::Code;

    #[test]
    fn verdict_follows_worst_severity() {
        let info = Finding::new(Code::RangeOverlap, Dimension::Signal, "a", "m");
        let warn = Finding::new(Code::UnmatchedSignal, Dimension::Signal, "b", "m");
        let err = Finding::new(Code::RangeExceeded, Dimension::Signal, "c", "m");
        assert_eq!(Verdict::from_findings(&[]), Verdict::Compatible);
        assert_eq!(
            Verdict::from_findings(std::slice::from_ref(&info)),
            Verdict::Compatible
        );
        assert_eq!(
            Verdict::from_findings(&[info.clone(), warn.clone()]),
            Verdict::ConditionallyCompatible
        );
        assert_eq!(Verdict::from_findings(&[info, warn, err]), Verdict::Incompatible);
        assert!(Verdict::Incompatible < Verdict::ConditionallyCompatible);
        assert!(Verdict::ConditionallyCompatible < Verdict::Compatible);
    }

    #[test]
    fn verdict_tokens_round_trip() {
        for v in Verdict::ALL {
            assert_eq!(v.as_str().parse::<Verdict>().unwrap(), v);
        }
    }
}
