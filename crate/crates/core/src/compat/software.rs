use crate::findings::{Code, Dimension, Finding};
use crate::model::{SoftwareInterfaceSpec, SystemContext};

/// Compares declared ility levels with the host's minimums. Returns the
/// fraction of requirements met and the findings.
pub(crate) fn ility_checks(sw: &SoftwareInterfaceSpec, context: &SystemContext) -> (f64, Vec<Finding>) {
    let mut findings = Vec::new();
    let mut met = 0usize;
    for (i, required) in context.required_ilities.iter().enumerate() {
        let path = format!("context.required_ilities[{i}]");
        match sw.ility(&required.name) {
            Some(declared) if declared.level >= required.minimum_level => met += 1,
            Some(declared) => findings.push(Finding::new(
                Code::IlityBelowMinimum,
                Dimension::Software,
                path,
                format!(
                    "'{}' is declared {} but the host requires at least {}",
                    required.name, declared.level, required.minimum_level
                ),
            )),
            None => findings.push(Finding::new(
                Code::IlityUndeclared,
                Dimension::Software,
                path,
                format!("'{}' is required by the host but not declared", required.name),
            )),
        }
    }
    let total = context.required_ilities.len();
    let score = if total == 0 {
        1.0
    } else {
        met as f64 / total as f64
    };
    (score, findings)
}
