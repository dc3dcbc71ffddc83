use crate::envelope::containment;
use crate::findings::{Code, Dimension, Finding, Severity};
use crate::model::{HardwareInterfaceSpec, QuantityEnvelope, SystemContext};

/// Findings plus the number of quantities compared and how many failed.
#[derive(Debug, Clone, Default)]
pub(crate) struct Checked {
    pub findings: Vec<Finding>,
    pub checks: usize,
    pub failed: usize,
}

impl Checked {
    pub fn score(&self) -> f64 {
        if self.checks == 0 {
            1.0
        } else {
            (self.checks - self.failed) as f64 / self.checks as f64
        }
    }
}

/// Compares the component's physical-layer tolerances and emissions with the
/// host environment.
pub fn check_physical_envelope(hw: &HardwareInterfaceSpec, context: &SystemContext) -> Vec<Finding> {
    physical_checks(hw, context).findings
}

pub(crate) fn physical_checks(hw: &HardwareInterfaceSpec, context: &SystemContext) -> Checked {
    let mut out = Checked::default();
    for (category, i, tolerated) in hw.physical_layer.inbound.iter() {
        let path = format!("hardware.physical_layer.in.{category}[{i}]");
        match context.environment.iter().find(|e| e.name == tolerated.name) {
            Some(guaranteed) => {
                out.checks += 1;
                // The guaranteed ambient range must sit inside what the component tolerates.
                if compare(
                    guaranteed,
                    tolerated,
                    &path,
                    Code::EnvOutOfEnvelope,
                    &mut out.findings,
                ) {
                    out.failed += 1;
                }
            }
            None => out.findings.push(Finding::new(
                Code::EnvUnspecified,
                Dimension::Physical,
                path,
                format!("the host environment does not state '{}'", tolerated.name),
            )),
        }
    }
    for (category, i, emitted) in hw.physical_layer.outbound.iter() {
        let path = format!("hardware.physical_layer.out.{category}[{i}]");
        let accepted = context
            .accepted_signals
            .iter()
            .find_map(|s| s.characteristic(&emitted.name));
        match accepted {
            Some(accepted) => {
                out.checks += 1;
                if compare(
                    emitted,
                    accepted,
                    &path,
                    Code::EmissionOutOfAcceptance,
                    &mut out.findings,
                ) {
                    out.failed += 1;
                }
            }
            None => out.findings.push(Finding::new(
                Code::EmissionUnchecked,
                Dimension::Physical,
                path,
                format!("the host states no acceptance for emission '{}'", emitted.name),
            )),
        }
    }
    out
}

/// Returns true when an error was pushed.
fn compare(
    inner: &QuantityEnvelope,
    outer: &QuantityEnvelope,
    path: &str,
    code: Code,
    findings: &mut Vec<Finding>,
) -> bool {
    debug_assert_eq!(code.severity(), Severity::Error);
    if inner.unit != outer.unit {
        findings.push(Finding::new(
            Code::UnitMismatch,
            Dimension::Physical,
            path,
            format!(
                "'{}' is stated in '{}' by the host and '{}' by the component",
                inner.name, inner.unit, outer.unit
            ),
        ));
        return false;
    }
    match containment(&inner.bounds, &outer.bounds) {
        None => {
            findings.push(Finding::new(
                Code::IncomparableBounds,
                Dimension::Physical,
                path,
                format!("'{}' mixes an interval with an enumerated set", inner.name),
            ));
            false
        }
        Some(result) if result.contained => false,
        Some(_) => {
            findings.push(Finding::new(
                code,
                Dimension::Physical,
                path,
                format!(
                    "'{}' {} {} does not fit within {}",
                    inner.name, inner.bounds, inner.unit, outer.bounds
                ),
            ));
            true
        }
    }
}
