use crate::envelope::containment;
use crate::findings::{Code, Dimension, Finding};
use crate::io::canonical::format_real;
use crate::model::{QuantityEnvelope, SignalSpec, SystemContext};

/// Result of matching one component signal, with the number of direction
/// checks performed and how many of them raised an error.
#[derive(Debug, Clone, Default)]
pub(crate) struct SignalOutcome {
    pub findings: Vec<Finding>,
    pub checks: usize,
    pub failed: usize,
}

/// Matches one component signal against the host context. `index` is the
/// signal's position in the document and locates the findings.
pub fn match_signal(component_signal: &SignalSpec, index: usize, context: &SystemContext) -> Vec<Finding> {
    match_signal_at(component_signal, index, context).findings
}

pub(crate) fn match_signal_at(signal: &SignalSpec, index: usize, context: &SystemContext) -> SignalOutcome {
    let mut outcome = SignalOutcome::default();
    let base = format!("signals[{index}]");
    if signal.direction.accepts() {
        one_direction(
            signal,
            &base,
            &context.offered_signals,
            Flow::IntoComponent,
            &mut outcome,
        );
    }
    if signal.direction.emits() {
        one_direction(
            signal,
            &base,
            &context.accepted_signals,
            Flow::OutOfComponent,
            &mut outcome,
        );
    }
    outcome
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    IntoComponent,
    OutOfComponent,
}

fn one_direction(
    signal: &SignalSpec,
    base: &str,
    host_signals: &[SignalSpec],
    flow: Flow,
    outcome: &mut SignalOutcome,
) {
    outcome.checks += 1;
    let (host_list, verb) = match flow {
        Flow::IntoComponent => ("offered", "offers"),
        Flow::OutOfComponent => ("accepted", "accepts"),
    };
    let name = signal.pairing_name();
    let same_name: Vec<&SignalSpec> = host_signals.iter().filter(|s| s.pairing_name() == name).collect();
    let Some(counterpart) = same_name.iter().find(|s| s.kind == signal.kind) else {
        if let Some(other) = same_name.first() {
            outcome.failed += 1;
            outcome.findings.push(Finding::new(
                Code::SignalKindMismatch,
                Dimension::Signal,
                format!("{base}.kind"),
                format!(
                    "component signal '{}' is {} but the host's {host_list} counterpart '{}' is {}",
                    signal.signal_id, signal.kind, other.signal_id, other.kind
                ),
            ));
        } else {
            outcome.findings.push(Finding::new(
                Code::UnmatchedSignal,
                Dimension::Signal,
                base,
                format!("the host {verb} no {} signal named '{name}'", signal.kind),
            ));
        }
        return;
    };

    let mut failed = false;
    for (j, component_envelope) in signal.characteristics.iter().enumerate() {
        let Some(host_envelope) = counterpart.characteristic(&component_envelope.name) else {
            continue;
        };
        let path = format!("{base}.characteristics[{j}]");
        // Into the component the host range must fit the component's; out of
        // it the component's range must fit the host's.
        let (inner, outer) = match flow {
            Flow::IntoComponent => (host_envelope, component_envelope),
            Flow::OutOfComponent => (component_envelope, host_envelope),
        };
        failed |= compare(inner, outer, &path, flow, &mut outcome.findings);
    }
    if failed {
        outcome.failed += 1;
    }
}

/// Pushes findings for one paired quantity; returns true if an error was raised.
fn compare(
    inner: &QuantityEnvelope,
    outer: &QuantityEnvelope,
    path: &str,
    flow: Flow,
    findings: &mut Vec<Finding>,
) -> bool {
    if inner.unit != outer.unit {
        findings.push(Finding::new(
            Code::UnitMismatch,
            Dimension::Signal,
            path,
            format!(
                "'{}' is stated in '{}' by one side and '{}' by the other",
                inner.name, inner.unit, outer.unit
            ),
        ));
        return false;
    }
    let Some(result) = containment(&inner.bounds, &outer.bounds) else {
        findings.push(Finding::new(
            Code::IncomparableBounds,
            Dimension::Signal,
            path,
            format!("'{}' mixes an interval with an enumerated set", inner.name),
        ));
        return false;
    };
    if result.contained {
        return false;
    }
    let message = match flow {
        Flow::IntoComponent => format!(
            "host offers '{}' {} {} but the component accepts only {}",
            inner.name, inner.bounds, inner.unit, outer.bounds
        ),
        Flow::OutOfComponent => format!(
            "component emits '{}' {} {} but the host accepts only {}",
            inner.name, inner.bounds, inner.unit, outer.bounds
        ),
    };
    findings.push(Finding::new(
        Code::RangeExceeded,
        Dimension::Signal,
        path,
        message,
    ));
    findings.push(Finding::new(
        Code::RangeOverlap,
        Dimension::Signal,
        path,
        format!("overlap fraction {}", format_real(result.overlap)),
    ));
    true
}
