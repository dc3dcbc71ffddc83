use std::collections::BTreeSet;

use super::{Level, QuantityEnvelope, SignalSpec, UncertaintyClass, VerificationCategory};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportRef {
    pub protocol_name: String,
    pub protocol_version: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RequiredIlity {
    pub name: String,
    pub minimum_level: Level,
}

/// What a host system provides and demands at a candidate integration point.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemContext {
    pub context_id: String,
    /// Signals the host emits toward the component.
    pub offered_signals: Vec<SignalSpec>,
    /// Signals the host can receive from the component.
    pub accepted_signals: Vec<SignalSpec>,
    /// Ambient conditions the host guarantees.
    pub environment: Vec<QuantityEnvelope>,
    pub available_transports: Vec<TransportRef>,
    /// Change-uncertainty classes the host may exhibit over its life.
    pub change_profile: BTreeSet<UncertaintyClass>,
    pub required_ilities: Vec<RequiredIlity>,
    pub required_verification: BTreeSet<VerificationCategory>,
    pub requires_online_adaptation: bool,
    pub peer_interface_count: u32,
    pub human_interaction_expected: bool,
}
