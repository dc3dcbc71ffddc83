use super::{
    AutonomySpec, ConsiderationsSpec, DocumentMeta, HardwareInterfaceSpec, ModelCardReport, SignalSpec,
    SoftwareInterfaceSpec,
};

/// Interface description of one component.
#[derive(Debug, Clone, PartialEq)]
pub struct InterfaceDescription {
    pub meta: DocumentMeta,
    pub signals: Vec<SignalSpec>,
    pub hardware: Option<HardwareInterfaceSpec>,
    pub software: Option<SoftwareInterfaceSpec>,
    pub model_card: Option<ModelCardReport>,
    pub autonomy: Option<AutonomySpec>,
    pub considerations: Option<ConsiderationsSpec>,
}
