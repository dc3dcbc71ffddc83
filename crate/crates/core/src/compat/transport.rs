use crate::findings::{Code, Dimension, Finding};
use crate::model::{HardwareInterfaceSpec, SystemContext};

pub fn check_transport_compat(hw: &HardwareInterfaceSpec, context: &SystemContext) -> Vec<Finding> {
    let transport = &hw.transport_layer;
    let same_name: Vec<_> = context
        .available_transports
        .iter()
        .filter(|t| t.protocol_name == transport.protocol_name)
        .collect();
    if same_name
        .iter()
        .any(|t| t.protocol_version == transport.protocol_version)
    {
        return Vec::new();
    }
    let path = "hardware.transport_layer";
    let finding = if same_name.is_empty() {
        Finding::new(
            Code::TransportUnavailable,
            Dimension::Transport,
            path,
            format!("the host offers no '{}' transport", transport.protocol_name),
        )
    } else {
        let offered: Vec<&str> = same_name.iter().map(|t| t.protocol_version.as_str()).collect();
        Finding::new(
            Code::TransportVersionMismatch,
            Dimension::Transport,
            path,
            format!(
                "component uses '{}' version '{}', host offers version {}",
                transport.protocol_name,
                transport.protocol_version,
                offered
                    .iter()
                    .map(|v| format!("'{v}'"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        )
    };
    vec![finding]
}
