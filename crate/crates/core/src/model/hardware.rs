use super::QuantityEnvelope;

token_enum! {
    /// The fixed physical-layer property categories.
    pub enum PhysicalCategory {
        ElectricalEmc => "electrical_emc",
        ElectricalCommunication => "electrical_communication",
        Mechanical => "mechanical",
        Thermal => "thermal",
        Particulate => "particulate",
    }
}

/// Physical-layer properties for one direction of the interface.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PhysicalGroup {
    pub electrical_emc: Vec<QuantityEnvelope>,
    pub electrical_communication: Vec<QuantityEnvelope>,
    pub mechanical: Vec<QuantityEnvelope>,
    pub thermal: Vec<QuantityEnvelope>,
    pub particulate: Vec<QuantityEnvelope>,
}

impl PhysicalGroup {
    pub fn category(&self, category: PhysicalCategory) -> &[QuantityEnvelope] {
        match category {
            PhysicalCategory::ElectricalEmc => &self.electrical_emc,
            PhysicalCategory::ElectricalCommunication => &self.electrical_communication,
            PhysicalCategory::Mechanical => &self.mechanical,
            PhysicalCategory::Thermal => &self.thermal,
            PhysicalCategory::Particulate => &self.particulate,
        }
    }

    pub fn category_mut(&mut self, category: PhysicalCategory) -> &mut Vec<QuantityEnvelope> {
        match category {
            PhysicalCategory::ElectricalEmc => &mut self.electrical_emc,
            PhysicalCategory::ElectricalCommunication => &mut self.electrical_communication,
            PhysicalCategory::Mechanical => &mut self.mechanical,
            PhysicalCategory::Thermal => &mut self.thermal,
            PhysicalCategory::Particulate => &mut self.particulate,
        }
    }

    /// Every envelope with its category, in declaration order.
    pub fn iter(&self) -> impl Iterator<Item = (PhysicalCategory, usize, &QuantityEnvelope)> {
        PhysicalCategory::ALL.iter().flat_map(move |&category| {
            self.category(category)
                .iter()
                .enumerate()
                .map(move |(i, envelope)| (category, i, envelope))
        })
    }

    pub fn is_empty(&self) -> bool {
        PhysicalCategory::ALL
            .iter()
            .all(|&category| self.category(category).is_empty())
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PhysicalLayer {
    pub inbound: PhysicalGroup,
    pub outbound: PhysicalGroup,
}

/// How information is coded onto the physical layer.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TransportLayer {
    pub encoding: String,
    pub protocol_name: String,
    pub protocol_version: String,
    pub mapping_description: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct HardwareInterfaceSpec {
    pub physical_layer: PhysicalLayer,
    pub transport_layer: TransportLayer,
}
