use super::Level;

token_enum! {
    pub enum Visibility {
        Observable => "Observable",
        ObservableAndMutable => "ObservableAndMutable",
    }
}

/// Externally observable structural element.
#[derive(Debug, Clone, PartialEq)]
pub struct Property {
    pub name: String,
    pub visibility: Visibility,
    pub description: String,
}

/// Proactive behaviour offered by the component.
#[derive(Debug, Clone, PartialEq)]
pub struct Operation {
    pub name: String,
    pub inputs: String,
    pub outputs: String,
    pub description: String,
}

/// Reactive notification the component may raise.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub name: String,
    pub payload: String,
    pub trigger: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Constraints {
    pub element_constraints: Vec<String>,
    pub relationship_constraints: Vec<String>,
}

impl Constraints {
    pub fn is_empty(&self) -> bool {
        self.element_constraints.is_empty() && self.relationship_constraints.is_empty()
    }
}

/// Role of the component and the contexts it may be deployed in.
#[derive(Debug, Clone, PartialEq)]
pub struct Packaging {
    pub role: String,
    pub supported_contexts: Vec<String>,
}

/// A non-functional property and how well the component provides it.
#[derive(Debug, Clone, PartialEq)]
pub struct Ility {
    pub name: String,
    pub level: Level,
    pub characterization: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SoftwareInterfaceSpec {
    pub properties: Vec<Property>,
    pub operations: Vec<Operation>,
    pub events: Vec<Event>,
    pub constraints: Constraints,
    pub packaging: Option<Packaging>,
    pub ilities: Vec<Ility>,
}

impl SoftwareInterfaceSpec {
    pub fn ility(&self, name: &str) -> Option<&Ility> {
        self.ilities.iter().find(|i| i.name == name)
    }
}
