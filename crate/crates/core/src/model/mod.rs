//! Domain types for interface description documents and host system contexts.
//!
//! Every type here is a plain immutable value: construction performs no
//! checking beyond what the type system enforces, and semantic rules are
//! applied by [`crate::validate`].

/// Declares a fieldless enum whose variants map one-to-one onto text tokens.
macro_rules! token_enum {
    (
        $(#[$meta:meta])*
        pub enum $name:ident { $($variant:ident => $token:literal),+ $(,)? }
    ) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $token),+
                }
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl std::str::FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($token => Ok($name::$variant),)+
                    _ => Err(format!(
                        "'{}' is not one of {}",
                        s,
                        [$($token),+].join(", ")
                    )),
                }
            }
        }
    };
}

mod autonomy;
mod considerations;
mod context;
mod document;
mod hardware;
mod meta;
mod model_card;
mod scale;
mod signal;
mod software;
mod uncertainty;

pub use autonomy::{
    AutonomyFeature, AutonomySpec, ExplorationExploitation, ExplorationMode, FeedbackCycle, Interaction,
    VerificationCategory,
};
pub use considerations::{ConsiderationKind, ConsiderationsSpec, Likelihood, RiskEntry, RiskStatus};
pub use context::{RequiredIlity, SystemContext, TransportRef};
pub use document::InterfaceDescription;
pub use hardware::{HardwareInterfaceSpec, PhysicalCategory, PhysicalGroup, PhysicalLayer, TransportLayer};
pub use meta::{DocumentMeta, Version, SCHEMA_VERSION};
pub use model_card::{
    EvaluationData, Metric, ModelCardReport, ModelCardSection, ModelDetails, QuantitativeAnalyses,
};
pub use scale::{Level, Sensitivity};
pub use signal::{Bounds, Direction, EnergyKind, QuantityEnvelope, SignalKind, SignalSpec};
pub use software::{
    Constraints, Event, Ility, Operation, Packaging, Property, SoftwareInterfaceSpec, Visibility,
};
pub use uncertainty::{classify_change_uncertainty, covers_uncertainty, Knowledge, UncertaintyClass};

/// Reserved placeholder text written by scaffolds.
pub const PLACEHOLDER: &str = "TBD";

/// True for text that carries no information: empty, whitespace, or the placeholder.
pub fn is_blank(text: &str) -> bool {
    let trimmed = text.trim();
    trimmed.is_empty() || trimmed == PLACEHOLDER
}
