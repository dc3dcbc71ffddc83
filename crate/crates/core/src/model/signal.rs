use std::fmt;
use std::str::FromStr;

token_enum! {
    /// Physical form of an energy signal.
    pub enum EnergyKind {
        Electrical => "Electrical",
        Mechanical => "Mechanical",
        Chemical => "Chemical",
        Nuclear => "Nuclear",
        Radiant => "Radiant",
        Light => "Light",
        Sound => "Sound",
    }
}

/// What a logical signal conveys across the interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignalKind {
    Information,
    Energy(EnergyKind),
    Material,
}

impl fmt::Display for SignalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignalKind::Information => f.write_str("Information"),
            SignalKind::Energy(kind) => write!(f, "Energy:{kind}"),
            SignalKind::Material => f.write_str("Material"),
        }
    }
}

impl FromStr for SignalKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Information" => Ok(SignalKind::Information),
            "Material" => Ok(SignalKind::Material),
            _ => match s.strip_prefix("Energy:") {
                Some(sub) => sub.parse().map(SignalKind::Energy),
                None if s == "Energy" => {
                    Err("an Energy signal needs a subkind, e.g. 'Energy:Electrical'".to_string())
                }
                None => Err(format!(
                    "'{s}' is not one of Information, Energy:<subkind>, Material"
                )),
            },
        }
    }
}

token_enum! {
    /// Flow direction seen from the component.
    pub enum Direction {
        In => "In",
        Out => "Out",
        Bidirectional => "Bidirectional",
    }
}

impl Direction {
    pub fn accepts(self) -> bool {
        matches!(self, Direction::In | Direction::Bidirectional)
    }

    pub fn emits(self) -> bool {
        matches!(self, Direction::Out | Direction::Bidirectional)
    }
}

/// Range of admissible values of a quantity.
#[derive(Debug, Clone, PartialEq)]
pub enum Bounds {
    /// Closed real interval `[min, max]`.
    Interval { min: f64, max: f64 },
    /// Finite set of admissible labels.
    Labels(Vec<String>),
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounds::Interval { min, max } => write!(f, "[{min:?}, {max:?}]"),
            Bounds::Labels(labels) => write!(f, "{{{}}}", labels.join(", ")),
        }
    }
}

/// A named, unit-bearing quantity together with its bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantityEnvelope {
    pub name: String,
    pub unit: String,
    pub bounds: Bounds,
}

impl QuantityEnvelope {
    pub fn interval(name: impl Into<String>, unit: impl Into<String>, min: f64, max: f64) -> Self {
        QuantityEnvelope {
            name: name.into(),
            unit: unit.into(),
            bounds: Bounds::Interval { min, max },
        }
    }

    pub fn labels<I, S>(name: impl Into<String>, unit: impl Into<String>, labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        QuantityEnvelope {
            name: name.into(),
            unit: unit.into(),
            bounds: Bounds::Labels(labels.into_iter().map(Into::into).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignalSpec {
    pub signal_id: String,
    pub kind: SignalKind,
    pub direction: Direction,
    pub characteristics: Vec<QuantityEnvelope>,
}

impl SignalSpec {
    /// Name used to pair this signal with a host-side counterpart: the first
    /// characteristic's name, or the signal id when there are none.
    pub fn pairing_name(&self) -> &str {
        self.characteristics
            .first()
            .map(|c| c.name.as_str())
            .unwrap_or(&self.signal_id)
    }

    pub fn characteristic(&self, name: &str) -> Option<&QuantityEnvelope> {
        self.characteristics.iter().find(|c| c.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signal_kind_tokens() {
        for kind in [
            SignalKind::Information,
            SignalKind::Material,
            SignalKind::Energy(EnergyKind::Electrical),
            SignalKind::Energy(EnergyKind::Sound),
        ] {
            assert_eq!(kind.to_string().parse::<SignalKind>().unwrap(), kind);
        }
        assert!("Energy".parse::<SignalKind>().is_err());
        assert!("Energy:Plasma".parse::<SignalKind>().is_err());
        assert!("information".parse::<SignalKind>().is_err());
    }

    #[test]
    fn pairing_name_falls_back_to_id() {
        let mut signal = SignalSpec {
            signal_id: "s1".into(),
            kind: SignalKind::Information,
            direction: Direction::In,
            characteristics: vec![],
        };
        assert_eq!(signal.pairing_name(), "s1");
        signal
            .characteristics
            .push(QuantityEnvelope::interval("temperature", "degC", 0.0, 1.0));
        assert_eq!(signal.pairing_name(), "temperature");
    }
}
