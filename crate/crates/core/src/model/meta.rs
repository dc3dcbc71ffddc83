use std::fmt;
use std::str::FromStr;

use chrono::NaiveDate;

/// Document schema version this crate reads and writes.
pub const SCHEMA_VERSION: Version = Version::new(1, 0, 0);

/// A `major.minor.patch` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Version {
    pub major: u64,
    pub minor: u64,
    pub patch: u64,
}

impl Version {
    pub const fn new(major: u64, minor: u64, patch: u64) -> Self {
        Version { major, minor, patch }
    }

    /// Whether a document written with `self` as schema version can be read
    /// by a reader supporting `supported`.
    pub fn readable_by(self, supported: Version) -> bool {
        self.major == supported.major && self.minor <= supported.minor
    }
}

impl fmt::Display for Version {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.major, self.minor, self.patch)
    }
}

impl FromStr for Version {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("'{s}' is not a version of the form X.Y.Z");
        let parts: Vec<&str> = s.split('.').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut numbers = [0u64; 3];
        for (slot, part) in numbers.iter_mut().zip(&parts) {
            // Leading zeros would not survive rendering, so they are refused.
            if part.is_empty()
                || !part.bytes().all(|b| b.is_ascii_digit())
                || (part.len() > 1 && part.starts_with('0'))
            {
                return Err(bad());
            }
            *slot = part.parse().map_err(|_| bad())?;
        }
        Ok(Version::new(numbers[0], numbers[1], numbers[2]))
    }
}

/// Identification block of a document.
#[derive(Debug, Clone, PartialEq)]
pub struct DocumentMeta {
    pub component_id: String,
    pub name: String,
    pub version: Version,
    pub date: NaiveDate,
    pub authors: Vec<String>,
    pub schema_version: Version,
    pub ai_enabled: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn version_round_trips() {
        for text in ["0.0.0", "1.2.3", "10.0.99"] {
            assert_eq!(text.parse::<Version>().unwrap().to_string(), text);
        }
    }

    #[test]
    fn version_rejects_malformed() {
        for text in ["1.2", "1.2.3.4", "01.2.3", "a.b.c", "1..3", "-1.0.0", "+1.0.0"] {
            assert!(text.parse::<Version>().is_err(), "{text}");
        }
    }

    #[test]
    fn schema_compatibility() {
        assert!(Version::new(1, 0, 7).readable_by(SCHEMA_VERSION));
        assert!(!Version::new(2, 0, 0).readable_by(SCHEMA_VERSION));
        assert!(!Version::new(1, 1, 0).readable_by(SCHEMA_VERSION));
    }
}
