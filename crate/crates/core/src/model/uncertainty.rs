//! Change-uncertainty taxonomy.
//!
//! A change to a host system is described along three dimensions (the state
//! reached after the change, the mechanism that produces it, and the agent
//! that triggers it), each of which is either known or unknown in advance.
//! The eight combinations are numbered 1..=8 in a fixed, non-binary order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Whether one dimension of a change is known ahead of time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Knowledge {
    Known,
    Unknown,
}

impl Knowledge {
    fn letter(self) -> char {
        match self {
            Knowledge::Known => 'K',
            Knowledge::Unknown => 'U',
        }
    }
}

use Knowledge::{Known as K, Unknown as U};

/// Row table: index `i` holds the (state, mechanism, agent) triple of class `i + 1`.
const ROWS: [(Knowledge, Knowledge, Knowledge); 8] = [
    (K, K, K),
    (U, K, K),
    (K, K, U),
    (K, U, K),
    (K, U, U),
    (U, U, K),
    (U, K, U),
    (U, U, U),
];

const STATE_BIT: u8 = 0b001;
const MECHANISM_BIT: u8 = 0b010;
const AGENT_BIT: u8 = 0b100;

/// One of the eight change-uncertainty classes, identified by its row index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UncertaintyClass(u8);

impl UncertaintyClass {
    /// All eight classes in index order.
    pub const ALL: [UncertaintyClass; 8] = [
        UncertaintyClass(1),
        UncertaintyClass(2),
        UncertaintyClass(3),
        UncertaintyClass(4),
        UncertaintyClass(5),
        UncertaintyClass(6),
        UncertaintyClass(7),
        UncertaintyClass(8),
    ];

    pub fn from_index(index: u8) -> Option<Self> {
        (1..=8).contains(&index).then_some(UncertaintyClass(index))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    fn row(self) -> (Knowledge, Knowledge, Knowledge) {
        ROWS[usize::from(self.0 - 1)]
    }

    pub fn state_of_change(self) -> Knowledge {
        self.row().0
    }

    pub fn change_mechanism(self) -> Knowledge {
        self.row().1
    }

    pub fn agent_of_change(self) -> Knowledge {
        self.row().2
    }

    /// Bit set of the dimensions that are unknown for this class.
    pub fn unknown_mask(self) -> u8 {
        let (state, mechanism, agent) = self.row();
        let mut mask = 0;
        if state == U {
            mask |= STATE_BIT;
        }
        if mechanism == U {
            mask |= MECHANISM_BIT;
        }
        if agent == U {
            mask |= AGENT_BIT;
        }
        mask
    }

    pub fn unknown_count(self) -> u32 {
        self.unknown_mask().count_ones()
    }

    /// Three-letter token such as `"UUK"` (state, mechanism, agent).
    pub fn token(self) -> String {
        let (state, mechanism, agent) = self.row();
        [state.letter(), mechanism.letter(), agent.letter()]
            .iter()
            .collect()
    }

    /// True when a component able to handle `self` can also handle `demanded`:
    /// every dimension unknown in `demanded` is also unknown in `self`.
    pub fn covers(self, demanded: UncertaintyClass) -> bool {
        let handled = self.unknown_mask();
        let needed = demanded.unknown_mask();
        handled & needed == needed
    }
}

/// Maps a (state, mechanism, agent) triple to its class.
pub fn classify_change_uncertainty(
    state: Knowledge,
    mechanism: Knowledge,
    agent: Knowledge,
) -> UncertaintyClass {
    let position = ROWS
        .iter()
        .position(|row| *row == (state, mechanism, agent))
        .expect("the row table enumerates all eight triples");
    UncertaintyClass(position as u8 + 1)
}

/// True iff some handled class covers the demanded one.
pub fn covers_uncertainty(handled: &BTreeSet<UncertaintyClass>, demanded: UncertaintyClass) -> bool {
    handled.iter().any(|h| h.covers(demanded))
}

impl fmt::Display for UncertaintyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "class {} ({})", self.0, self.token())
    }
}

impl FromStr for UncertaintyClass {
    type Err = String;

    /// Accepts either a three-letter K/U token or a decimal index.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(index) = s.parse::<u8>() {
            return UncertaintyClass::from_index(index)
                .ok_or_else(|| format!("uncertainty class index {index} is outside 1..=8"));
        }
        let letters: Vec<char> = s.chars().collect();
        if letters.len() != 3 {
            return Err(format!("'{s}' is not an uncertainty class token"));
        }
        let mut triple = [K; 3];
        for (slot, letter) in triple.iter_mut().zip(&letters) {
            *slot = match letter {
                'K' => K,
                'U' => U,
                _ => return Err(format!("'{s}' is not an uncertainty class token")),
            };
        }
        Ok(classify_change_uncertainty(triple[0], triple[1], triple[2]))
    }
}
