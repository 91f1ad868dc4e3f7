use std::fmt;

use serde::{Deserialize, Serialize};

/// Edge colour. The derived order is the canonical one: Red < Blue < Green.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Red,
    Blue,
    Green,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::Red, Colour::Blue, Colour::Green];

    pub fn index(self) -> u8 {
        match self {
            Colour::Red => 0,
            Colour::Blue => 1,
            Colour::Green => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Colour> {
        match i {
            0 => Some(Colour::Red),
            1 => Some(Colour::Blue),
            2 => Some(Colour::Green),
            _ => None,
        }
    }

    pub fn digit(self) -> char {
        (b'0' + self.index()) as char
    }

    pub fn from_digit(c: char) -> Option<Colour> {
        match c {
            '0' => Some(Colour::Red),
            '1' => Some(Colour::Blue),
            '2' => Some(Colour::Green),
            _ => None,
        }
    }

    /// The other colour of a red/blue palette. Green has no partner and maps to itself.
    pub fn opposite(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
            Colour::Green => Colour::Green,
        }
    }

    pub fn in_palette(self, palette: u8) -> bool {
        self.index() < palette
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
            Colour::Green => "green",
        })
    }
}
