use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Height of the potential outside a well.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Depth {
    Infinite,
    Finite(f64),
}

impl Depth {
    pub fn is_infinite(self) -> bool {
        matches!(self, Depth::Infinite)
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Infinite => f.write_str("inf"),
            Depth::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Depth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Depth::Infinite => s.serialize_str("inf"),
            Depth::Finite(v) => s.serialize_f64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for Depth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Number(v) => Ok(Depth::Finite(v)),
            Raw::Text(t) if matches!(t.as_str(), "inf" | "infinite" | "Infinity") => {
                Ok(Depth::Infinite)
            }
            Raw::Text(t) => Err(serde::de::Error::custom(format!(
                "depth must be a number or \"inf\", got {t:?}"
            ))),
        }
    }
}

fn one() -> f64 {
    1.0
}

/// A square well of width `2 * half_width` centred at `center`.
///
/// The potential is zero inside and `depth` outside.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WellSpec {
    pub center: f64,
    pub half_width: f64,
    pub depth: Depth,
    #[serde(default = "one")]
    pub mass: f64,
    #[serde(default = "one")]
    pub hbar: f64,
}

impl WellSpec {
    pub fn infinite(center: f64, half_width: f64) -> Self {
        WellSpec {
            center,
            half_width,
            depth: Depth::Infinite,
            mass: 1.0,
            hbar: 1.0,
        }
    }

    pub fn finite(center: f64, half_width: f64, depth: f64) -> Self {
        WellSpec {
            depth: Depth::Finite(depth),
            ..Self::infinite(center, half_width)
        }
    }

    pub fn with_depth(self, depth: Depth) -> Self {
        WellSpec { depth, ..self }
    }

    pub fn with_center(self, center: f64) -> Self {
        WellSpec { center, ..self }
    }

    pub fn with_mass(self, mass: f64) -> Self {
        WellSpec { mass, ..self }
    }

    pub fn with_hbar(self, hbar: f64) -> Self {
        WellSpec { hbar, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !self.center.is_finite() {
            return Err(Error::domain("well center must be finite"));
        }
        if !positive(self.half_width) {
            return Err(Error::domain(format!(
                "half width must be positive, got {}",
                self.half_width
            )));
        }
        if let Depth::Finite(v) = self.depth {
            if !positive(v) {
                return Err(Error::domain(format!("finite depth must be positive, got {v}")));
            }
        }
        if !positive(self.mass) || !positive(self.hbar) {
            return Err(Error::domain("mass and hbar must be positive"));
        }
        Ok(())
    }

    pub fn left_edge(&self) -> f64 {
        self.center - self.half_width
    }

    pub fn right_edge(&self) -> f64 {
        self.center + self.half_width
    }

    /// `x₁ + ε₁ < x₂ − ε₂` with the wells taken in order of position.
    pub fn non_overlapping(&self, other: &WellSpec) -> bool {
        let (l, r) = if self.center <= other.center {
            (self, other)
        } else {
            (other, self)
        };
        l.right_edge() < r.left_edge()
    }
}
