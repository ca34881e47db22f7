//! Reporting conventions for length and area exponents.
//!
//! Computation always runs in steps (ζ) and plaquettes (ϑ). The
//! double-step/diamond convention uses `z = ζ²` and `q = ϑ²`, so its
//! exponents are exact halves of the internal ones.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ConventionTag {
    /// ζ, ϑ: steps and plaquettes, integer exponents.
    #[default]
    StepPlaquette,
    /// z, q: double steps and diamonds, exponents in halves.
    DoubleStepDiamond,
}

impl ConventionTag {
    /// Converts an internal exponent into this convention.
    pub fn exponent(self, internal: i64) -> HalfExp {
        match self {
            ConventionTag::StepPlaquette => HalfExp::from_int(internal),
            ConventionTag::DoubleStepDiamond => HalfExp { twice: internal },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConventionTag::StepPlaquette => "step-plaquette",
            ConventionTag::DoubleStepDiamond => "double-step-diamond",
        }
    }
}

impl fmt::Display for ConventionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConventionTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "step-plaquette" => Ok(ConventionTag::StepPlaquette),
            "double-step-diamond" => Ok(ConventionTag::DoubleStepDiamond),
            other => Err(format!("unknown convention `{other}`")),
        }
    }
}

/// An exact multiple of one half, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfExp {
    pub twice: i64,
}

impl HalfExp {
    pub fn from_int(n: i64) -> Self {
        HalfExp { twice: 2 * n }
    }

    /// The integer value, when there is one.
    pub fn as_int(self) -> Option<i64> {
        (self.twice % 2 == 0).then_some(self.twice / 2)
    }
}

impl fmt::Display for HalfExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_int() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_exponents_are_halves() {
        let d = ConventionTag::DoubleStepDiamond;
        assert_eq!(d.exponent(21).to_string(), "21/2");
        assert_eq!(d.exponent(6).as_int(), Some(3));
        assert_eq!(ConventionTag::StepPlaquette.exponent(21).as_int(), Some(21));
        assert_eq!("double-step-diamond".parse::<ConventionTag>(), Ok(d));
        assert!("diamonds".parse::<ConventionTag>().is_err());
    }
}
