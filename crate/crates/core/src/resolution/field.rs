use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Field {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        // products of two residues must fit in u64
        if is_prime(p) && p < 1 << 31 {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::Rationals
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `QQ`, `GF(p)`, `GFp` or a bare prime `p`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
            return Ok(Field::Rationals);
        }
        let digits = t
            .strip_prefix("GF")
            .or_else(|| t.strip_prefix("gf"))
            .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
            .unwrap_or(t);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::MonomialParse(format!("unknown field {s}")))?;
        Field::prime(p)
    }
}

impl TryFrom<String> for Field {
    type Error = Error;

    fn try_from(s: String) -> Result<Field> {
        s.parse()
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("GF(2)".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("GF(4)".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
        assert_eq!(Field::Prime(3).to_string(), "GF(3)");
        assert_eq!(serde_json::to_string(&Field::Rationals).unwrap(), "\"Q\"");
    }
}
