use std::fmt;

use serde::{Serialize, Serializer};

/// A natural number or `+∞`.
///
/// Ordered with every finite value below `Infinity`; serialized as a JSON
/// number or the string `"infinity"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(usize),
    Infinity,
}

impl Extended {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Extended::Infinity)
    }

    /// `1/self` as a float, with `1/∞ = 0`.
    pub fn reciprocal(self) -> f64 {
        match self {
            Extended::Finite(v) => 1.0 / v as f64,
            Extended::Infinity => 0.0,
        }
    }
}

impl From<Option<usize>> for Extended {
    fn from(v: Option<usize>) -> Self {
        v.map_or(Extended::Infinity, Extended::Finite)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinity => f.write_str("infinity"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => serializer.serialize_u64(*v as u64),
            Extended::Infinity => serializer.serialize_str("infinity"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_infinity_last() {
        assert!(Extended::Finite(1_000_000) < Extended::Infinity);
        assert_eq!([Extended::Infinity, Extended::Finite(3)].iter().min(), Some(&Extended::Finite(3)));
    }

    #[test]
    fn serializes_infinity_as_string() {
        assert_eq!(serde_json::to_string(&Extended::Infinity).unwrap(), "\"infinity\"");
        assert_eq!(serde_json::to_string(&Extended::Finite(4)).unwrap(), "4");
    }
}
