use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::varset::MAX_VARS;

/// Coefficient field of the ambient polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    /// Prime field of the given characteristic.
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::Malformed(format!("characteristic {p} is not prime")))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    /// Parses the command-line spelling: `q`, `f2`, `fp=P`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" | "qq" | "QQ" => Ok(FieldSpec::Rationals),
            "f2" | "F2" => Ok(FieldSpec::Prime(2)),
            other => {
                let p = other
                    .strip_prefix("fp=")
                    .or_else(|| other.strip_prefix("Fp="))
                    .ok_or_else(|| Error::Malformed(format!("unknown field `{other}`")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad characteristic `{p}`")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The polynomial ring `K[x_1..x_n]`: variable names plus the field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    names: Vec<String>,
    field: FieldSpec,
}

impl RingDescriptor {
    pub fn new(names: Vec<String>, field: FieldSpec) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Malformed("a ring needs at least one variable".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::CapExceeded {
                what: "variable count",
                size: names.len() as u128,
                cap: MAX_VARS as u128,
            });
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::Malformed("empty variable name".into()));
            }
            if names[..i].contains(a) {
                return Err(Error::Malformed(format!("duplicate variable name `{a}`")));
            }
        }
        if let FieldSpec::Prime(p) = field {
            FieldSpec::prime(p)?;
        }
        Ok(RingDescriptor { names, field })
    }

    /// `x1, .., xn` over the given field.
    pub fn standard(n: usize, field: FieldSpec) -> Result<Self> {
        RingDescriptor::new((1..=n).map(|i| format!("x{i}")).collect(), field)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn with_field(&self, field: FieldSpec) -> Self {
        RingDescriptor { names: self.names.clone(), field }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn check_same(&self, other: &RingDescriptor) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{} variables over {} vs {} variables over {}",
                self.nvars(),
                self.field,
                other.nvars(),
                other.field
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("f2").unwrap(), FieldSpec::Prime(2));
        assert_eq!(FieldSpec::parse("fp=7").unwrap(), FieldSpec::Prime(7));
        assert!(FieldSpec::parse("fp=9").is_err());
        assert!(FieldSpec::parse("reals").is_err());
    }

    #[test]
    fn ring_invariants() {
        assert!(RingDescriptor::new(vec![], FieldSpec::Rationals).is_err());
        assert!(RingDescriptor::new(vec!["x".into(), "x".into()], FieldSpec::Rationals).is_err());
        let r = RingDescriptor::standard(3, FieldSpec::Rationals).unwrap();
        assert_eq!(r.names(), ["x1", "x2", "x3"]);
        assert_eq!(r.index_of("x2"), Some(1));
    }
}
