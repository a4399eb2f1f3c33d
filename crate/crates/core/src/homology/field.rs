use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field: the rationals (characteristic 0) or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec(u64);

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec(0);
    pub const GF2: FieldSpec = FieldSpec(2);

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec(characteristic))
        } else {
            Err(Error::InvalidCharacteristic(characteristic))
        }
    }

    pub fn characteristic(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;
    fn try_from(c: u64) -> Result<Self> {
        FieldSpec::new(c)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.0
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("QQ"),
            p => write!(f, "GF({p})"),
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_zero_and_primes_only() {
        assert!(FieldSpec::new(0).is_ok());
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(65_521).is_ok());
        assert_eq!(FieldSpec::new(1), Err(Error::InvalidCharacteristic(1)));
        assert_eq!(FieldSpec::new(9), Err(Error::InvalidCharacteristic(9)));
    }
}
