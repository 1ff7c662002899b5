use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Number of decimal fraction digits a weight can carry.
pub const WEIGHT_DECIMALS: u32 = 9;
const SCALE: u128 = 1_000_000_000;

/// Exact nonnegative decimal weight, stored as an integer count of `10^-9` units.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u128);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightParseError {
    #[error("negative weight `{0}`")]
    Negative(String),
    #[error("invalid decimal `{0}`")]
    Invalid(String),
    #[error("weight `{0}` has more than {WEIGHT_DECIMALS} fraction digits")]
    TooPrecise(String),
    #[error("weight `{0}` is too large")]
    Overflow(String),
}

impl Weight {
    pub const ZERO: Weight = Weight(0);
    pub const ONE: Weight = Weight(SCALE);

    pub fn from_int(v: u64) -> Self {
        Weight(v as u128 * SCALE)
    }

    pub fn from_raw(units: u128) -> Self {
        Weight(units)
    }

    pub fn raw(self) -> u128 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplies by a nonnegative integer factor.
    pub fn scaled(self, factor: u64) -> Self {
        Weight(self.0 * factor as u128)
    }

    /// `self - other`, saturating at zero.
    pub fn saturating_sub(self, other: Weight) -> Weight {
        Weight(self.0.saturating_sub(other.0))
    }

    /// `2 * self <= total`, i.e. at most half of `total`.
    pub fn at_most_half_of(self, total: Weight) -> bool {
        self.0 * 2 <= total.0
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.0 += rhs.0;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight(self.0.checked_sub(rhs.0).expect("weight underflow"))
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::ZERO, Add::add)
    }
}

impl FromStr for Weight {
    type Err = WeightParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.starts_with('-') {
            // "-0" is still rejected: the file format forbids a sign
            return Err(WeightParseError::Negative(t.to_string()));
        }
        let t = t.strip_prefix('+').unwrap_or(t);
        let (int, frac) = match t.split_once('.') {
            Some((i, f)) => (i, f),
            None => (t, ""),
        };
        let digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if (int.is_empty() && frac.is_empty()) || !digits(int) || !digits(frac) {
            return Err(WeightParseError::Invalid(s.to_string()));
        }
        if frac.len() > WEIGHT_DECIMALS as usize {
            return Err(WeightParseError::TooPrecise(s.to_string()));
        }
        let overflow = || WeightParseError::Overflow(s.to_string());
        let int_val: u128 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| overflow())?
        };
        let mut frac_val: u128 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| overflow())? };
        frac_val *= 10u128.pow(WEIGHT_DECIMALS - frac.len() as u32);
        let units = int_val
            .checked_mul(SCALE)
            .and_then(|v| v.checked_add(frac_val))
            .filter(|&v| v <= u64::MAX as u128 * SCALE)
            .ok_or_else(overflow)?;
        Ok(Weight(units))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac == 0 {
            write!(f, "{int}")
        } else {
            let s = format!("{frac:09}");
            write!(f, "{int}.{}", s.trim_end_matches('0'))
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
