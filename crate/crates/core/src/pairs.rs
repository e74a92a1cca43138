use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::relation::parse_symbols;
use crate::ternary::{Packed, TernaryValue};

/// All individuals' votes on one adjacent pair of alternatives: one row of
/// a profile. Entry `i` (0-based) is individual `i + 1`'s vote.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairwisePreferences(Packed);

impl PairwisePreferences {
    pub const MIN_INDIVIDUALS: usize = 2;
    pub const MAX_INDIVIDUALS: usize = Packed::MAX_LEN;

    fn check_len(n: usize) -> Result<()> {
        if (Self::MIN_INDIVIDUALS..=Self::MAX_INDIVIDUALS).contains(&n) {
            Ok(())
        } else {
            Err(Error::BadDimension {
                what: "individuals",
                value: n,
                expected: "2..=32",
            })
        }
    }

    pub fn new(entries: &[TernaryValue]) -> Result<Self> {
        Self::check_len(entries.len())?;
        Ok(PairwisePreferences(Packed::from_slice(entries)))
    }

    /// The constant tuple `Δx` of length `n`.
    pub fn delta(x: TernaryValue, n: usize) -> Result<Self> {
        Self::check_len(n)?;
        Ok(PairwisePreferences(Packed::constant(n, x)))
    }

    /// The tuple with lexicographic rank `rank` in `Pair(n)`.
    pub fn from_rank(n: usize, rank: u64) -> Result<Self> {
        Self::check_len(n)?;
        Ok(PairwisePreferences(Packed::from_rank(n, rank)))
    }

    pub(crate) fn from_packed(p: Packed) -> Self {
        PairwisePreferences(p)
    }

    /// Lexicographic rank over `0 < e < 1`; also the table index.
    #[inline]
    pub fn rank(&self) -> u64 {
        self.0.rank()
    }

    /// Number of individuals `N`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Entry for individual `i + 1`.
    #[inline]
    pub fn get(&self, i: usize) -> TernaryValue {
        self.0.get(i)
    }

    pub fn entries(&self) -> impl Iterator<Item = TernaryValue> + '_ {
        self.0.iter()
    }

    pub fn to_vec(&self) -> Vec<TernaryValue> {
        self.0.to_vec()
    }

    pub fn is_strict(&self) -> bool {
        !self.0.values().contains(TernaryValue::E)
    }

    pub fn negate(&self) -> Self {
        PairwisePreferences(self.0.negate())
    }

    /// `Some(x)` when every entry equals `x`.
    pub fn constant_value(&self) -> Option<TernaryValue> {
        let first = self.get(0);
        self.entries().all(|v| v == first).then_some(first)
    }

    /// Copy with entry `i` (0-based) replaced.
    pub fn with_entry(&self, i: usize, v: TernaryValue) -> Self {
        let mut values = self.to_vec();
        values[i] = v;
        PairwisePreferences(Packed::from_slice(&values))
    }

    /// `Votes₁(r)`: the 1-based individuals voting `1`.
    pub fn votes_one(&self) -> Vec<usize> {
        self.entries()
            .enumerate()
            .filter(|(_, v)| *v == TernaryValue::One)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Free-function form of [`PairwisePreferences::delta`].
pub fn delta(x: TernaryValue, n: usize) -> Result<PairwisePreferences> {
    PairwisePreferences::delta(x, n)
}

impl fmt::Display for PairwisePreferences {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for PairwisePreferences {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairwisePreferences({})", self.0)
    }
}

impl FromStr for PairwisePreferences {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_symbols(s)?;
        PairwisePreferences::new(&values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ternary::TernaryValue::*;

    #[test]
    fn delta_examples() {
        assert_eq!(delta(One, 3).unwrap().to_vec(), vec![One, One, One]);
        assert_eq!(delta(E, 4).unwrap().to_vec(), vec![E; 4]);
        assert_eq!(delta(Zero, 2).unwrap().to_vec(), vec![Zero, Zero]);
        assert!(matches!(delta(Zero, 1), Err(Error::BadDimension { .. })));
    }

    #[test]
    fn negation_and_strictness() {
        let r: PairwisePreferences = "000".parse().unwrap();
        assert_eq!(r.negate().to_string(), "111");
        assert!(r.is_strict());
        assert!(!"0e".parse::<PairwisePreferences>().unwrap().is_strict());
    }

    #[test]
    fn votes_one_positions() {
        let r: PairwisePreferences = "101".parse().unwrap();
        assert_eq!(r.votes_one(), vec![1, 3]);
    }

    #[test]
    fn constant_value_detection() {
        assert_eq!("ee".parse::<PairwisePreferences>().unwrap().constant_value(), Some(E));
        assert_eq!("e1".parse::<PairwisePreferences>().unwrap().constant_value(), None);
    }
}
