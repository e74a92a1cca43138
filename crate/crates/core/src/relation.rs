//! Preference relations as ternary tuples over cyclically adjacent pairs.
//!
//! Entry `i` (0-based here, `t_{i+1}` in mathematical notation) compares
//! alternative `a_{i+1}` with its cyclic successor. At three alternatives
//! the tuple `(t1, t2, t3)` covers `a1 vs a2`, `a2 vs a3` and `a3 vs a1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::ternary::{Packed, TernaryValue, ValueSet};

/// Whether a relation is transitive or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    WeakOrder,
    Cycle,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::WeakOrder => "weak order",
            RelationKind::Cycle => "cycle",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub kind: RelationKind,
    /// No entry is `e`.
    pub strict: bool,
}

/// A ternary `A`-tuple, `3 <= A <= 32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreferenceRelation(Packed);

impl PreferenceRelation {
    pub const MIN_ALTERNATIVES: usize = 3;
    pub const MAX_ALTERNATIVES: usize = Packed::MAX_LEN;

    pub fn new(entries: &[TernaryValue]) -> Result<Self> {
        if entries.len() < Self::MIN_ALTERNATIVES || entries.len() > Self::MAX_ALTERNATIVES {
            return Err(Error::BadDimension {
                what: "alternatives",
                value: entries.len(),
                expected: "3..=32",
            });
        }
        Ok(PreferenceRelation(Packed::from_slice(entries)))
    }

    pub fn from_array(entries: [TernaryValue; 3]) -> Self {
        PreferenceRelation(Packed::from_slice(&entries))
    }

    pub(crate) fn from_packed(packed: Packed) -> Self {
        debug_assert!(packed.len() >= 3);
        PreferenceRelation(packed)
    }

    /// The relation with lexicographic rank `rank` among all `3^A` tuples.
    pub fn from_rank(alternatives: usize, rank: u64) -> Result<Self> {
        if !(Self::MIN_ALTERNATIVES..=Self::MAX_ALTERNATIVES).contains(&alternatives) {
            return Err(Error::BadDimension {
                what: "alternatives",
                value: alternatives,
                expected: "3..=32",
            });
        }
        Ok(PreferenceRelation(Packed::from_rank(alternatives, rank)))
    }

    pub fn rank(&self) -> u64 {
        self.0.rank()
    }

    /// Number of alternatives `A`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Entry `i`, 0-based.
    pub fn get(&self, i: usize) -> TernaryValue {
        self.0.get(i)
    }

    pub fn entries(&self) -> impl Iterator<Item = TernaryValue> + '_ {
        self.0.iter()
    }

    pub fn to_vec(&self) -> Vec<TernaryValue> {
        self.0.to_vec()
    }

    /// The distinct values among the entries.
    pub fn vals(&self) -> ValueSet {
        self.0.values()
    }

    /// Weak order iff `vals = {e}` or `{0, 1} ⊆ vals`; a cycle otherwise.
    pub fn classify(&self) -> Classification {
        let vals = self.vals();
        let weak = vals == ValueSet::EMPTY.with(TernaryValue::E)
            || (vals.contains(TernaryValue::Zero) && vals.contains(TernaryValue::One));
        Classification {
            kind: if weak {
                RelationKind::WeakOrder
            } else {
                RelationKind::Cycle
            },
            strict: !vals.contains(TernaryValue::E),
        }
    }

    pub fn is_weak_order(&self) -> bool {
        self.classify().kind == RelationKind::WeakOrder
    }

    pub fn is_cycle(&self) -> bool {
        !self.is_weak_order()
    }

    pub fn is_strict(&self) -> bool {
        !self.vals().contains(TernaryValue::E)
    }

    pub fn negate(&self) -> Self {
        PreferenceRelation(self.0.negate())
    }
}

impl fmt::Display for PreferenceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for PreferenceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PreferenceRelation({})", self.0)
    }
}

/// Parses a ternary symbol string into values.
///
/// Accepts the compact form `0e1` as well as `(0,e,1)`; commas, parentheses
/// and whitespace are separators.
pub(crate) fn parse_symbols(text: &str) -> std::result::Result<Vec<TernaryValue>, ParseError> {
    let mut out = Vec::new();
    for (idx, c) in text.chars().enumerate() {
        match c {
            '(' | ')' | ',' => {}
            c if c.is_whitespace() => {}
            c => match TernaryValue::from_symbol(c) {
                Some(v) => out.push(v),
                None => {
                    return Err(ParseError::at_column(
                        idx + 1,
                        format!("unexpected character {c:?}, expected one of 0, e, 1"),
                    ))
                }
            },
        }
    }
    Ok(out)
}

impl FromStr for PreferenceRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = parse_symbols(s)?;
        PreferenceRelation::new(&values)
    }
}
