//! Profiles: `3 × N` ternary matrices whose columns are weak orders.

use std::fmt;

use crate::enumerate::{weak_order_position, weak_orders};
use crate::error::{Error, Result};
use crate::pairs::PairwisePreferences;
use crate::relation::PreferenceRelation;
use crate::ternary::{Packed, TernaryValue};

/// A validated profile on three alternatives.
///
/// Stored in row form; row `j` (0-based) holds every individual's vote on
/// `a_{j+1}` versus its cyclic successor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    rows: [PairwisePreferences; 3],
}

impl Profile {
    pub fn from_columns(columns: &[PreferenceRelation]) -> Result<Self> {
        let n = columns.len();
        if !(PairwisePreferences::MIN_INDIVIDUALS..=PairwisePreferences::MAX_INDIVIDUALS).contains(&n) {
            return Err(Error::BadDimension {
                what: "individuals",
                value: n,
                expected: "2..=32",
            });
        }
        let a = columns[0].len();
        if let Some(bad) = columns.iter().find(|c| c.len() != a) {
            return Err(Error::DimensionMismatch {
                expected: a,
                found: bad.len(),
            });
        }
        if a != 3 {
            return Err(Error::UnsupportedAlternativeCount(a));
        }
        if let Some(i) = columns.iter().position(|c| c.is_cycle()) {
            return Err(Error::CycleColumn(i + 1));
        }
        let rows = std::array::from_fn(|j| {
            let values: Vec<TernaryValue> = columns.iter().map(|c| c.get(j)).collect();
            PairwisePreferences::from_packed(Packed::from_slice(&values))
        });
        Ok(Profile { rows })
    }

    pub fn from_rows(rows: &[PairwisePreferences]) -> Result<Self> {
        match rows.len() {
            3 => {}
            a if a < 3 => {
                return Err(Error::BadDimension {
                    what: "alternatives",
                    value: a,
                    expected: "3",
                })
            }
            a => return Err(Error::UnsupportedAlternativeCount(a)),
        }
        let n = rows[0].len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let profile = Profile {
            rows: [rows[0], rows[1], rows[2]],
        };
        if let Some(i) = (0..n).position(|i| profile.column(i).is_cycle()) {
            return Err(Error::CycleColumn(i + 1));
        }
        Ok(profile)
    }

    /// The profile at position `index` in enumeration order: columns range
    /// over the 13 weak orders in lexicographic order, column 1 most
    /// significant.
    pub fn from_index(n: usize, mut index: u64) -> Result<Self> {
        if !(2..=PairwisePreferences::MAX_INDIVIDUALS).contains(&n) {
            return Err(Error::BadDimension {
                what: "individuals",
                value: n,
                expected: "2..=32",
            });
        }
        let orders = weak_orders();
        let mut columns = vec![orders[0]; n];
        for slot in columns.iter_mut().rev() {
            *slot = orders[(index % 13) as usize];
            index /= 13;
        }
        if index != 0 {
            return Err(Error::Invalid {
                what: "profile index",
                message: format!("out of range for {n} individuals"),
            });
        }
        Profile::from_columns(&columns)
    }

    /// Position of this profile in enumeration order.
    pub fn index(&self) -> u64 {
        (0..self.n()).fold(0u64, |acc, i| {
            let pos = weak_order_position(&self.column(i)).expect("columns are weak orders");
            acc * 13 + pos as u64
        })
    }

    /// Number of individuals `N`.
    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[PairwisePreferences; 3] {
        &self.rows
    }

    /// Row `j`, 0-based.
    pub fn row(&self, j: usize) -> PairwisePreferences {
        self.rows[j]
    }

    /// Column of individual `i + 1`.
    pub fn column(&self, i: usize) -> PreferenceRelation {
        PreferenceRelation::from_array([self.rows[0].get(i), self.rows[1].get(i), self.rows[2].get(i)])
    }

    pub fn columns(&self) -> Vec<PreferenceRelation> {
        (0..self.n()).map(|i| self.column(i)).collect()
    }

    pub fn is_strict(&self) -> bool {
        self.rows.iter().all(|r| r.is_strict())
    }

    /// Entrywise negation. Negated columns are still weak orders since
    /// `vals` is closed under swapping `0` and `1`.
    pub fn negate(&self) -> Self {
        let rows = self.rows.map(|r| r.negate());
        Profile::from_rows(&rows).expect("negation preserves weak-order columns")
    }
}

impl fmt::Display for Profile {
    /// `r1=010 r2=001 r3=100`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r1={} r2={} r3={}", self.rows[0], self.rows[1], self.rows[2])
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Profile({self})")
    }
}

/// The six row arrangements of `{r, ¬r, q}` with `r` strict:
/// `(r,¬r,q), (r,q,¬r), (q,r,¬r), (¬r,r,q), (¬r,q,r), (q,¬r,r)`.
pub fn opposite_row_profiles(r: &PairwisePreferences, q: &PairwisePreferences) -> Result<[Profile; 6]> {
    if !r.is_strict() {
        return Err(Error::NonStrictRow);
    }
    if r.len() != q.len() {
        return Err(Error::DimensionMismatch {
            expected: r.len(),
            found: q.len(),
        });
    }
    arrangements(*r, r.negate(), *q)
}

/// The six row arrangements of `{r, ¬r, Δe}` for any `r`.
pub fn weak_opposite_profiles(r: &PairwisePreferences) -> Result<[Profile; 6]> {
    let indifferent = PairwisePreferences::delta(TernaryValue::E, r.len())?;
    arrangements(*r, r.negate(), indifferent)
}

fn arrangements(r: PairwisePreferences, nr: PairwisePreferences, q: PairwisePreferences) -> Result<[Profile; 6]> {
    Ok([
        Profile::from_rows(&[r, nr, q])?,
        Profile::from_rows(&[r, q, nr])?,
        Profile::from_rows(&[q, r, nr])?,
        Profile::from_rows(&[nr, r, q])?,
        Profile::from_rows(&[nr, q, r])?,
        Profile::from_rows(&[q, nr, r])?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(s: &str) -> PreferenceRelation {
        s.parse().unwrap()
    }

    fn pair(s: &str) -> PairwisePreferences {
        s.parse().unwrap()
    }

    fn table2() -> Profile {
        Profile::from_columns(&[rel("001"), rel("100"), rel("010")]).unwrap()
    }

    #[test]
    fn example_profile_in_both_forms() {
        let by_cols = Profile::from_columns(&[rel("e01"), rel("eee"), rel("011"), rel("001")]).unwrap();
        let by_rows = Profile::from_rows(&[pair("ee00"), pair("0e10"), pair("1e11")]).unwrap();
        assert_eq!(by_cols, by_rows);
        assert_eq!(by_cols.n(), 4);
    }

    #[test]
    fn condorcet_profile_rows() {
        let m = table2();
        let from_rows = Profile::from_rows(&[pair("010"), pair("001"), pair("100")]).unwrap();
        assert_eq!(m, from_rows);
    }

    #[test]
    fn cycle_columns_rejected() {
        let err = Profile::from_columns(&[rel("001"), rel("000")]).unwrap_err();
        assert_eq!(err, Error::CycleColumn(2));
        let err = Profile::from_rows(&[pair("00"), pair("00"), pair("00")]).unwrap_err();
        assert_eq!(err, Error::CycleColumn(1));
    }

    #[test]
    fn dimension_errors() {
        assert!(matches!(
            Profile::from_columns(&[rel("001"), rel("0e1e")]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(
            Profile::from_columns(&[rel("0e1e"), rel("0e1e")]).unwrap_err(),
            Error::UnsupportedAlternativeCount(4)
        );
        assert!(matches!(
            Profile::from_rows(&[pair("00"), pair("001"), pair("11")]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert_eq!(
            Profile::from_rows(&[pair("01"), pair("10"), pair("ee"), pair("ee")]).unwrap_err(),
            Error::UnsupportedAlternativeCount(4)
        );
    }

    #[test]
    fn negated_condorcet_profile() {
        let neg = table2().negate();
        assert_eq!(neg.columns(), vec![rel("110"), rel("011"), rel("101")]);
        assert!(neg.columns().iter().all(|c| c.is_weak_order()));
    }

    #[test]
    fn opposite_rows() {
        let all = opposite_row_profiles(&pair("01"), &pair("ee")).unwrap();
        assert_eq!(all.len(), 6);
        let all = opposite_row_profiles(&pair("00"), &pair("11")).unwrap();
        assert_eq!(all[1].rows(), &[pair("00"), pair("11"), pair("11")]);
        assert_eq!(all[1].columns(), vec![rel("011"), rel("011")]);
        assert_eq!(
            opposite_row_profiles(&pair("0e"), &pair("11")).unwrap_err(),
            Error::NonStrictRow
        );
    }

    #[test]
    fn weak_opposite_rows() {
        let all = weak_opposite_profiles(&pair("ee")).unwrap();
        assert!(all.iter().all(|m| m.columns() == vec![rel("eee"), rel("eee")]));
        let all = weak_opposite_profiles(&pair("0e")).unwrap();
        assert_eq!(all[0].columns(), vec![rel("01e"), rel("eee")]);
        let all = weak_opposite_profiles(&pair("10e")).unwrap();
        assert_eq!(all[2].columns(), vec![rel("e10"), rel("e01"), rel("eee")]);
    }

    #[test]
    fn index_round_trip() {
        for idx in [0u64, 1, 12, 13, 100, 168] {
            let m = Profile::from_index(2, idx).unwrap();
            assert_eq!(m.index(), idx);
        }
        assert!(Profile::from_index(2, 169).is_err());
    }
}
