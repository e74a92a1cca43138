//! Deterministic enumeration of relations, rows and profiles.
//!
//! Every enumeration is lexicographic over the symbol order `0 < e < 1`
//! with the first entry most significant, and duplicate-free.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pairs::PairwisePreferences;
use crate::profile::Profile;
use crate::relation::PreferenceRelation;
use crate::ternary::{pow3, Packed, TernaryValue};

/// Number of weak orders on three alternatives.
pub const WEAK_ORDER_COUNT: usize = 13;

/// Largest `A` accepted by [`enumerate_relations`] (`3^12` tuples).
pub const MAX_ENUMERATED_ALTERNATIVES: usize = 12;

/// Largest `N` accepted by [`enumerate_profiles`] (`13^12` profiles).
pub const MAX_ENUMERATED_INDIVIDUALS: usize = 12;

fn check_alternatives(a: usize) -> Result<()> {
    if (3..=MAX_ENUMERATED_ALTERNATIVES).contains(&a) {
        Ok(())
    } else {
        Err(Error::BadDimension {
            what: "alternatives",
            value: a,
            expected: "3..=12",
        })
    }
}

/// All `3^A` relations.
pub fn enumerate_relations(a: usize) -> Result<impl Iterator<Item = PreferenceRelation>> {
    check_alternatives(a)?;
    Ok((0..pow3(a)).map(move |rank| PreferenceRelation::from_packed(Packed::from_rank(a, rank))))
}

/// The relations on `A` alternatives that classify as weak orders.
pub fn enumerate_weak_orders(a: usize) -> Result<Vec<PreferenceRelation>> {
    Ok(enumerate_relations(a)?.filter(|t| t.is_weak_order()).collect())
}

/// The 13 weak orders on three alternatives, in enumeration order.
pub fn weak_orders() -> &'static [PreferenceRelation; WEAK_ORDER_COUNT] {
    static ORDERS: OnceLock<[PreferenceRelation; WEAK_ORDER_COUNT]> = OnceLock::new();
    ORDERS.get_or_init(|| {
        let all = enumerate_weak_orders(3).expect("three alternatives");
        all.try_into().expect("exactly 13 weak orders on three alternatives")
    })
}

/// The six strict orders on three alternatives.
pub fn strict_orders() -> Vec<PreferenceRelation> {
    weak_orders().iter().copied().filter(|t| t.is_strict()).collect()
}

/// Position of `t` within [`weak_orders`].
pub fn weak_order_position(t: &PreferenceRelation) -> Option<usize> {
    static POSITIONS: OnceLock<[Option<u8>; 27]> = OnceLock::new();
    if t.len() != 3 {
        return None;
    }
    let table = POSITIONS.get_or_init(|| {
        let mut table = [None; 27];
        for (pos, w) in weak_orders().iter().enumerate() {
            table[w.rank() as usize] = Some(pos as u8);
        }
        table
    });
    table[t.rank() as usize].map(usize::from)
}

/// Row digits of each weak order, `digits[w][j]` = base-3 digit of entry `j`.
pub(crate) fn weak_order_digits() -> &'static [[u8; 3]; WEAK_ORDER_COUNT] {
    static DIGITS: OnceLock<[[u8; 3]; WEAK_ORDER_COUNT]> = OnceLock::new();
    DIGITS.get_or_init(|| {
        let orders = weak_orders();
        std::array::from_fn(|w| std::array::from_fn(|j| orders[w].get(j).digit()))
    })
}

/// `Pair(n)`: all `3^n` rows.
pub fn enumerate_pairs(n: usize) -> Result<impl Iterator<Item = PairwisePreferences>> {
    check_individuals(n)?;
    Ok((0..pow3(n)).map(move |rank| PairwisePreferences::from_packed(Packed::from_rank(n, rank))))
}

/// `Pair⁺(n)`: the `2^n` strict rows.
pub fn enumerate_strict_pairs(n: usize) -> Result<impl Iterator<Item = PairwisePreferences>> {
    check_individuals(n)?;
    Ok((0..1u64 << n).map(move |bits| {
        let values: Vec<TernaryValue> = (0..n)
            .map(|i| {
                if bits >> (n - 1 - i) & 1 == 1 {
                    TernaryValue::One
                } else {
                    TernaryValue::Zero
                }
            })
            .collect();
        PairwisePreferences::from_packed(Packed::from_slice(&values))
    }))
}

fn check_individuals(n: usize) -> Result<()> {
    if (2..=MAX_ENUMERATED_INDIVIDUALS).contains(&n) {
        Ok(())
    } else {
        Err(Error::BadDimension {
            what: "individuals",
            value: n,
            expected: "2..=12",
        })
    }
}

/// `|Prof(3, n)| = 13^n`.
pub fn profile_count(n: usize) -> u64 {
    (WEAK_ORDER_COUNT as u64).pow(n as u32)
}

/// All profiles on `n` individuals and `a` alternatives; `a` must be 3.
pub fn enumerate_profiles(n: usize, a: usize) -> Result<impl Iterator<Item = Profile>> {
    if a != 3 {
        return Err(Error::UnsupportedAlternativeCount(a));
    }
    check_individuals(n)?;
    Ok((0..profile_count(n)).map(move |idx| Profile::from_index(n, idx).expect("index in range")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn relation_counts() {
        assert_eq!(enumerate_relations(3).unwrap().count(), 27);
        let weak = enumerate_weak_orders(3).unwrap();
        assert_eq!(weak.len(), 13);
        assert_eq!(weak.iter().filter(|t| t.is_strict()).count(), 6);
    }

    #[test]
    fn lexicographic_and_unique() {
        let all: Vec<_> = enumerate_relations(3).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].to_string(), "000");
        assert_eq!(all[1].to_string(), "00e");
        assert_eq!(all[26].to_string(), "111");
        let pairs: Vec<_> = enumerate_pairs(3).unwrap().collect();
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn strict_orders_match_the_six_listed() {
        let listed: HashSet<String> = ["001", "011", "101", "010", "100", "110"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let found: HashSet<String> = strict_orders().iter().map(|t| t.to_string()).collect();
        assert_eq!(listed, found);
    }

    #[test]
    fn strict_pairs_are_sorted_subset() {
        let strict: Vec<_> = enumerate_strict_pairs(3).unwrap().collect();
        assert_eq!(strict.len(), 8);
        assert!(strict.windows(2).all(|w| w[0] < w[1]));
        assert!(strict.iter().all(|r| r.is_strict()));
    }

    #[test]
    fn profile_enumeration_matches_column_independence() {
        let profiles: Vec<_> = enumerate_profiles(2, 3).unwrap().collect();
        assert_eq!(profiles.len(), 169);
        let unique: HashSet<_> = profiles.iter().collect();
        assert_eq!(unique.len(), 169);
        // independent count: every pair of weak orders taken as columns
        let mut direct = 0;
        for c1 in enumerate_relations(3).unwrap() {
            for c2 in enumerate_relations(3).unwrap() {
                if Profile::from_columns(&[c1, c2]).is_ok() {
                    direct += 1;
                }
            }
        }
        assert_eq!(direct, 169);
        assert!(matches!(
            enumerate_profiles(2, 4).map(|_| ()),
            Err(Error::UnsupportedAlternativeCount(4))
        ));
    }
}
