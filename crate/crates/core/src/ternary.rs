//! Ternary preference values and the packed tuple storage shared by
//! preference relations and pairwise preferences.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Not;

/// One pairwise comparison between `x` and `y`.
///
/// `Zero` encodes `x ≺ y`, `One` encodes `y ≺ x` and `E` encodes `x ∼ y`.
/// The derived ordering is the symbol order `0 < e < 1` used for all
/// enumeration and serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum TernaryValue {
    Zero = 0,
    E = 1,
    One = 2,
}

impl TernaryValue {
    pub const ALL: [TernaryValue; 3] = [TernaryValue::Zero, TernaryValue::E, TernaryValue::One];
    pub const STRICT: [TernaryValue; 2] = [TernaryValue::Zero, TernaryValue::One];

    /// Swaps the strict values; `E` is fixed.
    #[inline]
    pub fn negate(self) -> Self {
        match self {
            TernaryValue::Zero => TernaryValue::One,
            TernaryValue::E => TernaryValue::E,
            TernaryValue::One => TernaryValue::Zero,
        }
    }

    #[inline]
    pub fn is_strict(self) -> bool {
        self != TernaryValue::E
    }

    /// Base-3 digit in symbol order.
    #[inline]
    pub fn digit(self) -> u8 {
        self as u8
    }

    #[inline]
    pub fn from_digit(digit: u8) -> Option<Self> {
        match digit {
            0 => Some(TernaryValue::Zero),
            1 => Some(TernaryValue::E),
            2 => Some(TernaryValue::One),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            TernaryValue::Zero => '0',
            TernaryValue::E => 'e',
            TernaryValue::One => '1',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(TernaryValue::Zero),
            'e' | 'E' => Some(TernaryValue::E),
            '1' => Some(TernaryValue::One),
            _ => None,
        }
    }
}

impl Not for TernaryValue {
    type Output = TernaryValue;

    fn not(self) -> TernaryValue {
        self.negate()
    }
}

impl fmt::Display for TernaryValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A subset of `{0, e, 1}`, as returned by `vals`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ValueSet(u8);

impl ValueSet {
    pub const EMPTY: ValueSet = ValueSet(0);

    pub fn of(values: &[TernaryValue]) -> Self {
        values.iter().fold(ValueSet::EMPTY, |set, &v| set.with(v))
    }

    #[inline]
    pub fn with(self, v: TernaryValue) -> Self {
        ValueSet(self.0 | (1 << v.digit()))
    }

    #[inline]
    pub fn contains(self, v: TernaryValue) -> bool {
        self.0 & (1 << v.digit()) != 0
    }

    /// True when `self ⊆ other`.
    pub fn is_subset(self, other: ValueSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = TernaryValue> {
        TernaryValue::ALL.into_iter().filter(move |&v| self.contains(v))
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

const LOW_LANES: u64 = 0x5555_5555_5555_5555;

/// Up to 32 ternary values packed two bits apiece, entry `i` at bits `2i..2i+2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Packed {
    len: u8,
    bits: u64,
}

impl Packed {
    pub(crate) const MAX_LEN: usize = 32;

    pub(crate) fn from_slice(values: &[TernaryValue]) -> Self {
        debug_assert!(values.len() <= Self::MAX_LEN);
        let bits = values
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, v)| acc | (u64::from(v.digit()) << (2 * i)));
        Packed {
            len: values.len() as u8,
            bits,
        }
    }

    pub(crate) fn constant(len: usize, v: TernaryValue) -> Self {
        debug_assert!(len <= Self::MAX_LEN);
        let lanes = Self::lane_mask(len);
        let bits = match v {
            TernaryValue::Zero => 0,
            TernaryValue::E => lanes,
            TernaryValue::One => lanes << 1,
        };
        Packed { len: len as u8, bits }
    }

    #[inline]
    fn lane_mask(len: usize) -> u64 {
        if len >= 32 {
            LOW_LANES
        } else {
            LOW_LANES & ((1u64 << (2 * len)) - 1)
        }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> TernaryValue {
        debug_assert!(i < self.len());
        match (self.bits >> (2 * i)) & 0b11 {
            0 => TernaryValue::Zero,
            1 => TernaryValue::E,
            _ => TernaryValue::One,
        }
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = TernaryValue> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub(crate) fn to_vec(self) -> Vec<TernaryValue> {
        self.iter().collect()
    }

    /// Entrywise negation: lane `00 ↔ 10`, `01` fixed.
    #[inline]
    pub(crate) fn negate(self) -> Self {
        let lanes = Self::lane_mask(self.len());
        let low = self.bits & LOW_LANES;
        let high = (self.bits >> 1) & LOW_LANES;
        let new_high = !(high | low) & lanes;
        Packed {
            len: self.len,
            bits: (new_high << 1) | low,
        }
    }

    pub(crate) fn values(&self) -> ValueSet {
        let lanes = Self::lane_mask(self.len());
        let low = self.bits & LOW_LANES;
        let high = (self.bits >> 1) & LOW_LANES;
        let mut set = ValueSet::EMPTY;
        if (!(low | high)) & lanes != 0 {
            set = set.with(TernaryValue::Zero);
        }
        if low != 0 {
            set = set.with(TernaryValue::E);
        }
        if high != 0 {
            set = set.with(TernaryValue::One);
        }
        set
    }

    /// Base-3 rank with the first entry most significant, so that the rank
    /// order is the lexicographic order over `0 < e < 1`.
    pub(crate) fn rank(&self) -> u64 {
        self.iter().fold(0u64, |acc, v| acc * 3 + u64::from(v.digit()))
    }

    pub(crate) fn from_rank(len: usize, mut rank: u64) -> Self {
        let mut bits = 0u64;
        for i in (0..len).rev() {
            bits |= (rank % 3) << (2 * i);
            rank /= 3;
        }
        Packed { len: len as u8, bits }
    }
}

impl Ord for Packed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for Packed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Packed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.iter() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `3^k` for table sizing.
#[inline]
pub(crate) fn pow3(k: usize) -> u64 {
    3u64.pow(k as u32)
}

#[cfg(test)]
mod tests {
    use super::TernaryValue::*;
    use super::*;

    #[test]
    fn negation_table() {
        assert_eq!(Zero.negate(), One);
        assert_eq!(E.negate(), E);
        assert_eq!(One.negate(), Zero);
        for v in TernaryValue::ALL {
            assert_eq!(!!v, v);
        }
    }

    #[test]
    fn symbol_round_trip() {
        for v in TernaryValue::ALL {
            assert_eq!(TernaryValue::from_symbol(v.symbol()), Some(v));
            assert_eq!(TernaryValue::from_digit(v.digit()), Some(v));
        }
        assert_eq!(TernaryValue::from_symbol('x'), None);
    }

    #[test]
    fn packed_negate_matches_entrywise() {
        for len in [1usize, 3, 7, 32] {
            for rank in [0u64, 1, 5, 17, 3u64.pow(len.min(20) as u32) - 1] {
                let p = Packed::from_rank(len, rank);
                let expected: Vec<_> = p.iter().map(TernaryValue::negate).collect();
                assert_eq!(p.negate().to_vec(), expected);
                assert_eq!(p.negate().negate(), p);
            }
        }
    }

    #[test]
    fn packed_values_and_rank() {
        let p = Packed::from_slice(&[E, Zero, One]);
        assert_eq!(p.values(), ValueSet::of(&[Zero, E, One]));
        assert_eq!(p.rank(), 11);
        assert_eq!(Packed::from_rank(3, 11), p);
        assert_eq!(Packed::constant(4, E).values(), ValueSet::of(&[E]));
        assert_eq!(Packed::constant(2, One).to_vec(), vec![One, One]);
        assert_eq!(Packed::constant(32, Zero).values(), ValueSet::of(&[Zero]));
    }

    #[test]
    fn value_set_display() {
        assert_eq!(ValueSet::of(&[One, Zero]).to_string(), "{0,1}");
        assert!(ValueSet::of(&[E]).is_subset(ValueSet::of(&[Zero, E])));
    }
}
