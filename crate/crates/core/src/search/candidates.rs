use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::swf::{IiaSwf, PairwiseComparisonFunction};
use crate::ternary::{pow3, Packed, TernaryValue};

/// Largest `N` a candidate space is defined for.
pub const MAX_CANDIDATE_INDIVIDUALS: usize = 3;

/// Largest candidate count swept exhaustively (`3^12`).
pub const MAX_EXHAUSTIVE_CANDIDATES: u64 = 531_441;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SweepMode {
    /// One table shared by all three components.
    Symmetric,
    /// Three independent tables.
    FullTriples,
}

impl SweepMode {
    pub fn name(self) -> &'static str {
        match self {
            SweepMode::Symmetric => "symmetric",
            SweepMode::FullTriples => "full",
        }
    }
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(SweepMode::Symmetric),
            "full" | "full-triples" => Ok(SweepMode::FullTriples),
            _ => Err(Error::Invalid {
                what: "sweep mode",
                message: format!("unknown mode {s:?} (expected symmetric or full)"),
            }),
        }
    }
}

/// The IIA SWFs on `n` individuals, as digit strings over the free table
/// entries.
///
/// With `unanimity_fixed`, `Δ0 ↦ 0` and `Δ1 ↦ 1` are pinned in every
/// component and the remaining inputs are free. Variables are ordered
/// input-major, component-minor, and the first variable is the most
/// significant digit of a candidate index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSpace {
    n: usize,
    mode: SweepMode,
    unanimity_fixed: bool,
    free_inputs: Vec<u64>,
}

impl CandidateSpace {
    pub fn new(n: usize, mode: SweepMode, unanimity_fixed: bool) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadDimension {
                what: "individuals",
                value: n,
                expected: ">= 2",
            });
        }
        if n > MAX_CANDIDATE_INDIVIDUALS {
            return Err(Error::TooLarge {
                what: "candidate space",
                n,
                max: MAX_CANDIDATE_INDIVIDUALS,
            });
        }
        let pinned = [
            unanimous_rank(n, TernaryValue::Zero),
            unanimous_rank(n, TernaryValue::One),
        ];
        let free_inputs = (0..pow3(n))
            .filter(|rank| !unanimity_fixed || !pinned.contains(rank))
            .collect();
        Ok(CandidateSpace {
            n,
            mode,
            unanimity_fixed,
            free_inputs,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> SweepMode {
        self.mode
    }

    pub fn unanimity_fixed(&self) -> bool {
        self.unanimity_fixed
    }

    /// Ranks of the free table inputs, ascending.
    pub fn free_inputs(&self) -> &[u64] {
        &self.free_inputs
    }

    fn copies(&self) -> usize {
        match self.mode {
            SweepMode::Symmetric => 1,
            SweepMode::FullTriples => 3,
        }
    }

    pub fn variables(&self) -> usize {
        self.free_inputs.len() * self.copies()
    }

    /// `3^variables`, or `None` past `u64`.
    pub fn size(&self) -> Option<u64> {
        3u64.checked_pow(self.variables() as u32)
    }

    /// The tables before any free variable is set: pinned entries filled,
    /// free entries `e`.
    pub(crate) fn base_tables(&self) -> [Vec<TernaryValue>; 3] {
        std::array::from_fn(|_| {
            let mut t = vec![TernaryValue::E; pow3(self.n) as usize];
            if self.unanimity_fixed {
                t[unanimous_rank(self.n, TernaryValue::Zero) as usize] = TernaryValue::Zero;
                t[unanimous_rank(self.n, TernaryValue::One) as usize] = TernaryValue::One;
            }
            t
        })
    }

    /// Builds the candidate with the given variable digits (`0`, `1`, `2`
    /// for `0`, `e`, `1`).
    pub fn from_digits(&self, digits: &[u8]) -> IiaSwf {
        assert_eq!(digits.len(), self.variables(), "one digit per variable");
        let mut tables = self.base_tables();
        let copies = self.copies();
        for (v, &d) in digits.iter().enumerate() {
            let input = self.free_inputs[v / copies] as usize;
            let value = TernaryValue::from_digit(d).expect("base-3 digit");
            match self.mode {
                SweepMode::Symmetric => tables.iter_mut().for_each(|t| t[input] = value),
                SweepMode::FullTriples => tables[v % 3][input] = value,
            }
        }
        build(self.n, tables)
    }

    /// The candidate at `index`; panics past [`CandidateSpace::size`].
    pub fn candidate(&self, mut index: u64) -> IiaSwf {
        let size = self.size().expect("space size fits in u64");
        assert!(index < size, "candidate index out of range");
        let mut digits = vec![0u8; self.variables()];
        for d in digits.iter_mut().rev() {
            *d = (index % 3) as u8;
            index /= 3;
        }
        self.from_digits(&digits)
    }

    /// A uniformly random candidate.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> IiaSwf {
        let digits: Vec<u8> = (0..self.variables()).map(|_| rng.random_range(0..3u8)).collect();
        self.from_digits(&digits)
    }
}

pub(crate) fn unanimous_rank(n: usize, x: TernaryValue) -> u64 {
    Packed::constant(n, x).rank()
}

pub(crate) fn build(n: usize, tables: [Vec<TernaryValue>; 3]) -> IiaSwf {
    let [a, b, c] = tables.map(|t| PairwiseComparisonFunction::new(n, t).expect("full table"));
    IiaSwf::new(a, b, c).expect("same n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_unanimity;
    use rand::SeedableRng;

    #[test]
    fn symmetric_two_voter_size() {
        let space = CandidateSpace::new(2, SweepMode::Symmetric, true).unwrap();
        assert_eq!(space.variables(), 7);
        assert_eq!(space.size(), Some(2187));
        let full = CandidateSpace::new(2, SweepMode::FullTriples, true).unwrap();
        assert_eq!(full.size(), Some(3u64.pow(21)));
        let open = CandidateSpace::new(2, SweepMode::Symmetric, false).unwrap();
        assert_eq!(open.size(), Some(3u64.pow(9)));
    }

    #[test]
    fn candidates_are_distinct_and_unanimous() {
        let space = CandidateSpace::new(2, SweepMode::Symmetric, true).unwrap();
        let all: std::collections::HashSet<_> = (0..2187).map(|i| space.candidate(i)).collect();
        assert_eq!(all.len(), 2187);
        assert!(all.iter().all(|s| check_unanimity(s).holds));
        assert!(all.iter().all(|s| s.component(1) == s.component(3)));
    }

    #[test]
    fn first_digit_is_most_significant() {
        let space = CandidateSpace::new(2, SweepMode::Symmetric, true).unwrap();
        let first = space.free_inputs()[0] as usize;
        assert_eq!(space.candidate(729 * 2).component(1).table()[first], TernaryValue::One);
        assert_eq!(space.candidate(2).component(1).table()[first], TernaryValue::Zero);
    }

    #[test]
    fn full_triples_vary_components_independently() {
        let space = CandidateSpace::new(2, SweepMode::FullTriples, true).unwrap();
        let swf = space.candidate(1);
        assert_ne!(swf.component(1), swf.component(3));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert!(check_unanimity(&space.random(&mut rng)).holds);
    }

    #[test]
    fn size_limits() {
        assert!(matches!(
            CandidateSpace::new(9, SweepMode::Symmetric, true),
            Err(Error::TooLarge { .. })
        ));
        assert!(CandidateSpace::new(3, SweepMode::FullTriples, true)
            .unwrap()
            .size()
            .is_none());
    }
}
