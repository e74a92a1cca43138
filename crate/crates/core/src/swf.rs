//! Social welfare functions on three alternatives.
//!
//! An [`IiaSwf`] is the pairwise-comparison-function form: one lookup table
//! `Pair(N) → {0, e, 1}` per adjacent pair, applied row by row. A
//! [`GeneralSwf`] tabulates an arbitrary map from profiles to relations for
//! tiny `N`, and [`GeneralSwf::decompose_iia`] recovers the table form when
//! one exists.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::{profile_count, weak_order_digits};
use crate::error::{Error, Result};
use crate::pairs::PairwisePreferences;
use crate::profile::Profile;
use crate::relation::PreferenceRelation;
use crate::ternary::{pow3, Packed, TernaryValue};

/// Largest `N` for which pairwise comparison tables are built (`3^12` entries).
pub const MAX_TABLE_INDIVIDUALS: usize = 12;

/// Largest `N` for a tabulated [`GeneralSwf`] (`13^4` profiles).
pub const MAX_GENERAL_INDIVIDUALS: usize = 4;

/// Pairwise majority on one row: strict `0` votes against strict `1` votes,
/// `e` entries abstain, equal counts give `e`.
pub fn majority_of(votes: impl IntoIterator<Item = TernaryValue>) -> TernaryValue {
    let (mut zeros, mut ones) = (0usize, 0usize);
    for v in votes {
        match v {
            TernaryValue::Zero => zeros += 1,
            TernaryValue::One => ones += 1,
            TernaryValue::E => {}
        }
    }
    match zeros.cmp(&ones) {
        std::cmp::Ordering::Greater => TernaryValue::Zero,
        std::cmp::Ordering::Less => TernaryValue::One,
        std::cmp::Ordering::Equal => TernaryValue::E,
    }
}

fn check_table_individuals(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadDimension {
            what: "individuals",
            value: n,
            expected: ">= 2",
        });
    }
    if n > MAX_TABLE_INDIVIDUALS {
        return Err(Error::TooLarge {
            what: "pairwise comparison table",
            n,
            max: MAX_TABLE_INDIVIDUALS,
        });
    }
    Ok(())
}

fn check_individual(i: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, n })
    }
}

/// A total map `Pair(N) → {0, e, 1}`, stored densely by row rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairwiseComparisonFunction {
    n: usize,
    table: Box<[TernaryValue]>,
}

impl PairwiseComparisonFunction {
    /// Wraps a table indexed by row rank; its length must be `3^n`.
    pub fn new(n: usize, table: Vec<TernaryValue>) -> Result<Self> {
        check_table_individuals(n)?;
        let expected = pow3(n) as usize;
        if table.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: table.len(),
            });
        }
        Ok(PairwiseComparisonFunction {
            n,
            table: table.into_boxed_slice(),
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(&PairwisePreferences) -> TernaryValue) -> Result<Self> {
        check_table_individuals(n)?;
        let table = (0..pow3(n))
            .map(|rank| f(&PairwisePreferences::from_packed(Packed::from_rank(n, rank))))
            .collect();
        Ok(PairwiseComparisonFunction { n, table })
    }

    pub fn majority(n: usize) -> Result<Self> {
        Self::from_fn(n, |r| majority_of(r.entries()))
    }

    /// Projection onto individual `i` (1-based).
    pub fn projection(i: usize, n: usize) -> Result<Self> {
        check_individual(i, n)?;
        Self::from_fn(n, |r| r.get(i - 1))
    }

    /// First strict entry along `order` (1-based individuals), else `e`.
    pub fn hierarchical(order: &[usize], n: usize) -> Result<Self> {
        for &i in order {
            check_individual(i, n)?;
        }
        let mut seen = vec![false; n + 1];
        for &i in order {
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid {
                    what: "hierarchy",
                    message: format!("individual {i} listed twice"),
                });
            }
        }
        Self::from_fn(n, |r| {
            order
                .iter()
                .map(|&i| r.get(i - 1))
                .find(|v| v.is_strict())
                .unwrap_or(TernaryValue::E)
        })
    }

    pub fn constant(v: TernaryValue, n: usize) -> Result<Self> {
        Self::from_fn(n, |_| v)
    }

    /// Number of individuals `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: &PairwisePreferences) -> TernaryValue {
        debug_assert_eq!(r.len(), self.n);
        self.table[r.rank() as usize]
    }

    #[inline]
    pub fn get_rank(&self, rank: u64) -> TernaryValue {
        self.table[rank as usize]
    }

    pub fn table(&self) -> &[TernaryValue] {
        &self.table
    }

    /// Copy with the output for `r` replaced.
    pub fn with_entry(&self, r: &PairwisePreferences, v: TernaryValue) -> Self {
        let mut out = self.clone();
        out.table[r.rank() as usize] = v;
        out
    }

    /// Copy with every output negated.
    pub fn negated(&self) -> Self {
        PairwiseComparisonFunction {
            n: self.n,
            table: self.table.iter().map(|v| v.negate()).collect(),
        }
    }

    /// `(input, output)` pairs in enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = (PairwisePreferences, TernaryValue)> + '_ {
        self.table.iter().enumerate().map(move |(rank, &v)| {
            (
                PairwisePreferences::from_packed(Packed::from_rank(self.n, rank as u64)),
                v,
            )
        })
    }
}

impl fmt::Debug for PairwiseComparisonFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairwiseComparisonFunction(n={}, ", self.n)?;
        for v in self.table.iter() {
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A social welfare function satisfying IIA, given by its three pairwise
/// comparison functions `(s1, s2, s3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IiaSwf {
    components: [PairwiseComparisonFunction; 3],
}

impl IiaSwf {
    pub fn new(
        s1: PairwiseComparisonFunction,
        s2: PairwiseComparisonFunction,
        s3: PairwiseComparisonFunction,
    ) -> Result<Self> {
        for s in [&s2, &s3] {
            if s.n != s1.n {
                return Err(Error::DimensionMismatch {
                    expected: s1.n,
                    found: s.n,
                });
            }
        }
        Ok(IiaSwf {
            components: [s1, s2, s3],
        })
    }

    /// The neutral SWF using `s` for every pair.
    pub fn symmetric(s: PairwiseComparisonFunction) -> Self {
        IiaSwf {
            components: [s.clone(), s.clone(), s],
        }
    }

    pub fn n(&self) -> usize {
        self.components[0].n
    }

    /// Component `j`, 1-based.
    pub fn component(&self, j: usize) -> &PairwiseComparisonFunction {
        &self.components[j - 1]
    }

    pub fn components(&self) -> &[PairwiseComparisonFunction; 3] {
        &self.components
    }

    /// Copy with component `j` (1-based) replaced.
    pub fn with_component(&self, j: usize, s: PairwiseComparisonFunction) -> Result<Self> {
        check_individual(j, 3).map_err(|_| Error::IndexOutOfRange { index: j, n: 3 })?;
        let mut components = self.components.clone();
        components[j - 1] = s;
        let [a, b, c] = components;
        IiaSwf::new(a, b, c)
    }

    /// `w(r1, r2, r3) = (s1(r1), s2(r2), s3(r3))`. The result may be a cycle.
    pub fn apply(&self, m: &Profile) -> Result<PreferenceRelation> {
        if m.n() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: m.n(),
            });
        }
        let rows = m.rows();
        Ok(PreferenceRelation::from_array(std::array::from_fn(|j| {
            self.components[j].get(&rows[j])
        })))
    }

    /// Aggregate of three rows given by rank.
    #[inline]
    pub(crate) fn apply_ranks(&self, ranks: [u64; 3]) -> [TernaryValue; 3] {
        std::array::from_fn(|j| self.components[j].get_rank(ranks[j]))
    }

    /// Aggregate of the profile at `index` in enumeration order, without
    /// building the profile.
    pub(crate) fn apply_index(&self, index: u64) -> [TernaryValue; 3] {
        self.apply_ranks(profile_row_ranks(self.n(), index))
    }
}

/// Row ranks of the profile at `index`.
#[inline]
pub(crate) fn profile_row_ranks(n: usize, mut index: u64) -> [u64; 3] {
    let digits = weak_order_digits();
    let mut ranks = [0u64; 3];
    let mut weight = 1u64;
    for _ in 0..n {
        let d = &digits[(index % 13) as usize];
        index /= 13;
        for j in 0..3 {
            ranks[j] += u64::from(d[j]) * weight;
        }
        weight *= 3;
    }
    ranks
}

/// True when the three values form a preference cycle.
#[inline]
pub(crate) fn is_cycle3(t: [TernaryValue; 3]) -> bool {
    PreferenceRelation::from_array(t).is_cycle()
}

/// Pairwise majority on `n` individuals, identical on every pair.
pub fn pairwise_majority(n: usize) -> Result<IiaSwf> {
    Ok(IiaSwf::symmetric(PairwiseComparisonFunction::majority(n)?))
}

/// Individual `i` (1-based) decides every pair.
pub fn dictator(i: usize, n: usize) -> Result<IiaSwf> {
    Ok(IiaSwf::symmetric(PairwiseComparisonFunction::projection(i, n)?))
}

/// The first individual along `order` with a strict vote decides.
pub fn hierarchical_dictator(order: &[usize], n: usize) -> Result<IiaSwf> {
    Ok(IiaSwf::symmetric(PairwiseComparisonFunction::hierarchical(order, n)?))
}

/// Ignores the profile and returns `p`.
pub fn constant_swf(p: &PreferenceRelation, n: usize) -> Result<IiaSwf> {
    if p.len() != 3 {
        return Err(Error::UnsupportedAlternativeCount(p.len()));
    }
    IiaSwf::new(
        PairwiseComparisonFunction::constant(p.get(0), n)?,
        PairwiseComparisonFunction::constant(p.get(1), n)?,
        PairwiseComparisonFunction::constant(p.get(2), n)?,
    )
}

/// Always `(e, e, e)`.
pub fn indifference_swf(n: usize) -> Result<IiaSwf> {
    constant_swf(&PreferenceRelation::from_array([TernaryValue::E; 3]), n)
}

/// A named builtin rule, as written in SWF files (`dictator:2`,
/// `hierarchical:1,2`, `constant:001`, ...).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltinSwf {
    Majority,
    Dictator(usize),
    Hierarchical(Vec<usize>),
    Constant(PreferenceRelation),
    Indifference,
}

impl BuiltinSwf {
    pub fn build(&self, n: usize) -> Result<IiaSwf> {
        match self {
            BuiltinSwf::Majority => pairwise_majority(n),
            BuiltinSwf::Dictator(i) => dictator(*i, n),
            BuiltinSwf::Hierarchical(order) => hierarchical_dictator(order, n),
            BuiltinSwf::Constant(p) => constant_swf(p, n),
            BuiltinSwf::Indifference => indifference_swf(n),
        }
    }
}

impl fmt::Display for BuiltinSwf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinSwf::Majority => write!(f, "majority"),
            BuiltinSwf::Dictator(i) => write!(f, "dictator:{i}"),
            BuiltinSwf::Hierarchical(order) => {
                let list: Vec<String> = order.iter().map(|i| i.to_string()).collect();
                write!(f, "hierarchical:{}", list.join(","))
            }
            BuiltinSwf::Constant(p) => write!(f, "constant:{p}"),
            BuiltinSwf::Indifference => write!(f, "indifference"),
        }
    }
}

impl FromStr for BuiltinSwf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |message: String| Error::Invalid {
            what: "builtin SWF",
            message,
        };
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let parse_index = |text: &str| {
            text.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("bad individual index {text:?}")))
        };
        match (name, arg) {
            ("majority", None) => Ok(BuiltinSwf::Majority),
            ("indifference", None) => Ok(BuiltinSwf::Indifference),
            ("dictator", Some(i)) => Ok(BuiltinSwf::Dictator(parse_index(i)?)),
            ("hierarchical", Some(list)) => Ok(BuiltinSwf::Hierarchical(
                list.split(',').map(parse_index).collect::<Result<_>>()?,
            )),
            ("constant", Some(t)) => Ok(BuiltinSwf::Constant(t.parse()?)),
            _ => Err(invalid(format!(
                "unknown builtin {s:?} (expected majority, dictator:<i>, hierarchical:<i,j,...>, constant:<t1t2t3> or indifference)"
            ))),
        }
    }
}

/// An arbitrary SWF on three alternatives, tabulated over all `13^N`
/// profiles in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSwf {
    n: usize,
    table: Vec<PreferenceRelation>,
}

/// Outcome of [`GeneralSwf::decompose_iia`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IiaDecomposition {
    Iia(IiaSwf),
    /// Two profiles agreeing on row `component` whose aggregates differ in
    /// that entry.
    NotIia {
        component: usize,
        first: Profile,
        second: Profile,
        first_output: TernaryValue,
        second_output: TernaryValue,
    },
}

impl GeneralSwf {
    fn check_n(n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::BadDimension {
                what: "individuals",
                value: n,
                expected: ">= 2",
            });
        }
        if n > MAX_GENERAL_INDIVIDUALS {
            return Err(Error::TooLarge {
                what: "tabulated SWF",
                n,
                max: MAX_GENERAL_INDIVIDUALS,
            });
        }
        Ok(())
    }

    pub fn tabulate(n: usize, f: impl Fn(&Profile) -> PreferenceRelation) -> Result<Self> {
        Self::check_n(n)?;
        let table = (0..profile_count(n))
            .map(|idx| {
                let m = Profile::from_index(n, idx).expect("index in range");
                let t = f(&m);
                if t.len() != 3 {
                    Err(Error::UnsupportedAlternativeCount(t.len()))
                } else {
                    Ok(t)
                }
            })
            .collect::<Result<_>>()?;
        Ok(GeneralSwf { n, table })
    }

    pub fn from_iia(swf: &IiaSwf) -> Result<Self> {
        Self::tabulate(swf.n(), |m| swf.apply(m).expect("matching dimension"))
    }

    /// Symmetric Borda count: each alternative scores `+1` for every
    /// alternative an individual ranks strictly below it and `-1` for every
    /// one ranked strictly above; alternatives are ordered by total score.
    pub fn borda(n: usize) -> Result<Self> {
        Self::tabulate(n, |m| {
            let mut score = [0i64; 3];
            for c in m.columns() {
                for i in 0..3 {
                    let next = (i + 1) % 3;
                    match c.get(i) {
                        TernaryValue::Zero => {
                            score[i] += 1;
                            score[next] -= 1;
                        }
                        TernaryValue::One => {
                            score[i] -= 1;
                            score[next] += 1;
                        }
                        TernaryValue::E => {}
                    }
                }
            }
            PreferenceRelation::from_array(std::array::from_fn(|i| match score[i].cmp(&score[(i + 1) % 3]) {
                std::cmp::Ordering::Greater => TernaryValue::Zero,
                std::cmp::Ordering::Equal => TernaryValue::E,
                std::cmp::Ordering::Less => TernaryValue::One,
            }))
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, m: &Profile) -> Result<PreferenceRelation> {
        if m.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: m.n(),
            });
        }
        Ok(self.table[m.index() as usize])
    }

    /// Recovers `(s1, s2, s3)` when output entry `j` depends on row `j`
    /// alone across every profile; otherwise returns the first witness pair
    /// in enumeration order.
    pub fn decompose_iia(&self) -> IiaDecomposition {
        let n = self.n;
        let size = pow3(n) as usize;
        let mut tables: [Vec<Option<(TernaryValue, u64)>>; 3] = std::array::from_fn(|_| vec![None; size]);
        for (idx, out) in self.table.iter().enumerate() {
            let ranks = profile_row_ranks(n, idx as u64);
            for j in 0..3 {
                let v = out.get(j);
                let slot = &mut tables[j][ranks[j] as usize];
                match *slot {
                    None => *slot = Some((v, idx as u64)),
                    Some((prev, prev_idx)) if prev != v => {
                        return IiaDecomposition::NotIia {
                            component: j + 1,
                            first: Profile::from_index(n, prev_idx).expect("index in range"),
                            second: Profile::from_index(n, idx as u64).expect("index in range"),
                            first_output: prev,
                            second_output: v,
                        };
                    }
                    Some(_) => {}
                }
            }
        }
        let [t1, t2, t3] = tables.map(|t| {
            let values = t
                .into_iter()
                .map(|slot| slot.expect("every row occurs in some profile").0)
                .collect();
            PairwiseComparisonFunction::new(n, values).expect("table size")
        });
        IiaDecomposition::Iia(IiaSwf::new(t1, t2, t3).expect("same n"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ternary::TernaryValue::*;

    fn pair(s: &str) -> PairwisePreferences {
        s.parse().unwrap()
    }

    fn rel(s: &str) -> PreferenceRelation {
        s.parse().unwrap()
    }

    fn table2() -> Profile {
        Profile::from_columns(&[rel("001"), rel("100"), rel("010")]).unwrap()
    }

    #[test]
    fn majority_on_condorcet_profile_cycles() {
        let w = pairwise_majority(3).unwrap();
        let out = w.apply(&table2()).unwrap();
        assert_eq!(out, rel("000"));
        assert!(out.is_cycle());
    }

    #[test]
    fn majority_on_four_voter_example() {
        let m = Profile::from_rows(&[pair("ee00"), pair("0e10"), pair("1e11")]).unwrap();
        assert_eq!(pairwise_majority(4).unwrap().apply(&m).unwrap(), rel("001"));
    }

    #[test]
    fn majority_component_values() {
        let s3 = PairwiseComparisonFunction::majority(3).unwrap();
        assert_eq!(s3.get(&pair("010")), Zero);
        assert_eq!(s3.get(&pair("ee1")), One);
        assert_eq!(PairwiseComparisonFunction::majority(2).unwrap().get(&pair("01")), E);
    }

    #[test]
    fn dictators() {
        let d = dictator(2, 3).unwrap();
        assert_eq!(d.component(1).get(&pair("010")), One);
        let h = hierarchical_dictator(&[1, 2], 2).unwrap();
        assert_eq!(h.component(1).get(&pair("e0")), Zero);
        assert_eq!(h.component(1).get(&pair("ee")), E);
        assert_eq!(dictator(4, 3).unwrap_err(), Error::IndexOutOfRange { index: 4, n: 3 });
        assert_eq!(dictator(0, 3).unwrap_err(), Error::IndexOutOfRange { index: 0, n: 3 });
    }

    #[test]
    fn dictator_returns_its_column() {
        let d = dictator(1, 2).unwrap();
        for m in crate::enumerate::enumerate_profiles(2, 3).unwrap() {
            assert_eq!(d.apply(&m).unwrap(), m.column(0));
        }
    }

    #[test]
    fn constants() {
        let c = constant_swf(&rel("001"), 2).unwrap();
        let m = Profile::from_index(2, 57).unwrap();
        assert_eq!(c.apply(&m).unwrap(), rel("001"));
        assert_eq!(indifference_swf(3).unwrap().apply(&table2()).unwrap(), rel("eee"));
    }

    #[test]
    fn apply_checks_dimensions() {
        let w = pairwise_majority(2).unwrap();
        assert_eq!(
            w.apply(&table2()).unwrap_err(),
            Error::DimensionMismatch { expected: 2, found: 3 }
        );
    }

    #[test]
    fn apply_index_agrees_with_apply() {
        let w = pairwise_majority(3).unwrap();
        for idx in (0..2197).step_by(37) {
            let m = Profile::from_index(3, idx).unwrap();
            assert_eq!(PreferenceRelation::from_array(w.apply_index(idx)), w.apply(&m).unwrap());
        }
    }

    #[test]
    fn builtin_names_round_trip() {
        for text in [
            "majority",
            "dictator:2",
            "hierarchical:2,1",
            "constant:0e1",
            "indifference",
        ] {
            let b: BuiltinSwf = text.parse().unwrap();
            assert_eq!(b.to_string(), text);
        }
        assert!("borda".parse::<BuiltinSwf>().is_err());
        assert!("dictator:x".parse::<BuiltinSwf>().is_err());
    }

    #[test]
    fn decompose_recovers_iia_tables() {
        for swf in [pairwise_majority(2).unwrap(), dictator(1, 2).unwrap()] {
            let g = GeneralSwf::from_iia(&swf).unwrap();
            assert_eq!(g.decompose_iia(), IiaDecomposition::Iia(swf));
        }
    }

    #[test]
    fn borda_is_not_iia() {
        let g = GeneralSwf::borda(2).unwrap();
        match g.decompose_iia() {
            IiaDecomposition::NotIia {
                component,
                first,
                second,
                first_output,
                second_output,
            } => {
                let j = component - 1;
                assert_eq!(first.row(j), second.row(j));
                assert_ne!(first_output, second_output);
                assert_eq!(g.apply(&first).unwrap().get(j), first_output);
                assert_eq!(g.apply(&second).unwrap().get(j), second_output);
            }
            other => panic!("Borda decomposed: {other:?}"),
        }
    }

    #[test]
    fn general_swf_size_limits() {
        assert!(matches!(GeneralSwf::borda(5), Err(Error::TooLarge { .. })));
        assert!(matches!(
            PairwiseComparisonFunction::majority(13),
            Err(Error::TooLarge { .. })
        ));
    }
}
