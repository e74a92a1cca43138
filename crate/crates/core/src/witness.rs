//! Constructive cycle witnesses.
//!
//! Each builder follows one proof: it locates the table entries the proof
//! reasons about, assembles the profile the proof names, and re-evaluates it.
//! A [`CycleWitness`] can only be built from a profile that really aggregates
//! to a cycle.

use std::fmt;
use std::str::FromStr;

use crate::axioms::{votes_aggregates, Axiom};
use crate::enumerate::{enumerate_pairs, enumerate_strict_pairs};
use crate::error::{Error, Result};
use crate::pairs::PairwisePreferences;
use crate::profile::Profile;
use crate::relation::PreferenceRelation;
use crate::swf::IiaSwf;
use crate::ternary::TernaryValue::{self, One, Zero, E};

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    StrictnessLemma,
    NeutralityLemma,
    /// Single-voter minimal set, with a row where the voter says `0` and
    /// some component still outputs `1`.
    ArrowCase1,
    /// Single-voter minimal set where no such row exists; built from a row
    /// on which the voter's strict vote is overruled to `e`.
    ArrowCase1Weak,
    ArrowCase2,
    ParetoIndifference,
    /// The `(0,0,0)` half of a contradictory pair.
    ContradictoryPartner,
}

impl Provenance {
    pub const ALL: [Provenance; 7] = [
        Provenance::StrictnessLemma,
        Provenance::NeutralityLemma,
        Provenance::ArrowCase1,
        Provenance::ArrowCase1Weak,
        Provenance::ArrowCase2,
        Provenance::ParetoIndifference,
        Provenance::ContradictoryPartner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Provenance::StrictnessLemma => "strictness-lemma",
            Provenance::NeutralityLemma => "neutrality-lemma",
            Provenance::ArrowCase1 => "arrow-case-1",
            Provenance::ArrowCase1Weak => "arrow-case-1-weak",
            Provenance::ArrowCase2 => "arrow-case-2",
            Provenance::ParetoIndifference => "pareto-indifference",
            Provenance::ContradictoryPartner => "contradictory-partner",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Provenance::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Invalid {
                what: "provenance",
                message: format!("unknown provenance {s:?}"),
            })
    }
}

/// A profile together with the cycle it aggregates to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    profile: Profile,
    aggregate: PreferenceRelation,
    provenance: Provenance,
}

impl CycleWitness {
    /// Evaluates `swf` on `profile`; fails unless the aggregate is a cycle.
    pub fn new(swf: &IiaSwf, profile: Profile, provenance: Provenance) -> Result<Self> {
        let aggregate = swf.apply(&profile)?;
        if !aggregate.is_cycle() {
            return Err(Error::Invalid {
                what: "cycle witness",
                message: format!("{profile} aggregates to the weak order {aggregate}"),
            });
        }
        Ok(CycleWitness {
            profile,
            aggregate,
            provenance,
        })
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn aggregate(&self) -> PreferenceRelation {
        self.aggregate
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// True when `swf` still maps the profile to the stored cycle.
    pub fn revalidate(&self, swf: &IiaSwf) -> bool {
        swf.apply(&self.profile).ok() == Some(self.aggregate) && self.aggregate.is_cycle()
    }
}

/// Contradicting profiles aggregating to `(1,1,1)` and `(0,0,0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContradictoryPair {
    m: Profile,
    m_prime: Profile,
    case: Provenance,
}

impl ContradictoryPair {
    /// Checks both aggregates and that the profiles contradict each other.
    pub fn new(swf: &IiaSwf, m: Profile, m_prime: Profile, case: Provenance) -> Result<Self> {
        let up = PreferenceRelation::from_array([One; 3]);
        let down = PreferenceRelation::from_array([Zero; 3]);
        let (a, b) = (swf.apply(&m)?, swf.apply(&m_prime)?);
        if a != up || b != down {
            return Err(Error::Invalid {
                what: "contradictory pair",
                message: format!("aggregates are {a} and {b}, expected 111 and 000"),
            });
        }
        if !contradicts(&m, &m_prime)? {
            return Err(Error::Invalid {
                what: "contradictory pair",
                message: format!("{m} and {m_prime} do not contradict"),
            });
        }
        Ok(ContradictoryPair { m, m_prime, case })
    }

    /// The profile aggregating to `(1,1,1)`.
    pub fn m(&self) -> &Profile {
        &self.m
    }

    /// The profile aggregating to `(0,0,0)`.
    pub fn m_prime(&self) -> &Profile {
        &self.m_prime
    }

    /// The Arrow case the pair was built from.
    pub fn case(&self) -> Provenance {
        self.case
    }

    pub fn aggregates(&self) -> (PreferenceRelation, PreferenceRelation) {
        (
            PreferenceRelation::from_array([One; 3]),
            PreferenceRelation::from_array([Zero; 3]),
        )
    }

    pub fn revalidate(&self, swf: &IiaSwf) -> bool {
        ContradictoryPair::new(swf, self.m, self.m_prime, self.case).is_ok()
    }
}

/// Some position holds strictly opposite entries.
pub fn is_inconsistent(t: &PreferenceRelation, t2: &PreferenceRelation) -> Result<bool> {
    if t.len() != t2.len() {
        return Err(Error::DimensionMismatch {
            expected: t.len(),
            found: t2.len(),
        });
    }
    Ok(t.entries()
        .zip(t2.entries())
        .any(|(a, b)| a.is_strict() && b == a.negate()))
}

/// Every individual's two weak orders are inconsistent.
pub fn contradicts(m: &Profile, m2: &Profile) -> Result<bool> {
    if m.n() != m2.n() {
        return Err(Error::DimensionMismatch {
            expected: m.n(),
            found: m2.n(),
        });
    }
    for i in 0..m.n() {
        if !is_inconsistent(&m.column(i), &m2.column(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require(swf: &IiaSwf, axiom: Axiom) -> Result<()> {
    if axiom.check(swf)?.holds {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(axiom))
    }
}

fn delta(x: TernaryValue, n: usize) -> PairwisePreferences {
    PairwisePreferences::delta(x, n).expect("valid n")
}

/// Places `rows[p]` in 0-based position `slots[p]`.
fn place(rows: [PairwisePreferences; 3], slots: [usize; 3]) -> Result<Profile> {
    let mut out = rows;
    for (row, slot) in rows.into_iter().zip(slots) {
        out[slot] = row;
    }
    Profile::from_rows(&out)
}

fn third(a: usize, b: usize) -> usize {
    3 - a - b
}

/// Strictness lemma: a strict row `r` with `s_j(r) = e` yields a cycle on
/// `(r, Δ0, ¬r)` or `(r, Δ1, ¬r)`, rotated so `r` sits at position `j`.
/// `Ok(None)` when strictness preservation holds.
pub fn strictness_witness(swf: &IiaSwf) -> Result<Option<CycleWitness>> {
    require(swf, Axiom::Unanimity)?;
    let n = swf.n();
    for j in 0..3 {
        let s = swf.component(j + 1);
        let Some(r) = enumerate_strict_pairs(n)?.find(|r| s.get(r) == E) else {
            continue;
        };
        for x in [Zero, One] {
            let m = place([r, delta(x, n), r.negate()], [j, (j + 1) % 3, (j + 2) % 3])?;
            if let Ok(w) = CycleWitness::new(swf, m, Provenance::StrictnessLemma) {
                return Ok(Some(w));
            }
        }
        return Err(Error::ConstructionUnavailable(format!(
            "neither Δ0 nor Δ1 variant cycles for s{}({r}) = e",
            j + 1
        )));
    }
    Ok(None)
}

/// Neutrality lemma: strict `x` and components `p ≠ q` with
/// `s_p(x) = s_q(¬x) = t` give `(t,t,t)` on the profile with `x` at `p`,
/// `¬x` at `q` and `Δt` elsewhere. `Ok(None)` when strict neutrality holds.
pub fn neutrality_witness(swf: &IiaSwf) -> Result<Option<CycleWitness>> {
    require(swf, Axiom::Unanimity)?;
    require(swf, Axiom::StrictnessPreservation)?;
    let n = swf.n();
    for x in enumerate_strict_pairs(n)? {
        let nx = x.negate();
        for p in 0..3 {
            for q in (0..3).filter(|&q| q != p) {
                let t = swf.component(p + 1).get(&x);
                if swf.component(q + 1).get(&nx) == t {
                    let m = place([x, nx, delta(t, n)], [p, q, third(p, q)])?;
                    return CycleWitness::new(swf, m, Provenance::NeutralityLemma).map(Some);
                }
            }
        }
    }
    Ok(None)
}

/// Pareto-indifference construction: a row `r` and components `i ≠ j` with
/// `s_i(¬r) ≠ ¬s_j(r)` give a cycle on `¬r` at `i`, `r` at `j`, `Δe` at the
/// remaining position. `Ok(None)` when full neutrality holds.
pub fn pareto_witness(swf: &IiaSwf) -> Result<Option<CycleWitness>> {
    require(swf, Axiom::ParetoIndifference)?;
    let n = swf.n();
    for r in enumerate_pairs(n)? {
        let nr = r.negate();
        for i in 0..3 {
            for j in (0..3).filter(|&j| j != i) {
                if swf.component(i + 1).get(&nr) != swf.component(j + 1).get(&r).negate() {
                    let m = place([nr, r, delta(E, n)], [i, j, third(i, j)])?;
                    return CycleWitness::new(swf, m, Provenance::ParetoIndifference).map(Some);
                }
            }
        }
    }
    Ok(None)
}

/// The first inclusion-minimal aggregating row in enumeration order.
fn minimal_row(swf: &IiaSwf) -> Result<PairwisePreferences> {
    let aggregates = votes_aggregates(swf, 1)?;
    aggregates
        .minimal()
        .first()
        .copied()
        .ok_or_else(|| Error::ConstructionUnavailable("component 1 aggregates no strict row to 1".into()))
}

/// First `(k, r')` over components then rows with `r'_i = want` and
/// `s_k(r') = out`; `i` is 0-based.
fn find_row(swf: &IiaSwf, i: usize, want: TernaryValue, out: TernaryValue) -> Option<(usize, PairwisePreferences)> {
    (0..3).find_map(|k| {
        let s = swf.component(k + 1);
        enumerate_pairs(swf.n())
            .expect("valid n")
            .find(|u| u.get(i) == want && s.get(u) == out)
            .map(|u| (k, u))
    })
}

/// The stage-3 shape the pipeline found.
enum ArrowCase {
    /// `Votes₁(r) = {i}` with `(r at j, r' at k, Δ1)` aggregating `(1,1,1)`.
    Single {
        i: usize,
        r: PairwisePreferences,
        j: usize,
        k: usize,
        r_prime: PairwisePreferences,
    },
    /// `Votes₁(r) = {i}` and only the weak fallback applies.
    SingleWeak(Profile),
    /// `1 < |Votes₁(r)| < N`: `(r, r', r'')`.
    Several(Profile),
}

fn arrow_case(swf: &IiaSwf) -> Result<ArrowCase> {
    let n = swf.n();
    let r = minimal_row(swf)?;
    let voters = r.votes_one();
    if voters.len() == 1 {
        let i = voters[0] - 1;
        if let Some((k, r_prime)) = find_row(swf, i, Zero, One) {
            let j = if k == 0 { 1 } else { 0 };
            return Ok(ArrowCase::Single { i, r, j, k, r_prime });
        }
        // Non-Dictatorship only promises a strict vote of i that some
        // component does not follow.
        let (k, u) = (0..3)
            .find_map(|k| {
                let s = swf.component(k + 1);
                enumerate_pairs(n)
                    .expect("valid n")
                    .find(|u| u.get(i).is_strict() && s.get(u) != u.get(i))
                    .map(|u| (k, u))
            })
            .ok_or(Error::PreconditionFailed(Axiom::NonDictatorship))?;
        let j = if k == 0 { 1 } else { 0 };
        let rows = if u.get(i) == Zero {
            [r, u, delta(One, n)]
        } else {
            [r.negate(), u, delta(Zero, n)]
        };
        return Ok(ArrowCase::SingleWeak(place(rows, [j, k, third(j, k)])?));
    }
    if voters.len() == n {
        return Err(Error::InternalDichotomy);
    }
    let first = voters[0] - 1;
    let mut r1 = r.negate();
    let mut r2 = r.negate();
    for &v in &voters {
        let v = v - 1;
        let x = if v == first { One } else { Zero };
        r1 = r1.with_entry(v, x);
        r2 = r2.with_entry(v, x.negate());
    }
    // outside Votes₁(r) the rows of r are 0, so ¬r is already 1 there
    Ok(ArrowCase::Several(Profile::from_rows(&[r, r1, r2])?))
}

/// The full pipeline for a non-dictatorial SWF with Unanimity: the
/// strictness lemma, then the neutrality lemma, then the Arrow cases on the
/// common strict restriction.
pub fn arrow_witness(swf: &IiaSwf) -> Result<CycleWitness> {
    require(swf, Axiom::Unanimity)?;
    require(swf, Axiom::NonDictatorship)?;
    if let Some(w) = strictness_witness(swf)? {
        return Ok(w);
    }
    if let Some(w) = neutrality_witness(swf)? {
        return Ok(w);
    }
    let n = swf.n();
    match arrow_case(swf)? {
        ArrowCase::Single { r, j, k, r_prime, .. } => {
            let m = place([r, r_prime, delta(One, n)], [j, k, third(j, k)])?;
            CycleWitness::new(swf, m, Provenance::ArrowCase1)
        }
        ArrowCase::SingleWeak(m) => CycleWitness::new(swf, m, Provenance::ArrowCase1Weak),
        ArrowCase::Several(m) => CycleWitness::new(swf, m, Provenance::ArrowCase2),
    }
}

/// Builds `(m, m')` with `w(m) = (1,1,1)`, `w(m') = (0,0,0)` contradicting
/// each other. Case 2 takes `m' = ¬m`. Case 1 pairs `m = (r at j, r' at k,
/// Δ1)` with `m' = (¬r, r'', Δ0)`, where individual `i` votes `1` in `r''`
/// and some component maps `r''` to `0`; fails with
/// [`Error::ConstructionUnavailable`] when no such `r'` or `r''` exists.
pub fn contradictory_pair(swf: &IiaSwf) -> Result<ContradictoryPair> {
    require(swf, Axiom::Unanimity)?;
    require(swf, Axiom::NonDictatorship)?;
    if strictness_witness(swf)?.is_some() {
        return Err(Error::PreconditionFailed(Axiom::StrictnessPreservation));
    }
    if neutrality_witness(swf)?.is_some() {
        return Err(Error::PreconditionFailed(Axiom::StrictNeutrality));
    }
    let n = swf.n();
    match arrow_case(swf)? {
        ArrowCase::Several(m) => ContradictoryPair::new(swf, m, m.negate(), Provenance::ArrowCase2),
        ArrowCase::SingleWeak(_) => Err(Error::ConstructionUnavailable(
            "the single voter of the minimal row never loses a 0 vote to a 1 aggregate".into(),
        )),
        ArrowCase::Single { i, r, j, k, r_prime } => {
            let m = place([r, r_prime, delta(One, n)], [j, k, third(j, k)])?;
            let (k2, r_second) = find_row(swf, i, One, Zero).ok_or_else(|| {
                Error::ConstructionUnavailable(format!("no row with individual {} voting 1 is aggregated to 0", i + 1))
            })?;
            // keep one of ¬r / Δ0 opposite r / Δ1 so every column disagrees
            let slots = if k2 == k || k2 != j {
                [j, k2, third(j, k2)]
            } else {
                [k, j, third(j, k)]
            };
            let m_prime = place([r.negate(), r_second, delta(Zero, n)], slots)?;
            ContradictoryPair::new(swf, m, m_prime, Provenance::ArrowCase1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::swf::*;

    fn pair(s: &str) -> PairwisePreferences {
        s.parse().unwrap()
    }

    fn rel(s: &str) -> PreferenceRelation {
        s.parse().unwrap()
    }

    fn rows(a: &str, b: &str, c: &str) -> Profile {
        Profile::from_rows(&[pair(a), pair(b), pair(c)]).unwrap()
    }

    #[test]
    fn inconsistency() {
        assert!(is_inconsistent(&rel("0e1"), &rel("1e1")).unwrap());
        for t in crate::enumerate::enumerate_relations(3).unwrap() {
            assert!(!is_inconsistent(&rel("eee"), &t).unwrap());
        }
        assert!(is_inconsistent(&rel("001"), &rel("0e1e")).is_err());
        let m = rows("010", "001", "100");
        assert!(contradicts(&m, &m.negate()).unwrap());
        assert!(!contradicts(&m, &m).unwrap());
    }

    #[test]
    fn witness_rejects_weak_aggregates() {
        let maj = pairwise_majority(3).unwrap();
        assert!(CycleWitness::new(&maj, rows("000", "111", "eee"), Provenance::ArrowCase2).is_err());
        let w = CycleWitness::new(&maj, rows("010", "001", "100"), Provenance::ArrowCase2).unwrap();
        assert_eq!(w.aggregate(), rel("000"));
        assert!(w.revalidate(&maj));
    }

    #[test]
    fn strictness_on_majority_two() {
        let maj = pairwise_majority(2).unwrap();
        let w = strictness_witness(&maj).unwrap().unwrap();
        // both (e,0,e) and (e,1,e) cycle; the Δ0 variant wins
        assert_eq!(w.profile(), &rows("01", "00", "10"));
        assert_eq!(w.aggregate(), rel("e0e"));
        assert_eq!(maj.apply(&rows("01", "11", "10")).unwrap(), rel("e1e"));
        assert_eq!(strictness_witness(&pairwise_majority(3).unwrap()).unwrap(), None);
        assert_eq!(
            strictness_witness(&indifference_swf(2).unwrap()).unwrap_err(),
            Error::PreconditionFailed(Axiom::Unanimity)
        );
    }

    #[test]
    fn strictness_rotates_to_component() {
        let maj = pairwise_majority(3).unwrap();
        let swf = maj
            .with_component(2, maj.component(2).with_entry(&pair("001"), E))
            .unwrap();
        let w = strictness_witness(&swf).unwrap().unwrap();
        assert_eq!(w.profile().row(1), pair("001"));
        assert_eq!(w.profile().row(0), pair("110"));
        assert_eq!(w.aggregate().get(1), E);
    }

    #[test]
    fn neutrality_cases() {
        let n = 3;
        let maj = PairwiseComparisonFunction::majority(n).unwrap();
        let flipped = PairwiseComparisonFunction::from_fn(n, |r| {
            let v = maj.get(r);
            if r.is_strict() && r.constant_value().is_none() {
                v.negate()
            } else {
                v
            }
        })
        .unwrap();
        let swf = IiaSwf::new(maj.clone(), maj, flipped).unwrap();
        let w = neutrality_witness(&swf).unwrap().unwrap();
        assert!(w.aggregate().is_cycle());
        assert!(w.aggregate().entries().all(|v| v == w.aggregate().get(0)));
        assert_eq!(w.profile(), &rows("001", "000", "110"));
        assert_eq!(neutrality_witness(&pairwise_majority(3).unwrap()).unwrap(), None);
        assert_eq!(neutrality_witness(&dictator(1, 2).unwrap()).unwrap(), None);
        assert_eq!(
            neutrality_witness(&pairwise_majority(2).unwrap()).unwrap_err(),
            Error::PreconditionFailed(Axiom::StrictnessPreservation)
        );
    }

    #[test]
    fn pareto_cases() {
        let swf = pairwise_majority(3)
            .unwrap()
            .with_component(2, PairwiseComparisonFunction::projection(1, 3).unwrap())
            .unwrap();
        assert_eq!(swf.apply(&rows("011", "100", "eee")).unwrap(), rel("11e"));
        let w = pareto_witness(&swf).unwrap().unwrap();
        assert!(w.revalidate(&swf));
        assert_eq!(w.provenance(), Provenance::ParetoIndifference);
        assert_eq!(pareto_witness(&pairwise_majority(3).unwrap()).unwrap(), None);
        assert_eq!(pareto_witness(&dictator(2, 2).unwrap()).unwrap(), None);
        assert!(pareto_witness(&constant_swf(&rel("001"), 2).unwrap()).is_err());
    }

    #[test]
    fn arrow_on_majority_three() {
        let maj = pairwise_majority(3).unwrap();
        let w = arrow_witness(&maj).unwrap();
        assert_eq!(w.provenance(), Provenance::ArrowCase2);
        assert_eq!(w.profile(), &rows("011", "110", "101"));
        assert_eq!(w.aggregate(), rel("111"));
        let m = rows("110", "101", "011");
        assert_eq!(maj.apply(&m).unwrap(), rel("111"));
        assert_eq!(m.columns(), vec![rel("110"), rel("101"), rel("011")]);
        assert_eq!(
            arrow_witness(&dictator(1, 3).unwrap()).unwrap_err(),
            Error::PreconditionFailed(Axiom::NonDictatorship)
        );
    }

    #[test]
    fn contradictory_pair_on_majority_three() {
        let maj = pairwise_majority(3).unwrap();
        let pair = contradictory_pair(&maj).unwrap();
        assert_eq!(maj.apply(pair.m()).unwrap(), rel("111"));
        assert_eq!(maj.apply(pair.m_prime()).unwrap(), rel("000"));
        assert_eq!(pair.m_prime(), &pair.m().negate());
        assert!(contradicts(pair.m(), pair.m_prime()).unwrap());
    }

    #[test]
    fn single_voter_case_with_weak_overrule() {
        // dictator 1 on strict rows, but (0,e) is aggregated to e
        let s = PairwiseComparisonFunction::from_fn(2, |r| match (r.get(0), r.get(1)) {
            (E, x) => x,
            (Zero, E) => E,
            (x, _) => x,
        })
        .unwrap();
        let swf = IiaSwf::symmetric(s);
        let w = arrow_witness(&swf).unwrap();
        assert_eq!(w.provenance(), Provenance::ArrowCase1Weak);
        assert!(w.revalidate(&swf));
        assert!(matches!(
            contradictory_pair(&swf),
            Err(Error::ConstructionUnavailable(_))
        ));
    }
}
