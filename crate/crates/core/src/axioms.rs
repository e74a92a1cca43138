//! Decidable checkers for the Arrovian axioms and the lemma properties.
//!
//! Every checker scans in a fixed enumeration order and reports the first
//! violation it meets, so verdicts are reproducible. Counterexamples carry
//! enough data to be re-evaluated with [`AxiomVerdict::revalidate`].

use std::fmt;
use std::str::FromStr;

use crate::enumerate::{enumerate_pairs, enumerate_strict_pairs, profile_count};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::pairs::PairwisePreferences;
use crate::profile::Profile;
use crate::relation::PreferenceRelation;
use crate::swf::{is_cycle3, IiaSwf};
use crate::ternary::{pow3, TernaryValue};
use crate::witness::{arrow_witness, CycleWitness};

/// Largest `N` for the exhaustive Unrestricted Domain sweep (`13^6` profiles).
pub const MAX_UD_INDIVIDUALS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Unanimity,
    NonDictatorship,
    UnrestrictedDomain,
    StrictnessPreservation,
    StrictNeutrality,
    ParetoIndifference,
    FullNeutrality,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Unanimity,
        Axiom::NonDictatorship,
        Axiom::UnrestrictedDomain,
        Axiom::StrictnessPreservation,
        Axiom::StrictNeutrality,
        Axiom::ParetoIndifference,
        Axiom::FullNeutrality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Unanimity => "unanimity",
            Axiom::NonDictatorship => "non-dictatorship",
            Axiom::UnrestrictedDomain => "unrestricted-domain",
            Axiom::StrictnessPreservation => "strictness-preservation",
            Axiom::StrictNeutrality => "strict-neutrality",
            Axiom::ParetoIndifference => "pareto-indifference",
            Axiom::FullNeutrality => "full-neutrality",
        }
    }

    /// Runs the matching checker.
    pub fn check(self, swf: &IiaSwf) -> Result<AxiomVerdict> {
        Ok(match self {
            Axiom::Unanimity => check_unanimity(swf),
            Axiom::NonDictatorship => check_non_dictatorship(swf),
            Axiom::UnrestrictedDomain => return check_unrestricted_domain(swf),
            Axiom::StrictnessPreservation => check_strictness_preservation(swf),
            Axiom::StrictNeutrality => check_strict_neutrality(swf),
            Axiom::ParetoIndifference => check_pareto_indifference(swf),
            Axiom::FullNeutrality => check_full_neutrality(swf),
        })
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Invalid {
                what: "axiom",
                message: format!(
                    "unknown axiom {s:?} (expected one of {})",
                    Axiom::ALL.map(Axiom::name).join(", ")
                ),
            })
    }
}

/// One table lookup `s_component(input) = output`; `component` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub component: usize,
    pub input: PairwisePreferences,
    pub output: TernaryValue,
}

impl TableEntry {
    fn read(swf: &IiaSwf, component: usize, input: PairwisePreferences) -> Self {
        TableEntry {
            component,
            input,
            output: swf.component(component).get(&input),
        }
    }

    fn is_current(&self, swf: &IiaSwf) -> bool {
        swf.component(self.component).get(&self.input) == self.output
    }
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}({}) = {}", self.component, self.input, self.output)
    }
}

/// The identity a [`Counterexample::Mismatch`] breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `first.output = second.output`
    Equal,
    /// `first.output = ¬second.output`
    Negated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// A single table entry with the wrong value; `expected` is `None` when
    /// any strict value would do.
    Entry {
        entry: TableEntry,
        expected: Option<TernaryValue>,
    },
    Mismatch {
        identity: Identity,
        first: TableEntry,
        second: TableEntry,
    },
    /// A profile aggregating to a cycle.
    Profile {
        profile: Profile,
        aggregate: PreferenceRelation,
    },
}

impl Counterexample {
    /// True when re-evaluating `swf` reproduces the violation.
    pub fn reproduces(&self, swf: &IiaSwf) -> bool {
        match self {
            Counterexample::Entry { entry, expected } => {
                entry.is_current(swf)
                    && match expected {
                        Some(v) => entry.output != *v,
                        None => !entry.output.is_strict(),
                    }
            }
            Counterexample::Mismatch {
                identity,
                first,
                second,
            } => {
                first.is_current(swf)
                    && second.is_current(swf)
                    && match identity {
                        Identity::Equal => first.output != second.output,
                        Identity::Negated => first.output != second.output.negate(),
                    }
            }
            Counterexample::Profile { profile, aggregate } => {
                swf.apply(profile).ok() == Some(*aggregate) && aggregate.is_cycle()
            }
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Entry {
                entry,
                expected: Some(v),
            } => write!(f, "{entry}, expected {v}"),
            Counterexample::Entry { entry, expected: None } => write!(f, "{entry}, expected 0 or 1"),
            Counterexample::Mismatch {
                identity: Identity::Equal,
                first,
                second,
            } => write!(f, "{first} but {second}"),
            Counterexample::Mismatch {
                identity: Identity::Negated,
                first,
                second,
            } => write!(f, "{first} but {second}, expected the negation"),
            Counterexample::Profile { profile, aggregate } => {
                write!(f, "{profile} aggregates to {aggregate}")
            }
        }
    }
}

/// Individual `individual` dictates component `component` (both 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dictator {
    pub individual: usize,
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    /// Set only by the Non-Dictatorship check.
    pub dictator: Option<Dictator>,
}

impl AxiomVerdict {
    fn from_violation(axiom: Axiom, violation: Option<Counterexample>) -> Self {
        AxiomVerdict {
            axiom,
            holds: violation.is_none(),
            counterexample: violation,
            dictator: None,
        }
    }

    /// Re-runs the reported evidence against `swf`: a failing verdict must
    /// reproduce its counterexample (or its dictator must still dictate).
    pub fn revalidate(&self, swf: &IiaSwf) -> bool {
        if self.holds {
            return self.counterexample.is_none() && self.dictator.is_none();
        }
        match (&self.counterexample, self.dictator) {
            (Some(c), _) => c.reproduces(swf),
            (None, Some(d)) => dictates(swf, d.individual, d.component),
            (None, None) => false,
        }
    }
}

/// `s_j(Δ0) = 0` and `s_j(Δ1) = 1` for every component.
pub fn check_unanimity(swf: &IiaSwf) -> AxiomVerdict {
    let n = swf.n();
    let violation = (1..=3)
        .flat_map(|j| TernaryValue::STRICT.map(|x| (j, x)))
        .find_map(|(j, x)| {
            let entry = TableEntry::read(swf, j, PairwisePreferences::delta(x, n).expect("valid n"));
            (entry.output != x).then_some(Counterexample::Entry {
                entry,
                expected: Some(x),
            })
        });
    AxiomVerdict::from_violation(Axiom::Unanimity, violation)
}

/// Individual `i` (1-based) dictates component `j`: `s_j(u) = u_i` whenever
/// `u_i` is strict.
pub fn dictates(swf: &IiaSwf, i: usize, j: usize) -> bool {
    let n = swf.n();
    if !(1..=n).contains(&i) || !(1..=3).contains(&j) {
        return false;
    }
    let s = swf.component(j);
    let place = pow3(n - i);
    (0..pow3(n)).all(|rank| {
        let v = TernaryValue::from_digit((rank / place % 3) as u8).expect("base-3 digit");
        !v.is_strict() || s.get_rank(rank) == v
    })
}

/// Every `(individual, component)` dictatorship, individual-major.
pub fn component_dictators(swf: &IiaSwf) -> Vec<Dictator> {
    (1..=swf.n())
        .flat_map(|i| (1..=3).map(move |j| (i, j)))
        .filter(|&(i, j)| dictates(swf, i, j))
        .map(|(individual, component)| Dictator { individual, component })
        .collect()
}

/// An individual dictating all three components, if any.
pub fn full_dictator(swf: &IiaSwf) -> Option<usize> {
    (1..=swf.n()).find(|&i| (1..=3).all(|j| dictates(swf, i, j)))
}

/// Holds when no individual dictates any component; otherwise reports the
/// first `(individual, component)` found.
pub fn check_non_dictatorship(swf: &IiaSwf) -> AxiomVerdict {
    let dictator = (1..=swf.n())
        .flat_map(|i| (1..=3).map(move |j| (i, j)))
        .find(|&(i, j)| dictates(swf, i, j))
        .map(|(individual, component)| Dictator { individual, component });
    AxiomVerdict {
        axiom: Axiom::NonDictatorship,
        holds: dictator.is_none(),
        counterexample: None,
        dictator,
    }
}

pub fn check_unrestricted_domain(swf: &IiaSwf) -> Result<AxiomVerdict> {
    check_unrestricted_domain_with(swf, Exec::default())
}

/// Exhaustive sweep of all `13^N` profiles; the counterexample is the first
/// cycle-producing profile in enumeration order regardless of `exec`.
pub fn check_unrestricted_domain_with(swf: &IiaSwf, exec: Exec) -> Result<AxiomVerdict> {
    let n = swf.n();
    if n > MAX_UD_INDIVIDUALS {
        return Err(Error::TooLarge {
            what: "unrestricted domain sweep",
            n,
            max: MAX_UD_INDIVIDUALS,
        });
    }
    let first = exec.find_first(0..profile_count(n), |idx| is_cycle3(swf.apply_index(idx)));
    let violation = first.map(|idx| {
        let profile = Profile::from_index(n, idx).expect("index in range");
        let aggregate = swf.apply(&profile).expect("matching dimension");
        Counterexample::Profile { profile, aggregate }
    });
    Ok(AxiomVerdict::from_violation(Axiom::UnrestrictedDomain, violation))
}

/// `s_j(r)` is strict for every strict `r`.
pub fn check_strictness_preservation(swf: &IiaSwf) -> AxiomVerdict {
    let n = swf.n();
    let violation = (1..=3).find_map(|j| {
        enumerate_strict_pairs(n).expect("valid n").find_map(|r| {
            let entry = TableEntry::read(swf, j, r);
            (!entry.output.is_strict()).then_some(Counterexample::Entry { entry, expected: None })
        })
    });
    AxiomVerdict::from_violation(Axiom::StrictnessPreservation, violation)
}

/// For strict `x`: `s_j(¬x) = ¬s_j(x)` and `s1(x) = s2(x) = s3(x)`.
pub fn check_strict_neutrality(swf: &IiaSwf) -> AxiomVerdict {
    let n = swf.n();
    let violation = enumerate_strict_pairs(n)
        .expect("valid n")
        .find_map(|x| neutrality_violation(swf, x));
    AxiomVerdict::from_violation(Axiom::StrictNeutrality, violation)
}

fn neutrality_violation(swf: &IiaSwf, r: PairwisePreferences) -> Option<Counterexample> {
    let here = |j| TableEntry::read(swf, j, r);
    let there = |j| TableEntry::read(swf, j, r.negate());
    (1..=3)
        .find_map(|j| {
            let (a, b) = (there(j), here(j));
            (a.output != b.output.negate()).then_some(Counterexample::Mismatch {
                identity: Identity::Negated,
                first: a,
                second: b,
            })
        })
        .or_else(|| {
            [(1, 2), (2, 3)].into_iter().find_map(|(p, q)| {
                let (a, b) = (here(p), here(q));
                (a.output != b.output).then_some(Counterexample::Mismatch {
                    identity: Identity::Equal,
                    first: a,
                    second: b,
                })
            })
        })
}

/// `s_j(Δe) = e` for every component.
pub fn check_pareto_indifference(swf: &IiaSwf) -> AxiomVerdict {
    let n = swf.n();
    let indifferent = PairwisePreferences::delta(TernaryValue::E, n).expect("valid n");
    let violation = (1..=3).find_map(|j| {
        let entry = TableEntry::read(swf, j, indifferent);
        (entry.output != TernaryValue::E).then_some(Counterexample::Entry {
            entry,
            expected: Some(TernaryValue::E),
        })
    });
    AxiomVerdict::from_violation(Axiom::ParetoIndifference, violation)
}

/// `s_i(¬r) = ¬s_j(r)` and `s_i(r) = s_j(r)` for every row `r`, weak rows
/// included, and all components `i, j`.
pub fn check_full_neutrality(swf: &IiaSwf) -> AxiomVerdict {
    let n = swf.n();
    let violation = enumerate_pairs(n)
        .expect("valid n")
        .find_map(|r| neutrality_violation(swf, r));
    AxiomVerdict::from_violation(Axiom::FullNeutrality, violation)
}

/// `Aggregates₁(s_j)`: the strict rows component `j` maps to `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VotesAggregates {
    pub component: usize,
    pub aggregates_one: Vec<PairwisePreferences>,
}

impl VotesAggregates {
    /// `Votes₁(r)` for each row of `aggregates_one`, in the same order.
    pub fn votes_one(&self) -> Vec<Vec<usize>> {
        self.aggregates_one.iter().map(|r| r.votes_one()).collect()
    }

    /// Rows whose `Votes₁` set is inclusion-minimal, in enumeration order.
    pub fn minimal(&self) -> Vec<PairwisePreferences> {
        let masks: Vec<u64> = self.aggregates_one.iter().map(ones_mask).collect();
        self.aggregates_one
            .iter()
            .zip(&masks)
            .filter(|&(_, &m)| !masks.iter().any(|&o| o != m && o & m == o))
            .map(|(r, _)| *r)
            .collect()
    }
}

pub(crate) fn ones_mask(r: &PairwisePreferences) -> u64 {
    r.entries()
        .enumerate()
        .filter(|(_, v)| *v == TernaryValue::One)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Tabulates `Aggregates₁(s_j)` for component `j` (1-based).
pub fn votes_aggregates(swf: &IiaSwf, j: usize) -> Result<VotesAggregates> {
    if !(1..=3).contains(&j) {
        return Err(Error::IndexOutOfRange { index: j, n: 3 });
    }
    let s = swf.component(j);
    let aggregates_one = enumerate_strict_pairs(swf.n())?
        .filter(|r| s.get(r) == TernaryValue::One)
        .collect();
    Ok(VotesAggregates {
        component: j,
        aggregates_one,
    })
}

/// The Arrow verdict of a [`full_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrowVerdict {
    /// Unanimity fails, so the theorem says nothing.
    NotApplicable,
    /// Some individual dictates every component.
    Dictator { individual: usize },
    /// Some components are dictated, but not all by one individual.
    PartialDictatorship { dictators: Vec<Dictator> },
    /// Non-dictatorial: the constructive pipeline's cycle.
    Cycle(CycleWitness),
}

/// Every checker's verdict plus the Arrow verdict. The report does not
/// assume the theorem: a dictatorial SWF may still fail Unrestricted Domain
/// when its dictator is indifferent, and both facts are reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub n: usize,
    pub verdicts: Vec<AxiomVerdict>,
    pub component_dictators: Vec<Dictator>,
    pub arrow: ArrowVerdict,
}

impl AxiomReport {
    pub fn verdict(&self, axiom: Axiom) -> &AxiomVerdict {
        self.verdicts
            .iter()
            .find(|v| v.axiom == axiom)
            .expect("every axiom is checked")
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }
}

pub fn full_report(swf: &IiaSwf) -> Result<AxiomReport> {
    full_report_with(swf, Exec::default())
}

pub fn full_report_with(swf: &IiaSwf, exec: Exec) -> Result<AxiomReport> {
    let verdicts = Axiom::ALL
        .into_iter()
        .map(|a| match a {
            Axiom::UnrestrictedDomain => check_unrestricted_domain_with(swf, exec),
            other => other.check(swf),
        })
        .collect::<Result<Vec<_>>>()?;
    let component_dictators = component_dictators(swf);
    let arrow = if !verdicts[0].holds {
        ArrowVerdict::NotApplicable
    } else if let Some(individual) = full_dictator(swf) {
        ArrowVerdict::Dictator { individual }
    } else if !component_dictators.is_empty() {
        ArrowVerdict::PartialDictatorship {
            dictators: component_dictators.clone(),
        }
    } else {
        ArrowVerdict::Cycle(arrow_witness(swf)?)
    };
    Ok(AxiomReport {
        n: swf.n(),
        verdicts,
        component_dictators,
        arrow,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::swf::*;
    use crate::ternary::TernaryValue::*;

    fn pair(s: &str) -> PairwisePreferences {
        s.parse().unwrap()
    }

    #[test]
    fn unanimity() {
        assert!(check_unanimity(&pairwise_majority(3).unwrap()).holds);
        assert!(check_unanimity(&dictator(1, 2).unwrap()).holds);
        let v = check_unanimity(&indifference_swf(2).unwrap());
        assert!(!v.holds);
        assert_eq!(
            v.counterexample,
            Some(Counterexample::Entry {
                entry: TableEntry {
                    component: 1,
                    input: pair("00"),
                    output: E
                },
                expected: Some(Zero),
            })
        );
        assert!(v.revalidate(&indifference_swf(2).unwrap()));
    }

    #[test]
    fn non_dictatorship() {
        let v = check_non_dictatorship(&dictator(2, 3).unwrap());
        assert!(!v.holds);
        assert_eq!(v.dictator.unwrap().individual, 2);
        assert!(check_non_dictatorship(&pairwise_majority(3).unwrap()).holds);
        let h = hierarchical_dictator(&[1, 2], 2).unwrap();
        let v = check_non_dictatorship(&h);
        assert_eq!(
            v.dictator,
            Some(Dictator {
                individual: 1,
                component: 1
            })
        );
        assert!(v.revalidate(&h));
        assert_eq!(full_dictator(&h), Some(1));
    }

    #[test]
    fn unrestricted_domain() {
        let maj = pairwise_majority(3).unwrap();
        let v = check_unrestricted_domain(&maj).unwrap();
        assert!(!v.holds);
        assert!(v.revalidate(&maj));
        assert!(check_unrestricted_domain(&dictator(1, 3).unwrap()).unwrap().holds);
        let c = constant_swf(&"111".parse().unwrap(), 2).unwrap();
        let v = check_unrestricted_domain(&c).unwrap();
        match v.counterexample {
            Some(Counterexample::Profile { profile, .. }) => assert_eq!(profile.index(), 0),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            check_unrestricted_domain(&pairwise_majority(7).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn ud_counterexample_independent_of_strategy() {
        let maj = pairwise_majority(4).unwrap();
        let a = check_unrestricted_domain_with(&maj, Exec::Sequential).unwrap();
        let b = check_unrestricted_domain_with(&maj, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn strictness_preservation() {
        assert!(check_strictness_preservation(&pairwise_majority(3).unwrap()).holds);
        assert!(check_strictness_preservation(&dictator(1, 2).unwrap()).holds);
        let v = check_strictness_preservation(&pairwise_majority(2).unwrap());
        assert_eq!(
            v.counterexample,
            Some(Counterexample::Entry {
                entry: TableEntry {
                    component: 1,
                    input: pair("01"),
                    output: E
                },
                expected: None,
            })
        );
    }

    #[test]
    fn strict_neutrality() {
        assert!(check_strict_neutrality(&pairwise_majority(3).unwrap()).holds);
        assert!(check_strict_neutrality(&dictator(1, 3).unwrap()).holds);
        let mixed = pairwise_majority(3)
            .unwrap()
            .with_component(2, PairwiseComparisonFunction::projection(1, 3).unwrap())
            .unwrap();
        let v = check_strict_neutrality(&mixed);
        match &v.counterexample {
            Some(Counterexample::Mismatch { first, second, .. }) => {
                assert_eq!(first.input, pair("011"));
                assert_eq!((first.output, second.output), (One, Zero));
            }
            other => panic!("{other:?}"),
        }
        assert!(v.revalidate(&mixed));
    }

    #[test]
    fn pareto_and_full_neutrality() {
        let maj = pairwise_majority(3).unwrap();
        assert!(check_pareto_indifference(&maj).holds);
        assert!(check_full_neutrality(&maj).holds);
        assert!(check_pareto_indifference(&dictator(1, 2).unwrap()).holds);
        assert!(check_full_neutrality(&hierarchical_dictator(&[1, 2], 2).unwrap()).holds);
        let v = check_pareto_indifference(&constant_swf(&"001".parse().unwrap(), 2).unwrap());
        assert!(!v.holds);
        let broken = maj
            .with_component(2, maj.component(2).with_entry(&pair("eee"), Zero))
            .unwrap();
        assert!(!check_full_neutrality(&broken).holds);
        assert!(!check_pareto_indifference(&broken).holds);
        assert!(check_full_neutrality(&broken).revalidate(&broken));
    }

    #[test]
    fn aggregates_and_votes() {
        let agg = votes_aggregates(&pairwise_majority(3).unwrap(), 1).unwrap();
        let names: Vec<String> = agg.aggregates_one.iter().map(|r| r.to_string()).collect();
        assert_eq!(names, ["011", "101", "110", "111"]);
        assert_eq!(agg.minimal().len(), 3);
        let agg = votes_aggregates(&dictator(2, 2).unwrap(), 1).unwrap();
        assert_eq!(agg.aggregates_one, vec![pair("01"), pair("11")]);
        assert_eq!(agg.minimal(), vec![pair("01")]);
        assert_eq!(pair("101").votes_one(), vec![1, 3]);
    }

    #[test]
    fn reports() {
        let r = full_report(&pairwise_majority(3).unwrap()).unwrap();
        assert!(r.verdict(Axiom::Unanimity).holds);
        assert!(r.verdict(Axiom::NonDictatorship).holds);
        assert!(!r.verdict(Axiom::UnrestrictedDomain).holds);
        assert!(matches!(r.arrow, ArrowVerdict::Cycle(_)));
        let r = full_report(&dictator(1, 3).unwrap()).unwrap();
        assert!(r.verdict(Axiom::UnrestrictedDomain).holds);
        assert_eq!(r.arrow, ArrowVerdict::Dictator { individual: 1 });
        let r = full_report(&indifference_swf(2).unwrap()).unwrap();
        assert_eq!(r.arrow, ArrowVerdict::NotApplicable);
    }

    #[test]
    fn axiom_names_round_trip() {
        for a in Axiom::ALL {
            assert_eq!(a.name().parse::<Axiom>().unwrap(), a);
        }
        assert!("transitivity".parse::<Axiom>().is_err());
    }
}
