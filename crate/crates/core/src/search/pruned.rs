use std::collections::BTreeMap;

use crate::axioms::{check_non_dictatorship, full_dictator};
use crate::enumerate::profile_count;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::search::candidates::{build, CandidateSpace, SweepMode};
use crate::search::oracle::cycle_indices;
use crate::search::sweep::Discrepancy;
use crate::swf::{is_cycle3, profile_row_ranks};
use crate::ternary::{pow3, TernaryValue};

/// Variables fixed per parallel work unit.
const PREFIX_VARIABLES: usize = 6;

const UNSET: u8 = u8::MAX;

/// Every Unanimity-fixed full triple at `N = 2` satisfying Unrestricted
/// Domain, found by backtracking.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrunedReport {
    /// Size of the space, `3^21`.
    pub total: u64,
    /// Candidates ruled out by a cycle on fully assigned rows.
    pub eliminated: u64,
    /// Candidates satisfying Unrestricted Domain.
    pub ud_satisfying: u64,
    /// UD-satisfying candidates by full dictator.
    pub dictators: BTreeMap<usize, u64>,
    /// UD-satisfying candidates with no full dictator, or leaves the oracle
    /// rejects.
    pub discrepancies: Vec<Discrepancy>,
}

impl PrunedReport {
    fn merge(&mut self, other: PrunedReport) {
        self.eliminated += other.eliminated;
        self.ud_satisfying += other.ud_satisfying;
        for (i, c) in other.dictators {
            *self.dictators.entry(i).or_default() += c;
        }
        self.discrepancies.extend(other.discrepancies);
    }

    /// Leaves plus pruned subtrees cover the whole space.
    pub fn is_complete(&self) -> bool {
        self.eliminated + self.ud_satisfying == self.total
    }
}

struct Search {
    space: CandidateSpace,
    /// `checks[v]`: profiles (as row ranks) whose rows are all assigned once
    /// variable `v` is.
    checks: Vec<Vec<[u64; 3]>>,
    variables: usize,
}

impl Search {
    fn new(n: usize) -> Self {
        let space = CandidateSpace::new(n, SweepMode::FullTriples, true).expect("valid space");
        let variables = space.variables();
        let position: BTreeMap<u64, usize> = space.free_inputs().iter().enumerate().map(|(p, &r)| (r, p)).collect();
        let mut checks = vec![Vec::new(); variables];
        for idx in 0..profile_count(n) {
            let ranks = profile_row_ranks(n, idx);
            let last = (0..3).filter_map(|j| position.get(&ranks[j]).map(|p| p * 3 + j)).max();
            // profiles built only from Δ0/Δ1 rows copy a weak-order column
            if let Some(v) = last {
                checks[v].push(ranks);
            }
        }
        Search {
            space,
            checks,
            variables,
        }
    }

    fn assign(&self, tables: &mut [Vec<TernaryValue>; 3], v: usize, digit: u8) {
        let input = self.space.free_inputs()[v / 3] as usize;
        tables[v % 3][input] = TernaryValue::from_digit(digit).expect("base-3 digit");
    }

    fn consistent(&self, tables: &[Vec<TernaryValue>; 3], v: usize) -> bool {
        self.checks[v]
            .iter()
            .all(|r| !is_cycle3(std::array::from_fn(|j| tables[j][r[j] as usize])))
    }

    fn subtree(&self, depth: usize) -> u64 {
        3u64.pow((self.variables - depth) as u32)
    }

    fn run_prefix(&self, prefix: u64) -> PrunedReport {
        let mut report = PrunedReport::default();
        let mut tables = self.space.base_tables();
        let mut digits = [UNSET; 64];
        let mut rest = prefix;
        for v in (0..PREFIX_VARIABLES).rev() {
            digits[v] = (rest % 3) as u8;
            rest /= 3;
        }
        for (v, &digit) in digits.iter().enumerate().take(PREFIX_VARIABLES) {
            self.assign(&mut tables, v, digit);
            if !self.consistent(&tables, v) {
                report.eliminated += self.subtree(PREFIX_VARIABLES);
                return report;
            }
        }
        self.descend(PREFIX_VARIABLES, &mut tables, &mut report);
        report
    }

    fn descend(&self, v: usize, tables: &mut [Vec<TernaryValue>; 3], report: &mut PrunedReport) {
        if v == self.variables {
            self.leaf(tables, report);
            return;
        }
        for digit in 0..3 {
            self.assign(tables, v, digit);
            if self.consistent(tables, v) {
                self.descend(v + 1, tables, report);
            } else {
                report.eliminated += self.subtree(v + 1);
            }
        }
    }

    fn leaf(&self, tables: &[Vec<TernaryValue>; 3], report: &mut PrunedReport) {
        report.ud_satisfying += 1;
        let swf = build(self.space.n(), tables.clone());
        let index = swf.components().iter().fold(0u64, |acc, s| {
            self.space
                .free_inputs()
                .iter()
                .fold(acc, |a, &r| a * 3 + u64::from(s.get_rank(r).digit()))
        });
        if !cycle_indices(&swf, Exec::Sequential).is_empty() {
            report.discrepancies.push(Discrepancy {
                candidate: index,
                message: "backtracking accepted a candidate the oracle rejects".into(),
            });
            return;
        }
        match full_dictator(&swf) {
            Some(i) => *report.dictators.entry(i).or_default() += 1,
            None => report.discrepancies.push(Discrepancy {
                candidate: index,
                message: if check_non_dictatorship(&swf).holds {
                    "non-dictatorial candidate satisfies unrestricted domain".into()
                } else {
                    "unrestricted domain holds without a full dictator".into()
                },
            }),
        }
    }
}

/// Exhaustive search of the `3^21` full triples at `N = 2`, pruning each
/// partial assignment as soon as a profile whose rows are all assigned
/// aggregates to a cycle.
pub fn pruned_full_triples(n: usize) -> Result<PrunedReport> {
    pruned_full_triples_with(n, Exec::default())
}

pub fn pruned_full_triples_with(n: usize, exec: Exec) -> Result<PrunedReport> {
    if n != 2 {
        return Err(Error::TooLarge {
            what: "pruned full-triple search",
            n,
            max: 2,
        });
    }
    let search = Search::new(n);
    let parts = exec.map(0..pow3(PREFIX_VARIABLES), |p| search.run_prefix(p));
    let mut report = PrunedReport {
        total: search.subtree(0),
        ..PrunedReport::default()
    };
    for part in parts {
        report.merge(part);
    }
    Ok(report)
}
