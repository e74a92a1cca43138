use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::axioms::{
    check_full_neutrality, check_non_dictatorship, check_pareto_indifference, check_strict_neutrality,
    check_strictness_preservation, check_unanimity, full_dictator,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::search::candidates::{CandidateSpace, SweepMode, MAX_EXHAUSTIVE_CANDIDATES};
use crate::search::oracle::{brute_force_contradictory_pair, cycle_indices};
use crate::swf::IiaSwf;
use crate::witness::{arrow_witness, contradictory_pair, Provenance};

/// Candidates (or samples) handled per work unit. Sampled batch `b` draws
/// from ChaCha8 seeded with the run seed on stream `b`, so results do not
/// depend on how batches are spread over workers.
pub const BATCH_SIZE: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepPlan {
    Exhaustive,
    Sampled { trials: u64, seed: u64 },
}

/// A candidate on which the pipeline and the oracle disagree, or which
/// breaks a property under test. `candidate` is the candidate index, or
/// the sample number for sampled runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub candidate: u64,
    pub message: String,
}

fn batches(space: &CandidateSpace, plan: SweepPlan) -> Result<(u64, u64)> {
    let count = match plan {
        SweepPlan::Exhaustive => match space.size() {
            Some(size) if size <= MAX_EXHAUSTIVE_CANDIDATES => size,
            _ => {
                return Err(Error::Invalid {
                    what: "sweep",
                    message: format!(
                        "{} mode at N={} has too many candidates for an exhaustive sweep; sample it instead",
                        space.mode(),
                        space.n()
                    ),
                })
            }
        },
        SweepPlan::Sampled { trials, .. } => trials,
    };
    Ok((count, count.div_ceil(BATCH_SIZE)))
}

/// Runs `visit` on every candidate of batch `b`, in order.
fn visit_batch(space: &CandidateSpace, plan: SweepPlan, count: u64, b: u64, mut visit: impl FnMut(u64, &IiaSwf)) {
    let range = b * BATCH_SIZE..((b + 1) * BATCH_SIZE).min(count);
    match plan {
        SweepPlan::Exhaustive => {
            for idx in range {
                visit(idx, &space.candidate(idx));
            }
        }
        SweepPlan::Sampled { seed, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            for k in range {
                visit(k, &space.random(&mut rng));
            }
        }
    }
}

/// Folds every candidate of the plan into per-batch accumulators, merged in
/// batch order.
fn fold_candidates<T, F, M>(space: &CandidateSpace, plan: SweepPlan, exec: Exec, visit: F, mut merge: M) -> Result<T>
where
    T: Default + Send,
    F: Fn(&mut T, u64, &IiaSwf) + Sync + Send,
    M: FnMut(&mut T, T),
{
    let (count, nbatches) = batches(space, plan)?;
    let parts = exec.map(0..nbatches, |b| {
        let mut acc = T::default();
        visit_batch(space, plan, count, b, |k, swf| visit(&mut acc, k, swf));
        acc
    });
    let mut total = T::default();
    for part in parts {
        merge(&mut total, part);
    }
    Ok(total)
}

/// How one candidate was classified by [`classify_candidate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateOutcome {
    NonUnanimous,
    /// Some individual dictates some component; `unrestricted_domain`
    /// records the oracle's verdict.
    Dictatorial {
        unrestricted_domain: bool,
    },
    /// Non-dictatorial, and the pipeline's witness is confirmed by the
    /// oracle.
    Witnessed(Provenance),
    Discrepancy(String),
}

/// Cross-checks the Arrow pipeline against the brute-force oracle on one
/// candidate. Dictatorial candidates whose dictator is indifferent may
/// still cycle; that is reported, not treated as a disagreement.
pub fn classify_candidate(swf: &IiaSwf) -> CandidateOutcome {
    if !check_unanimity(swf).holds {
        return CandidateOutcome::NonUnanimous;
    }
    let cycles = cycle_indices(swf, Exec::Sequential);
    if !check_non_dictatorship(swf).holds {
        if cycles.is_empty() && full_dictator(swf).is_none() {
            return CandidateOutcome::Discrepancy(
                "unrestricted domain holds but no individual dictates every component".into(),
            );
        }
        return CandidateOutcome::Dictatorial {
            unrestricted_domain: cycles.is_empty(),
        };
    }
    match arrow_witness(swf) {
        Ok(w) if !w.revalidate(swf) => CandidateOutcome::Discrepancy("witness does not re-validate".into()),
        Ok(w) if cycles.binary_search(&w.profile().index()).is_err() => {
            CandidateOutcome::Discrepancy(format!("witness {} missing from the oracle's list", w.profile()))
        }
        Ok(w) => CandidateOutcome::Witnessed(w.provenance()),
        Err(e) if cycles.is_empty() => {
            CandidateOutcome::Discrepancy(format!("non-dictatorial candidate satisfies unrestricted domain ({e})"))
        }
        Err(e) => CandidateOutcome::Discrepancy(format!(
            "pipeline failed ({e}) although the oracle finds {} cycles",
            cycles.len()
        )),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub total: u64,
    pub non_unanimous: u64,
    /// Candidates failing Non-Dictatorship.
    pub dictatorial: u64,
    /// Candidates passing Unrestricted Domain (all of them dictatorial).
    pub ud_satisfying: u64,
    /// Non-dictatorial candidates with a confirmed witness.
    pub witnessed: u64,
    /// Dictatorial candidates that still produce a cycle.
    pub dictatorial_cycling: u64,
    pub provenance: BTreeMap<Provenance, u64>,
    pub discrepancies: Vec<Discrepancy>,
}

impl SweepReport {
    fn record(&mut self, k: u64, outcome: CandidateOutcome) {
        self.total += 1;
        match outcome {
            CandidateOutcome::NonUnanimous => self.non_unanimous += 1,
            CandidateOutcome::Dictatorial { unrestricted_domain } => {
                self.dictatorial += 1;
                if unrestricted_domain {
                    self.ud_satisfying += 1;
                } else {
                    self.dictatorial_cycling += 1;
                }
            }
            CandidateOutcome::Witnessed(p) => {
                self.witnessed += 1;
                *self.provenance.entry(p).or_default() += 1;
            }
            CandidateOutcome::Discrepancy(message) => self.discrepancies.push(Discrepancy { candidate: k, message }),
        }
    }

    fn merge(&mut self, other: SweepReport) {
        self.total += other.total;
        self.non_unanimous += other.non_unanimous;
        self.dictatorial += other.dictatorial;
        self.ud_satisfying += other.ud_satisfying;
        self.witnessed += other.witnessed;
        self.dictatorial_cycling += other.dictatorial_cycling;
        for (p, c) in other.provenance {
            *self.provenance.entry(p).or_default() += c;
        }
        self.discrepancies.extend(other.discrepancies);
    }

    /// Every candidate lands in exactly one bucket.
    pub fn is_balanced(&self) -> bool {
        self.non_unanimous
            + self.ud_satisfying
            + self.witnessed
            + self.dictatorial_cycling
            + self.discrepancies.len() as u64
            == self.total
    }
}

pub fn sweep_candidates(space: &CandidateSpace, plan: SweepPlan) -> Result<SweepReport> {
    sweep_candidates_with(space, plan, Exec::default())
}

pub fn sweep_candidates_with(space: &CandidateSpace, plan: SweepPlan, exec: Exec) -> Result<SweepReport> {
    fold_candidates(
        space,
        plan,
        exec,
        |acc: &mut SweepReport, k, swf| acc.record(k, classify_candidate(swf)),
        SweepReport::merge,
    )
}

/// Lemma properties over the candidates satisfying Unrestricted Domain.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub candidates: u64,
    pub ud_satisfying: u64,
    pub strictness_violations: u64,
    pub strict_neutrality_violations: u64,
    /// UD-satisfying candidates that also satisfy Pareto Indifference.
    pub pareto_indifferent: u64,
    pub full_neutrality_violations: u64,
    pub violations: Vec<Discrepancy>,
}

impl LemmaReport {
    fn merge(&mut self, other: LemmaReport) {
        self.candidates += other.candidates;
        self.ud_satisfying += other.ud_satisfying;
        self.strictness_violations += other.strictness_violations;
        self.strict_neutrality_violations += other.strict_neutrality_violations;
        self.pareto_indifferent += other.pareto_indifferent;
        self.full_neutrality_violations += other.full_neutrality_violations;
        self.violations.extend(other.violations);
    }

    pub fn total_violations(&self) -> u64 {
        self.strictness_violations + self.strict_neutrality_violations + self.full_neutrality_violations
    }
}

pub fn verify_lemmas(space: &CandidateSpace, plan: SweepPlan) -> Result<LemmaReport> {
    verify_lemmas_with(space, plan, Exec::default())
}

/// For every candidate the oracle finds cycle-free: strictness preservation
/// and strict neutrality (under Unanimity), and full neutrality under Pareto
/// Indifference.
pub fn verify_lemmas_with(space: &CandidateSpace, plan: SweepPlan, exec: Exec) -> Result<LemmaReport> {
    fold_candidates(
        space,
        plan,
        exec,
        |acc: &mut LemmaReport, k, swf| {
            acc.candidates += 1;
            if !cycle_indices(swf, Exec::Sequential).is_empty() {
                return;
            }
            acc.ud_satisfying += 1;
            let mut failed = Vec::new();
            if check_unanimity(swf).holds {
                if !check_strictness_preservation(swf).holds {
                    acc.strictness_violations += 1;
                    failed.push("strictness preservation");
                }
                if !check_strict_neutrality(swf).holds {
                    acc.strict_neutrality_violations += 1;
                    failed.push("strict neutrality");
                }
            }
            if check_pareto_indifference(swf).holds {
                acc.pareto_indifferent += 1;
                if !check_full_neutrality(swf).holds {
                    acc.full_neutrality_violations += 1;
                    failed.push("full neutrality");
                }
            }
            for what in failed {
                acc.violations.push(Discrepancy {
                    candidate: k,
                    message: format!("{what} fails on a candidate satisfying unrestricted domain"),
                });
            }
        },
        LemmaReport::merge,
    )
}

/// Outcome counts for [`contradictory_pair`] over a candidate sample.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContradictorySurvey {
    pub candidates: u64,
    pub non_dictatorial: u64,
    /// Non-dictatorial candidates whose pipeline ends in an Arrow case.
    pub stage_three: u64,
    pub constructed: u64,
    pub by_case: BTreeMap<Provenance, u64>,
    /// Construction unavailable, and the brute-force oracle confirms no
    /// contradictory pair exists at all.
    pub absent: u64,
    /// Construction unavailable although the oracle finds a pair.
    pub missed: u64,
    /// Returned pairs failing validation, or unexpected errors.
    pub invalid: u64,
    /// Up to [`ContradictorySurvey::EXAMPLES`] failing candidates.
    pub examples: Vec<Discrepancy>,
}

impl ContradictorySurvey {
    pub const EXAMPLES: usize = 5;

    fn merge(&mut self, other: ContradictorySurvey) {
        self.candidates += other.candidates;
        self.non_dictatorial += other.non_dictatorial;
        self.stage_three += other.stage_three;
        self.constructed += other.constructed;
        for (p, c) in other.by_case {
            *self.by_case.entry(p).or_default() += c;
        }
        self.absent += other.absent;
        self.missed += other.missed;
        self.invalid += other.invalid;
        self.examples.extend(other.examples);
        self.examples.truncate(Self::EXAMPLES);
    }

    pub fn failures(&self) -> u64 {
        self.stage_three - self.constructed
    }
}

pub fn contradictory_pair_survey(space: &CandidateSpace, plan: SweepPlan) -> Result<ContradictorySurvey> {
    contradictory_pair_survey_with(space, plan, Exec::default())
}

/// Runs [`contradictory_pair`] on every non-dictatorial candidate whose
/// pipeline reaches the Arrow cases; each failure is checked against
/// [`brute_force_contradictory_pair`].
pub fn contradictory_pair_survey_with(
    space: &CandidateSpace,
    plan: SweepPlan,
    exec: Exec,
) -> Result<ContradictorySurvey> {
    fold_candidates(
        space,
        plan,
        exec,
        |acc: &mut ContradictorySurvey, k, swf| {
            acc.candidates += 1;
            if !check_unanimity(swf).holds || !check_non_dictatorship(swf).holds {
                return;
            }
            acc.non_dictatorial += 1;
            let stage = match arrow_witness(swf) {
                Ok(w) => w.provenance(),
                Err(_) => return,
            };
            if !matches!(
                stage,
                Provenance::ArrowCase1 | Provenance::ArrowCase1Weak | Provenance::ArrowCase2
            ) {
                return;
            }
            acc.stage_three += 1;
            let mut note = |message: String| {
                if acc.examples.len() < ContradictorySurvey::EXAMPLES {
                    acc.examples.push(Discrepancy { candidate: k, message });
                }
            };
            match contradictory_pair(swf) {
                Ok(pair) if pair.revalidate(swf) => {
                    acc.constructed += 1;
                    *acc.by_case.entry(pair.case()).or_default() += 1;
                }
                Ok(_) => {
                    acc.invalid += 1;
                    note("returned pair does not re-validate".into());
                }
                Err(Error::ConstructionUnavailable(why)) => match brute_force_contradictory_pair(swf) {
                    Ok(None) => {
                        acc.absent += 1;
                        note(format!("{stage}: {why}; no contradictory pair exists"));
                    }
                    Ok(Some(_)) => {
                        acc.missed += 1;
                        note(format!("{stage}: {why}; a contradictory pair exists"));
                    }
                    Err(e) => {
                        acc.invalid += 1;
                        note(e.to_string());
                    }
                },
                Err(e) => {
                    acc.invalid += 1;
                    note(e.to_string());
                }
            }
        },
        ContradictorySurvey::merge,
    )
}

/// Convenience for the common symmetric, unanimity-fixed space.
pub fn symmetric_space(n: usize) -> Result<CandidateSpace> {
    CandidateSpace::new(n, SweepMode::Symmetric, true)
}
