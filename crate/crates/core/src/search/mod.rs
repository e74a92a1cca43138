//! Exhaustive and randomized exploration: candidate sweeps that check the
//! theorems against a brute-force oracle, and Monte Carlo estimation of
//! the Condorcet paradox.

mod candidates;
mod montecarlo;
mod oracle;
mod pruned;
mod sweep;

pub use candidates::{CandidateSpace, SweepMode, MAX_CANDIDATE_INDIVIDUALS, MAX_EXHAUSTIVE_CANDIDATES};
pub use montecarlo::{
    exact_cycle_fraction, monte_carlo_condorcet, monte_carlo_condorcet_with, CondorcetEstimate, Culture,
    MAX_EXACT_PROFILES,
};
pub use oracle::{
    brute_force_contradictory_pair, brute_force_cycle_search, brute_force_cycle_search_with, MAX_ORACLE_INDIVIDUALS,
};
pub use pruned::{pruned_full_triples, pruned_full_triples_with, PrunedReport};
pub use sweep::{
    classify_candidate, contradictory_pair_survey, contradictory_pair_survey_with, sweep_candidates,
    sweep_candidates_with, symmetric_space, verify_lemmas, verify_lemmas_with, CandidateOutcome, ContradictorySurvey,
    Discrepancy, LemmaReport, SweepPlan, SweepReport, BATCH_SIZE,
};
