//! Ternary encodings of weak preferences on three alternatives, checkers
//! for the Arrovian axioms over IIA social welfare functions, and
//! constructive witnesses: explicit profiles that aggregate to preference
//! cycles.
//!
//! A relation on alternatives `a1, ..., aA` is a tuple `(t1, ..., tA)` over
//! `{0, e, 1}`, where `ti` compares `ai` with its cyclic successor: `0`
//! means `ai` is preferred, `1` the reverse, `e` indifference. A tuple is a
//! weak order exactly when its values are all `e` or include both `0` and
//! `1`; everything else is a cycle.
//!
//! ```
//! use arrovian::{pairwise_majority, Profile};
//!
//! let m = Profile::from_columns(&["001".parse()?, "100".parse()?, "010".parse()?])?;
//! let w = pairwise_majority(3)?;
//! assert!(w.apply(&m)?.is_cycle());
//! # Ok::<(), arrovian::Error>(())
//! ```

pub mod axioms;
mod chain;
pub mod enumerate;
mod error;
pub mod exec;
pub mod format;
mod pairs;
mod profile;
mod relation;
pub mod report;
pub mod search;
pub mod swf;
mod ternary;
pub mod witness;

pub use axioms::{Axiom, AxiomVerdict};
pub use chain::{parse_chain, render_chain};
pub use error::{Error, ParseError, Result};
pub use exec::Exec;
pub use pairs::{delta, PairwisePreferences};
pub use profile::{opposite_row_profiles, weak_opposite_profiles, Profile};
pub use relation::{Classification, PreferenceRelation, RelationKind};
pub use swf::{
    constant_swf, dictator, hierarchical_dictator, indifference_swf, pairwise_majority, BuiltinSwf, GeneralSwf, IiaSwf,
    PairwiseComparisonFunction,
};
pub use ternary::{TernaryValue, ValueSet};
pub use witness::{contradicts, is_inconsistent, ContradictoryPair, CycleWitness, Provenance};
