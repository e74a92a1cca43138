use crate::enumerate::profile_count;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::profile::Profile;
use crate::relation::PreferenceRelation;
use crate::swf::{is_cycle3, IiaSwf};
use crate::ternary::TernaryValue;
use crate::witness::{contradicts, ContradictoryPair, Provenance};

/// Largest `N` the brute-force oracles accept (`13^4` profiles).
pub const MAX_ORACLE_INDIVIDUALS: usize = 4;

fn check_size(swf: &IiaSwf) -> Result<()> {
    if swf.n() > MAX_ORACLE_INDIVIDUALS {
        return Err(Error::TooLarge {
            what: "brute-force search",
            n: swf.n(),
            max: MAX_ORACLE_INDIVIDUALS,
        });
    }
    Ok(())
}

/// Every profile whose aggregate is a cycle, in enumeration order. Empty iff
/// Unrestricted Domain holds.
pub fn brute_force_cycle_search(swf: &IiaSwf) -> Result<Vec<(Profile, PreferenceRelation)>> {
    brute_force_cycle_search_with(swf, Exec::default())
}

pub fn brute_force_cycle_search_with(swf: &IiaSwf, exec: Exec) -> Result<Vec<(Profile, PreferenceRelation)>> {
    check_size(swf)?;
    Ok(cycle_indices(swf, exec)
        .into_iter()
        .map(|idx| {
            let m = Profile::from_index(swf.n(), idx).expect("index in range");
            let t = swf.apply(&m).expect("matching dimension");
            (m, t)
        })
        .collect())
}

/// Indices of the cycle-producing profiles, ascending.
pub(crate) fn cycle_indices(swf: &IiaSwf, exec: Exec) -> Vec<u64> {
    exec.filter(0..profile_count(swf.n()), |idx| is_cycle3(swf.apply_index(idx)))
}

/// The first `(m, m')` in enumeration order with `w(m) = (1,1,1)`,
/// `w(m') = (0,0,0)` and `m`, `m'` contradicting each other; `None` proves
/// no such pair exists.
pub fn brute_force_contradictory_pair(swf: &IiaSwf) -> Result<Option<ContradictoryPair>> {
    check_size(swf)?;
    let n = swf.n();
    let with = |x: TernaryValue| -> Vec<Profile> {
        (0..profile_count(n))
            .filter(|&idx| swf.apply_index(idx) == [x; 3])
            .map(|idx| Profile::from_index(n, idx).expect("index in range"))
            .collect()
    };
    let ups = with(TernaryValue::One);
    if ups.is_empty() {
        return Ok(None);
    }
    let downs = with(TernaryValue::Zero);
    for m in &ups {
        for m2 in &downs {
            if contradicts(m, m2)? {
                return ContradictoryPair::new(swf, *m, *m2, Provenance::ContradictoryPartner).map(Some);
            }
        }
    }
    Ok(None)
}
