use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{strict_orders, weak_orders};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::relation::PreferenceRelation;
use crate::search::sweep::BATCH_SIZE;
use crate::swf::{is_cycle3, majority_of};

/// Largest number of profiles [`exact_cycle_fraction`] enumerates.
pub const MAX_EXACT_PROFILES: u64 = 13u64.pow(6);

/// Each voter draws a ballot uniformly and independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Culture {
    /// Uniform over the 6 strict orders.
    StrictImpartial,
    /// Uniform over the 13 weak orders.
    WeakImpartial,
}

impl Culture {
    pub fn name(self) -> &'static str {
        match self {
            Culture::StrictImpartial => "strict",
            Culture::WeakImpartial => "weak",
        }
    }

    fn ballots(self) -> Vec<PreferenceRelation> {
        match self {
            Culture::StrictImpartial => strict_orders(),
            Culture::WeakImpartial => weak_orders().to_vec(),
        }
    }
}

impl fmt::Display for Culture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Culture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Culture::StrictImpartial),
            "weak" => Ok(Culture::WeakImpartial),
            _ => Err(Error::Invalid {
                what: "culture",
                message: format!("unknown culture {s:?} (expected strict or weak)"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CondorcetEstimate {
    pub voters: usize,
    pub trials: u64,
    pub seed: u64,
    pub culture: Culture,
    pub cycles: u64,
    pub fraction: f64,
    pub std_error: f64,
    /// 95% normal-approximation interval.
    pub ci_low: f64,
    pub ci_high: f64,
}

fn majority_cycles(ballots: &[PreferenceRelation], chosen: impl Iterator<Item = usize> + Clone) -> bool {
    is_cycle3(std::array::from_fn(|j| {
        majority_of(chosen.clone().map(|b| ballots[b].get(j)))
    }))
}

fn check_voters(voters: usize) -> Result<()> {
    if voters < 2 {
        return Err(Error::BadDimension {
            what: "voters",
            value: voters,
            expected: ">= 2",
        });
    }
    Ok(())
}

pub fn monte_carlo_condorcet(voters: usize, trials: u64, seed: u64, culture: Culture) -> Result<CondorcetEstimate> {
    monte_carlo_condorcet_with(voters, trials, seed, culture, Exec::default())
}

/// Fraction of i.i.d. profiles on which pairwise majority cycles. Batch `b`
/// of [`BATCH_SIZE`] trials draws from ChaCha8 seeded with `seed` on stream
/// `b`.
pub fn monte_carlo_condorcet_with(
    voters: usize,
    trials: u64,
    seed: u64,
    culture: Culture,
    exec: Exec,
) -> Result<CondorcetEstimate> {
    check_voters(voters)?;
    if trials == 0 {
        return Err(Error::BadDimension {
            what: "trials",
            value: 0,
            expected: ">= 1",
        });
    }
    let ballots = culture.ballots();
    let counts = exec.map(0..trials.div_ceil(BATCH_SIZE), |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(b);
        let len = BATCH_SIZE.min(trials - b * BATCH_SIZE);
        let mut chosen = vec![0usize; voters];
        let mut cycles = 0u64;
        for _ in 0..len {
            for c in chosen.iter_mut() {
                *c = rng.random_range(0..ballots.len());
            }
            if majority_cycles(&ballots, chosen.iter().copied()) {
                cycles += 1;
            }
        }
        cycles
    });
    let cycles: u64 = counts.into_iter().sum();
    let fraction = cycles as f64 / trials as f64;
    let std_error = (fraction * (1.0 - fraction) / trials as f64).sqrt();
    Ok(CondorcetEstimate {
        voters,
        trials,
        seed,
        culture,
        cycles,
        fraction,
        std_error,
        ci_low: fraction - 1.96 * std_error,
        ci_high: fraction + 1.96 * std_error,
    })
}

/// `(cycling profiles, all profiles)` under the culture's ballots, by
/// enumeration.
pub fn exact_cycle_fraction(voters: usize, culture: Culture) -> Result<(u64, u64)> {
    check_voters(voters)?;
    let ballots = culture.ballots();
    let k = ballots.len() as u64;
    let total = k
        .checked_pow(voters as u32)
        .filter(|&t| t <= MAX_EXACT_PROFILES)
        .ok_or(Error::TooLarge {
            what: "exact cycle enumeration",
            n: voters,
            max: match culture {
                Culture::StrictImpartial => 8,
                Culture::WeakImpartial => 6,
            },
        })?;
    let cycles = Exec::default().count(0..total, |mut idx| {
        let chosen: Vec<usize> = (0..voters)
            .map(|_| {
                let b = (idx % k) as usize;
                idx /= k;
                b
            })
            .collect();
        majority_cycles(&ballots, chosen.iter().copied())
    });
    Ok((cycles, total))
}
