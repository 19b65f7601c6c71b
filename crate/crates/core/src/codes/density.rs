use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::metric::Lambda;

use super::{check_enumerable, LinearCode};

/// The generator used by every randomized routine: ChaCha with 8 rounds,
/// seeded per trial with `seed + trial`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial))
}

/// Uniform `k × n` generator matrix, resampled until it has full rank.
pub fn random_linear_code<R: Rng>(field: &Field, n: usize, k: usize, rng: &mut R) -> Result<LinearCode> {
    if k > n {
        return Err(Error::ConditionViolated(format!("k = {k} exceeds n = {n}")));
    }
    loop {
        let rows = (0..k)
            .map(|_| (0..n).map(|_| Gf(rng.gen_range(0..field.size()))).collect())
            .collect();
        let code = LinearCode::from_generator(field, rows)?;
        if code.rank_deficiency() == 0 {
            return Ok(code);
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    pub trials: u64,
    pub optimal: u64,
    pub fraction: f64,
}

/// Fraction of uniformly random full-rank `[n, k]` codes that are MλD.
pub fn mrd_density_experiment(
    field: &Field,
    n: usize,
    k: usize,
    lambda: Lambda,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<DensityReport> {
    lambda.require_at_least_one()?;
    check_enumerable(&LinearCode::identity(field, k), cap)?;
    let mut optimal = 0;
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let code = random_linear_code(field, n, k, &mut rng)?;
        if code.mlambda_d_verdict(lambda, cap)?.is_optimal {
            optimal += 1;
        }
    }
    Ok(DensityReport {
        trials,
        optimal,
        fraction: if trials == 0 { 0.0 } else { optimal as f64 / trials as f64 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DEFAULT_ENUMERATION_CAP;

    #[test]
    fn full_codes_are_always_optimal() {
        let f = Field::new(2, 1, 4, None).unwrap();
        let r = mrd_density_experiment(&f, 3, 3, Lambda::integer(2).unwrap(), 20, 7, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(r.fraction, 1.0);
    }

    #[test]
    fn seeded_runs_repeat() {
        let f = Field::new(2, 1, 4, None).unwrap();
        let lam = Lambda::integer(2).unwrap();
        let a = mrd_density_experiment(&f, 4, 2, lam, 30, 11, DEFAULT_ENUMERATION_CAP).unwrap();
        let b = mrd_density_experiment(&f, 4, 2, lam, 30, 11, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(a, b);
        assert!((0.0..=1.0).contains(&a.fraction));
    }
}
