//! Upper and lower bounds on `A_{q^m,λ}(n,d)`, the largest size of a code of
//! length `n` and minimum λ-distance `d`, plus the random-code GV experiment.
//!
//! Every bound is kept as an exact rational together with its integer
//! rounding (floor for upper bounds, ceiling for the lower bound).

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive};

use crate::codes::{self, random_linear_code, trial_rng};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::metric::Lambda;
use crate::volume::{ball_size, largest_weight_below, log_big, log_big_ratio, Alphabet};

fn big(r: Rational64) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn bigu(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x.clone()))
}

fn floor_u(x: &BigRational) -> BigUint {
    x.floor().to_integer().to_biguint().unwrap_or_default()
}

fn ceil_u(x: &BigRational) -> BigUint {
    x.ceil().to_integer().to_biguint().unwrap_or_default()
}

/// `q^{-k}` as a big rational.
fn inv_pow(q: u64, k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(q).pow(k))
}

/// Average λ-weight of a uniform symbol, `D = (q−1 + λ(q^m−q))/q^m`.
pub fn average_weight_d(lambda: Lambda, a: Alphabet) -> BigRational {
    let lam = big(lambda.value());
    (BigRational::from_integer(a.base_symbols().into()) + lam * BigRational::from_integer(a.roof_symbols().into()))
        / BigRational::from_integer(a.size().into())
}

/// `λ − (λ−1)q^{1−m} − q^{−m}`, the same value written as in the Plotkin bound.
pub fn average_weight_d_closed(lambda: Lambda, a: Alphabet) -> BigRational {
    let lam = big(lambda.value());
    let one = BigRational::one();
    &lam - (&lam - &one) * inv_pow(a.q, a.m - 1) - inv_pow(a.q, a.m)
}

/// `D' = λ − (λ−1)q^{1−m} − q^{1−2m}`, the pairwise average in the nonlinear bound.
pub fn average_weight_d_nonlinear(lambda: Lambda, a: Alphabet) -> BigRational {
    let lam = big(lambda.value());
    let one = BigRational::one();
    &lam - (&lam - &one) * inv_pow(a.q, a.m - 1) - inv_pow(a.q, 2 * a.m - 1)
}

/// Radius of the packing balls: the largest achievable weight below `d/2`.
pub fn packing_radius(n: usize, d: Rational64, lambda: Lambda) -> Rational64 {
    largest_weight_below(n, lambda, d / 2).unwrap_or_default()
}

/// Radius of the covering balls: the largest achievable weight below `d`.
pub fn covering_radius(n: usize, d: Rational64, lambda: Lambda) -> Rational64 {
    largest_weight_below(n, lambda, d).unwrap_or_default()
}

/// `q^{mn} / |B_{packing_radius}|`.
pub fn sphere_packing_bound(n: usize, d: Rational64, lambda: Lambda, a: Alphabet) -> BigRational {
    let b = ball_size(n, packing_radius(n, d, lambda), lambda, a);
    BigRational::new(BigInt::from(a.space_size(n)), BigInt::from(b))
}

/// `q^{mn} / |B_{covering_radius}|`.
pub fn gilbert_varshamov_bound(n: usize, d: Rational64, lambda: Lambda, a: Alphabet) -> BigRational {
    let b = ball_size(n, covering_radius(n, d, lambda), lambda, a);
    BigRational::new(BigInt::from(a.space_size(n)), BigInt::from(b))
}

/// `(q^m)^{n − ⌊(d−1)/λ⌋}`, with the exponent clamped at zero.
pub fn singleton_bound_size(n: usize, d: Rational64, lambda: Lambda, a: Alphabet) -> Result<BigUint> {
    lambda.require_at_least_one()?;
    let drop = ((d - 1) / lambda.value()).floor().to_integer().max(0);
    let exp = (n as i64 - drop).max(0) as u32;
    Ok(BigUint::from(a.size()).pow(exp))
}

/// Plotkin bound on the distance of a linear code of the given size:
/// `|C|/(|C|−1) · n · D`.
pub fn plotkin_distance_bound(n: usize, size: &BigUint, lambda: Lambda, a: Alphabet) -> Result<BigRational> {
    if *size < BigUint::from(2u32) {
        return Err(Error::SizeTooSmall);
    }
    let s = bigu(size);
    Ok(&s / (&s - BigRational::one()) * BigRational::from_integer(n.into()) * average_weight_d(lambda, a))
}

/// `d / (d − nD)` when `d > nD`.
pub fn plotkin_size_bound(n: usize, d: Rational64, lambda: Lambda, a: Alphabet) -> Option<BigRational> {
    let d = big(d);
    let den = &d - BigRational::from_integer(n.into()) * average_weight_d(lambda, a);
    den.is_positive().then(|| d / den)
}

/// `n' = ⌊q^m d / (λq^m − (λ−1)q − 1)⌋ − 1`.
pub fn plotkin_long_length(d: Rational64, lambda: Lambda, a: Alphabet) -> i64 {
    let lam = big(lambda.value());
    let qm = BigRational::from_integer(a.size().into());
    let q = BigRational::from_integer(a.q.into());
    let den = &lam * &qm - (&lam - BigRational::one()) * q - BigRational::one();
    let v = (qm * big(d) / den).floor().to_integer() - BigInt::one();
    v.to_i64().unwrap_or(i64::MAX)
}

/// Plotkin bound for long linear codes, `d q^{−mn'} / (d − n'D) · q^{mn}`.
pub fn plotkin_long_bound(n: usize, d: Rational64, lambda: Lambda, a: Alphabet) -> Result<BigRational> {
    let np = plotkin_long_length(d, lambda, a);
    if d / lambda.value() > Rational64::from_integer(np) {
        return Err(Error::ConditionViolated(format!("d/lambda = {} > n' = {np}", d / lambda.value())));
    }
    if n as i64 <= np {
        return Err(Error::ConditionViolated(format!("n = {n} <= n' = {np}")));
    }
    let np = np as usize;
    let dd = big(d);
    let den = &dd - BigRational::from_integer(np.into()) * average_weight_d(lambda, a);
    let scale = BigRational::from_integer(BigInt::from(a.size()).pow((n - np) as u32));
    Ok(dd / den * scale)
}

/// Nonlinear Plotkin bound `d / (d − nD')` when `d > nD'`.
pub fn plotkin_nonlinear_bound(n: usize, d: Rational64, lambda: Lambda, a: Alphabet) -> Option<BigRational> {
    let d = big(d);
    let den = &d - BigRational::from_integer(n.into()) * average_weight_d_nonlinear(lambda, a);
    den.is_positive().then(|| d / den)
}

/// An exact bound and its integer rounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub raw: BigRational,
    pub value: BigUint,
}

impl Bound {
    fn upper(raw: BigRational) -> Self {
        let value = floor_u(&raw).max(BigUint::one());
        Bound { raw, value }
    }

    fn lower(raw: BigRational) -> Self {
        let value = ceil_u(&raw).max(BigUint::one());
        Bound { raw, value }
    }

    pub fn log(&self, base: f64) -> f64 {
        log_big_ratio(&self.raw, base)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub alphabet: Alphabet,
    pub lambda: Lambda,
    pub n: usize,
    pub d: Rational64,
    pub d_avg: BigRational,
    pub sphere_packing: Bound,
    pub gilbert_varshamov: Bound,
    /// `None` when `λ < 1`.
    pub singleton: Option<Bound>,
    pub plotkin_size: Option<Bound>,
    pub plotkin_long: Option<Bound>,
    pub plotkin_nonlinear: Option<Bound>,
}

impl BoundReport {
    pub fn compute(n: usize, d: Rational64, lambda: Lambda, a: Alphabet) -> Self {
        let singleton = singleton_bound_size(n, d, lambda, a).ok().map(|v| Bound {
            raw: bigu(&v),
            value: v,
        });
        BoundReport {
            alphabet: a,
            lambda,
            n,
            d,
            d_avg: average_weight_d(lambda, a),
            sphere_packing: Bound::upper(sphere_packing_bound(n, d, lambda, a)),
            gilbert_varshamov: Bound::lower(gilbert_varshamov_bound(n, d, lambda, a)),
            singleton,
            plotkin_size: plotkin_size_bound(n, d, lambda, a).map(Bound::upper),
            plotkin_long: plotkin_long_bound(n, d, lambda, a).ok().map(Bound::upper),
            plotkin_nonlinear: plotkin_nonlinear_bound(n, d, lambda, a).map(Bound::upper),
        }
    }

    /// All applicable upper bounds with their names.
    pub fn upper_bounds(&self) -> Vec<(&'static str, &Bound)> {
        let mut out = vec![("packing", &self.sphere_packing)];
        for (name, b) in [
            ("singleton", &self.singleton),
            ("plotkin_size", &self.plotkin_size),
            ("plotkin_long", &self.plotkin_long),
            ("plotkin_nonlinear", &self.plotkin_nonlinear),
        ] {
            if let Some(b) = b {
                out.push((name, b));
            }
        }
        out
    }

    /// The smallest applicable upper bound (by exact value).
    pub fn best_upper(&self) -> &Bound {
        self.upper_bounds()
            .into_iter()
            .map(|(_, b)| b)
            .min_by(|x, y| x.raw.cmp(&y.raw))
            .expect("packing always applies")
    }
}

pub const CSV_HEADER: &str = "n,gv,packing,singleton,plotkin_size,plotkin_long,plotkin_nonlinear,best_upper";

/// One report per length in `ns`.
pub fn bounds_table(ns: impl IntoIterator<Item = usize>, d: Rational64, lambda: Lambda, a: Alphabet) -> Vec<BoundReport> {
    ns.into_iter().map(|n| BoundReport::compute(n, d, lambda, a)).collect()
}

/// CSV of `log_{q^m}` of the raw bounds, `NA` where a bound does not apply.
pub fn bounds_csv(rows: &[BoundReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let base = r.alphabet.size() as f64;
        let cell = |b: Option<&Bound>| b.map_or("NA".to_string(), |b| format!("{:.6}", b.log(base)));
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.n,
            cell(Some(&r.gilbert_varshamov)),
            cell(Some(&r.sphere_packing)),
            cell(r.singleton.as_ref()),
            cell(r.plotkin_size.as_ref()),
            cell(r.plotkin_long.as_ref()),
            cell(r.plotkin_nonlinear.as_ref()),
            cell(Some(r.best_upper())),
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct GvExperiment {
    pub k: usize,
    pub trials: u64,
    pub successes: u64,
    pub observed_fraction: f64,
    pub proven_lower_bound: f64,
}

/// `k = ⌈(1 − g(d)/n − ε) n⌉` with `g(d) = log_{q^m} |B_d|`.
pub fn gv_dimension(n: usize, d: Rational64, lambda: Lambda, eps: f64, a: Alphabet) -> Result<usize> {
    let g = log_big(&ball_size(n, d, lambda, a), a.size() as f64);
    let x = (1.0 - g / n as f64 - eps) * n as f64;
    let k = (x - 1e-9).ceil();
    if k < 1.0 {
        return Err(Error::ConditionViolated(format!("dimension {k} < 1 for eps = {eps}")));
    }
    Ok((k as usize).min(n))
}

/// Samples random full-rank `[n,k]` codes and counts those with `d_λ ≥ d`.
#[allow(clippy::too_many_arguments)]
pub fn gv_random_experiment(
    field: &Field,
    lambda: Lambda,
    n: usize,
    d: Rational64,
    eps: f64,
    trials: u64,
    seed: u64,
    cap: u64,
) -> Result<GvExperiment> {
    let a = Alphabet::new(field.q(), field.m())?;
    let k = gv_dimension(n, d, lambda, eps, a)?;
    codes::check_enumerable(&codes::LinearCode::identity(field, k), cap)?;
    let mut successes = 0;
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let code = random_linear_code(field, n, k, &mut rng)?;
        let set = codes::br_distribution(&code, cap, 1)?;
        if set.min_lambda(lambda).is_some_and(|v| v.value() >= d) {
            successes += 1;
        }
    }
    let qm = a.size() as f64;
    let proven = (1.0 - qm.powf(1.0 - eps * n as f64)).clamp(0.0, 1.0);
    Ok(GvExperiment {
        k,
        trials,
        successes,
        observed_fraction: if trials == 0 { 0.0 } else { successes as f64 / trials as f64 },
        proven_lower_bound: proven,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    fn br(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn l(n: i64) -> Lambda {
        Lambda::integer(n).unwrap()
    }

    #[test]
    fn average_weight_forms_agree() {
        let a = Alphabet::new(2, 2).unwrap();
        assert_eq!(average_weight_d(l(2), a), br(5, 4));
        assert_eq!(average_weight_d(Lambda::one(), a), br(3, 4));
        for (q, m) in [(2, 3), (3, 2), (4, 2), (5, 4), (521, 4)] {
            let a = Alphabet::new(q, m).unwrap();
            for lam in [Lambda::one(), Lambda::new(3, 2).unwrap(), l(5)] {
                assert_eq!(average_weight_d(lam, a), average_weight_d_closed(lam, a));
                assert!(average_weight_d_nonlinear(lam, a) > average_weight_d(lam, a));
            }
        }
    }

    #[test]
    fn small_bound_values() {
        let a = Alphabet::new(2, 2).unwrap();
        assert_eq!(sphere_packing_bound(3, r(3), l(2), a), br(16, 1));
        assert_eq!(Bound::lower(gilbert_varshamov_bound(3, r(3), l(2), a)).value, BigUint::from(5u32));
        assert_eq!(sphere_packing_bound(4, r(1), l(2), a), br(256, 1));
        assert_eq!(gilbert_varshamov_bound(3, r(7), l(2), a), br(1, 1));
        assert_eq!(singleton_bound_size(6, r(9), l(2), a).unwrap(), BigUint::from(16u32));
        assert_eq!(plotkin_size_bound(2, r(3), l(2), a), Some(br(6, 1)));
        assert_eq!(plotkin_size_bound(2, r(2), l(2), a), None);
        assert_eq!(plotkin_nonlinear_bound(2, r(3), l(2), a), Some(br(12, 1)));
        assert_eq!(
            plotkin_distance_bound(6, &BigUint::from(4u32), l(2), a).unwrap(),
            br(10, 1)
        );
        assert!(matches!(plotkin_distance_bound(6, &BigUint::one(), l(2), a), Err(Error::SizeTooSmall)));
    }

    #[test]
    fn singleton_at_the_mld_boundary() {
        let a = Alphabet::new(4, 2).unwrap();
        for (n, k, lam) in [(5usize, 2usize, 3i64), (7, 4, 2), (3, 3, 5)] {
            let d = r(lam * (n - k) as i64 + 1);
            assert_eq!(singleton_bound_size(n, d, l(lam), a).unwrap(), BigUint::from(16u32).pow(k as u32));
        }
        assert!(singleton_bound_size(3, r(2), Lambda::new(1, 2).unwrap(), a).is_err());
    }

    #[test]
    fn plotkin_long_conditions() {
        let a = Alphabet::new(4, 2).unwrap();
        // n' = ⌊16·7/(64−12−1)⌋ − 1 = 1 and d/λ = 7/4 > 1
        assert_eq!(plotkin_long_length(r(7), l(4), a), 1);
        assert!(matches!(plotkin_long_bound(5, r(7), l(4), a), Err(Error::ConditionViolated(_))));
        let b = Alphabet::new(2, 2).unwrap();
        let np = plotkin_long_length(r(7), l(2), b);
        assert_eq!(np, 4);
        assert!(matches!(plotkin_long_bound(4, r(7), l(2), b), Err(Error::ConditionViolated(_))));
        let v = plotkin_long_bound(5, r(7), l(2), b).unwrap();
        // per-prefix count times the number of prefixes
        let per = plotkin_size_bound(4, r(7), l(2), b).unwrap();
        assert_eq!(v, per * br(4, 1));
    }

    #[test]
    fn csv_shape() {
        let a = Alphabet::new(4, 2).unwrap();
        let rows = bounds_table(1..=6, r(7), l(4), a);
        let csv = bounds_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 7);
        assert!(lines.iter().skip(1).all(|l| l.split(',').count() == 8));
        assert!(csv.contains("NA"));
    }

    #[test]
    fn gv_experiment_is_seeded() {
        let f = Field::new(2, 1, 2, None).unwrap();
        let run = || gv_random_experiment(&f, l(2), 6, r(3), 0.42, 50, 9, 1 << 20).unwrap();
        let a = run();
        assert_eq!(a.k, 1);
        assert_eq!(a, run());
        assert!((0.0..=1.0).contains(&a.proven_lower_bound));
    }
}
