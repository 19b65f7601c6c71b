//! Sphere and ball sizes in the λ-subfield metric, exact and asymptotic.
//!
//! A vector with `t` roof entries and `s` base entries has weight `s + λt`, and
//! there are `C(n,t)(q^m−q)^t · C(n−t,s)(q−1)^s` of them. Sizes are summed
//! over admissible `(s,t)` directly, which handles rational λ without
//! fractional binomials.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::binomial;
use num_rational::{BigRational, Rational64};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::metric::Lambda;

/// The ambient alphabet `F_{q^m}` with distinguished subfield size `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub q: u64,
    pub m: u32,
    size: u64,
}

impl Alphabet {
    pub fn new(q: u64, m: u32) -> Result<Self> {
        if q < 2 || m == 0 {
            return Err(Error::ConditionViolated(format!("need q >= 2 and m >= 1, got q={q}, m={m}")));
        }
        let size = q.checked_pow(m).ok_or(Error::FieldTooLarge(q, m))?;
        Ok(Alphabet { q, m, size })
    }

    /// `q^m`.
    pub fn size(self) -> u64 {
        self.size
    }

    /// Number of base-type symbols, `q − 1`.
    pub fn base_symbols(self) -> u64 {
        self.q - 1
    }

    /// Number of roof-type symbols, `q^m − q`.
    pub fn roof_symbols(self) -> u64 {
        self.size - self.q
    }

    /// `q^{mn}`.
    pub fn space_size(self, n: usize) -> BigUint {
        BigUint::from(self.size).pow(n as u32)
    }
}

/// Weight values `s + λt` with `s + t ≤ n`, sorted and deduplicated.
pub fn achievable_weights(n: usize, lambda: Lambda) -> Vec<Rational64> {
    let lam = lambda.value();
    let mut set = BTreeSet::new();
    for t in 0..=n {
        for s in 0..=(n - t) {
            set.insert(Rational64::from_integer(s as i64) + lam * t as i64);
        }
    }
    set.into_iter().collect()
}

/// Largest achievable weight strictly below `x`, if any.
pub fn largest_weight_below(n: usize, lambda: Lambda, x: Rational64) -> Option<Rational64> {
    let lam = lambda.value();
    let mut best: Option<Rational64> = None;
    for t in 0..=n {
        let rt = lam * t as i64;
        if rt >= x {
            break;
        }
        // largest integer s with rt + s < x, capped by n − t
        let room = x - rt;
        let s = if room.is_integer() { room.to_integer() - 1 } else { room.floor().to_integer() };
        let s = s.min((n - t) as i64);
        let w = rt + s;
        if best.is_none_or(|b| w > b) {
            best = Some(w);
        }
    }
    best
}

/// `C(n,t)(q^m−q)^t` for `t = 0..=n`.
fn roof_factors(n: usize, a: Alphabet) -> Vec<BigUint> {
    let r = a.roof_symbols();
    let mut out = Vec::with_capacity(n + 1);
    let mut cur = BigUint::one();
    for t in 0..=n {
        out.push(cur.clone());
        if r == 0 {
            cur = BigUint::zero();
        } else {
            cur = cur * BigUint::from(n - t) * r / BigUint::from(t + 1);
        }
    }
    out
}

/// `Σ_{s=0}^{smax} C(len,s)(q−1)^s`.
fn base_partial_sum(len: usize, smax: usize, a: Alphabet) -> BigUint {
    let b = a.base_symbols();
    let mut term = BigUint::one();
    let mut sum = BigUint::zero();
    for s in 0..=smax.min(len) {
        sum += &term;
        term = term * BigUint::from(len - s) * b / BigUint::from(s + 1);
    }
    sum
}

/// `|S_w|`: number of vectors of λ-weight exactly `w`.
pub fn sphere_size(n: usize, w: Rational64, lambda: Lambda, a: Alphabet) -> BigUint {
    let lam = lambda.value();
    let roof = roof_factors(n, a);
    let mut total = BigUint::zero();
    for t in 0..=n {
        let rest = w - lam * t as i64;
        if rest < Rational64::zero() {
            break;
        }
        if !rest.is_integer() {
            continue;
        }
        let s = rest.to_integer() as usize;
        if s + t > n {
            continue;
        }
        let base = binomial(BigUint::from(n - t), BigUint::from(s)) * BigUint::from(a.base_symbols()).pow(s as u32);
        total += &roof[t] * base;
    }
    total
}

/// `|B_r|`: number of vectors of λ-weight at most `r`.
pub fn ball_size(n: usize, r: Rational64, lambda: Lambda, a: Alphabet) -> BigUint {
    let lam = lambda.value();
    if r < Rational64::zero() {
        return BigUint::zero();
    }
    if r >= lam * n as i64 && lam >= Rational64::one() {
        return a.space_size(n);
    }
    let roof = roof_factors(n, a);
    let mut total = BigUint::zero();
    for (t, rf) in roof.iter().enumerate() {
        let rest = r - lam * t as i64;
        if rest < Rational64::zero() {
            break;
        }
        if rf.is_zero() {
            continue;
        }
        let smax = rest.floor().to_integer() as usize;
        total += rf * base_partial_sum(n - t, smax, a);
    }
    total
}

/// The double sum `Σ_{j≤r} Σ_{i≤⌊j/λ⌋} (q^m−q)^i C(n,i) (q−1)^{j−λi} C(n−i, j−λi)`
/// for integer λ, written out literally; returns the per-`(j, i)` terms.
pub fn ball_size_double_sum_terms(n: usize, r: u64, lambda: u64, a: Alphabet) -> Vec<((u64, u64), BigUint)> {
    let mut terms = Vec::new();
    for j in 0..=r {
        for i in 0..=(j / lambda) {
            let s = j - lambda * i;
            let term = if i as usize > n || s as usize > n - i as usize {
                BigUint::zero()
            } else {
                BigUint::from(a.roof_symbols()).pow(i as u32)
                    * binomial(BigUint::from(n), BigUint::from(i))
                    * BigUint::from(a.base_symbols()).pow(s as u32)
                    * binomial(BigUint::from(n - i as usize), BigUint::from(s))
            };
            terms.push(((j, i), term));
        }
    }
    terms
}

pub fn ball_size_double_sum(n: usize, r: u64, lambda: u64, a: Alphabet) -> BigUint {
    ball_size_double_sum_terms(n, r, lambda, a).into_iter().map(|(_, t)| t).sum()
}

/// `log_base(x)` for a positive big integer, accurate to double precision.
pub fn log_big(x: &BigUint, base: f64) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().ln() / base.ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap();
    (top.ln() + shift as f64 * std::f64::consts::LN_2) / base.ln()
}

/// `log_base(x)` for a positive big rational.
pub fn log_big_ratio(x: &BigRational, base: f64) -> f64 {
    let num = x.numer().to_biguint().expect("positive");
    let den = x.denom().to_biguint().expect("positive");
    log_big(&num, base) - log_big(&den, base)
}

/// Saddle-point data for the generating function `f(x) = 1 + (q−1)x + (q^m−q)x^λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticSpec {
    pub u: f64,
    pub lambda: f64,
    pub alphabet: Alphabet,
    pub rho: f64,
    /// `log_{q^m} f(ρ) − U log_{q^m} ρ`, the sphere exponent.
    pub sphere_exponent: f64,
    /// The ball exponent: the sphere exponent below the mean weight, 1 above.
    pub exponent: f64,
}

pub fn f_poly(x: f64, lambda: f64, a: Alphabet) -> f64 {
    1.0 + a.base_symbols() as f64 * x + a.roof_symbols() as f64 * x.powf(lambda)
}

/// `Δ(x) = x f'(x) / f(x)`.
pub fn delta(x: f64, lambda: f64, a: Alphabet) -> f64 {
    let b = a.base_symbols() as f64 * x;
    let r = a.roof_symbols() as f64 * x.powf(lambda);
    (b + lambda * r) / (1.0 + b + r)
}

/// `(q^m−q)(λ−U)ρ^λ + (q−1)(1−U)ρ − U`, zero at the saddle point.
pub fn saddle_residual(rho: f64, u: f64, lambda: f64, a: Alphabet) -> f64 {
    a.roof_symbols() as f64 * (lambda - u) * rho.powf(lambda) + a.base_symbols() as f64 * (1.0 - u) * rho - u
}

/// `lim_{x→∞} Δ(x)`.
pub fn delta_limit(lambda: f64, a: Alphabet) -> f64 {
    if a.roof_symbols() > 0 {
        lambda.max(1.0)
    } else {
        1.0
    }
}

/// Unique positive root of `Δ(x) = U`, by bisection.
pub fn saddle_rho(u: f64, lambda: Lambda, a: Alphabet) -> Result<f64> {
    let lam = lambda.to_f64();
    let umax = delta_limit(lam, a);
    if !(u > 0.0 && u < umax) {
        return Err(Error::RadiusOutOfRange(u, umax));
    }
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    while delta(hi, lam, a) <= u {
        hi *= 2.0;
        if !hi.is_finite() || hi > 1e300 {
            return Err(Error::NoConvergence);
        }
    }
    if delta(lo, lam, a) >= u {
        return Err(Error::NoConvergence);
    }
    for _ in 0..4000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let dm = delta(mid, lam, a);
        let slack = 1e-15 * umax;
        if !(delta(lo, lam, a) <= dm + slack && dm <= delta(hi, lam, a) + slack) {
            // Δ must be increasing on the bracket
            return Err(Error::NoConvergence);
        }
        if dm < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let rho = 0.5 * (lo + hi);
    if (delta(rho, lam, a) - u).abs() > 1e-12 {
        return Err(Error::NoConvergence);
    }
    Ok(rho)
}

/// Mean λ-weight of a uniform symbol, `(q−1 + λ(q^m−q))/q^m`, as a float.
fn mean_weight(lambda: f64, a: Alphabet) -> f64 {
    (a.base_symbols() as f64 + lambda * a.roof_symbols() as f64) / a.size() as f64
}

/// `lim (1/n) log_{q^m} |B_{Un}|`.
///
/// The saddle-point formula counts the sphere of radius `Un`; below the mean
/// weight the ball is dominated by that sphere, at or above it the ball holds
/// a constant fraction of the space and the exponent is 1.
pub fn asymptotic_ball_exponent(u: f64, lambda: Lambda, a: Alphabet) -> Result<AsymptoticSpec> {
    let rho = saddle_rho(u, lambda, a)?;
    let lam = lambda.to_f64();
    let ln_q = (a.size() as f64).ln();
    let sphere_exponent = f_poly(rho, lam, a).ln() / ln_q - u * rho.ln() / ln_q;
    let exponent = if u >= mean_weight(lam, a) { 1.0 } else { sphere_exponent };
    Ok(AsymptoticSpec {
        u,
        lambda: lam,
        alphabet: a,
        rho,
        sphere_exponent,
        exponent,
    })
}

/// `q^m`-ary entropy `U log(q^m−1) − U log U − (1−U) log(1−U)`, base `q^m`.
pub fn qary_entropy(u: f64, qm: u64) -> f64 {
    let b = (qm as f64).ln();
    let term = |x: f64| if x <= 0.0 { 0.0 } else { x * x.ln() };
    (u * ((qm - 1) as f64).ln() - term(u) - term(1.0 - u)) / b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(n: i64, d: i64) -> Lambda {
        Lambda::new(n, d).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn small_spheres() {
        let a = Alphabet::new(2, 2).unwrap();
        assert_eq!(sphere_size(5, r(0, 1), lam(2, 1), a), BigUint::one());
        assert_eq!(sphere_size(2, r(1, 1), lam(2, 1), a), BigUint::from(2u32));
        let b = Alphabet::new(3, 2).unwrap();
        assert_eq!(sphere_size(1, r(5, 2), lam(5, 2), b), BigUint::from(6u32));
    }

    #[test]
    fn balls_saturate() {
        let a = Alphabet::new(2, 2).unwrap();
        assert_eq!(ball_size(4, r(8, 1), lam(2, 1), a), BigUint::from(256u32));
        assert_eq!(ball_size(1, r(3, 2), lam(3, 2), a), BigUint::from(4u32));
        assert_eq!(ball_size(3, r(1, 1), lam(2, 1), a), BigUint::from(4u32));
        // 1 + 3 single base + 3 double base + 3·2 single roof
        assert_eq!(ball_size(3, r(2, 1), lam(2, 1), a), BigUint::from(13u32));
    }

    #[test]
    fn spheres_sum_to_balls() {
        let a = Alphabet::new(3, 2).unwrap();
        for l in [lam(1, 1), lam(3, 2), lam(2, 1), lam(1, 2)] {
            let ws = achievable_weights(4, l);
            let mut acc = BigUint::zero();
            for w in &ws {
                acc += sphere_size(4, *w, l, a);
                assert_eq!(acc, ball_size(4, *w, l, a));
            }
            assert_eq!(acc, a.space_size(4));
        }
    }

    #[test]
    fn double_sum_agrees_for_integer_lambda() {
        let a = Alphabet::new(4, 2).unwrap();
        for n in 1..6 {
            for l in 1..4u64 {
                for rr in 0..=(l * n as u64) {
                    assert_eq!(
                        ball_size_double_sum(n, rr, l, a),
                        ball_size(n, Rational64::from_integer(rr as i64), lam(l as i64, 1), a)
                    );
                }
            }
        }
    }

    #[test]
    fn largest_weight_below_examples() {
        assert_eq!(largest_weight_below(5, lam(3, 2), r(2, 1)), Some(r(3, 2)));
        assert_eq!(largest_weight_below(6, lam(2, 1), r(9, 2)), Some(r(4, 1)));
        assert_eq!(largest_weight_below(3, lam(2, 1), r(1, 2)), Some(r(0, 1)));
        assert_eq!(largest_weight_below(3, lam(2, 1), r(0, 1)), None);
        // capped by s + t ≤ n
        assert_eq!(largest_weight_below(1, lam(2, 1), r(10, 1)), Some(r(2, 1)));
    }

    #[test]
    fn hamming_saddle_point() {
        let a = Alphabet::new(2, 2).unwrap();
        let rho = saddle_rho(0.5, Lambda::one(), a).unwrap();
        assert!((rho - 1.0 / 3.0).abs() < 1e-12);
        let tiny = saddle_rho(1e-9, lam(2, 1), a).unwrap();
        assert!(tiny < 1e-8);
        for u in [0.1, 0.7, 1.3, 1.9] {
            let rho = saddle_rho(u, lam(2, 1), a).unwrap();
            assert!(saddle_residual(rho, u, 2.0, a).abs() < 1e-9);
        }
        assert!(matches!(saddle_rho(2.0, lam(2, 1), a), Err(Error::RadiusOutOfRange(..))));
        assert!(matches!(saddle_rho(0.0, lam(2, 1), a), Err(Error::RadiusOutOfRange(..))));
    }

    #[test]
    fn hamming_exponent_is_entropy() {
        let a = Alphabet::new(2, 2).unwrap();
        for u in [0.1, 0.3, 0.6] {
            let s = asymptotic_ball_exponent(u, Lambda::one(), a).unwrap();
            assert!((s.exponent - qary_entropy(u, 4)).abs() < 1e-10);
        }
        let at_mean = asymptotic_ball_exponent(0.75, Lambda::one(), a).unwrap();
        assert!((at_mean.sphere_exponent - 1.0).abs() < 1e-9);
        assert_eq!(at_mean.exponent, 1.0);
    }

    #[test]
    fn reformulated_f_identity_disagrees_with_direct_evaluation() {
        // The closed form obtained by substituting the saddle equation into f
        // does not reproduce f(ρ); direct evaluation is authoritative.
        let a = Alphabet::new(2, 2).unwrap();
        let (l, u) = (2.0, 0.5);
        let rho = saddle_rho(u, lam(2, 1), a).unwrap();
        let direct = f_poly(rho, l, a);
        let closed = (l - u * u) - (l - u) * rho.powf(l) * 2.0 - rho * (1.0 - u) * (1.0 - u);
        assert!((direct - closed).abs() > 0.1);
    }

    #[test]
    fn big_logs() {
        let x = BigUint::from(4u32).pow(2000);
        assert!((log_big(&x, 4.0) - 2000.0).abs() < 1e-9);
        assert!((log_big(&BigUint::from(1000u32), 10.0) - 3.0).abs() < 1e-12);
    }
}
