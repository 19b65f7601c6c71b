//! Weights and distances on `F_{q^m}^n`: Hamming, rank, base, roof, the
//! base-roof pair and the λ-subfield weight `s + λt`.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::linalg;

/// Exact rational weight parameter `λ ≥ 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lambda(Rational64);

impl Lambda {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator <= 0 || numerator <= 0 {
            return Err(Error::Parse(format!("invalid lambda {numerator}/{denominator}")));
        }
        let r = Rational64::new(numerator, denominator);
        if r * 2 < Rational64::from_integer(1) {
            return Err(Error::LambdaTooSmall(r.to_string(), "1/2".into()));
        }
        Ok(Lambda(r))
    }

    pub fn integer(n: i64) -> Result<Self> {
        Lambda::new(n, 1)
    }

    /// The Hamming case.
    pub fn one() -> Self {
        Lambda(Rational64::from_integer(1))
    }

    pub fn value(self) -> Rational64 {
        self.0
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Singleton-type statements and MλD verdicts need `λ ≥ 1`.
    pub fn require_at_least_one(self) -> Result<()> {
        if self.0 < Rational64::from_integer(1) {
            Err(Error::LambdaTooSmall(self.0.to_string(), "1".into()))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Lambda {
    type Err = Error;

    /// `"2"`, `"3/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad lambda {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => Lambda::new(
                n.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => Lambda::integer(s.parse().map_err(|_| bad())?),
        }
    }
}

/// An exact λ-weight or λ-distance, `s + λt`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LambdaValue(pub Rational64);

impl LambdaValue {
    pub fn integer(n: i64) -> Self {
        LambdaValue(Rational64::from_integer(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        LambdaValue(Rational64::new(n, d))
    }

    pub fn value(self) -> Rational64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for LambdaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Counts of base-type (`F_q \ {0}`) and roof-type (`F_{q^m} \ F_q`) entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BRWeight {
    pub base: usize,
    pub roof: usize,
}

impl BRWeight {
    pub const ZERO: BRWeight = BRWeight { base: 0, roof: 0 };

    pub fn new(base: usize, roof: usize) -> Self {
        BRWeight { base, roof }
    }

    pub fn lambda_value(self, lambda: Lambda) -> LambdaValue {
        LambdaValue(Rational64::from_integer(self.base as i64) + lambda.value() * self.roof as i64)
    }

    pub fn hamming(self) -> usize {
        self.base + self.roof
    }

    /// Componentwise `≤`.
    pub fn precedes_or_equals(self, other: BRWeight) -> bool {
        self.base <= other.base && self.roof <= other.roof
    }

    /// Strictly below in the componentwise partial order.
    pub fn strictly_precedes(self, other: BRWeight) -> bool {
        self != other && self.precedes_or_equals(other)
    }
}

impl Add for BRWeight {
    type Output = BRWeight;
    fn add(self, rhs: BRWeight) -> BRWeight {
        BRWeight::new(self.base + rhs.base, self.roof + rhs.roof)
    }
}

impl fmt::Display for BRWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.base, self.roof)
    }
}

/// Renders a set of BR pairs as `{(a,b),(c,d)}`.
pub fn format_br_set(set: &[BRWeight]) -> String {
    let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn check_len(x: &[Gf], y: &[Gf]) -> Result<()> {
    if x.len() == y.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch(x.len(), y.len()))
    }
}

fn difference(field: &Field, x: &[Gf], y: &[Gf]) -> Result<Vec<Gf>> {
    check_len(x, y)?;
    Ok(x.iter().zip(y).map(|(&a, &b)| field.sub(a, b)).collect())
}

pub fn br_weight(field: &Field, v: &[Gf]) -> BRWeight {
    let mut w = BRWeight::ZERO;
    for &x in v {
        if x.is_zero() {
            continue;
        }
        if field.is_base_element(x) {
            w.base += 1;
        } else {
            w.roof += 1;
        }
    }
    w
}

pub fn lambda_weight(field: &Field, v: &[Gf], lambda: Lambda) -> LambdaValue {
    br_weight(field, v).lambda_value(lambda)
}

pub fn hamming_weight(v: &[Gf]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

pub fn base_weight(field: &Field, v: &[Gf]) -> usize {
    br_weight(field, v).base
}

pub fn roof_weight(field: &Field, v: &[Gf]) -> usize {
    br_weight(field, v).roof
}

/// Dimension over `F_q` of the span of the entries, via the `m × n` matrix of
/// `F_q`-coordinates in the basis `1, g, …, g^{m-1}`.
pub fn rank_weight(field: &Field, v: &[Gf]) -> usize {
    if v.iter().all(|x| x.is_zero()) {
        return 0;
    }
    let m = field.m() as usize;
    let cols: Vec<Vec<Gf>> = v.iter().map(|&x| field.subfield_coords(x)).collect();
    let rows: Vec<Vec<Gf>> = (0..m).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    linalg::rank(field, &rows)
}

pub fn lambda_distance(field: &Field, x: &[Gf], y: &[Gf], lambda: Lambda) -> Result<LambdaValue> {
    Ok(lambda_weight(field, &difference(field, x, y)?, lambda))
}

pub fn br_distance(field: &Field, x: &[Gf], y: &[Gf]) -> Result<BRWeight> {
    Ok(br_weight(field, &difference(field, x, y)?))
}

pub fn base_distance(field: &Field, x: &[Gf], y: &[Gf]) -> Result<usize> {
    Ok(br_distance(field, x, y)?.base)
}

pub fn roof_distance(field: &Field, x: &[Gf], y: &[Gf]) -> Result<usize> {
    Ok(br_distance(field, x, y)?.roof)
}

pub fn hamming_distance(x: &[Gf], y: &[Gf]) -> Result<usize> {
    check_len(x, y)?;
    Ok(x.iter().zip(y).filter(|(a, b)| a != b).count())
}

pub fn rank_distance(field: &Field, x: &[Gf], y: &[Gf]) -> Result<usize> {
    Ok(rank_weight(field, &difference(field, x, y)?))
}

/// Minimal elements of `set` under the componentwise order, sorted by base count.
pub fn pareto_minima<I: IntoIterator<Item = BRWeight>>(set: I) -> Result<Vec<BRWeight>> {
    let mut all: Vec<BRWeight> = set.into_iter().collect();
    if all.is_empty() {
        return Err(Error::EmptySet);
    }
    all.sort_unstable();
    all.dedup();
    // sorted by (base, roof): an element is minimal iff its roof is below every
    // roof seen at a smaller base
    let mut out = Vec::new();
    let mut best_roof = usize::MAX;
    for w in all {
        if w.roof < best_roof {
            out.push(w);
            best_roof = w.roof;
        }
    }
    Ok(out)
}

/// Minimum of `s + λt` over a set of BR pairs.
pub fn min_lambda_value(set: &[BRWeight], lambda: Lambda) -> Option<LambdaValue> {
    set.iter().map(|w| w.lambda_value(lambda)).min()
}
