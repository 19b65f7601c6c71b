//! Codes as spans of generator rows, exhaustive enumeration, and BR-weight
//! distributions.
//!
//! Every code here is the set of combinations `Σ s_i · row_i` where the
//! scalars `s_i` range over an alphabet: all of `F_{q^m}` for linear codes,
//! `F_p` for additive codes, `F_q` for subfield subcodes. Enumeration walks
//! the information vectors in mixed-radix order (first row most significant)
//! and is restartable at any index, so ranges can be split across workers.

mod additive;
mod density;
mod linear;
mod subfield;

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::metric::{self, BRWeight, Lambda, LambdaValue};

pub use additive::{symplectic_form, trace_symplectic_dual, AdditiveCode};
pub use density::{mrd_density_experiment, random_linear_code, trial_rng, DensityReport};
pub use linear::{LinearCode, MldVerdict};
pub use subfield::SubfieldSubcode;

/// Default cap on the number of codewords visited by exhaustive operations.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 26;

pub trait Code {
    fn field(&self) -> &Field;
    /// Block length `n`.
    fn length(&self) -> usize;
    /// Generator rows; the code is their span over the scalar alphabet.
    fn rows(&self) -> &[Vec<Gf>];
    /// Size of the scalar alphabet.
    fn radix(&self) -> u64;
    /// The scalar for digit `d < radix`.
    fn scalar(&self, digit: u64) -> Gf;
    /// A spanning set over the prime field.
    fn prime_field_generators(&self) -> Vec<Vec<Gf>>;

    /// `radix^rows`.
    fn cardinality(&self) -> BigUint {
        BigUint::from(self.radix()).pow(self.rows().len() as u32)
    }

    /// The number of codewords when it fits in a `u64`.
    fn size(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..self.rows().len() {
            acc = acc.checked_mul(self.radix())?;
        }
        Some(acc)
    }
}

/// Fails with `TooLarge` unless the code has at most `cap` codewords.
pub fn check_enumerable<C: Code + ?Sized>(code: &C, cap: u64) -> Result<u64> {
    match code.size() {
        Some(s) if s <= cap => Ok(s),
        _ => Err(Error::too_large("code", code.cardinality(), cap)),
    }
}

/// Odometer over information vectors with cached partial sums.
pub struct Cursor<'a, C: Code + ?Sized> {
    code: &'a C,
    digits: Vec<u64>,
    /// `levels[i]` = sum of the first `i` scaled rows.
    levels: Vec<Vec<Gf>>,
    index: u64,
    end: u64,
}

impl<'a, C: Code + ?Sized> Cursor<'a, C> {
    pub fn new(code: &'a C, range: Range<u64>) -> Self {
        let k = code.rows().len();
        let n = code.length();
        let radix = code.radix();
        let mut digits = vec![0u64; k];
        let mut rest = range.start;
        for d in digits.iter_mut().rev() {
            *d = rest % radix;
            rest /= radix;
        }
        let mut cursor = Cursor {
            code,
            digits,
            levels: vec![vec![Gf::ZERO; n]; k + 1],
            index: range.start,
            end: range.end,
        };
        cursor.refresh_from(0);
        cursor
    }

    fn refresh_from(&mut self, level: usize) {
        let field = self.code.field();
        let rows = self.code.rows();
        for i in level..rows.len() {
            let s = self.code.scalar(self.digits[i]);
            let (lo, hi) = self.levels.split_at_mut(i + 1);
            let prev = &lo[i];
            let next = &mut hi[0];
            if s.is_zero() {
                next.copy_from_slice(prev);
            } else {
                for ((out, &a), &r) in next.iter_mut().zip(prev).zip(&rows[i]) {
                    *out = field.add(a, field.mul(s, r));
                }
            }
        }
    }

    /// The current codeword, or `None` once the range is exhausted.
    pub fn current(&self) -> Option<&[Gf]> {
        (self.index < self.end).then(|| self.levels.last().unwrap().as_slice())
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn advance(&mut self) {
        self.index += 1;
        if self.index >= self.end {
            return;
        }
        let radix = self.code.radix();
        let mut i = self.digits.len();
        while i > 0 {
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < radix {
                break;
            }
            self.digits[i] = 0;
        }
        self.refresh_from(i);
    }
}

impl<C: Code + ?Sized> Iterator for Cursor<'_, C> {
    type Item = Vec<Gf>;

    fn next(&mut self) -> Option<Vec<Gf>> {
        let out = self.current()?.to_vec();
        self.advance();
        Some(out)
    }
}

/// Codewords with indices in `range`, in enumeration order.
pub fn codewords<C: Code + ?Sized>(code: &C, range: Range<u64>) -> Cursor<'_, C> {
    Cursor::new(code, range)
}

/// Calls `f(index, codeword)` for every codeword in `range`.
pub fn for_each_codeword<C: Code + ?Sized>(code: &C, range: Range<u64>, mut f: impl FnMut(u64, &[Gf])) {
    let mut cur = Cursor::new(code, range);
    while let Some(c) = cur.current() {
        f(cur.index(), c);
        cur.advance();
    }
}

/// Splits `0..total` into `parts` contiguous ranges.
pub fn chunk_ranges(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = parts.max(1) as u64;
    let step = total.div_ceil(parts).max(1);
    (0..parts)
        .map(|i| (i * step).min(total)..((i + 1) * step).min(total))
        .filter(|r| !r.is_empty())
        .collect()
}

/// Exact BR-weight histogram and its Pareto frontier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BRDistanceSet {
    /// Minimal nonzero BR pairs, sorted by base count.
    pub minima: Vec<BRWeight>,
    /// Number of codewords (or pairs) per BR pair, including `(0,0)`.
    pub distribution: BTreeMap<BRWeight, u64>,
}

impl BRDistanceSet {
    pub fn from_histogram(distribution: BTreeMap<BRWeight, u64>) -> Self {
        let minima = metric::pareto_minima(
            distribution
                .iter()
                .filter(|(w, &c)| **w != BRWeight::ZERO && c > 0)
                .map(|(w, _)| *w),
        )
        .unwrap_or_default();
        BRDistanceSet { minima, distribution }
    }

    /// `min s + λt` over the minima; `None` for a one-word code.
    pub fn min_lambda(&self, lambda: Lambda) -> Option<LambdaValue> {
        metric::min_lambda_value(&self.minima, lambda)
    }

    pub fn min_hamming(&self) -> Option<usize> {
        self.minima.iter().map(|w| w.hamming()).min()
    }

    pub fn total(&self) -> u64 {
        self.distribution.values().sum()
    }
}

fn histogram_range<C: Code + ?Sized>(code: &C, range: Range<u64>) -> BTreeMap<BRWeight, u64> {
    let n = code.length();
    let field = code.field();
    let mut counts = vec![0u64; (n + 1) * (n + 1)];
    for_each_codeword(code, range, |_, c| {
        let w = metric::br_weight(field, c);
        counts[w.base * (n + 1) + w.roof] += 1;
    });
    let mut out = BTreeMap::new();
    for (idx, &c) in counts.iter().enumerate() {
        if c > 0 {
            out.insert(BRWeight::new(idx / (n + 1), idx % (n + 1)), c);
        }
    }
    out
}

/// BR-weight distribution of all codewords, by exhaustive enumeration.
/// For additive codes (in particular linear ones) this is also the BR-distance
/// distribution, since differences of codewords are codewords.
pub fn br_distribution<C: Code + Sync + ?Sized>(code: &C, cap: u64, threads: usize) -> Result<BRDistanceSet> {
    let total = check_enumerable(code, cap)?;
    let ranges = chunk_ranges(total, threads);
    let merged = if ranges.len() <= 1 {
        histogram_range(code, 0..total)
    } else {
        let parts: Vec<BTreeMap<BRWeight, u64>> = std::thread::scope(|s| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|r| s.spawn(move || histogram_range(code, r)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        let mut merged = BTreeMap::new();
        for part in parts {
            for (w, c) in part {
                *merged.entry(w).or_insert(0) += c;
            }
        }
        merged
    };
    Ok(BRDistanceSet::from_histogram(merged))
}

/// Minimum λ-distance of an additive code through its BR minima.
pub fn min_lambda_distance<C: Code + Sync + ?Sized>(code: &C, lambda: Lambda, cap: u64) -> Result<Option<LambdaValue>> {
    Ok(br_distribution(code, cap, 1)?.min_lambda(lambda))
}

/// BR-distance set of an arbitrary list of words from all unordered pairs.
pub fn br_distance_set_pairwise(field: &Field, words: &[Vec<Gf>]) -> Result<BRDistanceSet> {
    let mut dist = BTreeMap::new();
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            let w = metric::br_distance(field, x, y)?;
            *dist.entry(w).or_insert(0u64) += 1;
        }
    }
    Ok(BRDistanceSet::from_histogram(dist))
}
