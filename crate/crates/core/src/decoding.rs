//! Nearest-codeword decoding in the λ-subfield metric, correctable error
//! profiles, and a Monte Carlo harness for channels whose base and roof
//! error rates differ.

use num_rational::Rational64;
use rand::Rng;

use crate::codes::{self, chunk_ranges, trial_rng, Code, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::metric::{br_weight, BRWeight, Lambda, LambdaValue};
use crate::volume::largest_weight_below;

/// Syndrome tables are only built when `(q^m)^{n−k}` stays below this.
pub const SYNDROME_TABLE_LIMIT: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub codeword: Vec<Gf>,
    /// BR weight of `word − codeword`.
    pub error: BRWeight,
    pub distance: LambdaValue,
    /// Number of codewords at the minimal distance.
    pub ties: u64,
    pub unique: bool,
}

fn check_word(field: &Field, n: usize, word: &[Gf]) -> Result<()> {
    if word.len() != n {
        return Err(Error::LengthMismatch(n, word.len()));
    }
    match word.iter().find(|x| x.code() >= field.size()) {
        Some(x) => Err(Error::InvalidElement(x.code())),
        None => Ok(()),
    }
}

/// Exhaustive minimum-λ-distance decoding. Among minimizers the first one in
/// enumeration order is returned; `ties` counts all of them.
pub fn decode_nearest<C: Code + ?Sized>(code: &C, word: &[Gf], lambda: Lambda, cap: u64) -> Result<DecodeResult> {
    let field = code.field();
    check_word(field, code.length(), word)?;
    let total = codes::check_enumerable(code, cap)?;
    let mut best: Option<(LambdaValue, BRWeight, u64)> = None;
    let mut ties = 0;
    let mut diff = vec![Gf::ZERO; word.len()];
    codes::for_each_codeword(code, 0..total, |idx, c| {
        for ((d, &y), &x) in diff.iter_mut().zip(word).zip(c) {
            *d = field.sub(y, x);
        }
        let w = br_weight(field, &diff);
        let v = w.lambda_value(lambda);
        match best {
            Some((b, _, _)) if v > b => {}
            Some((b, _, _)) if v == b => ties += 1,
            _ => {
                best = Some((v, w, idx));
                ties = 1;
            }
        }
    });
    let (distance, error, idx) = best.expect("every code contains zero");
    let codeword = codes::codewords(code, idx..idx + 1).next().expect("index in range");
    Ok(DecodeResult {
        codeword,
        error,
        distance,
        ties,
        unique: ties == 1,
    })
}

/// Largest achievable weight `s + λt` (with `s + t ≤ n`) strictly below `d/2`.
/// For integer `λ` and `d` this is `⌊(d−1)/2⌋`.
pub fn guaranteed_radius(n: usize, d_lambda: LambdaValue, lambda: Lambda) -> LambdaValue {
    LambdaValue(largest_weight_below(n, lambda, d_lambda.value() / 2).unwrap_or_default())
}

/// The maximal pairs `(b, r)` with `b + λr < d/2` and `b + r ≤ n`, by
/// increasing `r`.
pub fn correctable_br_profiles(n: usize, d_lambda: LambdaValue, lambda: Lambda) -> Vec<BRWeight> {
    let half = d_lambda.value() / 2;
    let lam = lambda.value();
    let mut out: Vec<BRWeight> = Vec::new();
    for r in 0..=n {
        let rest = half - lam * r as i64;
        if rest <= Rational64::from_integer(0) {
            break;
        }
        let b = if rest.is_integer() { rest.to_integer() - 1 } else { rest.floor().to_integer() };
        let b = (b as usize).min(n - r);
        // a pair with more roof errors is dominated unless it also keeps as many base errors
        if let Some(last) = out.last() {
            if last.base <= b {
                out.pop();
            }
        }
        out.push(BRWeight::new(b, r));
    }
    out
}

/// Nonzero subfield symbols and roof symbols of `field`.
fn symbol_classes(field: &Field) -> (Vec<Gf>, Vec<Gf>) {
    let base: Vec<Gf> = field.subfield_elements().into_iter().skip(1).collect();
    let roof = field.elements().filter(|&x| !field.is_base_element(x)).collect();
    (base, roof)
}

/// Calls `f` on every vector of length `n` with exactly `s` base and `t` roof
/// entries. Also passes the accumulated `Σ x_i · cols[i]` when `cols` is given.
struct ProfileWalker<'a> {
    field: &'a Field,
    base: &'a [Gf],
    roof: &'a [Gf],
    cols: Option<&'a [Vec<Gf>]>,
}

impl ProfileWalker<'_> {
    fn walk(&self, n: usize, s: usize, t: usize, acc_len: usize, f: &mut dyn FnMut(&[Gf], &[Gf]) -> bool) -> bool {
        let mut word = vec![Gf::ZERO; n];
        let mut acc = vec![vec![Gf::ZERO; acc_len]; n + 1];
        self.rec(0, s, t, &mut word, &mut acc, f)
    }

    fn rec(
        &self,
        i: usize,
        s: usize,
        t: usize,
        word: &mut [Gf],
        acc: &mut [Vec<Gf>],
        f: &mut dyn FnMut(&[Gf], &[Gf]) -> bool,
    ) -> bool {
        let n = word.len();
        if i == n {
            return f(word, &acc[n]);
        }
        if n - i > s + t {
            word[i] = Gf::ZERO;
            acc[i + 1] = acc[i].clone();
            if !self.rec(i + 1, s, t, word, acc, f) {
                return false;
            }
        }
        for (left, syms, s2, t2) in [(s, self.base, s.wrapping_sub(1), t), (t, self.roof, s, t.wrapping_sub(1))] {
            if left == 0 {
                continue;
            }
            for &x in syms {
                word[i] = x;
                if let Some(cols) = self.cols {
                    let (lo, hi) = acc.split_at_mut(i + 1);
                    for ((o, &a), &h) in hi[0].iter_mut().zip(&lo[i]).zip(&cols[i]) {
                        *o = self.field.add(a, self.field.mul(x, h));
                    }
                }
                if !self.rec(i + 1, s2, t2, word, acc, f) {
                    return false;
                }
            }
        }
        word[i] = Gf::ZERO;
        true
    }
}

/// BR profiles with `s + t ≤ n`, grouped by λ-weight in increasing order.
fn profiles_by_weight(n: usize, lambda: Lambda) -> Vec<(LambdaValue, Vec<BRWeight>)> {
    let mut all: Vec<(LambdaValue, BRWeight)> = (0..=n)
        .flat_map(|t| (0..=n - t).map(move |s| BRWeight::new(s, t)))
        .map(|w| (w.lambda_value(lambda), w))
        .collect();
    all.sort();
    let mut out: Vec<(LambdaValue, Vec<BRWeight>)> = Vec::new();
    for (v, w) in all {
        match out.last_mut() {
            Some((last, ws)) if *last == v => ws.push(w),
            _ => out.push((v, vec![w])),
        }
    }
    out
}

/// Number of vectors with exactly the given profile.
fn profile_count(n: usize, w: BRWeight, base: u64, roof: u64) -> Option<u64> {
    let binom = |n: u64, k: u64| -> Option<u64> {
        let mut acc: u64 = 1;
        for i in 0..k {
            acc = acc.checked_mul(n - i)? / (i + 1);
        }
        Some(acc)
    };
    let (s, t) = (w.base as u64, w.roof as u64);
    binom(n as u64, t)?
        .checked_mul(binom(n as u64 - t, s)?)?
        .checked_mul(base.checked_pow(s as u32)?)?
        .checked_mul(roof.checked_pow(t as u32)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniqueDecodingReport {
    pub d_lambda: LambdaValue,
    pub radius: LambdaValue,
    /// Error vectors tried (all of weight at most `radius`).
    pub errors_checked: u64,
    /// The first error that did not decode uniquely to zero, if any.
    pub counterexample: Option<Vec<Gf>>,
}

impl UniqueDecodingReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Decodes every error of weight at most the guaranteed radius, sent from the
/// zero codeword, and checks that zero comes back as the unique answer.
/// `cap` bounds `errors × |C|`.
pub fn verify_unique_decoding<C: Code + Sync + ?Sized>(code: &C, lambda: Lambda, cap: u64) -> Result<UniqueDecodingReport> {
    let field = code.field();
    let n = code.length();
    let size = codes::check_enumerable(code, cap)?;
    let set = codes::br_distribution(code, cap, 1)?;
    let d_lambda = match set.min_lambda(lambda) {
        Some(d) => d,
        None => return Err(Error::ConditionViolated("the zero code has no minimum distance".into())),
    };
    let radius = guaranteed_radius(n, d_lambda, lambda);
    let (base, roof) = symbol_classes(field);
    let mut errors: u64 = 0;
    for (v, profiles) in profiles_by_weight(n, lambda) {
        if v > radius {
            break;
        }
        for w in profiles {
            let count = profile_count(n, w, base.len() as u64, roof.len() as u64).unwrap_or(u64::MAX);
            errors = errors.saturating_add(count);
        }
    }
    if errors.saturating_mul(size) > cap {
        return Err(Error::too_large("error ball times code size", errors as u128 * size as u128, cap));
    }

    let walker = ProfileWalker {
        field,
        base: &base,
        roof: &roof,
        cols: None,
    };
    let zero = vec![Gf::ZERO; n];
    let mut counterexample = None;
    let mut failure: Option<Error> = None;
    'outer: for (v, profiles) in profiles_by_weight(n, lambda) {
        if v > radius {
            break;
        }
        for w in profiles {
            let keep_going = walker.walk(n, w.base, w.roof, 0, &mut |e, _| match decode_nearest(code, e, lambda, cap) {
                Ok(r) if r.unique && r.codeword == zero => true,
                Ok(_) => {
                    counterexample = Some(e.to_vec());
                    false
                }
                Err(err) => {
                    failure = Some(err);
                    false
                }
            });
            if !keep_going {
                break 'outer;
            }
        }
    }
    if let Some(err) = failure {
        return Err(err);
    }
    Ok(UniqueDecodingReport {
        d_lambda,
        radius,
        errors_checked: errors,
        counterexample,
    })
}

#[derive(Clone, Debug)]
struct Leader {
    error: Vec<Gf>,
    br: BRWeight,
    weight: LambdaValue,
    count: u64,
}

/// Coset-leader table for a linear code, keyed by syndrome.
///
/// Each coset records one minimum-weight error and the number of errors of
/// that weight in the coset, which equals the number of codewords at minimal
/// distance from any word with that syndrome.
#[derive(Clone, Debug)]
pub struct SyndromeDecoder {
    field: Field,
    n: usize,
    lambda: Lambda,
    /// Columns of the parity-check matrix.
    cols: Vec<Vec<Gf>>,
    table: Vec<Leader>,
}

impl SyndromeDecoder {
    /// Builds the table by visiting errors in order of increasing weight until
    /// every coset has a leader. `cap` bounds the number of errors visited.
    pub fn new(code: &LinearCode, lambda: Lambda, cap: u64) -> Result<Self> {
        let field = code.field().clone();
        let n = code.length();
        let r = n - code.dimension();
        let qm = field.size();
        let cosets = qm
            .checked_pow(r as u32)
            .filter(|&c| c <= SYNDROME_TABLE_LIMIT)
            .ok_or_else(|| Error::too_large("syndrome table", format!("{qm}^{r}"), SYNDROME_TABLE_LIMIT))?;
        let h = code.parity_check();
        let cols: Vec<Vec<Gf>> = (0..n).map(|j| h.iter().map(|row| row[j]).collect()).collect();
        let (base, roof) = symbol_classes(&field);
        let walker = ProfileWalker {
            field: &field,
            base: &base,
            roof: &roof,
            cols: Some(&cols),
        };

        let mut table: Vec<Option<Leader>> = vec![None; cosets as usize];
        let mut filled: u64 = 0;
        let mut visited: u64 = 0;
        for (v, profiles) in profiles_by_weight(n, lambda) {
            for w in profiles {
                let count = profile_count(n, w, base.len() as u64, roof.len() as u64).unwrap_or(u64::MAX);
                visited = visited.saturating_add(count);
                if visited > cap {
                    return Err(Error::too_large("coset leader search", visited, cap));
                }
                walker.walk(n, w.base, w.roof, r, &mut |e, syn| {
                    let slot = &mut table[syndrome_index(syn, qm) as usize];
                    match slot {
                        None => {
                            *slot = Some(Leader {
                                error: e.to_vec(),
                                br: w,
                                weight: v,
                                count: 1,
                            });
                            filled += 1;
                        }
                        Some(l) if l.weight == v => l.count += 1,
                        Some(_) => {}
                    }
                    true
                });
            }
            if filled == cosets {
                break;
            }
        }
        let table = table.into_iter().map(|l| l.expect("every coset has a leader")).collect();
        Ok(SyndromeDecoder {
            field,
            n,
            lambda,
            cols,
            table,
        })
    }

    pub fn lambda(&self) -> Lambda {
        self.lambda
    }

    pub fn num_cosets(&self) -> usize {
        self.table.len()
    }

    /// Largest coset-leader weight, the covering radius of the code.
    pub fn covering_radius(&self) -> LambdaValue {
        self.table.iter().map(|l| l.weight).max().unwrap_or_default()
    }

    pub fn decode(&self, word: &[Gf]) -> Result<DecodeResult> {
        check_word(&self.field, self.n, word)?;
        let f = &self.field;
        let mut syn = vec![Gf::ZERO; self.cols.first().map_or(0, Vec::len)];
        for (&x, col) in word.iter().zip(&self.cols) {
            if x.is_zero() {
                continue;
            }
            for (s, &h) in syn.iter_mut().zip(col) {
                *s = f.add(*s, f.mul(x, h));
            }
        }
        let l = &self.table[syndrome_index(&syn, f.size()) as usize];
        Ok(DecodeResult {
            codeword: word.iter().zip(&l.error).map(|(&y, &e)| f.sub(y, e)).collect(),
            error: l.br,
            distance: l.weight,
            ties: l.count,
            unique: l.count == 1,
        })
    }
}

fn syndrome_index(syn: &[Gf], qm: u64) -> u64 {
    syn.iter().rev().fold(0, |acc, s| acc * qm + s.code())
}

/// Exhaustive decoding, or the syndrome table when `code` is small enough.
pub enum Decoder<'a, C: Code + ?Sized> {
    Exhaustive { code: &'a C, lambda: Lambda, cap: u64 },
    Syndrome(SyndromeDecoder),
}

impl<C: Code + ?Sized> Decoder<'_, C> {
    pub fn decode(&self, word: &[Gf]) -> Result<DecodeResult> {
        match self {
            Decoder::Exhaustive { code, lambda, cap } => decode_nearest(*code, word, *lambda, *cap),
            Decoder::Syndrome(s) => s.decode(word),
        }
    }
}

impl<'a> Decoder<'a, LinearCode> {
    /// Uses a syndrome table when it fits in [`SYNDROME_TABLE_LIMIT`] and can
    /// be built within `cap` visited errors.
    pub fn for_linear(code: &'a LinearCode, lambda: Lambda, cap: u64) -> Result<Self> {
        match SyndromeDecoder::new(code, lambda, cap) {
            Ok(s) => Ok(Decoder::Syndrome(s)),
            Err(Error::TooLarge { .. }) => {
                codes::check_enumerable(code, cap)?;
                Ok(Decoder::Exhaustive { code, lambda, cap })
            }
            Err(e) => Err(e),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelSpec {
    /// Probability of a uniform nonzero subfield error at each position.
    pub p_base: f64,
    /// Probability of a uniform roof error at each position.
    pub p_roof: f64,
    pub seed: u64,
}

impl ChannelSpec {
    pub fn new(p_base: f64, p_roof: f64, seed: u64) -> Result<Self> {
        let ok = |p: f64| p.is_finite() && p >= 0.0;
        if !ok(p_base) || !ok(p_roof) || p_base + p_roof > 1.0 + 1e-12 {
            return Err(Error::ConditionViolated(format!(
                "channel probabilities p_base = {p_base}, p_roof = {p_roof}"
            )));
        }
        Ok(ChannelSpec { p_base, p_roof, seed })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimulationReport {
    pub trials: u64,
    /// Trials where the decoder returned another codeword or a tie.
    pub failures: u64,
    /// Trials that ended in a tie (counted among failures).
    pub ties: u64,
    pub base_errors: u64,
    pub roof_errors: u64,
    pub word_error_rate: f64,
    /// Wilson score interval at 95%.
    pub wilson_low: f64,
    pub wilson_high: f64,
}

/// Wilson score interval for `k` successes in `n` trials.
pub fn wilson_interval(k: u64, n: u64, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let nf = n as f64;
    let p = k as f64 / nf;
    let z2 = z * z;
    let den = 1.0 + z2 / nf;
    let centre = (p + z2 / (2.0 * nf)) / den;
    let half = z * (p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)).sqrt() / den;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

#[derive(Default)]
struct Tally {
    failures: u64,
    ties: u64,
    base: u64,
    roof: u64,
}

fn random_codeword<C: Code + ?Sized, R: Rng>(code: &C, rng: &mut R) -> Vec<Gf> {
    let f = code.field();
    let mut out = vec![Gf::ZERO; code.length()];
    for row in code.rows() {
        let s = code.scalar(rng.gen_range(0..code.radix()));
        for (o, &g) in out.iter_mut().zip(row) {
            *o = f.add(*o, f.mul(s, g));
        }
    }
    out
}

/// Runs `trials` transmissions of random codewords. Trial `t` draws all of its
/// randomness from `trial_rng(seed, t)`, so the result does not depend on
/// `threads`.
pub fn simulate_channel_with<C, D>(
    code: &C,
    channel: ChannelSpec,
    trials: u64,
    threads: usize,
    decode: D,
) -> Result<SimulationReport>
where
    C: Code + Sync + ?Sized,
    D: Fn(&[Gf]) -> Result<DecodeResult> + Sync,
{
    let field = code.field();
    let base: Vec<Gf> = field.subfield_elements().into_iter().skip(1).collect();
    let has_roof = field.m() > 1;
    if channel.p_roof > 0.0 && !has_roof {
        return Err(Error::ConditionViolated("roof errors need m > 1".into()));
    }
    let run = |range: std::ops::Range<u64>| -> Result<Tally> {
        let mut tally = Tally::default();
        for t in range {
            let mut rng = trial_rng(channel.seed, t);
            let sent = random_codeword(code, &mut rng);
            let mut received = sent.clone();
            for y in received.iter_mut() {
                let u: f64 = rng.gen();
                let e = if u < channel.p_base {
                    tally.base += 1;
                    base[rng.gen_range(0..base.len())]
                } else if u < channel.p_base + channel.p_roof {
                    tally.roof += 1;
                    loop {
                        let x = Gf(rng.gen_range(0..field.size()));
                        if !field.is_base_element(x) {
                            break x;
                        }
                    }
                } else {
                    continue;
                };
                *y = field.add(*y, e);
            }
            let r = decode(&received)?;
            if !r.unique {
                tally.ties += 1;
            }
            if !r.unique || r.codeword != sent {
                tally.failures += 1;
            }
        }
        Ok(tally)
    };

    let parts = chunk_ranges(trials, threads.max(1));
    let tallies: Vec<Result<Tally>> = if parts.len() <= 1 {
        parts.into_iter().map(&run).collect()
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = parts.into_iter().map(|r| s.spawn(|| run(r))).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let mut total = Tally::default();
    for t in tallies {
        let t = t?;
        total.failures += t.failures;
        total.ties += t.ties;
        total.base += t.base;
        total.roof += t.roof;
    }
    let (lo, hi) = wilson_interval(total.failures, trials, 1.959_963_984_540_054);
    Ok(SimulationReport {
        trials,
        failures: total.failures,
        ties: total.ties,
        base_errors: total.base,
        roof_errors: total.roof,
        word_error_rate: if trials == 0 { 0.0 } else { total.failures as f64 / trials as f64 },
        wilson_low: lo,
        wilson_high: hi,
    })
}

/// Channel simulation with exhaustive nearest-codeword decoding.
pub fn simulate_channel<C: Code + Sync + ?Sized>(
    code: &C,
    lambda: Lambda,
    channel: ChannelSpec,
    trials: u64,
    threads: usize,
    cap: u64,
) -> Result<SimulationReport> {
    codes::check_enumerable(code, cap)?;
    simulate_channel_with(code, channel, trials, threads, |w| decode_nearest(code, w, lambda, cap))
}
