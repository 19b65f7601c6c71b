//! Subfield weight enumerators over `F_{q^2} ≅ F_q × F_q` and the MacWilliams
//! transform for the trace-symplectic dual.
//!
//! The alphabet is split into `P_0 = {0}`, `P_1 = F_q \ {0}` and
//! `P_2 = F_{q^2} \ F_q`; a word contributes `Y_0^{n−i−j} Y_1^i Y_2^j` where `i`
//! is its base count and `j` its roof count.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::codes::{br_distribution, Code};
use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::metric::{pareto_minima, BRWeight};

/// `Σ A_{i,j} Y_0^{n−i−j} Y_1^i Y_2^j`, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldEnumerator {
    n: usize,
    coeffs: BTreeMap<(usize, usize), BigUint>,
}

impl SubfieldEnumerator {
    pub fn new(n: usize) -> Self {
        SubfieldEnumerator { n, coeffs: BTreeMap::new() }
    }

    /// `Y_0^n`, the enumerator of the zero code.
    pub fn zero_code(n: usize) -> Self {
        let mut w = Self::new(n);
        w.set(0, 0, BigUint::one());
        w
    }

    pub fn from_coefficients(n: usize, coeffs: impl IntoIterator<Item = ((usize, usize), BigUint)>) -> Result<Self> {
        let mut w = Self::new(n);
        for ((i, j), c) in coeffs {
            if i + j > n {
                return Err(Error::ConditionViolated(format!("monomial ({i},{j}) exceeds degree {n}")));
            }
            w.set(i, j, c);
        }
        Ok(w)
    }

    pub fn length(&self) -> usize {
        self.n
    }

    fn set(&mut self, i: usize, j: usize, c: BigUint) {
        if c.is_zero() {
            self.coeffs.remove(&(i, j));
        } else {
            self.coeffs.insert((i, j), c);
        }
    }

    /// `A_{i,j}`: the coefficient of `Y_0^{n−i−j} Y_1^i Y_2^j`.
    pub fn coefficient(&self, i: usize, j: usize) -> BigUint {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &BTreeMap<(usize, usize), BigUint> {
        &self.coeffs
    }

    /// `W(1,1,1)`.
    pub fn total(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    pub fn evaluate(&self, y0: &BigInt, y1: &BigInt, y2: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&(i, j), c)| {
                BigInt::from(c.clone()) * y0.pow((self.n - i - j) as u32) * y1.pow(i as u32) * y2.pow(j as u32)
            })
            .sum()
    }

    /// Terms with Hamming weight `i + j ≤ max_weight`.
    pub fn truncated(&self, max_weight: usize) -> Self {
        SubfieldEnumerator {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((i, j), _)| i + j <= max_weight)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Terms in display order: descending `Y_0` degree, then descending `Y_1` degree.
    pub fn terms(&self) -> Vec<((usize, usize), &BigUint)> {
        let mut t: Vec<_> = self.coeffs.iter().map(|(k, v)| (*k, v)).collect();
        t.sort_by(|((i1, j1), _), ((i2, j2), _)| (i1 + j1).cmp(&(i2 + j2)).then(i2.cmp(i1)));
        t
    }

    /// `i,j,A_ij` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,count\n");
        for ((i, j), c) in self.terms() {
            let _ = writeln!(out, "{i},{j},{c}");
        }
        out
    }
}

impl fmt::Display for SubfieldEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = |v: &str, e: usize| match e {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{e}"),
        };
        let mut first = true;
        for ((i, j), c) in self.terms() {
            let vars: Vec<String> = [mono("Y0", self.n - i - j), mono("Y1", i), mono("Y2", j)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect();
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (c.is_one(), vars.is_empty()) {
                (true, false) => write!(f, "{}", vars.join(" "))?,
                (_, true) => write!(f, "{c}")?,
                (false, false) => write!(f, "{c} {}", vars.join(" "))?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Class of the pair `(a, b) ∈ F_q × F_q`: 0 for `(0,0)`, 1 for `(0, b≠0)`, 2 for `a ≠ 0`.
pub fn pair_class(a: Gf, b: Gf) -> usize {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => 0,
        (true, false) => 1,
        (false, _) => 2,
    }
}

/// Class of `ε = αγ + β` through its pair decomposition.
pub fn element_class(field: &Field, eps: Gf, gamma: Gf) -> Result<usize> {
    let (a, b) = field.decompose_pair(eps, gamma)?;
    Ok(pair_class(a, b))
}

/// Class of `ε` by the subfield test alone.
pub fn element_class_direct(field: &Field, eps: Gf) -> usize {
    if eps.is_zero() {
        0
    } else if field.is_base_element(eps) {
        1
    } else {
        2
    }
}

/// Enumerator of a code by exhaustive enumeration (the BR-weight distribution).
pub fn enumerator_from_code<C: Code + Sync + ?Sized>(code: &C, cap: u64, threads: usize) -> Result<SubfieldEnumerator> {
    let set = br_distribution(code, cap, threads)?;
    SubfieldEnumerator::from_coefficients(
        code.length(),
        set.distribution.into_iter().map(|(w, c)| ((w.base, w.roof), BigUint::from(c))),
    )
}

/// The 3×3 Krawtchouk matrix of the partition `P_0, P_1, P_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KrawtchoukMatrix {
    pub q: u64,
    pub k: [[i128; 3]; 3],
}

impl KrawtchoukMatrix {
    pub fn new(q: u64) -> Result<Self> {
        let qi = q as i128;
        let m = KrawtchoukMatrix {
            q,
            k: [[1, 1, 1], [qi - 1, qi - 1, -1], [qi * qi - qi, -qi, 0]],
        };
        if !m.squares_to_scalar() {
            return Err(Error::ConditionViolated(format!("K^2 != q^2 I for q = {q}")));
        }
        Ok(m)
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.k[i][j]
    }

    /// `K² = q² I`.
    pub fn squares_to_scalar(&self) -> bool {
        let q2 = (self.q as i128) * (self.q as i128);
        (0..3).all(|i| {
            (0..3).all(|j| {
                let s: i128 = (0..3).map(|l| self.k[i][l] * self.k[l][j]).sum();
                s == if i == j { q2 } else { 0 }
            })
        })
    }
}

/// Dense homogeneous polynomial of fixed degree in `Y_0, Y_1, Y_2`, indexed by
/// the exponents of `Y_1` and `Y_2`.
struct Dense {
    deg: usize,
    c: Vec<Vec<BigInt>>,
}

impl Dense {
    fn one(cap: usize) -> Self {
        let mut c = vec![vec![BigInt::zero(); cap + 1]; cap + 1];
        c[0][0] = BigInt::one();
        Dense { deg: 0, c }
    }

    /// Multiplies by `a Y_0 + b Y_1 + c Y_2`.
    fn mul_linear(&mut self, a: &BigInt, b: &BigInt, c: &BigInt) {
        let d = self.deg + 1;
        for i in (0..=d).rev() {
            for j in (0..=d - i).rev() {
                let mut v = if i + j <= self.deg { &self.c[i][j] * a } else { BigInt::zero() };
                if i > 0 && i - 1 + j <= self.deg {
                    v += &self.c[i - 1][j] * b;
                }
                if j > 0 && i + j - 1 <= self.deg {
                    v += &self.c[i][j - 1] * c;
                }
                self.c[i][j] = v;
            }
        }
        self.deg = d;
    }
}

/// `W*(Y) = W(Y K) / |C|`.
pub fn macwilliams_transform(w: &SubfieldEnumerator, code_size: &BigUint, q: u64) -> Result<SubfieldEnumerator> {
    if code_size.is_zero() {
        return Err(Error::SizeTooSmall);
    }
    let k = KrawtchoukMatrix::new(q)?;
    let n = w.length();
    // column j of K gives Y_j* = Σ_i Y_i K_{i,j}
    let forms: Vec<[BigInt; 3]> = (0..3)
        .map(|j| [BigInt::from(k.get(0, j)), BigInt::from(k.get(1, j)), BigInt::from(k.get(2, j))])
        .collect();
    let mut acc = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for (&(i, j), a) in w.coefficients() {
        let mut p = Dense::one(n);
        for (form, times) in forms.iter().zip([n - i - j, i, j]) {
            for _ in 0..times {
                p.mul_linear(&form[0], &form[1], &form[2]);
            }
        }
        let a = BigInt::from(a.clone());
        for (x, row) in acc.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate().take(n + 1 - x) {
                if !p.c[x][y].is_zero() {
                    *cell += &a * &p.c[x][y];
                }
            }
        }
    }
    let size = BigInt::from(code_size.clone());
    let mut out = SubfieldEnumerator::new(n);
    for (i, row) in acc.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate().take(n + 1 - i) {
            let (quot, rem) = v.div_rem(&size);
            if !rem.is_zero() {
                return Err(Error::NonIntegerCoefficient(i, j));
            }
            if quot.is_negative() {
                return Err(Error::NegativeCoefficient(i, j));
            }
            out.set(i, j, quot.to_biguint().expect("nonnegative"));
        }
    }
    Ok(out)
}

/// Pareto minima of the nonzero support.
pub fn minimal_br_from_enumerator(w: &SubfieldEnumerator) -> Vec<BRWeight> {
    pareto_minima(
        w.coefficients()
            .keys()
            .filter(|&&(i, j)| (i, j) != (0, 0))
            .map(|&(i, j)| BRWeight::new(i, j)),
    )
    .unwrap_or_default()
}

/// `Σ_{x ∈ P_i} ω^{tr(a_y b_x − a_x b_y)}` with `ω = e^{2πi/p}`, evaluated in
/// floating point for every representative `y ∈ P_j`, over the subfield `F_q`
/// of `field`. Fails unless the sum is an integer constant on `P_j`.
pub fn character_sum_bruteforce(field: &Field, i: usize, j: usize) -> Result<i64> {
    let p = field.characteristic();
    let fq = field.subfield_elements();
    let pairs: Vec<(Gf, Gf)> = fq.iter().flat_map(|&a| fq.iter().map(move |&b| (a, b))).collect();
    let class = |c: usize| pairs.iter().copied().filter(move |&(a, b)| pair_class(a, b) == c);
    let mut value: Option<i64> = None;
    for (ay, by) in class(j) {
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for (ax, bx) in class(i) {
            let t = field.subfield_trace(field.sub(field.mul(ay, bx), field.mul(ax, by)));
            let angle = 2.0 * std::f64::consts::PI * t as f64 / p as f64;
            re += angle.cos();
            im += angle.sin();
        }
        let rounded = re.round();
        let err = (re - rounded).abs().max(im.abs());
        if err > 1e-9 {
            return Err(Error::RoundingTooLarge(err));
        }
        let v = rounded as i64;
        match value {
            Some(prev) if prev != v => return Err(Error::NotConstantOnClass(j)),
            _ => value = Some(v),
        }
    }
    value.ok_or(Error::EmptySet)
}

impl From<&SubfieldEnumerator> for BTreeMap<BRWeight, BigUint> {
    fn from(w: &SubfieldEnumerator) -> Self {
        w.coefficients().iter().map(|(&(i, j), c)| (BRWeight::new(i, j), c.clone())).collect()
    }
}
