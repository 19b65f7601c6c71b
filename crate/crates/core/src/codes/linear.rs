use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::linalg;
use crate::metric::{self, Lambda, LambdaValue};
use num_rational::Rational64;

use super::{br_distribution, Code, DEFAULT_ENUMERATION_CAP};

/// `F_{q^m}`-linear code given by a generator matrix in reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    gen: Vec<Vec<Gf>>,
    pivots: Vec<usize>,
    n: usize,
    rank_deficiency: usize,
}

fn check_rows(field: &Field, rows: &[Vec<Gf>]) -> Result<usize> {
    let n = rows.first().map_or(0, Vec::len);
    for r in rows {
        if r.len() != n {
            return Err(Error::LengthMismatch(n, r.len()));
        }
        if let Some(x) = r.iter().find(|x| x.code() >= field.size()) {
            return Err(Error::InvalidElement(x.code()));
        }
    }
    Ok(n)
}

impl LinearCode {
    /// Row-reduces `rows`; dependent rows are dropped and counted in
    /// [`rank_deficiency`](Self::rank_deficiency).
    pub fn from_generator(field: &Field, rows: Vec<Vec<Gf>>) -> Result<Self> {
        let n = check_rows(field, &rows)?;
        Self::with_length(field, rows, n)
    }

    /// Like [`from_generator`](Self::from_generator) but rejects dependent rows.
    pub fn from_generator_exact(field: &Field, rows: Vec<Vec<Gf>>) -> Result<Self> {
        let k = rows.len();
        let code = Self::from_generator(field, rows)?;
        if code.rank_deficiency > 0 {
            return Err(Error::RankDeficient { rank: code.dimension(), rows: k });
        }
        Ok(code)
    }

    fn with_length(field: &Field, mut rows: Vec<Vec<Gf>>, n: usize) -> Result<Self> {
        let given = rows.len();
        let pivots = linalg::rref(field, &mut rows);
        Ok(LinearCode {
            field: field.clone(),
            rank_deficiency: given - rows.len(),
            gen: rows,
            pivots,
            n,
        })
    }

    /// The whole space `F_{q^m}^k`.
    pub fn identity(field: &Field, k: usize) -> Self {
        let rows = (0..k)
            .map(|i| (0..k).map(|j| if i == j { Gf::ONE } else { Gf::ZERO }).collect())
            .collect();
        Self::with_length(field, rows, k).expect("identity is valid")
    }

    /// The zero code of length `n`.
    pub fn zero(field: &Field, n: usize) -> Self {
        Self::with_length(field, Vec::new(), n).expect("empty generator is valid")
    }

    /// Cyclic code of length `n` generated by the monic divisor `g` of `x^n - 1`
    /// (coefficients low to high).
    pub fn cyclic(field: &Field, n: usize, g: &[Gf]) -> Result<Self> {
        let mut g = g.to_vec();
        while g.last().is_some_and(|c| c.is_zero()) {
            g.pop();
        }
        check_rows(field, std::slice::from_ref(&g))?;
        let Some(&lead) = g.last() else {
            return Err(Error::NotADivisor(n));
        };
        if lead != Gf::ONE {
            return Err(Error::ConditionViolated("generator polynomial must be monic".into()));
        }
        let deg = g.len() - 1;
        if deg > n {
            return Err(Error::NotADivisor(n));
        }
        let mut xn1 = vec![Gf::ZERO; n + 1];
        xn1[0] = field.neg(Gf::ONE);
        xn1[n] = Gf::ONE;
        if !poly_rem(field, &xn1, &g).iter().all(|c| c.is_zero()) {
            return Err(Error::NotADivisor(n));
        }
        let rows = (0..n - deg)
            .map(|i| {
                let mut row = vec![Gf::ZERO; n];
                row[i..i + deg + 1].copy_from_slice(&g);
                row
            })
            .collect();
        Self::with_length(field, rows, n)
    }

    /// Gabidulin code with generator entries `G_ij = g_j^{q^i}`.
    pub fn gabidulin(field: &Field, k: usize, points: &[Gf]) -> Result<Self> {
        let n = points.len();
        if n > field.m() as usize {
            return Err(Error::LengthExceedsDegree { n, m: field.m() });
        }
        check_rows(field, &[points.to_vec()])?;
        if metric::rank_weight(field, points) != n {
            return Err(Error::DependentPoints);
        }
        if k > n {
            return Err(Error::ConditionViolated(format!("k = {k} exceeds n = {n}")));
        }
        let mut rows = Vec::with_capacity(k);
        let mut cur = points.to_vec();
        for _ in 0..k {
            rows.push(cur.clone());
            cur = cur.iter().map(|&x| field.frobenius(x)).collect();
        }
        Self::with_length(field, rows, n)
    }

    pub fn dimension(&self) -> usize {
        self.gen.len()
    }

    pub fn generator(&self) -> &[Vec<Gf>] {
        &self.gen
    }

    pub fn rank_deficiency(&self) -> usize {
        self.rank_deficiency
    }

    /// Information positions of the systematic form.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn encode(&self, info: &[Gf]) -> Result<Vec<Gf>> {
        if info.len() != self.dimension() {
            return Err(Error::LengthMismatch(self.dimension(), info.len()));
        }
        let f = &self.field;
        let mut out = vec![Gf::ZERO; self.n];
        for (&u, row) in info.iter().zip(&self.gen) {
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(u, g));
            }
        }
        Ok(out)
    }

    /// `(n - k) × n` parity-check matrix derived from the systematic form.
    pub fn parity_check(&self) -> Vec<Vec<Gf>> {
        let f = &self.field;
        (0..self.n)
            .filter(|c| !self.pivots.contains(c))
            .map(|j| {
                let mut h = vec![Gf::ZERO; self.n];
                h[j] = Gf::ONE;
                for (row, &p) in self.gen.iter().zip(&self.pivots) {
                    h[p] = f.neg(row[j]);
                }
                h
            })
            .collect()
    }

    pub fn syndrome(&self, word: &[Gf]) -> Result<Vec<Gf>> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch(self.n, word.len()));
        }
        let f = &self.field;
        Ok(self
            .parity_check()
            .iter()
            .map(|h| h.iter().zip(word).fold(Gf::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect())
    }

    pub fn contains(&self, word: &[Gf]) -> Result<bool> {
        Ok(self.syndrome(word)?.iter().all(|s| s.is_zero()))
    }

    /// Singleton-type optimality check against exhaustive `d_λ`.
    pub fn mlambda_d_verdict(&self, lambda: Lambda, cap: u64) -> Result<MldVerdict> {
        lambda.require_at_least_one()?;
        let set = br_distribution(self, cap, 1)?;
        let singleton_rhs = self.n - self.dimension();
        let d_lambda = set.min_lambda(lambda);
        // the zero code has no minimum distance and is never reported optimal
        let lhs = d_lambda.map_or(-1, |d| {
            ((d.value() - Rational64::from_integer(1)) / lambda.value()).floor().to_integer()
        });
        Ok(MldVerdict {
            is_optimal: lhs == singleton_rhs as i64,
            d_lambda,
            singleton_lhs: lhs,
            singleton_rhs,
        })
    }

    pub fn is_mlambda_d(&self, lambda: Lambda) -> Result<MldVerdict> {
        self.mlambda_d_verdict(lambda, DEFAULT_ENUMERATION_CAP)
    }
}

/// Outcome of the Singleton-type comparison `⌊(d_λ − 1)/λ⌋ = n − k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MldVerdict {
    pub is_optimal: bool,
    pub d_lambda: Option<LambdaValue>,
    pub singleton_lhs: i64,
    pub singleton_rhs: usize,
}

impl Code for LinearCode {
    fn field(&self) -> &Field {
        &self.field
    }
    fn length(&self) -> usize {
        self.n
    }
    fn rows(&self) -> &[Vec<Gf>] {
        &self.gen
    }
    fn radix(&self) -> u64 {
        self.field.size()
    }
    fn scalar(&self, digit: u64) -> Gf {
        Gf(digit)
    }
    fn prime_field_generators(&self) -> Vec<Vec<Gf>> {
        let f = &self.field;
        let p = f.characteristic();
        let mut basis = Vec::with_capacity(f.degree());
        let mut b = 1u64;
        for _ in 0..f.degree() {
            basis.push(Gf(b));
            b *= p;
        }
        self.gen
            .iter()
            .flat_map(|row| basis.iter().map(move |&b| row.iter().map(|&x| f.mul(b, x)).collect()))
            .collect()
    }
}

/// Remainder of `a` modulo the monic polynomial `b` (coefficients low to high).
fn poly_rem(field: &Field, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if !lead.is_zero() {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = field.sub(r[shift + i], field.mul(lead, c));
            }
        }
        r.pop();
    }
    r
}
