//! Arithmetic in `F_{q^m}` with a distinguished subfield `F_q`, `q = p^e`.
//!
//! The field is realised as `F_p[x]/(modulus)` with `deg(modulus) = e·m`.
//! Elements are stored by their integer code `Σ c_i p^i`, where `c` is the
//! coefficient vector over the power basis of the modulus. The subfield
//! `F_q` is the set of fixed points of `x ↦ x^q`.

mod element;
pub(crate) mod poly;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use poly::{add_mod, inv_mod, mul_mod, sub_mod};

pub use element::FieldElement;

/// Fields up to this size get exp/log tables.
pub const TABLE_LIMIT: u64 = 1 << 20;
/// Largest field size accepted at all.
pub const MAX_FIELD_SIZE: u64 = 1 << 50;

/// An element of some [`Field`], identified by its integer code.
///
/// `Gf` carries no reference to its field; the field operations check
/// nothing beyond what the caller passes in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(pub(crate) u64);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    /// Integer code `Σ c_i p^i`.
    pub fn code(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Construction parameters of a field. `modulus` is low-to-high and monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u64,
    pub e: u32,
    pub m: u32,
    pub modulus: Vec<u64>,
    /// Integer code of the fixed multiplicative generator.
    pub primitive_element: u64,
}

/// How elements are rendered as text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    /// `0`, `1`, `a`, `a^k` with `a` the primitive element.
    Power,
    /// The integer code.
    Integer,
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    spec: FieldSpec,
    degree: usize,
    size: u64,
    q: u64,
    p_pows: Vec<u64>,
    tables: Option<Tables>,
    trace_of_basis: Vec<u64>,
    /// `(size - 1) / (q - 1)`: nonzero `x` lies in `F_q` iff its log is a multiple.
    subfield_step: u64,
    /// Inverse of the matrix whose columns are `θ^l g^i` over `F_p`.
    fq_coord_inverse: Vec<Vec<u64>>,
    /// `θ^l`, an `F_p`-basis of `F_q`.
    subfield_basis: Vec<Gf>,
}

/// A finite field `F_{p^{e·m}}` with distinguished subfield `F_{p^e}`.
/// Cheap to clone; immutable and shareable across threads.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.0.spec;
        write!(f, "GF({}^{}) over GF({}^{}) modulus {:?}", s.p, s.e * s.m, s.p, s.e, s.modulus)
    }
}

impl Field {
    /// Builds `F_{p^{e·m}}`. Without a modulus the smallest monic irreducible
    /// polynomial of degree `e·m` is chosen, ordering candidates by the integer
    /// code of their lower coefficients.
    pub fn new(p: u64, e: u32, m: u32, modulus: Option<Vec<u64>>) -> Result<Self> {
        if !poly::is_prime(p) || p >= 1 << 31 {
            return Err(Error::NonPrime(p));
        }
        if e == 0 || m == 0 {
            return Err(Error::InvalidModulus("e and m must be positive".into()));
        }
        let degree = (e as usize) * (m as usize);
        let size = checked_pow(p, degree as u32)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge(p, e * m))?;
        let modulus = match modulus {
            Some(f) => {
                if f.len() != degree + 1 || f[degree] != 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected a monic polynomial of degree {degree}"
                    )));
                }
                if f.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!("coefficients must lie in [0, {p})")));
                }
                if !poly::is_irreducible(&f, p) {
                    return Err(Error::ReduciblePolynomial(p));
                }
                f
            }
            None => default_modulus(p, degree),
        };
        let q = p.pow(e);
        let p_pows: Vec<u64> = (0..=degree as u32).map(|i| p.pow(i)).collect();
        let primitive = find_primitive(p, degree, size, &modulus);
        let spec = FieldSpec {
            p,
            e,
            m,
            modulus,
            primitive_element: primitive,
        };
        let mut inner = Inner {
            spec,
            degree,
            size,
            q,
            p_pows,
            tables: None,
            trace_of_basis: Vec::new(),
            subfield_step: (size - 1) / (q - 1),
            fq_coord_inverse: Vec::new(),
            subfield_basis: Vec::new(),
        };
        if size <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        let mut field = Field(Arc::new(inner));
        let trace_of_basis: Vec<u64> = (0..degree)
            .map(|i| field.trace_by_definition(Gf(field.0.p_pows[i])))
            .collect();
        let theta = field.pow(field.primitive_element(), field.0.subfield_step);
        let subfield_basis: Vec<Gf> = (0..e as u64).map(|l| field.pow(theta, l)).collect();
        let g = field.primitive_element();
        let mut columns = Vec::with_capacity(degree);
        for i in 0..m as u64 {
            let gi = field.pow(g, i);
            for &w in &subfield_basis {
                columns.push(field.coeffs(field.mul(w, gi)));
            }
        }
        let fq_coord_inverse = invert_mod_p(&columns, p).expect("θ^l g^i is an F_p-basis");
        {
            let inner = Arc::get_mut(&mut field.0).expect("unique during construction");
            inner.trace_of_basis = trace_of_basis;
            inner.subfield_basis = subfield_basis;
            inner.fq_coord_inverse = fq_coord_inverse;
        }
        Ok(field)
    }

    /// The prime field `F_p` (e = m = 1).
    pub fn prime(p: u64) -> Result<Self> {
        Field::new(p, 1, 1, None)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.0.spec.p
    }

    /// `q = p^e`, the size of the distinguished subfield.
    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Extension degree over `F_q`.
    pub fn m(&self) -> u32 {
        self.0.spec.m
    }

    pub fn e(&self) -> u32 {
        self.0.spec.e
    }

    /// Degree over the prime field, `e·m`.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// `q^m`.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    pub fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    pub fn primitive_element(&self) -> Gf {
        Gf(self.0.spec.primitive_element)
    }

    pub fn elem(&self, code: u64) -> Result<Gf> {
        if code < self.0.size {
            Ok(Gf(code))
        } else {
            Err(Error::InvalidElement(code))
        }
    }

    /// The constant `c mod p`.
    pub fn constant(&self, c: u64) -> Gf {
        Gf(c % self.0.spec.p)
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.0.size).map(Gf)
    }

    pub fn wrap(&self, x: Gf) -> FieldElement {
        FieldElement::new(self.clone(), x)
    }

    /// Coordinates over `F_p` with respect to the power basis.
    pub fn coeffs(&self, x: Gf) -> Vec<u64> {
        let p = self.0.spec.p;
        let mut v = x.0;
        (0..self.0.degree)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, c: &[u64]) -> Result<Gf> {
        if c.len() > self.0.degree {
            return Err(Error::LengthMismatch(c.len(), self.0.degree));
        }
        let p = self.0.spec.p;
        let mut code = 0u64;
        for (i, &ci) in c.iter().enumerate() {
            if ci >= p {
                return Err(Error::InvalidElement(ci));
            }
            code += ci * self.0.p_pows[i];
        }
        Ok(Gf(code))
    }

    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        let p = self.0.spec.p;
        if p == 2 {
            return Gf(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out) = (a.0, b.0, 0u64);
        for &pw in &self.0.p_pows[..self.0.degree] {
            if x == 0 && y == 0 {
                break;
            }
            out += add_mod(x % p, y % p, p) * pw;
            x /= p;
            y /= p;
        }
        Gf(out)
    }

    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        let p = self.0.spec.p;
        if p == 2 {
            return Gf(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out) = (a.0, b.0, 0u64);
        for &pw in &self.0.p_pows[..self.0.degree] {
            if x == 0 && y == 0 {
                break;
            }
            out += sub_mod(x % p, y % p, p) * pw;
            x /= p;
            y /= p;
        }
        Gf(out)
    }

    pub fn neg(&self, a: Gf) -> Gf {
        self.sub(Gf::ZERO, a)
    }

    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        match &self.0.tables {
            Some(t) => Gf(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize] as u64),
            None => {
                let prod = poly::mul_rem(
                    &self.coeffs(a),
                    &self.coeffs(b),
                    &self.0.spec.modulus,
                    self.0.spec.p,
                );
                self.from_coeffs(&prod).expect("reduced product fits")
            }
        }
    }

    /// Multiplication by a prime-field scalar.
    pub fn scale(&self, c: u64, a: Gf) -> Gf {
        self.mul(self.constant(c), a)
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.tables {
            Some(t) => {
                let order = (self.0.size - 1) as u32;
                let l = t.log[a.0 as usize];
                Gf(t.exp[((order - l) % order) as usize] as u64)
            }
            None => self.pow(a, self.0.size - 2),
        })
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Gf, exp: u64) -> Gf {
        if exp == 0 {
            return Gf::ONE;
        }
        if a.0 == 0 {
            return Gf::ZERO;
        }
        match &self.0.tables {
            Some(t) => {
                let order = self.0.size - 1;
                let l = t.log[a.0 as usize] as u128 * (exp % order) as u128 % order as u128;
                Gf(t.exp[l as usize] as u64)
            }
            None => {
                let mut acc = Gf::ONE;
                let mut base = a;
                let mut e = exp;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul(acc, base);
                    }
                    base = self.mul(base, base);
                    e >>= 1;
                }
                acc
            }
        }
    }

    /// Signed power; negative exponents invert first.
    pub fn pow_signed(&self, a: Gf, exp: i64) -> Result<Gf> {
        if exp >= 0 {
            Ok(self.pow(a, exp as u64))
        } else {
            Ok(self.pow(self.inv(a)?, exp.unsigned_abs()))
        }
    }

    /// `x ↦ x^q`.
    pub fn frobenius(&self, x: Gf) -> Gf {
        self.pow(x, self.0.q)
    }

    /// Discrete logarithm to the primitive element (brute force without tables).
    pub fn log(&self, x: Gf) -> Option<u64> {
        if x.0 == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            return Some(t.log[x.0 as usize] as u64);
        }
        let g = self.primitive_element();
        let mut acc = Gf::ONE;
        for k in 0..self.0.size - 1 {
            if acc == x {
                return Some(k);
            }
            acc = self.mul(acc, g);
        }
        None
    }

    /// `true` iff `x ∈ F_q`, i.e. `x^q = x`.
    pub fn is_base_element(&self, x: Gf) -> bool {
        if x.0 == 0 {
            return true;
        }
        match &self.0.tables {
            Some(t) => (t.log[x.0 as usize] as u64).is_multiple_of(self.0.subfield_step),
            None => self.frobenius(x) == x,
        }
    }

    /// Absolute trace `F_{p^{em}} → F_p`, evaluated through the traces of the
    /// power-basis vectors.
    pub fn absolute_trace(&self, x: Gf) -> u64 {
        let p = self.0.spec.p;
        self.coeffs(x)
            .iter()
            .zip(&self.0.trace_of_basis)
            .fold(0, |acc, (&c, &t)| add_mod(acc, mul_mod(c, t, p), p))
    }

    /// `Σ_{k < e·m} x^{p^k}`, the defining sum.
    pub fn trace_by_definition(&self, x: Gf) -> u64 {
        let p = self.0.spec.p;
        let mut acc = Gf::ZERO;
        let mut y = x;
        for _ in 0..self.0.degree {
            acc = self.add(acc, y);
            y = self.pow(y, p);
        }
        debug_assert!(acc.0 < p, "trace must land in the prime field");
        acc.0
    }

    /// Trace `F_q → F_p`, `Σ_{k < e} x^{p^k}`, for `x ∈ F_q`.
    pub fn subfield_trace(&self, x: Gf) -> u64 {
        debug_assert!(self.is_base_element(x));
        let p = self.0.spec.p;
        let mut acc = Gf::ZERO;
        let mut y = x;
        for _ in 0..self.0.spec.e {
            acc = self.add(acc, y);
            y = self.pow(y, p);
        }
        acc.0
    }

    /// The `q` elements of the subfield: zero followed by `θ^k`, `θ` a generator.
    pub fn subfield_elements(&self) -> Vec<Gf> {
        let theta = self.pow(self.primitive_element(), self.0.subfield_step);
        let mut out = vec![Gf::ZERO];
        let mut acc = Gf::ONE;
        for _ in 0..self.0.q - 1 {
            out.push(acc);
            acc = self.mul(acc, theta);
        }
        out
    }

    /// An `F_p`-basis `θ^0, …, θ^{e-1}` of `F_q`.
    pub fn subfield_basis(&self) -> &[Gf] {
        &self.0.subfield_basis
    }

    /// Coordinates over `F_q` in the basis `1, g, …, g^{m-1}` (`g` primitive).
    pub fn subfield_coords(&self, x: Gf) -> Vec<Gf> {
        let p = self.0.spec.p;
        let c = self.coeffs(x);
        let flat: Vec<u64> = self
            .0
            .fq_coord_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&c)
                    .fold(0, |acc, (&r, &ci)| add_mod(acc, mul_mod(r, ci, p), p))
            })
            .collect();
        let e = self.0.spec.e as usize;
        flat.chunks(e)
            .map(|chunk| {
                chunk
                    .iter()
                    .zip(&self.0.subfield_basis)
                    .fold(Gf::ZERO, |acc, (&c, &w)| self.add(acc, self.scale(c, w)))
            })
            .collect()
    }

    /// `γ` used to identify `F_q × F_q` with `F_{q^2}`: the primitive element when
    /// it lies outside `F_q`, otherwise the primitive element plus one.
    pub fn default_gamma(&self) -> Gf {
        let g = self.primitive_element();
        if self.is_base_element(g) {
            self.add(g, Gf::ONE)
        } else {
            g
        }
    }

    pub(crate) fn check_pair_setup(&self, gamma: Gf) -> Result<()> {
        if self.0.spec.m != 2 {
            return Err(Error::WrongExtensionDegree {
                expected: 2,
                actual: self.0.spec.m,
            });
        }
        if self.is_base_element(gamma) {
            return Err(Error::GammaInBaseField);
        }
        Ok(())
    }

    /// Splits `ε = αγ + β` with `α, β ∈ F_q` (requires `m = 2`, `γ ∉ F_q`).
    pub fn decompose_pair(&self, eps: Gf, gamma: Gf) -> Result<(Gf, Gf)> {
        self.check_pair_setup(gamma)?;
        let num = self.sub(eps, self.frobenius(eps));
        let den = self.sub(gamma, self.frobenius(gamma));
        let alpha = self.div(num, den)?;
        let beta = self.sub(eps, self.mul(alpha, gamma));
        Ok((alpha, beta))
    }

    /// `αγ + β`.
    pub fn compose_pair(&self, alpha: Gf, beta: Gf, gamma: Gf) -> Gf {
        self.add(self.mul(alpha, gamma), beta)
    }

    /// Parses `0`, `1`, `a`, `a^k` (powers of the primitive element) or a
    /// decimal integer code.
    pub fn parse_element(&self, text: &str) -> Result<Gf> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        if let Some(rest) = t.strip_prefix('a') {
            let exp = if rest.is_empty() {
                1
            } else {
                let digits = rest
                    .strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("bad element {t:?}")))?;
                digits
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?
            };
            if exp >= self.0.size - 1 && self.0.size > 2 {
                return Err(Error::ExponentOutOfRange(exp));
            }
            return Ok(self.pow(self.primitive_element(), exp));
        }
        let code = t
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad element {t:?}")))?;
        self.elem(code)
    }

    pub fn format_element(&self, x: Gf, notation: Notation) -> String {
        match notation {
            Notation::Integer => x.0.to_string(),
            Notation::Power => match x.0 {
                0 => "0".into(),
                1 => "1".into(),
                _ => match self.log(x) {
                    Some(1) => "a".into(),
                    Some(k) => format!("a^{k}"),
                    None => x.0.to_string(),
                },
            },
        }
    }

    pub fn format_vector(&self, v: &[Gf], notation: Notation) -> String {
        let parts: Vec<String> = v.iter().map(|&x| self.format_element(x, notation)).collect();
        format!("({})", parts.join(","))
    }

    /// Parses a comma- or whitespace-separated list of elements, optionally in parentheses.
    pub fn parse_vector(&self, text: &str) -> Result<Vec<Gf>> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        t.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| self.parse_element(s))
            .collect()
    }
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

fn default_modulus(p: u64, degree: usize) -> Vec<u64> {
    let count = p.pow(degree as u32);
    for low in 0..count {
        let mut f = Vec::with_capacity(degree + 1);
        let mut v = low;
        for _ in 0..degree {
            f.push(v % p);
            v /= p;
        }
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn code_of(c: &[u64], p_pows: &[u64]) -> u64 {
    c.iter().zip(p_pows).map(|(&ci, &pw)| ci * pw).sum()
}

fn coeffs_of(mut v: u64, p: u64, degree: usize) -> Vec<u64> {
    (0..degree)
        .map(|_| {
            let c = v % p;
            v /= p;
            c
        })
        .collect()
}

/// Smallest generator, trying `x` first.
fn find_primitive(p: u64, degree: usize, size: u64, modulus: &[u64]) -> u64 {
    let order = size - 1;
    if order == 1 {
        return 1;
    }
    let factors = poly::prime_factors(order);
    let is_generator = |code: u64| {
        let c = coeffs_of(code, p, degree);
        factors.iter().all(|&r| {
            let mut h = poly::pow_rem(&c, order / r, modulus, p);
            poly::trim(&mut h);
            h != [1]
        })
    };
    if degree > 1 && is_generator(p) {
        return p;
    }
    (2..size)
        .find(|&c| is_generator(c))
        .expect("multiplicative group is cyclic")
}

fn build_tables(inner: &Inner) -> Tables {
    let size = inner.size as usize;
    let p = inner.spec.p;
    let order = size - 1;
    let mut exp = vec![0u32; 2 * order.max(1)];
    let mut log = vec![0u32; size];
    let g = coeffs_of(inner.spec.primitive_element, p, inner.degree);
    let mut acc = vec![1u64];
    for k in 0..order {
        let code = code_of(&acc, &inner.p_pows);
        exp[k] = code as u32;
        log[code as usize] = k as u32;
        acc = poly::mul_rem(&acc, &g, &inner.spec.modulus, p);
    }
    for k in order..2 * order {
        exp[k] = exp[k - order];
    }
    Tables { exp, log }
}

/// Inverse of the square matrix with the given columns, over `F_p`.
fn invert_mod_p(columns: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = columns.len();
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            let mut row: Vec<u64> = columns.iter().map(|c| c[r]).collect();
            row.extend((0..n).map(|j| u64::from(j == r)));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let inv = inv_mod(a[col][col], p);
        for x in a[col].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..2 * n {
                    let v = mul_mod(f, a[col][c], p);
                    a[r][c] = sub_mod(a[r][c], v, p);
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::new(2, 1, 2, Some(vec![1, 1, 1])).unwrap()
    }

    fn f16_over_f4() -> Field {
        Field::new(2, 2, 2, Some(vec![1, 1, 0, 0, 1])).unwrap()
    }

    #[test]
    fn f4_alpha_squared_is_alpha_plus_one() {
        let f = f4();
        let a = f.primitive_element();
        assert_eq!(a.code(), 2);
        assert_eq!(f.mul(a, a), f.add(a, Gf::ONE));
    }

    #[test]
    fn f16_alpha_fourth() {
        let f = Field::new(2, 1, 4, Some(vec![1, 1, 0, 0, 1])).unwrap();
        let a = f.primitive_element();
        assert_eq!(f.pow(a, 4), f.add(a, Gf::ONE));
    }

    #[test]
    fn prime_field_of_degree_one() {
        let f = Field::new(2, 1, 1, None).unwrap();
        assert_eq!(f.size(), 2);
        assert_eq!(f.primitive_element(), Gf::ONE);
        assert_eq!(f.mul(Gf::ONE, Gf::ONE), Gf::ONE);
        assert_eq!(f.add(Gf::ONE, Gf::ONE), Gf::ZERO);
    }

    #[test]
    fn default_modulus_is_smallest_irreducible() {
        assert_eq!(Field::new(2, 1, 4, None).unwrap().spec().modulus, vec![1, 1, 0, 0, 1]);
        assert_eq!(Field::new(2, 1, 2, None).unwrap().spec().modulus, vec![1, 1, 1]);
        assert_eq!(Field::new(3, 1, 2, None).unwrap().spec().modulus, vec![1, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1, 2, None).unwrap_err(), Error::NonPrime(4));
        assert_eq!(
            Field::new(2, 1, 2, Some(vec![1, 0, 1])).unwrap_err(),
            Error::ReduciblePolynomial(2)
        );
        assert!(matches!(
            Field::new(2, 1, 2, Some(vec![1, 1, 0])),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn inverse_law_and_division_by_zero() {
        for f in [f4(), f16_over_f4(), Field::new(3, 1, 2, None).unwrap()] {
            for x in f.elements().skip(1) {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), Gf::ONE);
            }
            assert_eq!(f.inv(Gf::ZERO), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn table_free_arithmetic_agrees_with_tables() {
        // 3^13 > 2^20 so no tables; compare against a tabled field on a subfield-free check
        let big = Field::new(3, 1, 13, None).unwrap();
        assert!(!big.has_tables());
        let g = big.primitive_element();
        let x = big.pow(g, 12345);
        assert_eq!(big.mul(x, big.inv(x).unwrap()), Gf::ONE);
        assert_eq!(big.pow(g, big.size() - 1), Gf::ONE);
        assert!(big.is_base_element(big.constant(2)));
        assert!(!big.is_base_element(g));
    }

    #[test]
    fn base_elements_of_f16_over_f4() {
        let f = f16_over_f4();
        let a = f.primitive_element();
        assert!(!f.is_base_element(a));
        assert!(f.is_base_element(Gf::ZERO));
        assert!(f.is_base_element(Gf::ONE));
        assert!(f.is_base_element(f.pow(a, 5)));
        let brute = f.elements().filter(|&x| f.pow(x, 4) == x).count();
        assert_eq!(brute, 4);
        assert_eq!(f.elements().filter(|&x| f.is_base_element(x)).count(), 4);
        assert_eq!(f.subfield_elements().len(), 4);
    }

    #[test]
    fn trace_in_f4() {
        let f = f4();
        let a = f.primitive_element();
        assert_eq!(f.absolute_trace(Gf::ZERO), 0);
        assert_eq!(f.absolute_trace(a), 1);
        assert_eq!(f.trace_by_definition(a), 1);
    }

    #[test]
    fn trace_fibers_are_balanced() {
        for f in [f16_over_f4(), Field::new(3, 1, 3, None).unwrap(), Field::new(5, 1, 2, None).unwrap()] {
            let p = f.characteristic();
            let mut counts = vec![0u64; p as usize];
            for x in f.elements() {
                assert_eq!(f.absolute_trace(x), f.trace_by_definition(x));
                counts[f.absolute_trace(x) as usize] += 1;
            }
            assert!(counts.iter().all(|&c| c == f.size() / p));
        }
    }

    #[test]
    fn frobenius_fixes_exactly_q_elements() {
        for f in [f16_over_f4(), Field::new(3, 1, 2, None).unwrap(), Field::new(2, 2, 3, None).unwrap()] {
            let fixed = f.elements().filter(|&x| f.frobenius(x) == x).count() as u64;
            assert_eq!(fixed, f.q());
            // automorphism: multiplicative and additive
            for x in f.elements().step_by(3) {
                for y in f.elements().step_by(5) {
                    assert_eq!(f.frobenius(f.mul(x, y)), f.mul(f.frobenius(x), f.frobenius(y)));
                    assert_eq!(f.frobenius(f.add(x, y)), f.add(f.frobenius(x), f.frobenius(y)));
                }
            }
        }
    }

    #[test]
    fn decompose_pair_round_trip() {
        let f = f16_over_f4();
        let a = f.primitive_element();
        for gamma in [a, f.pow(a, 7)] {
            for eps in f.elements() {
                let (al, be) = f.decompose_pair(eps, gamma).unwrap();
                assert!(f.is_base_element(al) && f.is_base_element(be));
                assert_eq!(f.compose_pair(al, be, gamma), eps);
            }
            assert_eq!(f.decompose_pair(gamma, gamma).unwrap(), (Gf::ONE, Gf::ZERO));
            let one = Gf::ONE;
            assert_eq!(f.decompose_pair(one, gamma).unwrap(), (Gf::ZERO, one));
        }
        assert_eq!(f.decompose_pair(Gf::ONE, Gf::ONE), Err(Error::GammaInBaseField));
        let g16 = Field::new(2, 1, 4, None).unwrap();
        assert!(matches!(
            g16.decompose_pair(Gf::ONE, g16.primitive_element()),
            Err(Error::WrongExtensionDegree { .. })
        ));
    }

    #[test]
    fn parse_and_format() {
        let f = f4();
        let x = f.parse_element("a^2").unwrap();
        assert_eq!(f.coeffs(x), vec![1, 1]);
        assert_eq!(x.code(), 3);
        assert_eq!(f.parse_element("0").unwrap(), Gf::ZERO);
        assert_eq!(f.parse_element("a^3"), Err(Error::ExponentOutOfRange(3)));
        assert!(matches!(f.parse_element("b"), Err(Error::Parse(_))));
        assert_eq!(f.parse_element("4"), Err(Error::InvalidElement(4)));
        let g = f16_over_f4();
        for x in g.elements() {
            for n in [Notation::Power, Notation::Integer] {
                let s = g.format_element(x, n);
                assert_eq!(g.parse_element(&s).unwrap(), x);
            }
        }
    }

    #[test]
    fn subfield_coordinates_reconstruct() {
        for f in [f16_over_f4(), Field::new(2, 1, 4, None).unwrap(), Field::new(3, 1, 2, None).unwrap()] {
            let g = f.primitive_element();
            for x in f.elements() {
                let c = f.subfield_coords(x);
                assert_eq!(c.len(), f.m() as usize);
                assert!(c.iter().all(|&ci| f.is_base_element(ci)));
                let back = c
                    .iter()
                    .enumerate()
                    .fold(Gf::ZERO, |acc, (i, &ci)| f.add(acc, f.mul(ci, f.pow(g, i as u64))));
                assert_eq!(back, x);
            }
        }
    }
}
