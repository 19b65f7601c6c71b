use crate::error::{Error, Result};
use crate::gf::poly::{add_mod, sub_mod};
use crate::gf::{Field, Gf};
use crate::linalg::{self, PrimeField};

use super::Code;

/// `F_p`-linear code: the `F_p`-span of its rows.
///
/// Rows are kept in a canonical reduced form (reduced row-echelon form of the
/// `F_p`-coordinate expansion), so two additive codes are equal as sets iff
/// their rows are equal.
#[derive(Clone, Debug)]
pub struct AdditiveCode {
    field: Field,
    rows: Vec<Vec<Gf>>,
    n: usize,
}

impl PartialEq for AdditiveCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.rows == other.rows
    }
}

impl AdditiveCode {
    /// The `F_p`-span of `rows`, each of length `n`.
    pub fn new(field: &Field, n: usize, rows: Vec<Vec<Gf>>) -> Result<Self> {
        for r in &rows {
            if r.len() != n {
                return Err(Error::LengthMismatch(n, r.len()));
            }
            if let Some(x) = r.iter().find(|x| x.code() >= field.size()) {
                return Err(Error::InvalidElement(x.code()));
            }
        }
        let d = field.degree();
        let mut flat: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().flat_map(|&x| field.coeffs(x)).collect())
            .collect();
        if !flat.is_empty() {
            linalg::rref(&PrimeField(field.characteristic()), &mut flat);
        }
        let rows = flat
            .iter()
            .map(|v| v.chunks(d).map(|c| field.from_coeffs(c).expect("valid residues")).collect())
            .collect();
        Ok(AdditiveCode { field: field.clone(), rows, n })
    }

    /// The same set of words viewed as an `F_p`-linear code.
    pub fn from_code<C: Code + ?Sized>(code: &C) -> Self {
        Self::new(code.field(), code.length(), code.prime_field_generators()).expect("rows come from a valid code")
    }

    /// `log_p |C|`.
    pub fn log_size(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> &[Vec<Gf>] {
        &self.rows
    }

    pub fn contains(&self, word: &[Gf]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch(self.n, word.len()));
        }
        let s = PrimeField(self.field.characteristic());
        let flat: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|r| r.iter().flat_map(|&x| self.field.coeffs(x)).collect())
            .collect();
        let target: Vec<u64> = word.iter().flat_map(|&x| self.field.coeffs(x)).collect();
        if flat.is_empty() {
            return Ok(target.iter().all(|&c| c == 0));
        }
        Ok(linalg::solve_left(&s, &flat, &target).is_some())
    }
}

impl Code for AdditiveCode {
    fn field(&self) -> &Field {
        &self.field
    }
    fn length(&self) -> usize {
        self.n
    }
    fn rows(&self) -> &[Vec<Gf>] {
        &self.rows
    }
    fn radix(&self) -> u64 {
        self.field.characteristic()
    }
    fn scalar(&self, digit: u64) -> Gf {
        Gf(digit)
    }
    fn prime_field_generators(&self) -> Vec<Vec<Gf>> {
        self.rows.clone()
    }
}

/// `Σ_i tr(a_i b'_i − a'_i b_i)` where `x_i = a_i γ + b_i`, `y_i = a'_i γ + b'_i`.
pub fn symplectic_form(field: &Field, gamma: Gf, x: &[Gf], y: &[Gf]) -> Result<u64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let p = field.characteristic();
    let mut acc = 0;
    for (&xi, &yi) in x.iter().zip(y) {
        let (a, b) = field.decompose_pair(xi, gamma)?;
        let (a2, b2) = field.decompose_pair(yi, gamma)?;
        acc = add_mod(acc, field.subfield_trace(field.mul(a, b2)), p);
        acc = sub_mod(acc, field.subfield_trace(field.mul(a2, b)), p);
    }
    Ok(acc)
}

/// Dual of `code` under the trace-symplectic form, by `F_p` elimination.
///
/// Unknown `y_i = a'_i γ + b'_i` is written with `a'_i = Σ v_il ω_l`,
/// `b'_i = Σ u_il ω_l` over the `F_p`-basis `ω` of `F_q`; each `F_p`-generator
/// of the code contributes one linear equation in the `v, u`.
pub fn trace_symplectic_dual<C: Code + ?Sized>(code: &C, gamma: Gf) -> Result<AdditiveCode> {
    let field = code.field();
    field.check_pair_setup(gamma)?;
    let p = field.characteristic();
    let n = code.length();
    let omega = field.subfield_basis().to_vec();
    let e = omega.len();
    let width = 2 * e * n;

    let mut system = Vec::new();
    for x in code.prime_field_generators() {
        let mut row = vec![0u64; width];
        for (i, &xi) in x.iter().enumerate() {
            let (a, b) = field.decompose_pair(xi, gamma)?;
            for (l, &w) in omega.iter().enumerate() {
                row[i * 2 * e + l] = sub_mod(0, field.subfield_trace(field.mul(w, b)), p);
                row[i * 2 * e + e + l] = field.subfield_trace(field.mul(a, w));
            }
        }
        system.push(row);
    }

    let span = |coords: &[u64]| {
        coords
            .iter()
            .zip(&omega)
            .fold(Gf::ZERO, |acc, (&c, &w)| field.add(acc, field.scale(c, w)))
    };
    let rows = linalg::nullspace(&PrimeField(p), &system, width)
        .iter()
        .map(|v| {
            (0..n)
                .map(|i| {
                    let chunk = &v[i * 2 * e..(i + 1) * 2 * e];
                    field.compose_pair(span(&chunk[..e]), span(&chunk[e..]), gamma)
                })
                .collect()
        })
        .collect();
    AdditiveCode::new(field, n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{codewords, LinearCode};

    fn f4() -> Field {
        Field::new(2, 1, 2, Some(vec![1, 1, 1])).unwrap()
    }

    fn f16() -> Field {
        Field::new(2, 2, 2, Some(vec![1, 1, 0, 0, 1])).unwrap()
    }

    #[test]
    fn canonical_form_identifies_equal_spans() {
        let f = f4();
        let a = f.parse_vector("1,a").unwrap();
        let b = f.parse_vector("a,0").unwrap();
        let sum: Vec<Gf> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
        let c1 = AdditiveCode::new(&f, 2, vec![a.clone(), b.clone()]).unwrap();
        let c2 = AdditiveCode::new(&f, 2, vec![sum, b, a]).unwrap();
        assert_eq!(c1, c2);
        assert_eq!(c1.log_size(), 2);
    }

    #[test]
    fn dual_sizes_and_orthogonality() {
        for f in [f4(), f16()] {
            let gamma = f.default_gamma();
            let a = f.primitive_element();
            let c = LinearCode::from_generator(&f, vec![vec![Gf::ONE, a, f.mul(a, a)]]).unwrap();
            let dual = trace_symplectic_dual(&c, gamma).unwrap();
            let d = f.degree();
            assert_eq!(dual.log_size(), 2 * f.e() as usize * 3 - d);
            for x in codewords(&c, 0..f.size()) {
                for y in codewords(&dual, 0..dual.size().unwrap()) {
                    assert_eq!(symplectic_form(&f, gamma, &x, &y).unwrap(), 0);
                }
            }
            let back = trace_symplectic_dual(&dual, gamma).unwrap();
            assert_eq!(back, AdditiveCode::from_code(&c));
        }
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let f = f16();
        let full = LinearCode::identity(&f, 2);
        let dual = trace_symplectic_dual(&full, f.default_gamma()).unwrap();
        assert_eq!(dual.log_size(), 0);
        assert!(dual.contains(&[Gf::ZERO, Gf::ZERO]).unwrap());
    }

    #[test]
    fn dual_requires_quadratic_extension() {
        let f = Field::new(2, 1, 4, None).unwrap();
        let c = LinearCode::identity(&f, 1);
        assert!(matches!(
            trace_symplectic_dual(&c, f.primitive_element()),
            Err(Error::WrongExtensionDegree { expected: 2, actual: 4 })
        ));
        let f = f4();
        let c = LinearCode::identity(&f, 1);
        assert!(matches!(trace_symplectic_dual(&c, Gf::ONE), Err(Error::GammaInBaseField)));
    }
}
