//! Gaussian elimination over a field: row-reduced echelon form, rank and
//! right nullspace. Used over `F_{q^m}`, over `F_q` (elements of the big field
//! that happen to lie in the subfield), and over the prime field `F_p`.

use crate::gf::poly::{add_mod, inv_mod, mul_mod, sub_mod};
use crate::gf::{Field, Gf};

pub trait Scalars {
    type E: Copy + Eq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: Self::E, b: Self::E) -> Self::E;
    fn sub(&self, a: Self::E, b: Self::E) -> Self::E;
    fn mul(&self, a: Self::E, b: Self::E) -> Self::E;
    /// `a` is nonzero.
    fn inv(&self, a: Self::E) -> Self::E;
}

impl Scalars for Field {
    type E = Gf;
    fn zero(&self) -> Gf {
        Gf::ZERO
    }
    fn one(&self) -> Gf {
        Gf::ONE
    }
    fn add(&self, a: Gf, b: Gf) -> Gf {
        Field::add(self, a, b)
    }
    fn sub(&self, a: Gf, b: Gf) -> Gf {
        Field::sub(self, a, b)
    }
    fn mul(&self, a: Gf, b: Gf) -> Gf {
        Field::mul(self, a, b)
    }
    fn inv(&self, a: Gf) -> Gf {
        Field::inv(self, a).expect("pivot is nonzero")
    }
}

/// Residues modulo a prime.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField(pub u64);

impl Scalars for PrimeField {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        add_mod(a, b, self.0)
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        sub_mod(a, b, self.0)
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.0)
    }
    fn inv(&self, a: u64) -> u64 {
        inv_mod(a, self.0)
    }
}

/// Reduces `rows` in place to reduced row-echelon form, drops zero rows, and
/// returns the pivot columns.
pub fn rref<S: Scalars>(s: &S, rows: &mut Vec<Vec<S::E>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != s.zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = s.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = s.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != s.zero() {
                let f = rows[i][col];
                for c in col..ncols {
                    let v = s.mul(f, rows[r][c]);
                    rows[i][c] = s.sub(rows[i][c], v);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<S: Scalars>(s: &S, rows: &[Vec<S::E>]) -> usize {
    let mut m = rows.to_vec();
    rref(s, &mut m).len()
}

/// Basis of `{x : A x = 0}` for an `r × ncols` matrix `A`.
pub fn nullspace<S: Scalars>(s: &S, rows: &[Vec<S::E>], ncols: usize) -> Vec<Vec<S::E>> {
    let mut m = rows.to_vec();
    let pivots = if m.is_empty() { Vec::new() } else { rref(s, &mut m) };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![s.zero(); ncols];
            v[fc] = s.one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = s.sub(s.zero(), row[fc]);
            }
            v
        })
        .collect()
}

/// Solves `x · M = target` for a row vector `x`, if possible (`M` has `k` rows).
pub fn solve_left<S: Scalars>(s: &S, m: &[Vec<S::E>], target: &[S::E]) -> Option<Vec<S::E>> {
    let k = m.len();
    let n = target.len();
    // transpose system: M^T x^T = target^T, augmented
    let mut aug: Vec<Vec<S::E>> = (0..n)
        .map(|c| {
            let mut row: Vec<S::E> = (0..k).map(|r| m[r][c]).collect();
            row.push(target[c]);
            row
        })
        .collect();
    let pivots = rref(s, &mut aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![s.zero(); k];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[k];
    }
    Some(x)
}
