use crate::error::Result;
use crate::gf::{Field, Gf};
use crate::linalg;

use super::{br_distribution, Code, LinearCode};

/// `C ∩ F_q^n` for a linear code `C` over `F_{q^m}`, as an `F_q`-linear code.
#[derive(Clone, Debug)]
pub struct SubfieldSubcode {
    field: Field,
    basis: Vec<Vec<Gf>>,
    n: usize,
    scalars: Vec<Gf>,
}

impl SubfieldSubcode {
    /// Solves the parity-check system expanded over `F_q` coordinates; no
    /// enumeration involved.
    pub fn of(code: &LinearCode) -> Self {
        let field = code.field().clone();
        let n = code.length();
        let mut system = Vec::new();
        for h in code.parity_check() {
            let coords: Vec<Vec<Gf>> = h.iter().map(|&x| field.subfield_coords(x)).collect();
            for l in 0..field.m() as usize {
                system.push(coords.iter().map(|c| c[l]).collect::<Vec<Gf>>());
            }
        }
        let mut basis = linalg::nullspace(&field, &system, n);
        if !basis.is_empty() {
            linalg::rref(&field, &mut basis);
        }
        let scalars = field.subfield_elements();
        SubfieldSubcode { field, basis, n, scalars }
    }

    /// Dimension over `F_q`.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Gf>] {
        &self.basis
    }

    /// Minimum Hamming distance by enumeration; `None` for the zero code.
    pub fn min_hamming_distance(&self, cap: u64) -> Result<Option<usize>> {
        Ok(br_distribution(self, cap, 1)?.min_hamming())
    }
}

impl Code for SubfieldSubcode {
    fn field(&self) -> &Field {
        &self.field
    }
    fn length(&self) -> usize {
        self.n
    }
    fn rows(&self) -> &[Vec<Gf>] {
        &self.basis
    }
    fn radix(&self) -> u64 {
        self.scalars.len() as u64
    }
    fn scalar(&self, digit: u64) -> Gf {
        self.scalars[digit as usize]
    }
    fn prime_field_generators(&self) -> Vec<Vec<Gf>> {
        let f = &self.field;
        self.basis
            .iter()
            .flat_map(|row| {
                f.subfield_basis()
                    .iter()
                    .map(move |&w| row.iter().map(|&x| f.mul(w, x)).collect())
            })
            .collect()
    }
}
