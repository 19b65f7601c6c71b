//! Dense polynomials over a prime field `F_p`, coefficients stored low-to-high.
//!
//! Only what field construction needs: reduction, products modulo a fixed
//! polynomial, gcd, and the Ben-Or irreducibility test.

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime; `a` must be nonzero.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo `f` (f nonzero).
pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let df = degree(f).expect("nonzero modulus");
    let lead_inv = inv_mod(f[df], p);
    let mut r = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < df {
            break;
        }
        let c = mul_mod(r[dr], lead_inv, p);
        let shift = dr - df;
        for (i, &fc) in f[..=df].iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(c, fc, p), p);
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_rem(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn pow_rem(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_rem(&acc, &b, f, p);
        }
        b = mul_rem(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out: Vec<u64> = (0..len)
        .map(|i| {
            sub_mod(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
                p,
            )
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Ben-Or test: `f` of degree `d` is irreducible over `F_p` iff
/// `gcd(f, x^{p^i} - x) = 1` for every `1 <= i <= d/2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = match degree(f) {
        Some(d) => d,
        None => return false,
    };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut h = rem(&x, f, p);
    for _ in 1..=d / 2 {
        h = pow_rem(&h, p, f, p);
        let g = gcd(f, &sub(&h, &x, p), p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_matches_root_and_factor_search_over_f2() {
        // degree 4 over F_2: exactly three irreducibles
        let irreducible: Vec<u64> = (0..16u64)
            .filter(|low| {
                let mut f: Vec<u64> = (0..4).map(|i| (low >> i) & 1).collect();
                f.push(1);
                is_irreducible(&f, 2)
            })
            .collect();
        assert_eq!(irreducible, vec![0b0011, 0b1001, 0b1111]);
    }

    #[test]
    fn quadratics_over_f3() {
        // x^2 + 1, x^2 + x + 2, x^2 + 2x + 2
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(is_irreducible(&[2, 1, 1], 3));
        assert!(is_irreducible(&[2, 2, 1], 3));
        assert!(!is_irreducible(&[2, 0, 1], 3));
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(15), vec![3, 5]);
        assert_eq!(prime_factors(255), vec![3, 5, 17]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert!(is_prime(521));
        assert!(!is_prime(1));
    }
}
