//! Dense univariate polynomials over F_p (coefficients low to high), used for
//! extension-field construction and root finding in point search.

use rand::Rng;

use super::field::{Field, PrimeField};

pub type UPoly = Vec<u32>;

pub fn trim(f: &mut UPoly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub fn degree(f: &UPoly) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn sub(k: &PrimeField, f: &UPoly, g: &UPoly) -> UPoly {
    let mut r = vec![0u32; f.len().max(g.len())];
    for (i, c) in f.iter().enumerate() {
        r[i] = *c;
    }
    for (i, c) in g.iter().enumerate() {
        r[i] = k.sub(r[i], *c);
    }
    trim(&mut r);
    r
}

pub fn mul(k: &PrimeField, f: &UPoly, g: &UPoly) -> UPoly {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut r = vec![0u32; f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if *a == 0 {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            r[i + j] = k.add(r[i + j], k.mul(*a, *b));
        }
    }
    trim(&mut r);
    r
}

/// Remainder of f modulo a nonzero g.
pub fn rem(k: &PrimeField, f: &UPoly, g: &UPoly) -> UPoly {
    divrem(k, f, g).1
}

pub fn divrem(k: &PrimeField, f: &UPoly, g: &UPoly) -> (UPoly, UPoly) {
    assert!(!g.is_empty(), "division by zero polynomial");
    let mut r = f.clone();
    trim(&mut r);
    let dg = g.len() - 1;
    if r.len() < g.len() {
        return (vec![], r);
    }
    let lc_inv = k.inv(g[dg]);
    let mut q = vec![0u32; r.len() - dg];
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let c = k.mul(r[dr], lc_inv);
        q[dr - dg] = c;
        for i in 0..=dg {
            r[dr - dg + i] = k.sub(r[dr - dg + i], k.mul(c, g[i]));
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn monic(k: &PrimeField, f: &UPoly) -> UPoly {
    match f.last() {
        None => vec![],
        Some(&lc) => {
            let inv = k.inv(lc);
            f.iter().map(|c| k.mul(*c, inv)).collect()
        }
    }
}

pub fn gcd(k: &PrimeField, f: &UPoly, g: &UPoly) -> UPoly {
    let (mut a, mut b) = (f.clone(), g.clone());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

pub fn mulmod(k: &PrimeField, a: &UPoly, b: &UPoly, m: &UPoly) -> UPoly {
    rem(k, &mul(k, a, b), m)
}

pub fn powmod(k: &PrimeField, base: &UPoly, mut e: u128, m: &UPoly) -> UPoly {
    let mut result: UPoly = rem(k, &vec![1], m);
    let mut b = rem(k, base, m);
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(k, &result, &b, m);
        }
        b = mulmod(k, &b, &b, m);
        e >>= 1;
    }
    result
}

/// x^{p^j} mod m.
fn frobenius_power(k: &PrimeField, j: usize, m: &UPoly) -> UPoly {
    let mut h = rem(k, &vec![0, 1], m);
    for _ in 0..j {
        h = powmod(k, &h, k.prime() as u128, m);
    }
    h
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test.
pub fn is_irreducible(k: &PrimeField, f: &UPoly) -> bool {
    let Some(e) = degree(f) else { return false };
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    let x: UPoly = vec![0, 1];
    let full = frobenius_power(k, e, f);
    if sub(k, &full, &rem(k, &x, f)).iter().any(|&c| c != 0) {
        return false;
    }
    for q in prime_divisors(e) {
        let h = frobenius_power(k, e / q, f);
        let g = gcd(k, f, &sub(k, &h, &x));
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Product of all irreducible factors of degree exactly j of a squarefree f,
/// for the smallest j admitting one. Returns (j, product).
pub fn smallest_degree_part(k: &PrimeField, f: &UPoly) -> Option<(usize, UPoly)> {
    let rest = monic(k, f);
    let deg = degree(&rest)?;
    if deg == 0 {
        return None;
    }
    let x: UPoly = vec![0, 1];
    let mut h = rem(k, &x, &rest);
    for j in 1..=deg {
        h = powmod(k, &h, k.prime() as u128, &rest);
        let g = gcd(k, &rest, &sub(k, &h, &x));
        if g.len() > 1 {
            return Some((j, g));
        }
        if 2 * (j + 1) > deg {
            // no factor of degree <= j, so f is irreducible
            return Some((deg, rest));
        }
    }
    None
}

/// Splits a product of distinct irreducibles of degree j and returns one
/// irreducible factor (Cantor–Zassenhaus, odd p).
pub fn one_factor_of_degree<R: Rng + ?Sized>(
    k: &PrimeField,
    g: &UPoly,
    j: usize,
    rng: &mut R,
) -> UPoly {
    let mut g = monic(k, g);
    let q = (k.prime() as u128).pow(j as u32);
    while degree(&g).unwrap_or(0) > j {
        let dg = degree(&g).unwrap();
        let a: UPoly = {
            let mut a: UPoly = (0..dg).map(|_| k.random(rng)).collect();
            trim(&mut a);
            a
        };
        if a.is_empty() {
            continue;
        }
        let b = powmod(k, &a, (q - 1) / 2, &g);
        let d = gcd(k, &g, &sub(k, &b, &vec![1]));
        let dd = degree(&d).unwrap_or(0);
        if dd > 0 && dd < dg {
            // keep the smaller part
            let other = divrem(k, &g, &d).0;
            g = if dd <= degree(&other).unwrap() { d } else { monic(k, &other) };
        }
    }
    g
}

/// Squarefree part via gcd with the derivative (valid for degree < p).
pub fn squarefree(k: &PrimeField, f: &UPoly) -> UPoly {
    let mut df: UPoly = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.mul(*c, k.from_i64(i as i64)))
        .collect();
    trim(&mut df);
    if df.is_empty() {
        return monic(k, f);
    }
    let g = gcd(k, f, &df);
    monic(k, &divrem(k, f, &g).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn irreducibility() {
        let k = PrimeField::new(7).unwrap();
        // x^2 + 1 is irreducible mod 7 (7 = 3 mod 4)
        assert!(is_irreducible(&k, &vec![1, 0, 1]));
        // x^2 - 1 is not
        assert!(!is_irreducible(&k, &vec![6, 0, 1]));
    }

    #[test]
    fn factor_extraction() {
        let k = PrimeField::new(101).unwrap();
        // (x - 3)(x - 5)(x^2 + 2) where x^2+2 irreducible iff -2 non-residue mod 101
        let f = mul(&k, &mul(&k, &vec![98, 1], &vec![96, 1]), &vec![2, 0, 1]);
        let (j, part) = smallest_degree_part(&k, &f).unwrap();
        assert_eq!(j, 1);
        assert_eq!(degree(&part), Some(2));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fac = one_factor_of_degree(&k, &part, 1, &mut rng);
        assert_eq!(degree(&fac), Some(1));
        assert!(rem(&k, &f, &fac).is_empty());
    }
}
