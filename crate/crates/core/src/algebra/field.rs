//! Finite fields: the prime field F_p and small extensions F_{p^e}.

use std::fmt;
use std::hash::Hash;

use rand::Rng;

use crate::error::{Error, Result};

/// Default characteristic used throughout.
pub const DEFAULT_PRIME: u32 = 32003;

/// Largest supported extension degree.
pub const MAX_EXT_DEGREE: usize = 6;

/// A field whose elements are small `Copy` values; all arithmetic goes
/// through the field object so the characteristic can be chosen at runtime.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn characteristic(&self) -> u32;
    fn ext_degree(&self) -> usize;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn format(&self, a: Self::Elem) -> String;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.mul(a, self.inv(b))
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_p, p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p as u64) {
            return Err(Error::Malformed(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Representative in the symmetric range (-p/2, p/2].
    pub fn to_signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        t0.rem_euclid(self.p as i64) as u32
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn characteristic(&self) -> u32 {
        self.p
    }
    fn ext_degree(&self) -> usize {
        1
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn format(&self, a: u32) -> String {
        a.to_string()
    }
}

/// Element of F_{p^e}: coefficients of 1, t, ..., t^{e-1} modulo the defining polynomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElem(pub [u32; MAX_EXT_DEGREE]);

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// F_p[t]/(modulus) for a monic irreducible modulus of degree e <= 6.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtField {
    base: PrimeField,
    /// Monic modulus, low-to-high coefficients, length e + 1.
    modulus: Vec<u32>,
}

impl ExtField {
    /// The caller is responsible for irreducibility of `modulus`; use
    /// [`ExtField::find`] to obtain a certified one.
    pub fn new(base: PrimeField, modulus: Vec<u32>) -> Result<Self> {
        let e = modulus.len().saturating_sub(1);
        if e == 0 || e > MAX_EXT_DEGREE || *modulus.last().unwrap() != 1 {
            return Err(Error::Malformed(format!(
                "extension modulus must be monic of degree 1..={MAX_EXT_DEGREE}"
            )));
        }
        Ok(ExtField { base, modulus })
    }

    /// Deterministic search for the first irreducible monic polynomial of degree e.
    pub fn find(base: PrimeField, e: usize) -> Result<Self> {
        use super::univariate as uni;
        if e == 0 || e > MAX_EXT_DEGREE {
            return Err(Error::Domain(format!("extension degree {e} out of range")));
        }
        let p = base.prime() as u64;
        // enumerate t^e + c_{e-1} t^{e-1} + ... + c_0 in little-endian counter order
        let mut counter: Vec<u32> = vec![0; e];
        loop {
            let mut f = counter.clone();
            f.push(1);
            if uni::is_irreducible(&base, &f) {
                return ExtField::new(base, f);
            }
            let mut k = 0;
            loop {
                if k == e {
                    return Err(Error::Invariant("no irreducible polynomial found".into()));
                }
                counter[k] += 1;
                if (counter[k] as u64) < p {
                    break;
                }
                counter[k] = 0;
                k += 1;
            }
        }
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The class of t.
    pub fn generator(&self) -> ExtElem {
        let mut a = [0u32; MAX_EXT_DEGREE];
        if self.degree() == 1 {
            a[0] = self.base.neg(self.modulus[0]);
        } else {
            a[1] = 1;
        }
        ExtElem(a)
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn embed(&self, a: u32) -> ExtElem {
        let mut v = [0u32; MAX_EXT_DEGREE];
        v[0] = a;
        ExtElem(v)
    }

    /// Some(c) if the element lies in the prime field.
    pub fn as_prime(&self, a: ExtElem) -> Option<u32> {
        if a.0[1..].iter().all(|&c| c == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }

    fn pow(&self, mut a: ExtElem, mut e: u128) -> ExtElem {
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn order(&self) -> u128 {
        (self.base.prime() as u128).pow(self.degree() as u32)
    }
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        ExtElem([0; MAX_EXT_DEGREE])
    }
    fn one(&self) -> ExtElem {
        self.embed(1)
    }
    fn add(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let mut r = [0u32; MAX_EXT_DEGREE];
        for i in 0..self.degree() {
            r[i] = self.base.add(a.0[i], b.0[i]);
        }
        ExtElem(r)
    }
    fn sub(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let mut r = [0u32; MAX_EXT_DEGREE];
        for i in 0..self.degree() {
            r[i] = self.base.sub(a.0[i], b.0[i]);
        }
        ExtElem(r)
    }
    fn neg(&self, a: ExtElem) -> ExtElem {
        let mut r = [0u32; MAX_EXT_DEGREE];
        for i in 0..self.degree() {
            r[i] = self.base.neg(a.0[i]);
        }
        ExtElem(r)
    }
    fn mul(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let e = self.degree();
        let p = self.base.prime() as u64;
        let mut prod = [0u64; 2 * MAX_EXT_DEGREE];
        for i in 0..e {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] = (prod[i + j] + a.0[i] as u64 * b.0[j] as u64) % p;
            }
        }
        // reduce by the monic modulus from the top
        for k in (e..2 * e - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..e {
                let sub = c * self.modulus[i] as u64 % p;
                prod[k - e + i] = (prod[k - e + i] + p - sub) % p;
            }
        }
        let mut r = [0u32; MAX_EXT_DEGREE];
        for i in 0..e {
            r[i] = prod[i] as u32;
        }
        ExtElem(r)
    }
    fn inv(&self, a: ExtElem) -> ExtElem {
        assert!(a != self.zero(), "inverse of zero in extension field");
        self.pow(a, self.order() - 2)
    }
    fn from_i64(&self, v: i64) -> ExtElem {
        self.embed(self.base.from_i64(v))
    }
    fn characteristic(&self) -> u32 {
        self.base.prime()
    }
    fn ext_degree(&self) -> usize {
        self.degree()
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        let mut r = [0u32; MAX_EXT_DEGREE];
        for c in r.iter_mut().take(self.degree()) {
            *c = self.base.random(rng);
        }
        ExtElem(r)
    }
    fn format(&self, a: ExtElem) -> String {
        if let Some(c) = self.as_prime(a) {
            return c.to_string();
        }
        let parts: Vec<String> = (0..self.degree())
            .filter(|&i| a.0[i] != 0)
            .map(|i| match i {
                0 => a.0[0].to_string(),
                1 => format!("{}*t", a.0[1]),
                _ => format!("{}*t^{}", a.0[i], i),
            })
            .collect();
        format!("({})", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::default();
        for a in [1u32, 2, 17, 32002, 12345] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert!(PrimeField::new(32004).is_err());
    }

    #[test]
    fn extension_axioms_on_random_samples() {
        let base = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for e in 1..=4 {
            let k = ExtField::find(base, e).unwrap();
            for _ in 0..50 {
                let a = k.random(&mut rng);
                let b = k.random(&mut rng);
                let c = k.random(&mut rng);
                assert_eq!(k.mul(a, b), k.mul(b, a));
                assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                if a != k.zero() {
                    assert_eq!(k.mul(a, k.inv(a)), k.one());
                }
            }
        }
    }
}
