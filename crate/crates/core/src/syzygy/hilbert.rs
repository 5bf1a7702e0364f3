//! Hilbert series as numerator Laurent polynomials over (1 − t)^nvars.

use crate::algebra::monomial::{binomial, count_monomials, Mono, MAX_VARS};

/// Integer Laurent polynomial Σ coeffs[i]·t^(lo+i).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { lo: 0, coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(e: i64, c: i64) -> Self {
        let mut p = LaurentPoly { lo: e, coeffs: vec![c] };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        let i = e - self.lo;
        if i < 0 || i >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    /// (exponent, coefficient) pairs with nonzero coefficient.
    pub fn terms(&self) -> Vec<(i64, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.lo + i as i64, c))
            .collect()
    }

    pub fn min_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo)
        }
    }

    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, 1)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, -1)
    }

    fn combine(&self, o: &Self, sign: i64) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.scale(sign);
        }
        let lo = self.lo.min(o.lo);
        let hi = self.max_exp().unwrap().max(o.max_exp().unwrap());
        let mut coeffs = vec![0; (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in o.terms() {
            coeffs[(e - lo) as usize] += sign * c;
        }
        let mut p = LaurentPoly { lo, coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut p = LaurentPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|x| x * c).collect() };
        p.trim();
        p
    }

    /// Multiplication by t^e.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { lo: self.lo + e, coeffs: self.coeffs.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = LaurentPoly { lo: self.lo + o.lo, coeffs };
        p.trim();
        p
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact division by (1 − t), if possible.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.eval_one() != 0 {
            return None;
        }
        // p = (1 − t)q  ⇔  q_i = Σ_{k≤i} p_k
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut acc = 0;
        for &c in &self.coeffs[..self.coeffs.len() - 1] {
            acc += c;
            coeffs.push(acc);
        }
        let mut q = LaurentPoly { lo: self.lo, coeffs };
        q.trim();
        Some(q)
    }
}

/// HS(t) = num(t) / (1 − t)^nvars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    pub num: LaurentPoly,
    pub nvars: usize,
}

impl HilbertSeries {
    pub fn new(num: LaurentPoly, nvars: usize) -> Self {
        HilbertSeries { num, nvars }
    }

    pub fn zero(nvars: usize) -> Self {
        HilbertSeries { num: LaurentPoly::zero(), nvars }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        HilbertSeries { num: self.num.add(&o.num), nvars: self.nvars }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        HilbertSeries { num: self.num.sub(&o.num), nvars: self.nvars }
    }

    /// Value of the Hilbert function at d.
    pub fn value(&self, d: i64) -> i64 {
        self.num.terms().iter().map(|&(e, c)| c * count_monomials(self.nvars, d - e)).sum()
    }

    /// Value of the Hilbert polynomial at d (any integer).
    pub fn poly_value(&self, d: i64) -> i64 {
        if self.nvars == 0 {
            return 0;
        }
        let r = self.nvars as i64 - 1;
        self.num.terms().iter().map(|&(e, c)| c * binom_poly(d - e + r, r)).sum()
    }

    /// Numerator and exponent after cancelling all factors of (1 − t):
    /// HS = q / (1 − t)^dim. `dim` is the Krull dimension (−1 for zero).
    pub fn reduced(&self) -> (LaurentPoly, i64) {
        if self.num.is_zero() {
            return (LaurentPoly::zero(), -1);
        }
        let mut q = self.num.clone();
        let mut dim = self.nvars as i64;
        while dim > 0 {
            match q.div_one_minus_t() {
                Some(r) => {
                    q = r;
                    dim -= 1;
                }
                None => break,
            }
        }
        (q, dim)
    }

    pub fn krull_dim(&self) -> i64 {
        self.reduced().1
    }

    /// Nonzero in only finitely many degrees.
    pub fn is_finite_length(&self) -> bool {
        self.krull_dim() <= 0
    }

    /// Lowest degree with a nonzero value, for finite-length modules.
    pub fn finite_support(&self) -> Option<(i64, i64)> {
        let (q, dim) = self.reduced();
        if dim != 0 {
            return None;
        }
        let lo = (q.min_exp()?..=q.max_exp()?).find(|&d| q.coeff(d) != 0)?;
        let hi = (lo..=q.max_exp()?).rev().find(|&d| q.coeff(d) != 0)?;
        Some((lo, hi))
    }

    /// Hilbert polynomial coefficient data: multiplicity over (dim)! when dim ≥ 1.
    pub fn multiplicity(&self) -> i64 {
        self.reduced().0.eval_one()
    }
}

/// C(x, r) as the polynomial x(x−1)...(x−r+1)/r! evaluated at integer x.
pub fn binom_poly(x: i64, r: i64) -> i64 {
    if r < 0 {
        return 0;
    }
    if x >= 0 {
        return binomial(x, r);
    }
    // C(x, r) = (−1)^r C(r − x − 1, r)
    let v = binomial(r - x - 1, r);
    if r % 2 == 0 {
        v
    } else {
        -v
    }
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by_key(|m| (m.degree(), m.exponents(MAX_VARS)));
    gens.dedup();
    let mut out: Vec<Mono> = vec![];
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of HS(S/I) for the monomial ideal generated by `gens`.
pub fn monomial_numerator(gens: &[Mono]) -> LaurentPoly {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return LaurentPoly::one();
    }
    // pairwise coprime: product of (1 − t^deg)
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut p = LaurentPoly::one();
        for g in &gens {
            p = p.mul(&LaurentPoly::one().sub(&LaurentPoly::monomial(g.degree() as i64, 1)));
        }
        return p;
    }
    // pivot on the variable occurring in most generators
    let mut best = (0usize, 0usize);
    for v in 0..MAX_VARS {
        let cnt = gens.iter().filter(|g| g.exp(v) > 0).count();
        if cnt > best.1 {
            best = (v, cnt);
        }
    }
    let v = best.0;
    let e = gens.iter().filter(|g| g.exp(v) > 0).map(|g| g.exp(v)).min().unwrap();
    let mut ex = vec![0u32; MAX_VARS];
    ex[v] = e;
    let p = Mono::from_exponents(&ex);
    let mut plus = gens.clone();
    plus.push(p);
    let colon: Vec<Mono> = gens.iter().map(|g| g.gcd(&p).quotient(g)).collect();
    monomial_numerator(&plus).add(&monomial_numerator(&colon).shift(e as i64))
}
