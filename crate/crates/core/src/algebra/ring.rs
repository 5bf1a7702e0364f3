//! Sparse multivariate polynomials over a field.

use std::cmp::Ordering;

use super::field::Field;
use super::monomial::{Mono, MonoOrder, MAX_VARS};
use crate::error::{Error, Result};

/// Terms sorted descending in the ring's monomial order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    pub(crate) terms: Vec<(Mono, E)>,
}

impl<E: Copy> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Mono, E)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Mono, E)> {
        self.terms.first()
    }

    /// Total degree of the leading term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn max_var(&self) -> usize {
        let mut r = 0;
        for (m, _) in &self.terms {
            for i in 0..MAX_VARS {
                if m.exp(i) > 0 {
                    r = r.max(i + 1);
                }
            }
        }
        r
    }
}

/// Polynomial ring k[x_0..x_{nvars-1}] with a fixed monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring<K: Field> {
    pub field: K,
    pub nvars: usize,
    pub order: MonoOrder,
}

impl<K: Field> Ring<K> {
    pub fn new(field: K, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Ring { field, nvars, order: MonoOrder::Grevlex }
    }

    pub fn with_order(field: K, nvars: usize, order: MonoOrder) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Ring { field, nvars, order }
    }

    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn var(&self, i: usize) -> Poly<K::Elem> {
        assert!(i < self.nvars);
        Poly { terms: vec![(Mono::var(i), self.field.one())] }
    }

    pub fn constant(&self, c: K::Elem) -> Poly<K::Elem> {
        if self.field.is_zero(c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::one(), c)] }
        }
    }

    pub fn monomial(&self, m: Mono, c: K::Elem) -> Poly<K::Elem> {
        if self.field.is_zero(c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(&self, mut terms: Vec<(Mono, K::Elem)>) -> Poly<K::Elem> {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, K::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(*c));
        Poly { terms: out }
    }

    pub fn check(&self, f: &Poly<K::Elem>) -> Result<()> {
        if f.max_var() > self.nvars {
            return Err(Error::Malformed(format!(
                "polynomial uses {} variables, ring has {}",
                f.max_var(),
                self.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, f: &Poly<K::Elem>, g: &Poly<K::Elem>) -> Poly<K::Elem> {
        self.combine(f, g, false)
    }

    pub fn sub(&self, f: &Poly<K::Elem>, g: &Poly<K::Elem>) -> Poly<K::Elem> {
        self.combine(f, g, true)
    }

    fn combine(&self, f: &Poly<K::Elem>, g: &Poly<K::Elem>, negate: bool) -> Poly<K::Elem> {
        let k = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() || j < g.terms.len() {
            let ord = if i == f.terms.len() {
                Ordering::Less
            } else if j == g.terms.len() {
                Ordering::Greater
            } else {
                self.cmp(&f.terms[i].0, &g.terms[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(f.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = g.terms[j];
                    out.push((m, if negate { k.neg(c) } else { c }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        k.sub(f.terms[i].1, g.terms[j].1)
                    } else {
                        k.add(f.terms[i].1, g.terms[j].1)
                    };
                    if !k.is_zero(c) {
                        out.push((f.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn neg(&self, f: &Poly<K::Elem>) -> Poly<K::Elem> {
        Poly { terms: f.terms.iter().map(|(m, c)| (*m, self.field.neg(*c))).collect() }
    }

    pub fn scale(&self, f: &Poly<K::Elem>, c: K::Elem) -> Poly<K::Elem> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: f.terms.iter().map(|(m, a)| (*m, self.field.mul(*a, c))).collect() }
    }

    pub fn mul_term(&self, f: &Poly<K::Elem>, m: &Mono, c: K::Elem) -> Poly<K::Elem> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: f.terms.iter().map(|(t, a)| (t.mul(m), self.field.mul(*a, c))).collect() }
    }

    pub fn mul(&self, f: &Poly<K::Elem>, g: &Poly<K::Elem>) -> Poly<K::Elem> {
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = self.add(&acc, &self.mul_term(big, m, *c));
        }
        acc
    }

    pub fn pow(&self, f: &Poly<K::Elem>, e: u32) -> Poly<K::Elem> {
        let mut r = self.constant(self.field.one());
        for _ in 0..e {
            r = self.mul(&r, f);
        }
        r
    }

    pub fn eval(&self, f: &Poly<K::Elem>, pt: &[K::Elem]) -> K::Elem {
        let k = &self.field;
        let mut acc = k.zero();
        for (m, c) in &f.terms {
            let mut v = *c;
            for (i, &x) in pt.iter().enumerate().take(self.nvars) {
                for _ in 0..m.exp(i) {
                    v = k.mul(v, x);
                }
            }
            acc = k.add(acc, v);
        }
        acc
    }

    /// Substitutes polynomials for the variables, landing in `target`.
    pub fn substitute<K2: Field>(
        &self,
        f: &Poly<K::Elem>,
        target: &Ring<K2>,
        images: &[Poly<K2::Elem>],
        coef: impl Fn(K::Elem) -> K2::Elem,
    ) -> Poly<K2::Elem> {
        let mut acc = Poly::zero();
        for (m, c) in &f.terms {
            let mut t = target.constant(coef(*c));
            for (i, img) in images.iter().enumerate().take(self.nvars) {
                for _ in 0..m.exp(i) {
                    t = target.mul(&t, img);
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    pub fn format(&self, f: &Poly<K::Elem>, names: &[String]) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let k = &self.field;
        let parts: Vec<String> = f
            .terms
            .iter()
            .map(|(m, c)| {
                let mono = format_mono(m, names);
                if mono.is_empty() {
                    k.format(*c)
                } else if *c == k.one() {
                    mono
                } else {
                    format!("{}*{}", k.format(*c), mono)
                }
            })
            .collect();
        parts.join(" + ")
    }
}

pub fn format_mono(m: &Mono, names: &[String]) -> String {
    let mut parts = vec![];
    for (i, name) in names.iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Default variable names x0, x1, ...
pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars).map(|i| format!("x{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;

    #[test]
    fn arithmetic_small() {
        let r = Ring::new(PrimeField::default(), 3);
        let x = r.var(0);
        let y = r.var(1);
        let s = r.add(&x, &y);
        let sq = r.mul(&s, &s);
        let expect = r.add(&r.add(&r.mul(&x, &x), &r.scale(&r.mul(&x, &y), 2)), &r.mul(&y, &y));
        assert_eq!(sq, expect);
        assert!(r.sub(&sq, &expect).is_zero());
        assert_eq!(r.format(&sq, &default_names(3)), "x0^2 + 2*x0*x1 + x1^2");
    }
}
