//! The linear subspace L = {x_{n+1} = … = x_{n+m} = 0} of P^{n+m} and its
//! complement L′ = {x_0 = … = x_n = 0}.

use std::collections::BTreeMap;

use crate::algebra::field::Field;
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::monomial::{binomial, Mono, MAX_VARS};
use crate::algebra::ring::{Poly, Ring};
use crate::error::{Error, Result};

/// Variables x_0..x_n belong to L, x_{n+1}..x_{n+m} to L′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientSplit {
    pub n: usize,
    pub m: usize,
}

impl AmbientSplit {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 2 || m < 1 {
            return Err(Error::Domain(format!("need n ≥ 2 and m ≥ 1, got n = {n}, m = {m}")));
        }
        if n + m + 1 > MAX_VARS {
            return Err(Error::Domain(format!("P^{} exceeds the {MAX_VARS}-variable limit", n + m)));
        }
        Ok(AmbientSplit { n, m })
    }

    /// k[x_0..x_{n+m}].
    pub fn big<K: Field>(&self, k: &K) -> Ring<K> {
        Ring::new(k.clone(), self.n + self.m + 1)
    }

    /// k[x_0..x_n], the coordinate ring of L.
    pub fn small<K: Field>(&self, k: &K) -> Ring<K> {
        Ring::new(k.clone(), self.n + 1)
    }

    /// R = k[x_{n+1}..x_{n+m}], indexed from 0.
    pub fn complement<K: Field>(&self, k: &K) -> Ring<K> {
        Ring::new(k.clone(), self.m)
    }

    /// dim R_j.
    pub fn complement_dim(&self, j: i64) -> i64 {
        if j < 0 {
            0
        } else {
            binomial(self.m as i64 - 1 + j, j)
        }
    }

    /// Splits a monomial of the big ring into its L-part and its R-part.
    pub fn split_mono(&self, mono: &Mono) -> (Mono, Mono) {
        let e = mono.exponents(self.n + self.m + 1);
        (Mono::from_exponents(&e[..=self.n]), Mono::from_exponents(&e[self.n + 1..]))
    }

    /// f = Σ_μ a_μ(x) y^μ, keyed by the R-monomial μ.
    pub fn decompose<K: Field>(&self, k: &K, f: &Poly<K::Elem>) -> BTreeMap<Mono, Poly<K::Elem>> {
        let small = self.small(k);
        let mut parts: BTreeMap<Mono, Vec<(Mono, K::Elem)>> = BTreeMap::new();
        for (mono, c) in f.terms() {
            let (x, y) = self.split_mono(mono);
            parts.entry(y).or_default().push((x, *c));
        }
        parts.into_iter().map(|(y, t)| (y, small.from_terms(t))).collect()
    }

    /// The presentation restricted to L: every x_{n+j} set to zero.
    pub fn restrict_to_l<K: Field>(&self, k: &K, phi: &GradedMatrix<K::Elem>) -> Result<GradedMatrix<K::Elem>> {
        let small = self.small(k);
        let ops = MatOps::new(&small);
        let big = self.big(k);
        let rows: Vec<Vec<Poly<K::Elem>>> = MatOps::new(&big)
            .entries(phi)
            .iter()
            .map(|row| row.iter().map(|f| self.decompose(k, f).remove(&Mono::one()).unwrap_or_else(Poly::zero)).collect())
            .collect();
        if phi.ncols() == 0 {
            return Ok(GradedMatrix::zero(phi.source.clone(), phi.target.clone()));
        }
        ops.from_entries(phi.source.clone(), phi.target.clone(), &rows)
    }
}

/// O_{L_i} ≅ ⊕_{j ≤ i} O_L(−j) ⊗ R_j as (twist −j, dim R_j).
pub fn neighborhood_decompose(a: &AmbientSplit, i: usize) -> Vec<(i64, i64)> {
    (0..=i as i64).map(|j| (-j, a.complement_dim(j))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompositions() {
        let a = AmbientSplit::new(2, 1).unwrap();
        assert_eq!(neighborhood_decompose(&a, 2), vec![(0, 1), (-1, 1), (-2, 1)]);
        let a = AmbientSplit::new(2, 3).unwrap();
        assert_eq!(neighborhood_decompose(&a, 1), vec![(0, 1), (-1, 3)]);
        assert_eq!(neighborhood_decompose(&a, 0), vec![(0, 1)]);
        assert!(AmbientSplit::new(1, 1).is_err());
    }
}
