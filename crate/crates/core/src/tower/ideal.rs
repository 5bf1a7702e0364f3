//! Homogeneous ideals J ⊂ R = k[x_{n+1}..x_{n+m}] built one degree at a time.

use crate::algebra::field::Field;
use crate::algebra::module::{GradedFreeModule, ModuleOrder, VTerm, Vector};
use crate::algebra::monomial::{monomials_of_degree, Mono};
use crate::algebra::ring::{Poly, Ring};
use crate::error::{Error, Result};
use crate::syzygy::groebner::{groebner, GroebnerBasis};

/// One inductive step: forms of degree i + 1 added to the ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionStep<E> {
    pub i: usize,
    pub s: usize,
    pub forms: Vec<Poly<E>>,
    /// dim Ext^1(E, E(−i−1)).
    pub ext_dim: usize,
    /// Truncation degree of the source used for the Hom slices, if any.
    pub truncation: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct TowerIdeal<K: Field> {
    pub ring: Ring<K>,
    pub generators: Vec<Poly<K::Elem>>,
    pub gb: GroebnerBasis<K::Elem>,
    pub log: Vec<ObstructionStep<K::Elem>>,
}

fn as_vector<E: Copy>(f: &Poly<E>) -> Vector<E> {
    Vector { terms: f.terms().iter().map(|(m, c)| VTerm { comp: 0, mono: *m, coef: *c }).collect() }
}

fn as_poly<K: Field>(ring: &Ring<K>, v: &Vector<K::Elem>) -> Poly<K::Elem> {
    ring.from_terms(v.terms.iter().map(|t| (t.mono, t.coef)).collect())
}

impl<K: Field> TowerIdeal<K> {
    pub fn zero(ring: &Ring<K>) -> Self {
        Self::generated_by(ring, vec![]).expect("the zero ideal is valid")
    }

    /// Rejects inhomogeneous or out-of-ring generators.
    pub fn generated_by(ring: &Ring<K>, generators: Vec<Poly<K::Elem>>) -> Result<Self> {
        for f in &generators {
            ring.check(f)?;
            if !f.is_homogeneous() || f.is_zero() {
                return Err(Error::Malformed("ideal generators must be nonzero homogeneous forms".into()));
            }
        }
        let gens: Vec<Vector<K::Elem>> = generators.iter().map(as_vector).collect();
        let gb = groebner(&ring.field, &GradedFreeModule::new(vec![0]), &ModuleOrder::top(ring.order), &gens)?;
        Ok(TowerIdeal { ring: ring.clone(), generators, gb, log: vec![] })
    }

    /// J + (forms), keeping the log.
    pub fn extend(&self, forms: &[Poly<K::Elem>]) -> Result<Self> {
        let mut g = self.generators.clone();
        g.extend_from_slice(forms);
        let mut out = Self::generated_by(&self.ring, g)?;
        out.log = self.log.clone();
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn normal_form(&self, f: &Poly<K::Elem>) -> Poly<K::Elem> {
        as_poly(&self.ring, &self.gb.reduce(&self.ring.field, &as_vector(f)))
    }

    pub fn contains(&self, f: &Poly<K::Elem>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Monomials of degree j outside the initial ideal, grevlex descending.
    pub fn standard_monomials(&self, j: i64) -> Vec<Mono> {
        monomials_of_degree(self.ring.nvars, j).into_iter().filter(|m| self.gb.is_standard(0, m)).collect()
    }

    /// Basis μ − NF(μ) of J_j over the non-standard monomials μ.
    pub fn slice(&self, j: i64) -> Vec<Poly<K::Elem>> {
        let k = &self.ring.field;
        monomials_of_degree(self.ring.nvars, j)
            .into_iter()
            .filter(|m| !self.gb.is_standard(0, m))
            .map(|m| {
                let x = self.ring.monomial(m, k.one());
                self.ring.sub(&x, &self.normal_form(&x))
            })
            .collect()
    }

    /// R_1 · J_j ⊂ J_{j+1} for j ≤ top, and dim J_j + dim (R/J)_j = dim R_j.
    pub fn check_slices(&self, top: i64) -> Result<()> {
        let k = &self.ring.field;
        for j in 0..=top {
            let slice = self.slice(j);
            let total = monomials_of_degree(self.ring.nvars, j).len();
            if slice.len() + self.standard_monomials(j).len() != total {
                return Err(Error::Malformed(format!("ideal slice {j} has inconsistent dimension")));
            }
            for f in &slice {
                for v in 0..self.ring.nvars {
                    let g = self.ring.mul_term(f, &Mono::var(v), k.one());
                    if !self.contains(&g) {
                        return Err(Error::Malformed(format!("slice {j} is not stable under the variables")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Krull dimension of R/J; the ideal is proper iff this is ≥ 1.
    pub fn quotient_dim(&self) -> i64 {
        crate::syzygy::resolution::gb_quotient_hilbert(self.ring.nvars, &self.gb).krull_dim()
    }
}
