//! Degree-d pieces of graded free modules and of graded maps.

use std::collections::HashMap;

use super::field::Field;
use super::linalg::Mat;
use super::matrix::GradedMatrix;
use super::module::{GradedFreeModule, Vector};
use super::monomial::{monomials_of_degree, Mono};

/// Ordered basis of F_d: generator-major, monomials descending in grevlex.
#[derive(Clone, Debug)]
pub struct SliceBasis {
    pub elems: Vec<(usize, Mono)>,
    index: HashMap<(usize, Mono), usize>,
}

impl SliceBasis {
    pub fn new(nvars: usize, f: &GradedFreeModule, d: i64) -> Self {
        let mut elems = vec![];
        for (j, &t) in f.twists.iter().enumerate() {
            for m in monomials_of_degree(nvars, d - t) {
                elems.push((j, m));
            }
        }
        let index = elems.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        SliceBasis { elems, index }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn position(&self, comp: usize, mono: &Mono) -> Option<usize> {
        self.index.get(&(comp, *mono)).copied()
    }

    /// Coordinates of a homogeneous element of degree d.
    pub fn coords<K: Field>(&self, k: &K, v: &Vector<K::Elem>) -> Vec<K::Elem> {
        let mut out = vec![k.zero(); self.len()];
        for t in &v.terms {
            let i = self
                .position(t.comp as usize, &t.mono)
                .expect("vector is not homogeneous of the slice degree");
            out[i] = k.add(out[i], t.coef);
        }
        out
    }
}

pub fn degree_slice_basis(nvars: usize, f: &GradedFreeModule, d: i64) -> Vec<(usize, Mono)> {
    SliceBasis::new(nvars, f, d).elems
}

/// Field matrix of source_d → target_d in the slice bases.
pub fn slice_matrix<K: Field>(
    k: &K,
    nvars: usize,
    m: &GradedMatrix<K::Elem>,
    d: i64,
) -> Mat<K::Elem> {
    let src = SliceBasis::new(nvars, &m.source, d);
    let tgt = SliceBasis::new(nvars, &m.target, d);
    slice_matrix_with(k, m, &src, &tgt)
}

pub fn slice_matrix_with<K: Field>(
    k: &K,
    m: &GradedMatrix<K::Elem>,
    src: &SliceBasis,
    tgt: &SliceBasis,
) -> Mat<K::Elem> {
    let mut out = Mat::new(tgt.len(), src.len(), k.zero());
    for (c, (j, mono)) in src.elems.iter().enumerate() {
        for t in &m.cols[*j].terms {
            let r = tgt
                .position(t.comp as usize, &t.mono.mul(mono))
                .expect("graded matrix entry of wrong degree");
            let v = k.add(out.get(r, c), t.coef);
            out.set(r, c, v);
        }
    }
    out
}
