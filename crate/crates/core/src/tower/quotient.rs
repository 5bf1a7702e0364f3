//! Finitely presented modules F/U held through a Gröbner basis of U, and the
//! degree-0 slices of Hom(P_•, F/U) for a free complex P_•.

use std::collections::HashMap;

use crate::algebra::field::Field;
use crate::algebra::linalg::Mat;
use crate::algebra::matrix::GradedMatrix;
use crate::algebra::module::{GradedFreeModule, ModuleOrder, VTerm, VecOps, Vector};
use crate::algebra::monomial::Mono;
use crate::error::Result;
use crate::syzygy::groebner::{groebner, GroebnerBasis};

#[derive(Clone, Debug)]
pub struct Quotient<E> {
    pub gb: GroebnerBasis<E>,
    pub nvars: usize,
}

/// Standard monomials of one degree with a position index.
#[derive(Clone, Debug)]
pub struct StdBasis {
    pub elems: Vec<(usize, Mono)>,
    index: HashMap<(usize, Mono), usize>,
}

impl StdBasis {
    fn new(elems: Vec<(usize, Mono)>) -> Self {
        let index = elems.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        StdBasis { elems, index }
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
}

impl<E: Copy + Eq> Quotient<E> {
    pub fn new<K: Field<Elem = E>>(
        field: &K,
        nvars: usize,
        module: &GradedFreeModule,
        order: &ModuleOrder,
        relations: &[Vector<E>],
    ) -> Result<Self> {
        Ok(Quotient { gb: groebner(field, module, order, relations)?, nvars })
    }

    pub fn module(&self) -> &GradedFreeModule {
        &self.gb.module
    }

    /// The same quotient with every generator degree raised by s.
    pub fn shifted(&self, s: i64) -> Self {
        let mut gb = self.gb.clone();
        gb.module = gb.module.shift(s);
        Quotient { gb, nvars: self.nvars }
    }

    pub fn basis(&self, e: i64) -> StdBasis {
        StdBasis::new(self.gb.standard_monomials(self.nvars, e))
    }

    pub fn normal_form<K: Field<Elem = E>>(&self, field: &K, v: &Vector<E>) -> Vector<E> {
        self.gb.reduce(field, v)
    }

    /// Coordinates of the class of a homogeneous v of degree e.
    pub fn coords<K: Field<Elem = E>>(&self, field: &K, basis: &StdBasis, v: &Vector<E>) -> Vec<E> {
        let r = self.normal_form(field, v);
        let mut out = vec![field.zero(); basis.len()];
        for t in &r.terms {
            let i = basis.position(t.comp as usize, &t.mono).expect("normal form outside the degree slice");
            out[i] = field.add(out[i], t.coef);
        }
        out
    }

    pub fn from_coords<K: Field<Elem = E>>(&self, field: &K, basis: &StdBasis, c: &[E]) -> Vector<E> {
        let ops = VecOps::new(field, &self.gb.order);
        let terms = basis
            .elems
            .iter()
            .zip(c)
            .filter(|(_, x)| !field.is_zero(**x))
            .map(|((comp, mono), x)| VTerm { comp: *comp as u32, mono: *mono, coef: *x })
            .collect();
        ops.normalize(terms)
    }
}

/// Coordinates for Hom(P, T)_0 = ⊕_p T_{deg p}, one block per generator p.
#[derive(Clone, Debug)]
pub struct HomSlice {
    pub bases: Vec<StdBasis>,
    pub offsets: Vec<usize>,
    pub dim: usize,
}

impl HomSlice {
    pub fn new<E: Copy + Eq>(p: &GradedFreeModule, t: &Quotient<E>) -> Self {
        let bases: Vec<StdBasis> = p.twists.iter().map(|&d| t.basis(d)).collect();
        let mut offsets = vec![];
        let mut dim = 0;
        for b in &bases {
            offsets.push(dim);
            dim += b.len();
        }
        HomSlice { bases, offsets, dim }
    }

    /// The image u(p) of generator p under the homomorphism with coordinates u.
    pub fn value<K: Field>(&self, field: &K, t: &Quotient<K::Elem>, u: &[K::Elem], p: usize) -> Vector<K::Elem> {
        let o = self.offsets[p];
        t.from_coords(field, &self.bases[p], &u[o..o + self.bases[p].len()])
    }
}

/// Matrix of u ↦ u∘d from Hom(P_k, T)_0 to Hom(P_{k+1}, T)_0, where
/// d: P_{k+1} → P_k.
pub fn hom_slice_matrix<K: Field>(
    field: &K,
    t: &Quotient<K::Elem>,
    d: &GradedMatrix<K::Elem>,
    from: &HomSlice,
    to: &HomSlice,
) -> Mat<K::Elem> {
    let ops = VecOps::new(field, &t.gb.order);
    let mut out = Mat::new(to.dim, from.dim, field.zero());
    // entries of d grouped by row p: (column q, monomial, coefficient)
    let mut by_row: Vec<Vec<(usize, Mono, K::Elem)>> = vec![vec![]; d.nrows()];
    for (q, col) in d.cols.iter().enumerate() {
        for term in &col.terms {
            by_row[term.comp as usize].push((q, term.mono, term.coef));
        }
    }
    for (p, entries) in by_row.iter().enumerate() {
        for (s, (comp, mono)) in from.bases[p].elems.iter().enumerate() {
            let mut images: Vec<Vec<VTerm<K::Elem>>> = vec![vec![]; d.ncols()];
            for (q, m, c) in entries {
                images[*q].push(VTerm { comp: *comp as u32, mono: mono.mul(m), coef: *c });
            }
            for (q, terms) in images.into_iter().enumerate() {
                if terms.is_empty() {
                    continue;
                }
                let v = ops.normalize(terms);
                let c = t.coords(field, &to.bases[q], &v);
                for (r, x) in c.into_iter().enumerate() {
                    if !field.is_zero(x) {
                        out.set(to.offsets[q] + r, from.offsets[p] + s, x);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;
    use crate::algebra::linalg::rank;
    use crate::algebra::ring::Ring;
    use crate::catalog::tangent;

    #[test]
    fn basis_matches_hilbert_function() {
        let r = Ring::new(PrimeField::default(), 3);
        let t = tangent(&r);
        let q = Quotient::new(&r.field, 3, &t.target, &ModuleOrder::top(r.order), &t.cols).unwrap();
        // Γ_*(T_{P^2}) has Hilbert function 3·C(e+3,2) − C(e+2,2)
        for (e, dim) in [(-1, 3), (0, 8), (1, 15)] {
            assert_eq!(q.basis(e).len(), dim);
        }
        assert_eq!(q.shifted(2).basis(1).len(), 3);
    }

    #[test]
    fn hom_into_free_module() {
        // Hom(coker(x0,x1,x2)ᵀ-presentation, S(1)): u ↦ Σ x_i u_i is injective k^3 → S_1
        let r = Ring::new(PrimeField::default(), 3);
        let k = r.field;
        let d = tangent(&r);
        let free = GradedFreeModule::new(vec![-1]);
        let t = Quotient::new(&k, 3, &free, &ModuleOrder::top(r.order), &[]).unwrap();
        let from = HomSlice::new(&d.target, &t);
        let to = HomSlice::new(&d.source, &t);
        let m = hom_slice_matrix(&k, &t, &d, &from, &to);
        assert_eq!((m.rows, m.cols), (3, 3));
        assert_eq!(rank(&k, &m), 3);
    }
}
