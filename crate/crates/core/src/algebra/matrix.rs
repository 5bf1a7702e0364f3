//! Homogeneous maps between graded free modules, stored column-wise.

use super::field::Field;
use super::module::{GradedFreeModule, ModuleOrder, VTerm, VecOps, Vector};
use super::monomial::Mono;
use super::ring::{Poly, Ring};
use crate::error::{Error, Result};

/// Column c is the image of source generator c, an element of `target`.
/// Entry (r, c) has degree source.twists[c] − target.twists[r].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMatrix<E> {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub cols: Vec<Vector<E>>,
}

impl<E: Copy> GradedMatrix<E> {
    pub fn zero(source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let cols = vec![Vector::zero(); source.rank()];
        GradedMatrix { source, target, cols }
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// Positions (row, col) of nonzero constant entries.
    pub fn constant_entries(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for (c, col) in self.cols.iter().enumerate() {
            for t in &col.terms {
                if t.mono.degree() == 0 {
                    out.push((t.comp as usize, c));
                }
            }
        }
        out
    }
}

/// Matrix operations bound to a ring; columns are kept sorted in the
/// ring's term-over-position order.
pub struct MatOps<'a, K: Field> {
    pub ring: &'a Ring<K>,
    order: ModuleOrder,
}

impl<'a, K: Field> MatOps<'a, K> {
    pub fn new(ring: &'a Ring<K>) -> Self {
        MatOps { ring, order: ModuleOrder::top(ring.order) }
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn vops(&self) -> VecOps<'_, K> {
        VecOps::new(&self.ring.field, &self.order)
    }

    /// entries[r][c]
    pub fn from_entries(
        &self,
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: &[Vec<Poly<K::Elem>>],
    ) -> Result<GradedMatrix<K::Elem>> {
        if entries.len() != target.rank() || entries.iter().any(|row| row.len() != source.rank()) {
            return Err(Error::Malformed(format!(
                "matrix shape does not match {}x{}",
                target.rank(),
                source.rank()
            )));
        }
        let ops = self.vops();
        let mut cols = Vec::with_capacity(source.rank());
        for c in 0..source.rank() {
            let mut terms = vec![];
            for (r, row) in entries.iter().enumerate() {
                self.ring.check(&row[c])?;
                for (m, coef) in row[c].terms() {
                    terms.push(VTerm { comp: r as u32, mono: *m, coef: *coef });
                }
            }
            cols.push(ops.normalize(terms));
        }
        Ok(GradedMatrix { source, target, cols })
    }

    pub fn from_cols(
        &self,
        source: GradedFreeModule,
        target: GradedFreeModule,
        cols: Vec<Vector<K::Elem>>,
    ) -> GradedMatrix<K::Elem> {
        let ops = self.vops();
        let cols = cols.iter().map(|c| ops.resort(c)).collect();
        GradedMatrix { source, target, cols }
    }

    pub fn entry(&self, m: &GradedMatrix<K::Elem>, r: usize, c: usize) -> Poly<K::Elem> {
        self.ring.from_terms(m.cols[c].component_terms(r as u32))
    }

    pub fn entries(&self, m: &GradedMatrix<K::Elem>) -> Vec<Vec<Poly<K::Elem>>> {
        let mut out = vec![vec![Poly::zero(); m.ncols()]; m.nrows()];
        for (c, col) in m.cols.iter().enumerate() {
            let mut per_row: Vec<Vec<(Mono, K::Elem)>> = vec![vec![]; m.nrows()];
            for t in &col.terms {
                per_row[t.comp as usize].push((t.mono, t.coef));
            }
            for (r, terms) in per_row.into_iter().enumerate() {
                if !terms.is_empty() {
                    out[r][c] = self.ring.from_terms(terms);
                }
            }
        }
        out
    }

    pub fn identity(&self, f: &GradedFreeModule) -> GradedMatrix<K::Elem> {
        let one = self.ring.field.one();
        let cols = (0..f.rank())
            .map(|i| Vector { terms: vec![VTerm { comp: i as u32, mono: Mono::one(), coef: one }] })
            .collect();
        GradedMatrix { source: f.clone(), target: f.clone(), cols }
    }

    /// a·v for v an element of a's source.
    pub fn apply(&self, a: &GradedMatrix<K::Elem>, v: &Vector<K::Elem>) -> Vector<K::Elem> {
        let ops = self.vops();
        let mut acc = Vector::zero();
        for t in &v.terms {
            acc = ops.add_mul(&acc, &a.cols[t.comp as usize], &t.mono, t.coef);
        }
        acc
    }

    /// a∘b
    pub fn compose(
        &self,
        a: &GradedMatrix<K::Elem>,
        b: &GradedMatrix<K::Elem>,
    ) -> Result<GradedMatrix<K::Elem>> {
        if b.target != a.source {
            return Err(Error::Malformed("composition of incompatible graded maps".into()));
        }
        let cols = b.cols.iter().map(|c| self.apply(a, c)).collect();
        Ok(GradedMatrix { source: b.source.clone(), target: a.target.clone(), cols })
    }

    /// Hom(−, S) of the map: target and source swap and the grading flips.
    pub fn transpose(&self, m: &GradedMatrix<K::Elem>) -> GradedMatrix<K::Elem> {
        let mut terms: Vec<Vec<VTerm<K::Elem>>> = vec![vec![]; m.nrows()];
        for (c, col) in m.cols.iter().enumerate() {
            for t in &col.terms {
                terms[t.comp as usize].push(VTerm { comp: c as u32, mono: t.mono, coef: t.coef });
            }
        }
        let ops = self.vops();
        GradedMatrix {
            source: m.target.dual(),
            target: m.source.dual(),
            cols: terms.into_iter().map(|t| ops.normalize(t)).collect(),
        }
    }

    /// [a | b] with a common target.
    pub fn hconcat(
        &self,
        a: &GradedMatrix<K::Elem>,
        b: &GradedMatrix<K::Elem>,
    ) -> Result<GradedMatrix<K::Elem>> {
        if a.target != b.target {
            return Err(Error::Malformed("hconcat of maps with different targets".into()));
        }
        let mut cols = a.cols.clone();
        cols.extend(b.cols.iter().cloned());
        Ok(GradedMatrix { source: a.source.direct_sum(&b.source), target: a.target.clone(), cols })
    }

    pub fn block_diag(&self, a: &GradedMatrix<K::Elem>, b: &GradedMatrix<K::Elem>) -> GradedMatrix<K::Elem> {
        let off = a.nrows() as u32;
        let ops = self.vops();
        let mut cols = a.cols.clone();
        for c in &b.cols {
            cols.push(ops.remap(c, |r| Some(r + off)));
        }
        GradedMatrix {
            source: a.source.direct_sum(&b.source),
            target: a.target.direct_sum(&b.target),
            cols,
        }
    }

    pub fn select_cols(&self, m: &GradedMatrix<K::Elem>, idx: &[usize]) -> GradedMatrix<K::Elem> {
        GradedMatrix {
            source: GradedFreeModule::new(idx.iter().map(|&i| m.source.twists[i]).collect()),
            target: m.target.clone(),
            cols: idx.iter().map(|&i| m.cols[i].clone()).collect(),
        }
    }

    /// Keeps only the listed rows (relabelled in order); other rows must be zero
    /// or are dropped.
    pub fn select_rows(&self, m: &GradedMatrix<K::Elem>, idx: &[usize]) -> GradedMatrix<K::Elem> {
        let mut map = vec![None; m.nrows()];
        for (new, &old) in idx.iter().enumerate() {
            map[old] = Some(new as u32);
        }
        let ops = self.vops();
        GradedMatrix {
            source: m.source.clone(),
            target: GradedFreeModule::new(idx.iter().map(|&i| m.target.twists[i]).collect()),
            cols: m.cols.iter().map(|c| ops.remap(c, |r| map[r as usize])).collect(),
        }
    }

    /// Multiplies every entry by a homogeneous polynomial of degree e,
    /// shifting the source twists by e.
    pub fn scale_poly(&self, m: &GradedMatrix<K::Elem>, p: &Poly<K::Elem>) -> GradedMatrix<K::Elem> {
        let e = p.degree().unwrap_or(0) as i64;
        let ops = self.vops();
        GradedMatrix {
            source: m.source.shift(e),
            target: m.target.clone(),
            cols: m.cols.iter().map(|c| ops.mul_poly(self.ring, c, p)).collect(),
        }
    }

    /// Homogeneity invariant; Err on entries outside the ring.
    pub fn validate_graded(&self, m: &GradedMatrix<K::Elem>) -> Result<bool> {
        if m.cols.len() != m.source.rank() {
            return Err(Error::Malformed("column count differs from source rank".into()));
        }
        for (c, col) in m.cols.iter().enumerate() {
            for t in &col.terms {
                if t.comp as usize >= m.target.rank() {
                    return Err(Error::Malformed(format!("row index {} out of range", t.comp)));
                }
                if !t.mono.within(self.ring.nvars) {
                    return Err(Error::Malformed(format!(
                        "entry uses a variable beyond the {} ring variables",
                        self.ring.nvars
                    )));
                }
                let want = m.source.twists[c] - m.target.twists[t.comp as usize];
                if t.mono.degree() as i64 != want {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn require_graded(&self, m: &GradedMatrix<K::Elem>) -> Result<()> {
        if self.validate_graded(m)? {
            Ok(())
        } else {
            Err(Error::Malformed("matrix entry is not homogeneous of the required degree".into()))
        }
    }
}

/// Copies a matrix into another coefficient field / ring.
pub fn map_matrix<K: Field, K2: Field>(
    m: &GradedMatrix<K::Elem>,
    target: &Ring<K2>,
    f: impl Fn(K::Elem) -> K2::Elem,
) -> GradedMatrix<K2::Elem> {
    let ops = MatOps::new(target);
    let vops = ops.vops();
    let cols = m
        .cols
        .iter()
        .map(|c| {
            vops.normalize(
                c.terms.iter().map(|t| VTerm { comp: t.comp, mono: t.mono, coef: f(t.coef) }).collect(),
            )
        })
        .collect();
    GradedMatrix { source: m.source.clone(), target: m.target.clone(), cols }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;

    #[test]
    fn validate_examples() {
        let r = Ring::new(PrimeField::default(), 2);
        let ops = MatOps::new(&r);
        let x0 = r.var(0);
        let m = ops
            .from_entries(GradedFreeModule::new(vec![1]), GradedFreeModule::new(vec![0]), &[vec![x0.clone()]])
            .unwrap();
        assert!(ops.validate_graded(&m).unwrap());
        let bad = r.add(&x0, &r.mul(&r.var(1), &r.var(1)));
        let m = ops
            .from_entries(GradedFreeModule::new(vec![1]), GradedFreeModule::new(vec![0]), &[vec![bad]])
            .unwrap();
        assert!(!ops.validate_graded(&m).unwrap());
        let z = GradedMatrix::<u32>::zero(GradedFreeModule::new(vec![3, 7]), GradedFreeModule::new(vec![-2]));
        assert!(ops.validate_graded(&z).unwrap());
    }

    #[test]
    fn transpose_twice_is_identity() {
        let r = Ring::new(PrimeField::default(), 3);
        let ops = MatOps::new(&r);
        let m = ops
            .from_entries(
                GradedFreeModule::new(vec![1, 2]),
                GradedFreeModule::new(vec![0]),
                &[vec![r.var(0), r.mul(&r.var(1), &r.var(2))]],
            )
            .unwrap();
        let t = ops.transpose(&m);
        assert!(ops.validate_graded(&t).unwrap());
        assert_eq!(ops.transpose(&t), m);
    }
}
