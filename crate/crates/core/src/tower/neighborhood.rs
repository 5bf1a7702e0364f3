//! Modules over k[x_0..x_n] for F restricted to the neighborhoods L_i of L,
//! cut down by an ideal J of R.
//!
//! With M = coker(φ) the module of F, the restriction to L_i modulo J is
//! M ⊗ S/(I^{i+1} + JS), where I = (x_{n+1}, …, x_{n+m}). As a module over the
//! small ring it has one generator (g, b) for each generator g of M and each
//! standard monomial b of R/J of degree ≤ i, in degree deg g + deg b.

use std::collections::BTreeMap;

use crate::algebra::field::Field;
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::module::{GradedFreeModule, ModuleOrder, VTerm, VecOps};
use crate::algebra::monomial::Mono;
use crate::algebra::ring::{Poly, Ring};
use crate::error::{Error, Result};
use crate::syzygy::resolution::{free_resolution, minimal_columns, minimal_presentation};

use super::ambient::AmbientSplit;
use super::ideal::TowerIdeal;
use super::quotient::{Quotient, StdBasis};

/// A term a(x)·y^μ·e_g of a relation of M.
#[derive(Clone, Debug)]
struct Piece<E> {
    gen: usize,
    y: Mono,
    x: Poly<E>,
}

/// The presentation of F split along x/y variables, and F_L over the small ring.
#[derive(Clone, Debug)]
pub struct PresentationAlongL<K: Field> {
    pub ambient: AmbientSplit,
    pub small: Ring<K>,
    pub complement: Ring<K>,
    /// Degrees of the generators of M.
    pub twists: Vec<i64>,
    relations: Vec<Vec<Piece<K::Elem>>>,
    /// coker of φ with the y-variables set to zero.
    pub restricted: GradedMatrix<K::Elem>,
    pub restricted_quotient: Quotient<K::Elem>,
    /// 1 + the top degree carrying H^0_m or H^1_m of the restricted module.
    pub local_cohomology_bound: Option<i64>,
}

impl<K: Field> PresentationAlongL<K> {
    /// φ must be a minimal presentation over k[x_0..x_{n+m}].
    pub fn new(ambient: &AmbientSplit, field: &K, phi: &GradedMatrix<K::Elem>) -> Result<Self> {
        let big = ambient.big(field);
        MatOps::new(&big).require_graded(phi)?;
        let small = ambient.small(field);
        let mut relations = vec![];
        for col in &phi.cols {
            let mut pieces: BTreeMap<(usize, Mono), Vec<(Mono, K::Elem)>> = BTreeMap::new();
            for t in &col.terms {
                let (x, y) = ambient.split_mono(&t.mono);
                pieces.entry((t.comp as usize, y)).or_default().push((x, t.coef));
            }
            let pieces = pieces
                .into_iter()
                .map(|((gen, y), terms)| Piece { gen, y, x: small.from_terms(terms) })
                .collect();
            relations.push(pieces);
        }
        let restricted = ambient.restrict_to_l(field, phi)?;
        let restricted = if restricted.ncols() == 0 { restricted } else { minimal_columns(&small, &restricted)? };
        if !restricted.constant_entries().is_empty() {
            return Err(Error::Malformed("presentation is not minimal".into()));
        }
        let order = ModuleOrder::top(small.order);
        let restricted_quotient =
            Quotient::new(field, small.nvars, &restricted.target, &order, &restricted.cols)?;
        let local_cohomology_bound = local_cohomology_bound(&small, &restricted)?;
        Ok(PresentationAlongL {
            ambient: ambient.clone(),
            small,
            complement: ambient.complement(field),
            twists: phi.target.twists.clone(),
            relations,
            restricted,
            restricted_quotient,
            local_cohomology_bound,
        })
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// 1 + max{e : H^0_m(N)_e ≠ 0 or H^1_m(N)_e ≠ 0}, read off Ext^{n+1}(N, A)
/// and Ext^n(N, A) by local duality; None when both vanish.
pub fn local_cohomology_bound<K: Field>(ring: &Ring<K>, pres: &GradedMatrix<K::Elem>) -> Result<Option<i64>> {
    let n = ring.nvars as i64 - 1;
    let pres = minimal_presentation(ring, pres)?;
    let res = free_resolution(ring, &pres)?;
    let ext = crate::cohomology::bundle::ext_series(ring, &res)?;
    for (j, hs) in ext.iter().enumerate().skip(1) {
        if !hs.is_finite_length() {
            return Err(Error::Domain(format!("restriction to L is not locally free: Ext^{j} has positive-dimensional support")));
        }
    }
    let mut top: Option<i64> = None;
    for j in [n as usize, n as usize + 1] {
        let Some(hs) = ext.get(j) else { continue };
        let Some((lo, _)) = hs.finite_support() else { continue };
        let e = -lo - n - 1;
        top = Some(top.map_or(e, |t| t.max(e)));
    }
    Ok(top.map(|e| e + 1))
}

#[derive(Clone, Debug)]
pub struct NeighborhoodModule<E> {
    pub order: usize,
    /// (generator of M, standard monomial b of R/J) per component.
    pub labels: Vec<(usize, Mono)>,
    /// deg b per component.
    pub blocks: Vec<u32>,
    pub quotient: Quotient<E>,
}

impl<E: Copy + Eq> NeighborhoodModule<E> {
    pub fn build<K: Field<Elem = E>>(along: &PresentationAlongL<K>, ideal: &TowerIdeal<K>, i: usize) -> Result<Self> {
        let k = &along.small.field;
        let r = along.rank();
        let mut labels = vec![];
        let mut blocks = vec![];
        let mut twists = vec![];
        let mut index: BTreeMap<(usize, Mono), u32> = BTreeMap::new();
        for j in 0..=i {
            for b in ideal.standard_monomials(j as i64) {
                for g in 0..r {
                    index.insert((g, b), labels.len() as u32);
                    labels.push((g, b));
                    blocks.push(j as u32);
                    twists.push(along.twists[g] + j as i64);
                }
            }
        }
        let module = GradedFreeModule::new(twists);
        let order = ModuleOrder::with_blocks(along.small.order, blocks.clone());
        let ops = VecOps::new(k, &order);
        let rring = &along.complement;
        let mut rels = vec![];
        for j in 0..=i {
            for b in ideal.standard_monomials(j as i64) {
                for pieces in &along.relations {
                    let mut terms = vec![];
                    for p in pieces {
                        let deg = j as u32 + p.y.degree();
                        if deg as usize > i {
                            continue;
                        }
                        let nf = ideal.normal_form(&rring.monomial(b.mul(&p.y), k.one()));
                        for (bb, c) in nf.terms() {
                            let comp = index[&(p.gen, *bb)];
                            for (xm, xc) in p.x.terms() {
                                terms.push(VTerm { comp, mono: *xm, coef: k.mul(*c, *xc) });
                            }
                        }
                    }
                    let v = ops.normalize(terms);
                    if !v.is_zero() {
                        rels.push(v);
                    }
                }
            }
        }
        let quotient = Quotient::new(k, along.small.nvars, &module, &order, &rels)?;
        Ok(NeighborhoodModule { order: i, labels, blocks, quotient })
    }

    /// Largest deg b present; local cohomology of N sits at most this far
    /// above that of the restricted module.
    pub fn top_block(&self) -> i64 {
        self.blocks.iter().copied().max().unwrap_or(0) as i64
    }

    pub fn component(&self, gen: usize, b: &Mono) -> Option<usize> {
        self.labels.iter().position(|(g, bb)| *g == gen && bb == b)
    }

    /// Positions in `basis` of the elements in block j.
    pub fn block_positions(&self, basis: &StdBasis, j: u32) -> Vec<usize> {
        (0..basis.len()).filter(|&s| self.blocks[basis.elems[s].0] == j).collect()
    }

    /// Positions in `basis` of the elements in blocks ≥ 1, i.e. in I·N.
    pub fn left_positions(&self, basis: &StdBasis) -> Vec<usize> {
        (0..basis.len()).filter(|&s| self.blocks[basis.elems[s].0] >= 1).collect()
    }
}

/// 0 → I·N_i → N_i → F_L → 0 as module data over the small ring.
#[derive(Clone, Debug)]
pub struct SequenceAi<K: Field> {
    pub i: usize,
    pub along: PresentationAlongL<K>,
    pub ideal: TowerIdeal<K>,
    pub middle: NeighborhoodModule<K::Elem>,
}

/// Dimensions (left, middle, right) of one degree of the triple.
pub type SliceDims = (usize, usize, usize);

impl<K: Field> SequenceAi<K> {
    pub fn dims(&self, e: i64) -> SliceDims {
        let mid = self.middle.quotient.basis(e);
        let left = self.middle.left_positions(&mid).len();
        let right = self.along.restricted_quotient.basis(e).len();
        (left, mid.len(), right)
    }

    /// Exactness on degree e: the middle projects onto F_L with kernel the
    /// blocks ≥ 1, and block 0 of the middle is exactly the standard basis of F_L.
    pub fn check_exact(&self, e: i64) -> Result<()> {
        let mid = self.middle.quotient.basis(e);
        let right = self.along.restricted_quotient.basis(e);
        let block0: Vec<(usize, Mono)> =
            self.middle.block_positions(&mid, 0).into_iter().map(|s| mid.elems[s]).collect();
        if block0 != right.elems {
            return Err(Error::Invariant(format!("sequence (A_{}) is not exact in degree {e}", self.i)));
        }
        Ok(())
    }
}

/// The triple for F along L, with J and the order i.
pub fn sequence_ai<K: Field>(along: &PresentationAlongL<K>, ideal: &TowerIdeal<K>, i: usize) -> Result<SequenceAi<K>> {
    ideal.check_slices(i as i64 + 1)?;
    let middle = NeighborhoodModule::build(along, ideal, i)?;
    let seq = SequenceAi { i, along: along.clone(), ideal: ideal.clone(), middle };
    let lo = along.twists.iter().copied().min().unwrap_or(0);
    for e in lo..=lo + i as i64 + 2 {
        seq.check_exact(e)?;
    }
    Ok(seq)
}
