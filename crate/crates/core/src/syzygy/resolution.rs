//! Syzygies, minimal presentations and minimal free resolutions.

use crate::algebra::field::Field;
use crate::algebra::linalg::{is_zero_mat, matmul, rank};
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::module::{GradedFreeModule, ModuleOrder, VTerm, VecOps, Vector};
use crate::algebra::monomial::Mono;
use crate::algebra::ring::Ring;
use crate::algebra::slice::{slice_matrix, SliceBasis};
use crate::error::Result;

use super::groebner::{groebner, GroebnerBasis};
use super::hilbert::{monomial_numerator, HilbertSeries, LaurentPoly};

/// Gröbner basis of the column span of m in its target.
pub fn column_gb<K: Field>(ring: &Ring<K>, m: &GradedMatrix<K::Elem>) -> Result<GroebnerBasis<K::Elem>> {
    groebner(&ring.field, &m.target, &ModuleOrder::top(ring.order), &m.cols)
}

/// Hilbert series of coker(m).
pub fn coker_hilbert<K: Field>(ring: &Ring<K>, m: &GradedMatrix<K::Elem>) -> Result<HilbertSeries> {
    let gb = column_gb(ring, m)?;
    Ok(gb_quotient_hilbert(ring.nvars, &gb))
}

/// Hilbert series of F/U from a Gröbner basis of U ⊂ F.
pub fn gb_quotient_hilbert<E: Copy + Eq>(nvars: usize, gb: &GroebnerBasis<E>) -> HilbertSeries {
    let mut num = LaurentPoly::zero();
    for (c, monos) in gb.lead_monomials().iter().enumerate() {
        num = num.add(&monomial_numerator(monos).shift(gb.module.twists[c]));
    }
    HilbertSeries::new(num, nvars)
}

/// Generators of ker(m), as a map into m.source (not necessarily minimal).
pub fn syzygies<K: Field>(ring: &Ring<K>, m: &GradedMatrix<K::Elem>) -> Result<GradedMatrix<K::Elem>> {
    let r = m.nrows() as u32;
    let k = m.ncols();
    let aug = m.target.direct_sum(&m.source);
    let mut blocks = vec![0u32; r as usize];
    blocks.extend(std::iter::repeat(1).take(k));
    let order = ModuleOrder::with_blocks(ring.order, blocks);
    let ops = VecOps::new(&ring.field, &order);
    let one = ring.field.one();
    let gens: Vec<Vector<K::Elem>> = m
        .cols
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut terms = c.terms.clone();
            terms.push(VTerm { comp: r + i as u32, mono: Mono::one(), coef: one });
            ops.normalize(terms)
        })
        .collect();
    let gb = groebner(&ring.field, &aug, &order, &gens)?;
    let mops = MatOps::new(ring);
    let vops = mops.vops();
    let mut cols = vec![];
    let mut twists = vec![];
    for (i, e) in gb.elems.iter().enumerate() {
        if gb.lead_comp(i) >= r {
            let v = vops.remap(e, |c| if c >= r { Some(c - r) } else { None });
            twists.push(e.degree(&aug).unwrap());
            cols.push(v);
        }
    }
    Ok(GradedMatrix { source: GradedFreeModule::new(twists), target: m.source.clone(), cols })
}

/// Keeps a minimal generating subset of the columns.
pub fn minimal_columns<K: Field>(ring: &Ring<K>, m: &GradedMatrix<K::Elem>) -> Result<GradedMatrix<K::Elem>> {
    let gb = column_gb(ring, m)?;
    Ok(MatOps::new(ring).select_cols(m, &gb.minimal_inputs))
}

/// Removes unit entries by Gaussian elimination; the cokernel is unchanged
/// up to isomorphism. Returns the pruned matrix and the surviving target rows.
pub fn prune_constants<K: Field>(
    ring: &Ring<K>,
    m: &GradedMatrix<K::Elem>,
) -> (GradedMatrix<K::Elem>, Vec<usize>) {
    let k = &ring.field;
    let mops = MatOps::new(ring);
    let ops = mops.vops();
    let mut m = m.clone();
    let mut rows: Vec<usize> = (0..m.nrows()).collect();
    loop {
        let Some((r, c)) = m.constant_entries().into_iter().min_by_key(|&(r, c)| (c, r)) else { break };
        let pivot_col = m.cols[c].clone();
        let u = pivot_col
            .terms
            .iter()
            .find(|t| t.comp as usize == r && t.mono.degree() == 0)
            .unwrap()
            .coef;
        let uinv = k.inv(u);
        for j in 0..m.ncols() {
            if j == c {
                continue;
            }
            let hits: Vec<VTerm<K::Elem>> =
                m.cols[j].terms.iter().filter(|t| t.comp as usize == r).copied().collect();
            let mut col = m.cols[j].clone();
            for t in hits {
                col = ops.add_mul(&col, &pivot_col, &t.mono, k.neg(k.mul(t.coef, uinv)));
            }
            m.cols[j] = col;
        }
        let keep_rows: Vec<usize> = (0..m.nrows()).filter(|&i| i != r).collect();
        let keep_cols: Vec<usize> = (0..m.ncols()).filter(|&j| j != c).collect();
        m = mops.select_rows(&mops.select_cols(&m, &keep_cols), &keep_rows);
        rows.remove(r);
    }
    (m, rows)
}

/// Minimal presentation of coker(m): no unit entries, minimal relations.
pub fn minimal_presentation<K: Field>(ring: &Ring<K>, m: &GradedMatrix<K::Elem>) -> Result<GradedMatrix<K::Elem>> {
    MatOps::new(ring).require_graded(m)?;
    let (p, _) = prune_constants(ring, m);
    minimal_columns(ring, &p)
}

/// F_0 ← F_1 ← F_2 ← …, with maps[j] = d_{j+1}: F_{j+1} → F_j.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeResolution<E> {
    pub modules: Vec<GradedFreeModule>,
    pub maps: Vec<GradedMatrix<E>>,
    pub minimal: bool,
}

impl<E: Copy> FreeResolution<E> {
    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn module(&self, j: usize) -> GradedFreeModule {
        self.modules.get(j).cloned().unwrap_or_default()
    }

    pub fn betti(&self) -> super::betti::BettiTable {
        super::betti::BettiTable::from_modules(&self.modules)
    }

    /// Hilbert series Σ (−1)^j Σ t^twist of the resolved module.
    pub fn hilbert(&self, nvars: usize) -> HilbertSeries {
        let mut num = LaurentPoly::zero();
        for (j, f) in self.modules.iter().enumerate() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            for &t in &f.twists {
                num = num.add(&LaurentPoly::monomial(t, sign));
            }
        }
        HilbertSeries::new(num, nvars)
    }
}

/// Minimal free resolution of coker(presentation).
pub fn free_resolution<K: Field>(ring: &Ring<K>, presentation: &GradedMatrix<K::Elem>) -> Result<FreeResolution<K::Elem>> {
    free_resolution_upto(ring, presentation, usize::MAX)
}

/// As [`free_resolution`], stopping after `max_maps` differentials.
pub fn free_resolution_upto<K: Field>(
    ring: &Ring<K>,
    presentation: &GradedMatrix<K::Elem>,
    max_maps: usize,
) -> Result<FreeResolution<K::Elem>> {
    let d1 = minimal_presentation(ring, presentation)?;
    let mut modules = vec![d1.target.clone()];
    let mut maps = vec![];
    if d1.ncols() > 0 && max_maps > 0 {
        modules.push(d1.source.clone());
        maps.push(d1);
        while maps.len() < max_maps {
            let z = syzygies(ring, maps.last().unwrap())?;
            if z.ncols() == 0 {
                break;
            }
            let z = minimal_columns(ring, &z)?;
            debug_assert!(z.constant_entries().is_empty());
            modules.push(z.source.clone());
            maps.push(z);
        }
    }
    Ok(FreeResolution { modules, maps, minimal: true })
}

/// Slice-rank certificate: d_j∘d_{j+1} = 0 and rank d_j + rank d_{j+1} = dim F_j
/// (j ≥ 1) on every degree in [lo, hi].
pub fn certify_exact<K: Field>(ring: &Ring<K>, res: &FreeResolution<K::Elem>, lo: i64, hi: i64) -> bool {
    let k = &ring.field;
    for d in lo..=hi {
        let slices: Vec<_> = res.maps.iter().map(|m| slice_matrix(k, ring.nvars, m, d)).collect();
        for j in 0..slices.len().saturating_sub(1) {
            if slices[j].cols > 0 && slices[j + 1].cols > 0 && !is_zero_mat(k, &matmul(k, &slices[j], &slices[j + 1])) {
                return false;
            }
        }
        for j in 1..res.modules.len() {
            let dim = SliceBasis::new(ring.nvars, &res.modules[j], d).len();
            let r_in = slices.get(j).map(|s| rank(k, s)).unwrap_or(0);
            let r_out = rank(k, &slices[j - 1]);
            if r_in + r_out != dim {
                return false;
            }
        }
    }
    true
}

/// Default certification window: min twist .. max twist + nvars.
pub fn certification_window<E: Copy>(res: &FreeResolution<E>, nvars: usize) -> (i64, i64) {
    let all: Vec<i64> = res.modules.iter().flat_map(|m| m.twists.iter().copied()).collect();
    match (all.iter().min(), all.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi + nvars as i64),
        _ => (0, 0),
    }
}
