//! Saturation with respect to the irrelevant ideal by iterated colons.

use crate::algebra::field::Field;
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::module::{GradedFreeModule, VTerm, Vector};
use crate::algebra::monomial::Mono;
use crate::algebra::ring::Ring;
use crate::error::Result;
use crate::syzygy::resolution::{column_gb, minimal_columns, minimal_presentation, syzygies};

/// Generators of U : (x_0, …, x_n) for U = im(gens) ⊂ gens.target.
pub fn colon_irrelevant<K: Field>(ring: &Ring<K>, gens: &GradedMatrix<K::Elem>) -> Result<GradedMatrix<K::Elem>> {
    let ops = MatOps::new(ring);
    let f0 = &gens.target;
    let r = f0.rank();
    let nv = ring.nvars;
    let one = ring.field.one();
    // [ (x_0 e, …, x_n e) | diag(gens, …, gens) ] into F0^{nvars}
    let mut big_target = GradedFreeModule::default();
    for _ in 0..nv {
        big_target = big_target.direct_sum(f0);
    }
    let mut src_tw: Vec<i64> = f0.twists.iter().map(|a| a + 1).collect();
    let mut cols = vec![];
    for j in 0..r {
        let terms = (0..nv)
            .map(|i| VTerm { comp: (i * r + j) as u32, mono: Mono::var(i), coef: one })
            .collect();
        cols.push(ops.vops().normalize(terms));
    }
    for i in 0..nv {
        for c in &gens.cols {
            cols.push(ops.vops().remap(c, |k| Some(k + (i * r) as u32)));
        }
        src_tw.extend(gens.source.twists.iter().copied());
    }
    let big = GradedMatrix { source: GradedFreeModule::new(src_tw), target: big_target, cols };
    let z = syzygies(ring, &big)?;
    let mut out = vec![];
    let mut tw = vec![];
    for c in &z.cols {
        let v = ops.vops().remap(c, |k| if (k as usize) < r { Some(k) } else { None });
        if let Some(d) = v.degree(f0) {
            tw.push(d);
            out.push(v);
        }
    }
    Ok(GradedMatrix { source: GradedFreeModule::new(tw), target: f0.clone(), cols: out })
}

/// Minimal generators of the saturation U : m^∞ of U = im(gens).
pub fn saturate_submodule<K: Field>(ring: &Ring<K>, gens: &GradedMatrix<K::Elem>) -> Result<GradedMatrix<K::Elem>> {
    MatOps::new(ring).require_graded(gens)?;
    let mut cur = minimal_columns(ring, gens)?;
    loop {
        let next = colon_irrelevant(ring, &cur)?;
        let gb = column_gb(ring, &cur)?;
        if next.cols.iter().all(|v| gb.contains(&ring.field, v)) {
            return Ok(cur);
        }
        let ops = MatOps::new(ring);
        cur = minimal_columns(ring, &ops.hconcat(&cur, &next)?)?;
    }
}

/// Minimal presentation of M / H^0_m(M) for M = coker(m).
pub fn saturate<K: Field>(ring: &Ring<K>, m: &GradedMatrix<K::Elem>) -> Result<GradedMatrix<K::Elem>> {
    let rel = saturate_submodule(ring, m)?;
    minimal_presentation(ring, &rel)
}

/// Whether coker(m) has no nonzero submodule of finite length.
pub fn is_saturated<K: Field>(ring: &Ring<K>, m: &GradedMatrix<K::Elem>) -> Result<bool> {
    let next = colon_irrelevant(ring, m)?;
    let gb = column_gb(ring, m)?;
    Ok(next.cols.iter().all(|v: &Vector<K::Elem>| gb.contains(&ring.field, v)))
}
