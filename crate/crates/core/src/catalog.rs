//! Named bundle presentations: line-bundle sums, tangent and cotangent
//! bundles, the null correlation bundle on P^3 and endomorphism bundles.
//!
//! Names are joined by `+` for direct sums:
//! `O:a`, `sum:a,b,...`, `tangent`, `cotangent`, `nullcorr`, `end:<name>`.

use rand::Rng;

use crate::algebra::field::Field;
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::module::GradedFreeModule;
use crate::algebra::monomial::{monomials_of_degree, Mono};
use crate::algebra::ring::{Poly, Ring};
use crate::cohomology::hom::{hom_module, homology};
use crate::error::{Error, Result};
use crate::syzygy::resolution::minimal_presentation;

/// Names listed by the `catalog` command.
pub const ENTRIES: &[(&str, &str)] = &[
    ("O:a", "line bundle O(a)"),
    ("sum:a,b,...", "direct sum of line bundles"),
    ("tangent", "tangent bundle, from the Euler sequence"),
    ("cotangent", "cotangent bundle, from the Koszul complex"),
    ("nullcorr", "null correlation bundle on P^3"),
    ("end:<name>", "endomorphism bundle of an entry"),
];

/// Presentation of ⊕ O(a_j).
pub fn split<K: Field>(twists: &[i64]) -> GradedMatrix<K::Elem> {
    GradedMatrix::zero(GradedFreeModule::default(), GradedFreeModule::new(twists.iter().map(|a| -a).collect()))
}

/// coker(S → S(1)^{n+1}, 1 ↦ (x_0, …, x_n)).
pub fn tangent<K: Field>(ring: &Ring<K>) -> GradedMatrix<K::Elem> {
    let nv = ring.nvars;
    let rows: Vec<Vec<Poly<K::Elem>>> = (0..nv).map(|i| vec![ring.var(i)]).collect();
    MatOps::new(ring)
        .from_entries(GradedFreeModule::new(vec![0]), GradedFreeModule::new(vec![-1; nv]), &rows)
        .expect("shape is consistent")
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out.sort();
    out
}

/// Koszul differential Λ^k → Λ^{k−1} on the variables, degrees k → k−1.
pub fn koszul<K: Field>(ring: &Ring<K>, k: usize) -> GradedMatrix<K::Elem> {
    let nv = ring.nvars;
    let src = subsets(nv, k);
    let tgt = subsets(nv, k - 1);
    let f = &ring.field;
    let mut rows = vec![vec![Poly::zero(); src.len()]; tgt.len()];
    for (c, s) in src.iter().enumerate() {
        for (pos, &v) in s.iter().enumerate() {
            let mut rest = s.clone();
            rest.remove(pos);
            let r = tgt.iter().position(|t| *t == rest).unwrap();
            let sign = if pos % 2 == 0 { f.one() } else { f.neg(f.one()) };
            rows[r][c] = ring.monomial(Mono::var(v), sign);
        }
    }
    MatOps::new(ring)
        .from_entries(
            GradedFreeModule::new(vec![k as i64; src.len()]),
            GradedFreeModule::new(vec![k as i64 - 1; tgt.len()]),
            &rows,
        )
        .expect("shape is consistent")
}

/// Γ_*(Ω) = coker(Λ^3 → Λ^2) of the Koszul complex.
pub fn cotangent<K: Field>(ring: &Ring<K>) -> GradedMatrix<K::Elem> {
    if ring.nvars < 3 {
        // P^1: Ω = O(−2)
        return split::<K>(&[-2]);
    }
    koszul(ring, 3)
}

/// Homology of O(−1) → O^4 → O(1) given by (x0,x1,x2,x3) and (−x1,x0,−x3,x2).
pub fn null_correlation<K: Field>(ring: &Ring<K>) -> Result<GradedMatrix<K::Elem>> {
    if ring.nvars != 4 {
        return Err(Error::Domain("null correlation bundle lives on P^3".into()));
    }
    let ops = MatOps::new(ring);
    let x = |i| ring.var(i);
    let a = ops.from_entries(
        GradedFreeModule::new(vec![1]),
        GradedFreeModule::new(vec![0; 4]),
        &[vec![x(0)], vec![x(1)], vec![x(2)], vec![x(3)]],
    )?;
    let b = ops.from_entries(
        GradedFreeModule::new(vec![0; 4]),
        GradedFreeModule::new(vec![-1]),
        &[vec![ring.neg(&x(1)), x(0), ring.neg(&x(3)), x(2)]],
    )?;
    Ok(homology(ring, &a, &b)?.presentation)
}

fn direct_sum<K: Field>(ring: &Ring<K>, parts: &[GradedMatrix<K::Elem>]) -> GradedMatrix<K::Elem> {
    let ops = MatOps::new(ring);
    let mut acc = GradedMatrix::zero(GradedFreeModule::default(), GradedFreeModule::default());
    for p in parts {
        acc = ops.block_diag(&acc, p);
    }
    acc
}

fn parse_twists(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Malformed(format!("bad twist `{t}` in catalog name"))))
        .collect()
}

fn entry<K: Field>(ring: &Ring<K>, name: &str) -> Result<GradedMatrix<K::Elem>> {
    if let Some(inner) = name.strip_prefix("end:") {
        let m = build(ring, inner)?;
        return Ok(hom_module(ring, &m, &m)?.module.presentation);
    }
    if let Some(t) = name.strip_prefix("O:") {
        let a = parse_twists(t)?;
        if a.len() != 1 {
            return Err(Error::Malformed(format!("`{name}` takes one twist")));
        }
        return Ok(split::<K>(&a));
    }
    if let Some(t) = name.strip_prefix("sum:") {
        return Ok(split::<K>(&parse_twists(t)?));
    }
    match name {
        "tangent" => Ok(tangent(ring)),
        "cotangent" => Ok(cotangent(ring)),
        "nullcorr" => null_correlation(ring),
        _ => Err(Error::Malformed(format!("unknown catalog entry `{name}`"))),
    }
}

/// Presentation for a catalog name on P^{nvars−1}.
pub fn build<K: Field>(ring: &Ring<K>, name: &str) -> Result<GradedMatrix<K::Elem>> {
    if name.starts_with("end:") {
        return entry(ring, name);
    }
    let parts = name.split('+').map(|p| entry(ring, p.trim())).collect::<Result<Vec<_>>>()?;
    Ok(direct_sum(ring, &parts))
}

/// An isomorphic, non-minimal presentation: each extra generator g is tied
/// to an existing one by a relation g − f·e_j with f a random form.
pub fn disguise<K: Field, R: Rng + ?Sized>(
    ring: &Ring<K>,
    m: &GradedMatrix<K::Elem>,
    extra: usize,
    rng: &mut R,
) -> GradedMatrix<K::Elem> {
    let k = &ring.field;
    let r0 = m.nrows();
    if r0 == 0 {
        return m.clone();
    }
    let ops = MatOps::new(ring);
    let mut target = m.target.clone();
    let mut source = m.source.clone();
    let mut cols = m.cols.clone();
    for e in 0..extra {
        let j = rng.gen_range(0..r0);
        let lift = rng.gen_range(0..=1i64);
        let deg = m.target.twists[j] + lift;
        let mut f = Poly::zero();
        for mono in monomials_of_degree(ring.nvars, lift) {
            f = ring.add(&f, &ring.monomial(mono, k.random(rng)));
        }
        let g = (r0 + e) as u32;
        target.twists.push(deg);
        source.twists.push(deg);
        let mut col = ops.vops().unit(g, &ring.constant(k.one()));
        col = ops.vops().sub(&col, &ops.vops().unit(j as u32, &f));
        cols.push(col);
    }
    GradedMatrix { source, target, cols }
}

/// Minimal presentation of a catalog name.
pub fn build_minimal<K: Field>(ring: &Ring<K>, name: &str) -> Result<GradedMatrix<K::Elem>> {
    minimal_presentation(ring, &build(ring, name)?)
}
