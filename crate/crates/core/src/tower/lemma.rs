//! Multiplication by a linear form h on intermediate cohomology.
//!
//! By local duality, h·: H^p(G(a−1)) → H^p(G(a)) is dual to
//! h·: Ext^{N−p}(M, S)_t → Ext^{N−p}(M, S)_{t+1} with t = −a−N−1, so its rank is
//! read off slices of the dual of the resolution. If every such map is
//! injective, all intermediate cohomology vanishes, because it vanishes for
//! large twists.

use crate::algebra::field::Field;
use crate::algebra::linalg::{matmul, nullspace, rank, Mat};
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::module::{VTerm, Vector};
use crate::algebra::ring::Poly;
use crate::algebra::slice::{slice_matrix, SliceBasis};
use crate::cohomology::bundle::BundleOnP;
use crate::criteria::{horrocks_test, SplittingCertificate};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationRank {
    pub p: usize,
    /// The map goes from twist a − 1 to twist a.
    pub a: i64,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl MultiplicationRank {
    pub fn is_injective(&self) -> bool {
        self.rank == self.source_dim
    }
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub maps: Vec<MultiplicationRank>,
    pub all_injective: bool,
    pub horrocks: SplittingCertificate,
}

impl LemmaReport {
    pub fn to_record(&self) -> String {
        let mut s = String::new();
        for r in &self.maps {
            if r.source_dim + r.target_dim > 0 {
                s.push_str(&format!("hmap\t{}\t{}\t{}\t{}\t{}\n", r.p, r.a, r.source_dim, r.target_dim, r.rank));
            }
        }
        s.push_str(&format!("injective\t{}\n", self.all_injective));
        s
    }
}

/// Columns spanning a subspace, as a matrix.
fn span_matrix<E: Copy>(rows: usize, vecs: &[Vec<E>], zero: E) -> Mat<E> {
    let mut m = Mat::new(rows, vecs.len(), zero);
    for (c, v) in vecs.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            m.set(r, c, *x);
        }
    }
    m
}

/// Rank of h· on Ext^j(M, S)_t → Ext^j(M, S)_{t+1}, plus both dimensions.
fn ext_multiplication<K: Field>(g: &BundleOnP<K>, h: &Poly<K::Elem>, j: usize, t: i64) -> (usize, usize, usize) {
    let k = &g.ring.field;
    let nv = g.ring.nvars;
    let res = &g.resolution;
    if j >= res.modules.len() {
        return (0, 0, 0);
    }
    let ops = MatOps::new(&g.ring);
    let fj = res.module(j).dual();
    let out = res.maps.get(j).map(|m| ops.transpose(m));
    let inc = if j == 0 { None } else { Some(ops.transpose(&res.maps[j - 1])) };
    let cycles = |d: i64| -> (usize, Vec<Vec<K::Elem>>) {
        let dim = SliceBasis::new(nv, &fj, d).len();
        let z = match &out {
            Some(o) => nullspace(k, &slice_matrix(k, nv, o, d)),
            None => (0..dim).map(|i| (0..dim).map(|r| if r == i { k.one() } else { k.zero() }).collect()).collect(),
        };
        (dim, z)
    };
    let boundaries = |d: i64, dim: usize| -> Mat<K::Elem> {
        match &inc {
            Some(b) => slice_matrix(k, nv, b, d),
            None => Mat::new(dim, 0, k.zero()),
        }
    };
    let (dim_t, z_t) = cycles(t);
    let (dim_u, z_u) = cycles(t + 1);
    let b_t = boundaries(t, dim_t);
    let b_u = boundaries(t + 1, dim_u);
    let ext_t = z_t.len() - rank(k, &b_t);
    let rank_b_u = rank(k, &b_u);
    let ext_u = z_u.len() - rank_b_u;
    if ext_t == 0 || ext_u == 0 {
        return (ext_t, ext_u, 0);
    }
    // h·id on F_j^*, read from degree t to degree t + 1
    let cols: Vec<Vector<K::Elem>> = (0..fj.rank())
        .map(|c| {
            let terms = h.terms().iter().map(|(m, x)| VTerm { comp: c as u32, mono: *m, coef: *x }).collect();
            ops.vops().normalize(terms)
        })
        .collect();
    let hm = GradedMatrix { source: fj.shift(1), target: fj.clone(), cols };
    let hz = matmul(k, &slice_matrix(k, nv, &hm, t + 1), &span_matrix(dim_t, &z_t, k.zero()));
    let both = b_u.hstack(&hz, k.zero());
    (ext_t, ext_u, rank(k, &both) - rank_b_u)
}

/// Ranks of h· on H^p, 1 ≤ p ≤ N − 1, over the window and one step past it,
/// checked against the splitting criterion.
pub fn lemma_chain_check<K: Field>(g: &BundleOnP<K>, h: &Poly<K::Elem>) -> Result<LemmaReport> {
    g.ring.check(h)?;
    if h.degree() != Some(1) || !h.is_homogeneous() {
        return Err(Error::Malformed("h must be a nonzero linear form".into()));
    }
    let nn = g.n;
    let (lo, hi) = g.window()?;
    let mut maps = vec![];
    for p in 1..nn {
        let j = nn - p;
        for a in lo..=hi + 1 {
            let t = -a - nn as i64 - 1;
            // Ext_t is H^p(G(a)), Ext_{t+1} is H^p(G(a−1))
            let (target_dim, source_dim, rank) = ext_multiplication(g, h, j, t);
            maps.push(MultiplicationRank { p, a, source_dim, target_dim, rank });
        }
    }
    let all_injective = maps.iter().all(|r| r.is_injective());
    let horrocks = horrocks_test(g)?;
    if all_injective != horrocks.is_split() {
        return Err(Error::Invariant(format!(
            "h-multiplication {} but the splitting criterion says {}",
            if all_injective { "is injective" } else { "is not injective" },
            horrocks.verdict
        )));
    }
    Ok(LemmaReport { maps, all_injective, horrocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;
    use crate::algebra::ring::Ring;
    use crate::catalog;

    fn bundle(nv: usize, name: &str) -> BundleOnP<PrimeField> {
        let r = Ring::new(PrimeField::default(), nv);
        BundleOnP::new(&r, &catalog::build(&r, name).unwrap()).unwrap()
    }

    #[test]
    fn split_bundle_is_vacuous() {
        let g = bundle(4, "sum:-2,0,3");
        let rep = lemma_chain_check(&g, &g.ring.var(3)).unwrap();
        assert!(rep.all_injective);
        assert!(rep.maps.iter().all(|r| r.source_dim == 0 && r.target_dim == 0));
    }

    #[test]
    fn tangent_bundle_has_a_failing_map() {
        let g = bundle(4, "tangent");
        let rep = lemma_chain_check(&g, &g.ring.var(0)).unwrap();
        assert!(!rep.all_injective);
        // H^2(T(−4)) ≅ k maps to H^2(T(−3)) = 0
        let r = rep.maps.iter().find(|r| r.p == 2 && r.a == -3).unwrap();
        assert_eq!((r.source_dim, r.target_dim, r.rank), (1, 0, 0));
    }

    #[test]
    fn null_correlation_multiplication() {
        // H^1(N(a)) is k in a = −1 only; h·: H^1(N(−1)) → H^1(N) = 0 is zero
        let g = bundle(4, "nullcorr");
        let rep = lemma_chain_check(&g, &g.ring.var(2)).unwrap();
        let nonzero: Vec<_> = rep.maps.iter().filter(|r| r.p == 1 && r.source_dim > 0).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!((nonzero[0].a, nonzero[0].source_dim, nonzero[0].rank), (0, 1, 0));
    }
}
