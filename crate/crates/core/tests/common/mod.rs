//! Independent cohomology oracle for bundles quasi-isomorphic to a short
//! complex of sums of line bundles on P^n.
//!
//! Line bundles only have H^0 and H^n, so the hypercohomology spectral
//! sequence has two rows. When the complex spans at most n positions the
//! rows cannot talk to each other and h^k(F(a)) is a sum of homology
//! dimensions of the two rows. Row 0 is built from S_d, row n from the duals
//! of S_{−d−n−1}; ranks are computed here from scratch, with no code shared
//! with the library.

#![allow(dead_code)]

use std::collections::HashMap;

pub const P: u64 = 32003;

/// A form as (exponent vector, coefficient mod P).
pub type Form = Vec<(Vec<u32>, u64)>;

pub fn var(nv: usize, i: usize) -> Form {
    let mut e = vec![0; nv];
    e[i] = 1;
    vec![(e, 1)]
}

pub fn neg(f: &Form) -> Form {
    f.iter().map(|(e, c)| (e.clone(), (P - c) % P)).collect()
}

pub fn zero() -> Form {
    vec![]
}

pub fn one(nv: usize) -> Form {
    vec![(vec![0; nv], 1)]
}

/// Binomial coefficient, zero outside 0 ≤ k ≤ n.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// dim S_d for S = k[x_0..x_n].
pub fn sdim(n: usize, d: i64) -> usize {
    if d < 0 {
        0
    } else {
        binom(n as i64 + d, n as i64) as usize
    }
}

fn monomials(nv: usize, d: i64) -> Vec<Vec<u32>> {
    if d < 0 {
        return vec![];
    }
    if nv == 1 {
        return vec![vec![d as u32]];
    }
    let mut out = vec![];
    for a in (0..=d).rev() {
        for mut rest in monomials(nv - 1, d - a) {
            rest.insert(0, a as u32);
            out.push(rest);
        }
    }
    out
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    a %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % P;
        }
        a = a * a % P;
        e >>= 1;
    }
    r
}

/// Rank of a dense matrix mod P by plain elimination.
pub fn rank(mut m: Vec<Vec<u64>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = pow_mod(m[r][c], P - 2);
        for j in c..cols {
            m[r][j] = m[r][j] * inv % P;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in c..cols {
                    m[i][j] = (m[i][j] + P * P - f * m[r][j]) % P;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Position p of a complex: ⊕_j O(twists[j]).
#[derive(Clone, Debug)]
pub struct Term {
    pub twists: Vec<i64>,
}

/// L_lo → L_{lo+1} → … → L_hi; maps[k][r][c] is the form sending summand c
/// of position lo + k to summand r of position lo + k + 1.
#[derive(Clone, Debug)]
pub struct LineComplex {
    pub n: usize,
    pub lo: i64,
    pub terms: Vec<Term>,
    pub maps: Vec<Vec<Vec<Form>>>,
}

impl LineComplex {
    fn nv(&self) -> usize {
        self.n + 1
    }

    /// Checks d∘d = 0 by multiplying out the form matrices.
    pub fn check_complex(&self) {
        for k in 0..self.maps.len().saturating_sub(1) {
            let (a, b) = (&self.maps[k], &self.maps[k + 1]);
            for r in 0..b.len() {
                for c in 0..a[0].len() {
                    let mut acc: HashMap<Vec<u32>, u64> = HashMap::new();
                    for mid in 0..a.len() {
                        for (e1, c1) in &b[r][mid] {
                            for (e2, c2) in &a[mid][c] {
                                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                                let v = acc.entry(e).or_insert(0);
                                *v = (*v + c1 * c2) % P;
                            }
                        }
                    }
                    assert!(acc.values().all(|&v| v == 0), "not a complex at position {}", self.lo + k as i64 + 1);
                }
            }
        }
    }

    /// Matrix of H^0 of map k twisted by a: ⊕ S_{a+t_c} → ⊕ S_{a+t_r}.
    fn h0_matrix(&self, k: usize, a: i64) -> Vec<Vec<u64>> {
        let nv = self.nv();
        let src = &self.terms[k].twists;
        let tgt = &self.terms[k + 1].twists;
        let mut row_index: HashMap<(usize, Vec<u32>), usize> = HashMap::new();
        for (r, t) in tgt.iter().enumerate() {
            for m in monomials(nv, a + t) {
                let len = row_index.len();
                row_index.insert((r, m), len);
            }
        }
        let mut cols = vec![];
        for (c, t) in src.iter().enumerate() {
            for m in monomials(nv, a + t) {
                let mut col = vec![0u64; row_index.len()];
                for (r, _) in tgt.iter().enumerate() {
                    for (e, coef) in &self.maps[k][r][c] {
                        let prod: Vec<u32> = e.iter().zip(&m).map(|(x, y)| x + y).collect();
                        let i = row_index[&(r, prod)];
                        col[i] = (col[i] + coef) % P;
                    }
                }
                cols.push(col);
            }
        }
        cols
    }

    /// Rank of H^n of map k twisted by a, through the dual multiplication
    /// ⊕ S_{−a−t_r−n−1} → ⊕ S_{−a−t_c−n−1}.
    fn hn_rank(&self, k: usize, a: i64) -> usize {
        let nv = self.nv();
        let n = self.n as i64;
        let src = &self.terms[k].twists;
        let tgt = &self.terms[k + 1].twists;
        let mut row_index: HashMap<(usize, Vec<u32>), usize> = HashMap::new();
        for (c, t) in src.iter().enumerate() {
            for m in monomials(nv, -a - t - n - 1) {
                let len = row_index.len();
                row_index.insert((c, m), len);
            }
        }
        let mut cols = vec![];
        for (r, t) in tgt.iter().enumerate() {
            for m in monomials(nv, -a - t - n - 1) {
                let mut col = vec![0u64; row_index.len()];
                for (c, _) in src.iter().enumerate() {
                    for (e, coef) in &self.maps[k][r][c] {
                        let prod: Vec<u32> = e.iter().zip(&m).map(|(x, y)| x + y).collect();
                        let i = row_index[&(c, prod)];
                        col[i] = (col[i] + coef) % P;
                    }
                }
                cols.push(col);
            }
        }
        rank(cols)
    }

    fn h0_rank(&self, k: usize, a: i64) -> usize {
        rank(self.h0_matrix(k, a))
    }

    fn row_dims(&self, a: i64, row_n: bool) -> Vec<usize> {
        let n = self.n as i64;
        self.terms
            .iter()
            .map(|t| {
                t.twists
                    .iter()
                    .map(|&d| if row_n { sdim(self.n, -a - d - n - 1) } else { sdim(self.n, a + d) })
                    .sum()
            })
            .collect()
    }

    /// Homology dimensions of one row at every position.
    fn row_homology(&self, a: i64, row_n: bool) -> Vec<usize> {
        let dims = self.row_dims(a, row_n);
        let ranks: Vec<usize> = (0..self.maps.len())
            .map(|k| if row_n { self.hn_rank(k, a) } else { self.h0_rank(k, a) })
            .collect();
        (0..dims.len())
            .map(|p| {
                let out = ranks.get(p).copied().unwrap_or(0);
                let inc = if p == 0 { 0 } else { ranks[p - 1] };
                dims[p] - out - inc
            })
            .collect()
    }

    /// h^k(F(a)) for k = 0..=n.
    pub fn cohomology(&self, a: i64) -> Vec<usize> {
        let span = self.terms.len() as i64 - 1;
        assert!(span <= self.n as i64, "complex too long for a degenerate spectral sequence");
        let mut h = vec![0usize; self.n + 1];
        for (row, q) in [(false, 0i64), (true, self.n as i64)] {
            for (i, d) in self.row_homology(a, row).into_iter().enumerate() {
                let k = q + self.lo + i as i64;
                if d > 0 {
                    assert!((0..=self.n as i64).contains(&k), "hypercohomology in degree {k}");
                    h[k as usize] += d;
                }
            }
        }
        h
    }
}

fn euler(n: usize, shift: i64) -> LineComplex {
    let nv = n + 1;
    LineComplex {
        n,
        lo: -1,
        terms: vec![Term { twists: vec![shift] }, Term { twists: vec![shift + 1; nv] }],
        maps: vec![(0..nv).map(|i| vec![var(nv, i)]).collect()],
    }
}

/// T_{P^n} = coker(O → O(1)^{n+1}).
pub fn tangent(n: usize) -> LineComplex {
    euler(n, 0)
}

/// Ω_{P^2} = coker(O(−3) → O(−2)^3), the end of the Koszul complex.
pub fn cotangent_p2() -> LineComplex {
    euler(2, -3)
}

/// T ⊗ Ω on P^2 = T ⊗ T(−3), the tensor square of the Euler complex.
pub fn tangent_tensor_cotangent_p2() -> LineComplex {
    let nv = 3;
    let x = |i| var(nv, i);
    // position −2: one summand; −1: (O(1)^3 ⊗ O) ⊕ (O ⊗ O(1)^3); 0: O(2)^9 indexed 3i + j
    let t = |d: i64, k: usize| vec![d - 3; k];
    let mut d1 = vec![vec![zero()]; 6];
    for i in 0..3 {
        d1[i][0] = x(i);
        d1[3 + i][0] = neg(&x(i));
    }
    let mut d2 = vec![vec![zero(); 6]; 9];
    for i in 0..3 {
        for j in 0..3 {
            // e_i ⊗ 1 ↦ e_i ⊗ x_j e_j, 1 ⊗ e_j ↦ x_i e_i ⊗ e_j
            d2[3 * i + j][i] = x(j);
            d2[3 * i + j][3 + j] = x(i);
        }
    }
    LineComplex {
        n: 2,
        lo: -2,
        terms: vec![Term { twists: t(0, 1) }, Term { twists: t(1, 6) }, Term { twists: t(2, 9) }],
        maps: vec![d1, d2],
    }
}

/// Null correlation bundle on P^3 as the cohomology of the monad
/// O(−1) → O^4 → O(1) with maps (x1, −x0, x3, −x2)ᵀ and (x0, x1, x2, x3).
pub fn null_correlation_monad() -> LineComplex {
    let nv = 4;
    let x = |i| var(nv, i);
    LineComplex {
        n: 3,
        lo: -1,
        terms: vec![Term { twists: vec![-1] }, Term { twists: vec![0; 4] }, Term { twists: vec![1] }],
        maps: vec![
            vec![vec![x(1)], vec![neg(&x(0))], vec![x(3)], vec![neg(&x(2))]],
            vec![vec![x(0), x(1), x(2), x(3)]],
        ],
    }
}

/// ⊕ O(t) as a one-term complex.
pub fn line_sum(n: usize, twists: &[i64]) -> LineComplex {
    LineComplex { n, lo: 0, terms: vec![Term { twists: twists.to_vec() }], maps: vec![] }
}

/// Closed forms for a line bundle on P^n.
pub fn h0_line(n: usize, d: i64) -> usize {
    binom(n as i64 + d, n as i64) as usize
}

pub fn hn_line(n: usize, d: i64) -> usize {
    binom(-d - 1, n as i64) as usize
}
