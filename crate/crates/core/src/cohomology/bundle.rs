//! Locally free sheaves on P^n given by graded modules, and their
//! cohomology through graded local duality.

use std::sync::OnceLock;

use crate::algebra::field::Field;
use crate::algebra::linalg::rank;
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::ring::Ring;
use crate::algebra::slice::{slice_matrix, SliceBasis};
use crate::error::{Error, Result};
use crate::syzygy::hilbert::{HilbertSeries, LaurentPoly};
use crate::syzygy::resolution::{coker_hilbert, free_resolution, minimal_presentation, FreeResolution};

use super::hom::dual_module;

/// A vector bundle F on P^n, stored as its module of twisted sections.
#[derive(Debug)]
pub struct BundleOnP<K: Field> {
    pub ring: Ring<K>,
    pub n: usize,
    /// Minimal presentation of Γ_*(F).
    pub presentation: GradedMatrix<K::Elem>,
    pub rank: usize,
    /// Whether the input module already equalled Γ_*(F).
    pub input_saturated: bool,
    pub resolution: FreeResolution<K::Elem>,
    /// Hilbert series of Ext^j(M, S), j = 0..=length.
    ext_series: Vec<HilbertSeries>,
    dual: OnceLock<DualData<K::Elem>>,
}

#[derive(Debug)]
struct DualData<E> {
    presentation: GradedMatrix<E>,
    regularity: i64,
}

impl<K: Field> Clone for BundleOnP<K> {
    fn clone(&self) -> Self {
        BundleOnP {
            ring: self.ring.clone(),
            n: self.n,
            presentation: self.presentation.clone(),
            rank: self.rank,
            input_saturated: self.input_saturated,
            resolution: self.resolution.clone(),
            ext_series: self.ext_series.clone(),
            dual: OnceLock::new(),
        }
    }
}

/// HS(Ext^j(M, S)) for every j, from the cokernels of the dual differentials.
pub(crate) fn ext_series<K: Field>(ring: &Ring<K>, res: &FreeResolution<K::Elem>) -> Result<Vec<HilbertSeries>> {
    let ops = MatOps::new(ring);
    let nv = ring.nvars;
    let free_hs = |j: usize| {
        let mut num = LaurentPoly::zero();
        for &t in &res.module(j).twists {
            num = num.add(&LaurentPoly::monomial(-t, 1));
        }
        HilbertSeries::new(num, nv)
    };
    let len = res.length();
    // coker[j] = HS(coker d_j^T) in F_j^*, coker[0] = HS(F_0^*)
    let mut coker = vec![free_hs(0)];
    for m in &res.maps {
        coker.push(coker_hilbert(ring, &ops.transpose(m))?);
    }
    coker.push(HilbertSeries::zero(nv));
    Ok((0..=len).map(|j| coker[j].add(&coker[j + 1]).sub(&free_hs(j + 1))).collect())
}

impl<K: Field> BundleOnP<K> {
    /// Validates local freeness and replaces the module by Γ_* of its sheaf
    /// when needed. The ring has n + 1 variables.
    pub fn new(ring: &Ring<K>, presentation: &GradedMatrix<K::Elem>) -> Result<Self> {
        if ring.nvars < 2 {
            return Err(Error::Domain("projective space needs at least two variables".into()));
        }
        let n = ring.nvars - 1;
        let pres = minimal_presentation(ring, presentation)?;
        let res = free_resolution(ring, &pres)?;
        let ext = ext_series(ring, &res)?;
        for (j, hs) in ext.iter().enumerate().skip(1) {
            if !hs.is_finite_length() {
                return Err(Error::Domain(format!(
                    "sheaf is not locally free: Ext^{j}(M, S) has positive-dimensional support"
                )));
            }
        }
        let (q, dim) = res.hilbert(ring.nvars).reduced();
        if dim != ring.nvars as i64 || q.eval_one() <= 0 {
            return Err(Error::Domain("module has no full-dimensional support (zero sheaf)".into()));
        }
        let rank = q.eval_one() as usize;
        // Γ_*(F) = M exactly when depth M ≥ 2, i.e. pd M ≤ n − 1
        if res.length() < n {
            return Ok(BundleOnP {
                ring: ring.clone(),
                n,
                presentation: pres,
                rank,
                input_saturated: true,
                resolution: res,
                ext_series: ext,
                dual: OnceLock::new(),
            });
        }
        let dd = dual_module(ring, &dual_module(ring, &pres)?)?;
        let mut b = BundleOnP::new(ring, &dd)?;
        if b.resolution.length() >= n || b.rank != rank {
            return Err(Error::Invariant("double dual is not the module of sections".into()));
        }
        b.input_saturated = false;
        Ok(b)
    }

    pub fn field(&self) -> &K {
        &self.ring.field
    }

    /// Hilbert series of the section module.
    pub fn hilbert(&self) -> HilbertSeries {
        self.resolution.hilbert(self.ring.nvars)
    }

    /// Castelnuovo–Mumford regularity of the section module.
    pub fn regularity(&self) -> i64 {
        self.resolution.betti().regularity().expect("nonzero module")
    }

    /// Degrees of the minimal generators, ascending.
    pub fn generator_degrees(&self) -> Vec<i64> {
        let mut d = self.presentation.target.twists.clone();
        d.sort_unstable();
        d
    }

    pub fn ext_series(&self, j: usize) -> HilbertSeries {
        self.ext_series.get(j).cloned().unwrap_or_else(|| HilbertSeries::zero(self.ring.nvars))
    }

    fn dual_data(&self) -> Result<&DualData<K::Elem>> {
        if let Some(d) = self.dual.get() {
            return Ok(d);
        }
        let presentation = dual_module(&self.ring, &self.presentation)?;
        let regularity = free_resolution(&self.ring, &presentation)?
            .betti()
            .regularity()
            .ok_or_else(|| Error::Invariant("dual of a nonzero bundle is zero".into()))?;
        let _ = self.dual.set(DualData { presentation, regularity });
        Ok(self.dual.get().unwrap())
    }

    /// Regularity of Γ_*(F^∨).
    pub fn dual_regularity(&self) -> Result<i64> {
        Ok(self.dual_data()?.regularity)
    }

    /// The dual bundle F^∨.
    pub fn dual(&self) -> Result<BundleOnP<K>> {
        let p = self.dual_data()?.presentation.clone();
        BundleOnP::new(&self.ring, &p)
    }

    /// F(a).
    pub fn twist(&self, a: i64) -> Result<BundleOnP<K>> {
        let p = GradedMatrix {
            source: self.presentation.source.shift(-a),
            target: self.presentation.target.shift(-a),
            cols: self.presentation.cols.clone(),
        };
        BundleOnP::new(&self.ring, &p)
    }

    /// Twists outside [lo, hi] carry no intermediate cohomology.
    pub fn window(&self) -> Result<(i64, i64)> {
        let lo = -self.dual_regularity()? - self.n as i64 - 1;
        Ok((lo, self.regularity()))
    }

    fn check_p(&self, p: usize) -> Result<()> {
        if p > self.n {
            return Err(Error::Domain(format!("cohomological degree {p} outside 0..={}", self.n)));
        }
        Ok(())
    }

    /// dim Ext^j(M, S)_t from slice ranks of the dual complex.
    pub fn ext_slice_dim(&self, j: usize, t: i64) -> usize {
        let k = &self.ring.field;
        let nv = self.ring.nvars;
        let res = &self.resolution;
        if j >= res.modules.len() {
            return 0;
        }
        let ops = MatOps::new(&self.ring);
        let dim = SliceBasis::new(nv, &res.module(j).dual(), t).len();
        if dim == 0 {
            return 0;
        }
        let out = res.maps.get(j).map(|m| rank(k, &slice_matrix(k, nv, &ops.transpose(m), t))).unwrap_or(0);
        let inc = if j == 0 { 0 } else { rank(k, &slice_matrix(k, nv, &ops.transpose(&res.maps[j - 1]), t)) };
        dim - out - inc
    }

    fn module_dim(&self, a: i64) -> i64 {
        self.hilbert().value(a)
    }

    /// h^p(F(a)) through slice ranks.
    pub fn coh_slice(&self, p: usize, a: i64) -> Result<usize> {
        self.check_p(p)?;
        let n = self.n;
        let t = -a - n as i64 - 1;
        if p >= 1 {
            return Ok(self.ext_slice_dim(n - p, t));
        }
        let v = self.module_dim(a) - self.ext_slice_dim(n + 1, t) as i64 + self.ext_slice_dim(n, t) as i64;
        usize::try_from(v).map_err(|_| Error::Invariant(format!("negative h^0 at twist {a}")))
    }

    /// h^p(F(a)) read off Hilbert series of the Ext modules.
    pub fn coh_series(&self, p: usize, a: i64) -> Result<usize> {
        self.check_p(p)?;
        let n = self.n;
        let t = -a - n as i64 - 1;
        let v = if p >= 1 {
            self.ext_series(n - p).value(t)
        } else {
            self.module_dim(a) - self.ext_series(n + 1).value(t) + self.ext_series(n).value(t)
        };
        usize::try_from(v).map_err(|_| Error::Invariant(format!("negative h^{p} at twist {a}")))
    }

    /// Σ_p (−1)^p h^p(F(a)).
    pub fn euler_characteristic(&self, a: i64) -> Result<i64> {
        let mut chi = 0i64;
        for p in 0..=self.n {
            let h = self.coh_series(p, a)? as i64;
            chi += if p % 2 == 0 { h } else { -h };
        }
        Ok(chi)
    }
}

/// h^p(F(a)), computed from ranks of graded pieces of the dual complex.
pub fn sheaf_coh_dim<K: Field>(b: &BundleOnP<K>, p: usize, a: i64) -> Result<usize> {
    b.coh_slice(p, a)
}

pub fn euler_characteristic<K: Field>(b: &BundleOnP<K>, a: i64) -> Result<i64> {
    b.euler_characteristic(a)
}
