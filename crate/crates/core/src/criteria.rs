//! Splitting criteria and the Ext-sum bounds.

use std::fmt;

use crate::algebra::field::Field;
use crate::cohomology::bundle::{sheaf_coh_dim, BundleOnP};
use crate::cohomology::ext::{ext1_table, ExtTable};
use crate::cohomology::table::coh_table;
use crate::error::{Error, Result};
use crate::syzygy::hilbert::{HilbertSeries, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Split,
    Nonsplit,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Split => "split",
            Verdict::Nonsplit => "nonsplit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingCertificate {
    pub verdict: Verdict,
    /// Sorted twists a_j of ⊕ O(a_j), when split.
    pub twists: Vec<i64>,
    /// (p, a, h^p(F(a))) with 1 ≤ p ≤ n − 1, when nonsplit.
    pub witness: Option<(usize, i64, usize)>,
    pub window: (i64, i64),
}

impl SplittingCertificate {
    pub fn is_split(&self) -> bool {
        self.verdict == Verdict::Split
    }

    pub fn to_record(&self) -> String {
        let mut s = format!("verdict\t{}\n", self.verdict);
        if self.is_split() {
            let t: Vec<String> = self.twists.iter().map(|t| t.to_string()).collect();
            s.push_str(&format!("twists\t{}\n", t.join(",")));
        }
        if let Some((p, a, d)) = self.witness {
            s.push_str(&format!("witness\t{p}\t{a}\t{d}\n"));
        }
        s.push_str(&format!("window\t{}\t{}\n", self.window.0, self.window.1));
        s
    }
}

fn require_dim<K: Field>(b: &BundleOnP<K>) -> Result<()> {
    if b.n < 2 {
        return Err(Error::Domain(format!("splitting criteria need n ≥ 2, got n = {}", b.n)));
    }
    Ok(())
}

/// Intermediate cohomology vanishing on the certified window.
pub fn horrocks_test<K: Field>(b: &BundleOnP<K>) -> Result<SplittingCertificate> {
    require_dim(b)?;
    let table = coh_table(b)?;
    let window = (table.lo, table.hi);
    if let Some((p, a, d)) = table.first_intermediate() {
        let again = sheaf_coh_dim(b, p, a)?;
        if again != d {
            return Err(Error::Invariant(format!("witness h^{p}(F({a})) not reproduced: {d} vs {again}")));
        }
        return Ok(SplittingCertificate { verdict: Verdict::Nonsplit, twists: vec![], witness: Some((p, a, d)), window });
    }
    let mut twists: Vec<i64> = b.generator_degrees().iter().map(|d| -d).collect();
    twists.sort_unstable();
    // a free module of the right rank and Hilbert series
    let mut num = LaurentPoly::zero();
    for t in &twists {
        num = num.add(&LaurentPoly::monomial(-t, 1));
    }
    if twists.len() != b.rank || HilbertSeries::new(num, b.ring.nvars) != b.hilbert() {
        return Err(Error::Invariant("vanishing intermediate cohomology but module is not free".into()));
    }
    Ok(SplittingCertificate { verdict: Verdict::Split, twists, witness: None, window })
}

/// Ext^1(E, E(−i)) = 0 for every i > 0.
pub fn kempf_test<K: Field>(b: &BundleOnP<K>) -> Result<bool> {
    require_dim(b)?;
    Ok(ext1_table(b)?.positive_sum() == 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// Σ_{i>0} dim Ext^1(E, E(−i)).
    pub kempf_sum: usize,
    /// Σ_i dim Ext^1(E, E(−i)).
    pub flenner_sum: usize,
    pub minimal_non_extend_m: usize,
    pub window: (i64, i64),
}

impl BoundReport {
    pub fn from_table(t: &ExtTable) -> Self {
        let kempf_sum = t.positive_sum();
        BoundReport {
            kempf_sum,
            flenner_sum: t.total_sum(),
            minimal_non_extend_m: kempf_sum + 1,
            window: (t.lo, t.hi),
        }
    }

    pub fn to_record(&self) -> String {
        format!(
            "kempfSum\t{}\nflennerSum\t{}\nminimalNonExtendM\t{}\nwindow\t{}\t{}\n",
            self.kempf_sum, self.flenner_sum, self.minimal_non_extend_m, self.window.0, self.window.1
        )
    }
}

pub fn bound_report<K: Field>(b: &BundleOnP<K>) -> Result<BoundReport> {
    require_dim(b)?;
    Ok(BoundReport::from_table(&ext1_table(b)?))
}
