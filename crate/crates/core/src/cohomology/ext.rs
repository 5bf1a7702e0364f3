//! dim Ext^1(E, E(−i)) as h^1 of the endomorphism bundle.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::algebra::field::Field;
use crate::error::{Error, Result};

use super::bundle::BundleOnP;
use super::hom::hom_module;
use super::table::align;

/// i ↦ dim Ext^1(E, E(−i)) on a window outside which it vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub lo: i64,
    pub hi: i64,
    pub entries: BTreeMap<i64, usize>,
}

impl ExtTable {
    pub fn get(&self, i: i64) -> usize {
        self.entries.get(&i).copied().unwrap_or(0)
    }

    /// Σ_{i>0}.
    pub fn positive_sum(&self) -> usize {
        self.entries.range(1..).map(|(_, &v)| v).sum()
    }

    pub fn total_sum(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("i\text1\n");
        for (i, v) in &self.entries {
            writeln!(s, "{i}\t{v}").unwrap();
        }
        s
    }

    pub fn to_pretty(&self) -> String {
        let mut cells = vec![vec!["i".to_string(), "ext1".to_string()]];
        cells.extend(self.entries.iter().map(|(i, v)| vec![i.to_string(), v.to_string()]));
        align(&cells)
    }
}

/// The endomorphism bundle End(E) = Hom(E, E).
pub fn end_bundle<K: Field>(b: &BundleOnP<K>) -> Result<BundleOnP<K>> {
    let h = hom_module(&b.ring, &b.presentation, &b.presentation)?;
    BundleOnP::new(&b.ring, &h.module.presentation)
}

/// Window [−reg End, reg End^∨ + n + 1] in i.
pub fn ext1_table<K: Field>(b: &BundleOnP<K>) -> Result<ExtTable> {
    let end = end_bundle(b)?;
    let (lo_a, hi_a) = end.window()?;
    ext1_table_range(b, &end, -hi_a, -lo_a)
}

/// Entries for lo ≤ i ≤ hi, given the endomorphism bundle.
pub fn ext1_table_range<K: Field>(b: &BundleOnP<K>, end: &BundleOnP<K>, lo: i64, hi: i64) -> Result<ExtTable> {
    if b.n < 2 {
        return Err(Error::Domain("Ext table needs n ≥ 2".into()));
    }
    let mut entries = BTreeMap::new();
    for i in lo..=hi {
        entries.insert(i, end.coh_series(1, -i)?);
    }
    Ok(ExtTable { lo, hi, entries })
}
