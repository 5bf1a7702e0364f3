//! Cohomology tables over a certified window of twists.

use std::collections::BTreeMap;
use std::fmt::Write;

use rayon::prelude::*;

use crate::algebra::field::Field;
use crate::error::{Error, Result};

use super::bundle::BundleOnP;

/// h^p(F(a)) for 0 ≤ p ≤ n and lo ≤ a ≤ hi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub n: usize,
    pub lo: i64,
    pub hi: i64,
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl CohomologyTable {
    /// Zero outside the table and for p > n.
    pub fn get(&self, p: usize, a: i64) -> usize {
        self.entries.get(&(p, a)).copied().unwrap_or(0)
    }

    /// Rows 1..n−1 vanish identically.
    pub fn intermediate_vanishes(&self) -> bool {
        self.entries.iter().all(|(&(p, _), &v)| p == 0 || p == self.n || v == 0)
    }

    /// First nonzero intermediate entry, p ascending then a ascending.
    pub fn first_intermediate(&self) -> Option<(usize, i64, usize)> {
        (1..self.n)
            .flat_map(|p| (self.lo..=self.hi).map(move |a| (p, a)))
            .map(|(p, a)| (p, a, self.get(p, a)))
            .find(|e| e.2 > 0)
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("p");
        for a in self.lo..=self.hi {
            write!(s, "\t{a}").unwrap();
        }
        s.push('\n');
        for p in (0..=self.n).rev() {
            write!(s, "{p}").unwrap();
            for a in self.lo..=self.hi {
                write!(s, "\t{}", self.get(p, a)).unwrap();
            }
            s.push('\n');
        }
        s
    }

    pub fn to_pretty(&self) -> String {
        let mut cells: Vec<Vec<String>> = vec![];
        let mut head = vec!["p\\a".to_string()];
        head.extend((self.lo..=self.hi).map(|a| a.to_string()));
        cells.push(head);
        for p in (0..=self.n).rev() {
            let mut row = vec![format!("h^{p}")];
            row.extend((self.lo..=self.hi).map(|a| self.get(p, a).to_string()));
            cells.push(row);
        }
        align(&cells)
    }
}

/// Right-aligned columns separated by two spaces.
pub(crate) fn align(cells: &[Vec<String>]) -> String {
    let ncols = cells.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..ncols).map(|c| cells.iter().filter_map(|r| r.get(c)).map(|x| x.len()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().enumerate().map(|(c, x)| format!("{x:>w$}", w = widths[c])).collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

/// Table over the certified window, from Hilbert series of the Ext modules.
pub fn coh_table<K: Field>(b: &BundleOnP<K>) -> Result<CohomologyTable> {
    let (lo, hi) = b.window()?;
    coh_table_range(b, lo, hi)
}

pub fn coh_table_range<K: Field>(b: &BundleOnP<K>, lo: i64, hi: i64) -> Result<CohomologyTable> {
    if lo > hi {
        return Err(Error::Domain(format!("empty twist range {lo}:{hi}")));
    }
    let mut entries = BTreeMap::new();
    for p in 0..=b.n {
        for a in lo..=hi {
            entries.insert((p, a), b.coh_series(p, a)?);
        }
    }
    Ok(CohomologyTable { n: b.n, lo, hi, entries })
}

/// Same table from slice ranks, entries evaluated in parallel.
pub fn coh_table_slices<K: Field>(b: &BundleOnP<K>, lo: i64, hi: i64) -> Result<CohomologyTable> {
    if lo > hi {
        return Err(Error::Domain(format!("empty twist range {lo}:{hi}")));
    }
    let keys: Vec<(usize, i64)> = (0..=b.n).flat_map(|p| (lo..=hi).map(move |a| (p, a))).collect();
    let vals: Vec<Result<usize>> = keys.par_iter().map(|&(p, a)| b.coh_slice(p, a)).collect();
    let mut entries = BTreeMap::new();
    for (k, v) in keys.into_iter().zip(vals) {
        entries.insert(k, v?);
    }
    Ok(CohomologyTable { n: b.n, lo, hi, entries })
}
