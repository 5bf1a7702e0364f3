//! Graded Betti tables and Castelnuovo–Mumford regularity.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::algebra::module::GradedFreeModule;

/// β_{j,d}: number of generators of degree d in F_j.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_modules(modules: &[GradedFreeModule]) -> Self {
        let mut entries = BTreeMap::new();
        for (j, f) in modules.iter().enumerate() {
            for &d in &f.twists {
                *entries.entry((j, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, j: usize, d: i64) -> usize {
        self.entries.get(&(j, d)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number of F_j.
    pub fn total(&self, j: usize) -> usize {
        self.entries.iter().filter(|((i, _), _)| *i == j).map(|(_, &c)| c).sum()
    }

    /// max (d − j) over nonzero entries; None stands for −∞ (zero module).
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(j, d)| d - j as i64).max()
    }

    /// Rows j, columns d.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        let (Some(lo), Some(hi)) =
            (self.entries.keys().map(|k| k.1).min(), self.entries.keys().map(|k| k.1).max())
        else {
            return "j\n".into();
        };
        let jmax = self.entries.keys().map(|k| k.0).max().unwrap();
        s.push('j');
        for d in lo..=hi {
            write!(s, "\t{d}").unwrap();
        }
        s.push('\n');
        for j in 0..=jmax {
            write!(s, "{j}").unwrap();
            for d in lo..=hi {
                write!(s, "\t{}", self.get(j, d)).unwrap();
            }
            s.push('\n');
        }
        s
    }
}

/// Regularity formatted with "-inf" for the zero module.
pub fn format_regularity(r: Option<i64>) -> String {
    r.map(|v| v.to_string()).unwrap_or_else(|| "-inf".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regularity_of_free_sum() {
        let b = BettiTable::from_modules(&[GradedFreeModule::new(vec![-1, 2, 0])]);
        assert_eq!(b.regularity(), Some(2));
        assert_eq!(BettiTable::default().regularity(), None);
        assert_eq!(b.to_tsv(), "j\t-1\t0\t1\t2\n0\t1\t1\t0\t1\n");
    }
}
