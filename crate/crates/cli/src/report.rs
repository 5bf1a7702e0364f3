//! Emitters for each subcommand. TSV is the machine format; the pretty
//! variant aligns the same cells.

use std::fmt::Write;

use anyhow::Result;

use btk_core::algebra::field::PrimeField;
use btk_core::algebra::matrix::GradedMatrix;
use btk_core::algebra::ring::Ring;
use btk_core::catalog;
use btk_core::cohomology::bundle::BundleOnP;
use btk_core::cohomology::ext::ext1_table;
use btk_core::cohomology::table::{coh_table_slices, CohomologyTable};
use btk_core::criteria::{bound_report, horrocks_test, BoundReport};
use btk_core::syzygy::betti::format_regularity;
use btk_core::syzygy::resolution::free_resolution;
use btk_core::tower::{babylonian_pipeline, AmbientSplit, PipelineOptions};

/// Pads every tab-separated cell to its column width.
pub fn align(tsv: &str) -> String {
    let rows: Vec<Vec<&str>> = tsv.lines().map(|l| l.split('\t').collect()).collect();
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut width = vec![0; ncols];
    for r in &rows {
        for (i, c) in r.iter().enumerate() {
            width[i] = width[i].max(c.chars().count());
        }
    }
    let mut s = String::new();
    for r in &rows {
        let cells: Vec<String> = r.iter().enumerate().map(|(i, c)| format!("{c:>w$}", w = width[i])).collect();
        writeln!(s, "{}", cells.join("  ").trim_end()).unwrap();
    }
    s
}

fn emit(tsv: String, pretty: bool) -> String {
    if pretty {
        align(&tsv)
    } else {
        tsv
    }
}

pub fn catalog(pretty: bool) -> String {
    let mut s = String::new();
    for (name, what) in catalog::ENTRIES {
        writeln!(s, "{name}\t{what}").unwrap();
    }
    if pretty {
        // left-aligned names read better than right-aligned ones
        let w = catalog::ENTRIES.iter().map(|e| e.0.len()).max().unwrap_or(0);
        return catalog::ENTRIES.iter().map(|(n, d)| format!("{n:<w$}  {d}\n")).collect();
    }
    s
}

fn bundle(ring: &Ring<PrimeField>, phi: &GradedMatrix<u32>) -> Result<BundleOnP<PrimeField>> {
    Ok(BundleOnP::new(ring, phi)?)
}

pub fn coh(ring: &Ring<PrimeField>, phi: &GradedMatrix<u32>, range: Option<(i64, i64)>, pretty: bool) -> Result<String> {
    let b = bundle(ring, phi)?;
    let (lo, hi) = match range {
        Some(r) => r,
        None => b.window()?,
    };
    let t: CohomologyTable = coh_table_slices(&b, lo, hi)?;
    Ok(if pretty { t.to_pretty() } else { t.to_tsv() })
}

pub fn betti(ring: &Ring<PrimeField>, phi: &GradedMatrix<u32>, pretty: bool) -> Result<String> {
    let table = free_resolution(ring, phi)?.betti();
    let mut s = table.to_tsv();
    writeln!(s, "regularity\t{}", format_regularity(table.regularity())).unwrap();
    Ok(emit(s, pretty))
}

pub fn horrocks(ring: &Ring<PrimeField>, phi: &GradedMatrix<u32>, pretty: bool) -> Result<String> {
    let b = bundle(ring, phi)?;
    Ok(emit(horrocks_test(&b)?.to_record(), pretty))
}

pub fn kempf(ring: &Ring<PrimeField>, phi: &GradedMatrix<u32>, pretty: bool) -> Result<String> {
    let b = bundle(ring, phi)?;
    let t = ext1_table(&b)?;
    let mut s = format!("kempf\t{}\n", t.positive_sum() == 0);
    s.push_str(&t.to_tsv());
    Ok(emit(s, pretty))
}

pub fn bounds(ring: &Ring<PrimeField>, phi: &GradedMatrix<u32>, pretty: bool) -> Result<String> {
    let b = bundle(ring, phi)?;
    let r: BoundReport = bound_report(&b)?;
    Ok(emit(r.to_record(), pretty))
}

pub fn tower(
    ambient: &AmbientSplit,
    ring: &Ring<PrimeField>,
    phi: &GradedMatrix<u32>,
    i_max: Option<usize>,
    seed: u64,
    pretty: bool,
) -> Result<String> {
    let rec = babylonian_pipeline(ambient, phi, &ring.field, PipelineOptions { seed, i_max })?;
    Ok(emit(rec.audit, pretty))
}
