//! The full reduction for F on P^{n+m}: tower ideal, point, span, splitting.

use std::fmt::Write;

use sha2::{Digest, Sha256};

use crate::algebra::field::PrimeField;
use crate::algebra::matrix::GradedMatrix;
use crate::cohomology::bundle::BundleOnP;
use crate::cohomology::ext::ext1_table;
use crate::criteria::horrocks_test;
use crate::error::{Error, Result, StageExt};
use crate::format::ModuleFile;

use super::ambient::AmbientSplit;
use super::ideal::TowerIdeal;
use super::lemma::{lemma_chain_check, LemmaReport};
use super::neighborhood::PresentationAlongL;
use super::points::{choose_point, PointChoice, PointWitness};
use super::span::restrict_to_span;
use super::splitting::{build_tower_ideal, default_imax};

#[derive(Clone, Copy, Debug, Default)]
pub struct PipelineOptions {
    pub seed: u64,
    /// Last order of the tower; the Ext window end when None.
    pub i_max: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineVerdict {
    Split { twists: Vec<i64> },
    /// J needs at least m generators, so m ≤ kempfSum and nothing follows.
    BoundBoundary { generators: usize, m: usize, kempf_sum: usize },
}

impl std::fmt::Display for PipelineVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PipelineVerdict::Split { twists } => {
                let t: Vec<String> = twists.iter().map(|t| t.to_string()).collect();
                write!(f, "split\t{}", t.join(","))
            }
            PipelineVerdict::BoundBoundary { generators, m, kempf_sum } => {
                write!(f, "bound-boundary\tgenerators={generators}\tm={m}\tkempf_sum={kempf_sum}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineRecord {
    pub verdict: PipelineVerdict,
    pub kempf_sum: usize,
    pub ideal: TowerIdeal<PrimeField>,
    pub point: Option<PointWitness>,
    pub lemma: Option<LemmaReport>,
    /// Line-oriented, tab-separated; deterministic for a fixed seed.
    pub audit: String,
}

fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn complement_names(a: &AmbientSplit) -> Vec<String> {
    (0..a.m).map(|j| format!("x{}", a.n + 1 + j)).collect()
}

/// Runs the reduction on F = coker(φ), φ over k[x_0..x_{n+m}].
pub fn babylonian_pipeline(
    ambient: &AmbientSplit,
    phi: &GradedMatrix<u32>,
    field: &PrimeField,
    opts: PipelineOptions,
) -> Result<PipelineRecord> {
    let mut audit = String::new();
    let big = ambient.big(field);
    let input = ModuleFile::new(big.clone(), phi.clone()).to_text();
    writeln!(audit, "input\tsha256\t{}", sha256_hex(&input)).unwrap();
    writeln!(audit, "ambient\tn={}\tm={}\tseed={}", ambient.n, ambient.m, opts.seed).unwrap();

    let f = BundleOnP::new(&big, phi).stage("bundle")?;
    let along = PresentationAlongL::new(ambient, field, &f.presentation).stage("restriction")?;
    let e = BundleOnP::new(&along.small, &along.restricted).stage("restriction")?;
    let restricted = ModuleFile::new(along.small.clone(), e.presentation.clone()).to_text();
    writeln!(audit, "restriction\trank={}\tsha256\t{}", e.rank, sha256_hex(&restricted)).unwrap();

    let ext = ext1_table(&e).stage("ext1")?;
    let kempf_sum = ext.positive_sum();
    for (i, v) in &ext.entries {
        writeln!(audit, "ext1\t{i}\t{v}").unwrap();
    }
    writeln!(audit, "kempf_sum\t{kempf_sum}").unwrap();

    let i_max = opts.i_max.unwrap_or_else(|| default_imax(&ext));
    let ideal = build_tower_ideal(&along, &ext, i_max).stage("tower")?;
    let names = complement_names(ambient);
    for step in &ideal.log {
        let forms: Vec<String> = step.forms.iter().map(|g| ideal.ring.format(g, &names)).collect();
        let trunc = step.truncation.map_or("none".to_string(), |d| d.to_string());
        writeln!(
            audit,
            "step\t{}\ts={}\text1={}\ttruncation={}\t[{}]",
            step.i,
            step.s,
            step.ext_dim,
            trunc,
            forms.join("; ")
        )
        .unwrap();
    }
    let generators = ideal.generators.len();
    writeln!(audit, "ideal\tgenerators={generators}").unwrap();
    if generators > kempf_sum {
        return Err(Error::Invariant(format!("J has {generators} generators, more than kempfSum = {kempf_sum}")))
            .stage("tower");
    }

    let m = ambient.m;
    let boundary = PipelineVerdict::BoundBoundary { generators, m, kempf_sum };
    let point = match choose_point(&ideal, opts.seed).stage("point")? {
        PointChoice::BoundViolation { .. } => {
            writeln!(audit, "point\tnone\tgenerators={generators}\tm={m}").unwrap();
            writeln!(audit, "verdict\t{boundary}").unwrap();
            return Ok(PipelineRecord { verdict: boundary, kempf_sum, ideal, point: None, lemma: None, audit });
        }
        PointChoice::Found(w) => w,
    };
    writeln!(audit, "point\t{}\tdegree={}", point.format(), point.degree()).unwrap();

    let span = restrict_to_span(ambient, &along, &f.presentation, &point).stage("span")?;
    writeln!(audit, "span\trank={}", span.bundle.rank).unwrap();
    let lemma = lemma_chain_check(&span.bundle, &span.h).stage("lemma")?;
    audit.push_str(&lemma.to_record());
    let cert = &lemma.horrocks;
    if !cert.is_split() {
        return Err(Error::Invariant("F restricted to the span of L and p does not split".into())).stage("horrocks");
    }
    // F_L is the restriction of F_P, so it must split the same way
    let on_l = horrocks_test(&e).stage("horrocks")?;
    if !on_l.is_split() || on_l.twists != cert.twists {
        return Err(Error::Invariant("splitting on the span disagrees with the splitting criterion on L".into()))
            .stage("horrocks");
    }
    let verdict = PipelineVerdict::Split { twists: cert.twists.clone() };
    writeln!(audit, "verdict\t{verdict}").unwrap();
    Ok(PipelineRecord { verdict, kempf_sum, ideal, point: Some(point), lemma: Some(lemma), audit })
}
