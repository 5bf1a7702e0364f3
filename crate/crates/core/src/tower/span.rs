//! F restricted to the span P of L and a point p ∈ L′.
//!
//! P has coordinates x_0..x_n, z and sits in P^{n+m} through
//! x_{n+j} = p_j·z, so the restriction substitutes these forms into the
//! presentation of F. The hyperplane z = 0 of P is L.

use crate::algebra::field::{ExtElem, ExtField, PrimeField};
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::ring::{Poly, Ring};
use crate::cohomology::bundle::BundleOnP;
use crate::error::{Error, Result};
use crate::syzygy::resolution::coker_hilbert;

use super::ambient::AmbientSplit;
use super::neighborhood::PresentationAlongL;
use super::points::PointWitness;

#[derive(Clone, Debug)]
pub struct SpanRestriction {
    /// k′[x_0..x_n, z].
    pub ring: Ring<ExtField>,
    pub bundle: BundleOnP<ExtField>,
    /// The form z cutting out L in P.
    pub h: Poly<ExtElem>,
}

fn substitute_matrix(
    from: &Ring<PrimeField>,
    to: &Ring<ExtField>,
    phi: &GradedMatrix<u32>,
    images: &[Poly<ExtElem>],
) -> Result<GradedMatrix<ExtElem>> {
    let f = &to.field;
    let rows: Vec<Vec<Poly<ExtElem>>> = MatOps::new(from)
        .entries(phi)
        .iter()
        .map(|row| row.iter().map(|e| from.substitute(e, to, images, |c| f.embed(c))).collect())
        .collect();
    MatOps::new(to).from_entries(phi.source.clone(), phi.target.clone(), &rows)
}

/// F_P for F = coker(φ) on P^{n+m}, φ over the big ring of `ambient`.
pub fn restrict_to_span(
    ambient: &AmbientSplit,
    along: &PresentationAlongL<PrimeField>,
    phi: &GradedMatrix<u32>,
    point: &PointWitness,
) -> Result<SpanRestriction> {
    let (n, m) = (ambient.n, ambient.m);
    if point.coords.len() != m {
        return Err(Error::Malformed(format!("point has {} coordinates, expected {m}", point.coords.len())));
    }
    let field = point.field.clone();
    let k = along.small.field;
    let big = ambient.big(&k);
    let ring = Ring::new(field.clone(), n + 2);
    let z = ring.var(n + 1);
    let mut images: Vec<Poly<ExtElem>> = (0..=n).map(|i| ring.var(i)).collect();
    images.extend(point.coords.iter().map(|&c| ring.scale(&z, c)));
    let sub = substitute_matrix(&big, &ring, phi, &images)?;
    let bundle = BundleOnP::new(&ring, &sub)?;
    let f_l = coker_hilbert(&along.small, &along.restricted)?;
    let expected = f_l.reduced().0.eval_one();
    if bundle.rank as i64 != expected {
        return Err(Error::Invariant(format!(
            "restriction to the span has rank {}, expected {expected}",
            bundle.rank
        )));
    }
    // (F_P)|_{z=0} and F_L have the same Hilbert polynomial
    let small = Ring::new(field.clone(), n + 1);
    let mut cut: Vec<Poly<ExtElem>> = (0..=n).map(|i| small.var(i)).collect();
    cut.push(Poly::zero());
    let on_l = coker_hilbert(&small, &substitute_ext(&ring, &small, &bundle.presentation, &cut)?)?;
    if (0..=2 * n as i64 + 2).any(|d| on_l.poly_value(d) != f_l.poly_value(d)) {
        return Err(Error::Invariant("restriction of F_P to L differs from F_L".into()));
    }
    Ok(SpanRestriction { ring, bundle, h: z })
}

fn substitute_ext(
    from: &Ring<ExtField>,
    to: &Ring<ExtField>,
    phi: &GradedMatrix<ExtElem>,
    images: &[Poly<ExtElem>],
) -> Result<GradedMatrix<ExtElem>> {
    let rows: Vec<Vec<Poly<ExtElem>>> = MatOps::new(from)
        .entries(phi)
        .iter()
        .map(|row| row.iter().map(|e| from.substitute(e, to, images, |c| c)).collect())
        .collect();
    MatOps::new(to).from_entries(phi.source.clone(), phi.target.clone(), &rows)
}
