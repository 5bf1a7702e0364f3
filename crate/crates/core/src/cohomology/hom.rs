//! Hom modules, duals and subquotient presentations.

use crate::algebra::field::Field;
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::module::{GradedFreeModule, VTerm, Vector};
use crate::algebra::monomial::Mono;
use crate::algebra::ring::Ring;
use crate::error::Result;
use crate::syzygy::resolution::{minimal_columns, prune_constants, syzygies};

/// A presented subquotient: coker(presentation), with generator images
/// `gens` (columns living in an ambient free module).
#[derive(Clone, Debug)]
pub struct Subquotient<E> {
    pub presentation: GradedMatrix<E>,
    pub gens: GradedMatrix<E>,
}

/// Kernel of the map coker(psi0) → coker(psi1) induced by phi:
/// {x : phi(x) ∈ im psi1} / im psi0, minimally presented.
pub fn induced_kernel<K: Field>(
    ring: &Ring<K>,
    phi: &GradedMatrix<K::Elem>,
    psi0: &GradedMatrix<K::Elem>,
    psi1: &GradedMatrix<K::Elem>,
) -> Result<Subquotient<K::Elem>> {
    let ops = MatOps::new(ring);
    // preimage generators: x-parts of syz([phi | psi1])
    let z = syzygies(ring, &ops.hconcat(phi, psi1)?)?;
    let h = leading_block(ring, &z, phi.source.clone());
    subquotient(ring, &h, psi0)
}

/// Restriction of the columns of z to the first rank(target) coordinates,
/// dropping columns that vanish there.
fn leading_block<K: Field>(
    ring: &Ring<K>,
    z: &GradedMatrix<K::Elem>,
    target: GradedFreeModule,
) -> GradedMatrix<K::Elem> {
    let ops = MatOps::new(ring);
    let n = target.rank() as u32;
    let mut twists = vec![];
    let mut cols = vec![];
    for (i, c) in z.cols.iter().enumerate() {
        let v = ops.vops().remap(c, |j| if j < n { Some(j) } else { None });
        if !v.is_zero() {
            twists.push(z.source.twists[i]);
            cols.push(v);
        }
    }
    GradedMatrix { source: GradedFreeModule::new(twists), target, cols }
}

/// (im h + im rel) / im rel, presented on the columns of h.
pub fn subquotient<K: Field>(
    ring: &Ring<K>,
    h: &GradedMatrix<K::Elem>,
    rel: &GradedMatrix<K::Elem>,
) -> Result<Subquotient<K::Elem>> {
    let ops = MatOps::new(ring);
    // drop generators already in im rel or redundant modulo the others
    let both = ops.hconcat(rel, h)?;
    let mins = crate::syzygy::resolution::column_gb(ring, &both)?.minimal_inputs;
    let nrel = rel.ncols();
    let hk: Vec<usize> = mins.iter().filter(|&&i| i >= nrel).map(|&i| i - nrel).collect();
    let h = ops.select_cols(h, &hk);
    let z = syzygies(ring, &ops.hconcat(&h, rel)?)?;
    let pres = leading_block(ring, &z, h.source.clone());
    let (pres, rows) = prune_constants(ring, &pres);
    let gens = ops.select_cols(&h, &rows);
    let presentation = minimal_columns(ring, &pres)?;
    Ok(Subquotient { presentation, gens })
}

/// ker(b) / im(a) for a: X → Y, b: Y → Z with b∘a = 0.
pub fn homology<K: Field>(
    ring: &Ring<K>,
    a: &GradedMatrix<K::Elem>,
    b: &GradedMatrix<K::Elem>,
) -> Result<Subquotient<K::Elem>> {
    let kernel = minimal_columns(ring, &syzygies(ring, b)?)?;
    subquotient(ring, &kernel, a)
}

/// Hom_S(coker m, coker nn), with generators as elements of Hom(F0, G0).
#[derive(Clone, Debug)]
pub struct HomModule<E> {
    pub module: Subquotient<E>,
    /// Hom(F0, G0): basis index a·rank(G0) + b for e_a^* ⊗ g_b.
    pub ambient: GradedFreeModule,
    pub source_rank: usize,
    pub target_rank: usize,
}

fn hom_free(f: &GradedFreeModule, g: &GradedFreeModule) -> GradedFreeModule {
    let mut tw = vec![];
    for a in &f.twists {
        for b in &g.twists {
            tw.push(b - a);
        }
    }
    GradedFreeModule::new(tw)
}

/// Graded Hom between the cokernels of two presentations.
pub fn hom_module<K: Field>(
    ring: &Ring<K>,
    m: &GradedMatrix<K::Elem>,
    nn: &GradedMatrix<K::Elem>,
) -> Result<HomModule<K::Elem>> {
    let ops = MatOps::new(ring);
    ops.require_graded(m)?;
    ops.require_graded(nn)?;
    let (f0, f1) = (&m.target, &m.source);
    let (g0, g1) = (&nn.target, &nn.source);
    let (r0, s0) = (f0.rank(), g0.rank());
    let (r1, s1) = (f1.rank(), g1.rank());
    let h00 = hom_free(f0, g0);
    let h10 = hom_free(f1, g0);
    let h01 = hom_free(f0, g1);
    let h11 = hom_free(f1, g1);
    let vops = ops.vops();

    // precomposition with m: e_{a,b} ↦ Σ_c m_{a,c} e_{c,b}
    let mut phi_cols = vec![];
    for a in 0..r0 {
        for b in 0..s0 {
            let mut terms = vec![];
            for (c, col) in m.cols.iter().enumerate() {
                for t in col.terms.iter().filter(|t| t.comp as usize == a) {
                    terms.push(VTerm { comp: (c * s0 + b) as u32, mono: t.mono, coef: t.coef });
                }
            }
            phi_cols.push(vops.normalize(terms));
        }
    }
    let phi = GradedMatrix { source: h00.clone(), target: h10.clone(), cols: phi_cols };

    // postcomposition with nn: e_{x,q} ↦ Σ_b nn_{b,q} e_{x,b}
    let post = |rows: usize, src: &GradedFreeModule, tgt: &GradedFreeModule| {
        let mut cols = vec![];
        for x in 0..rows {
            for q in 0..s1 {
                let terms = nn.cols[q]
                    .terms
                    .iter()
                    .map(|t| VTerm { comp: (x * s0) as u32 + t.comp, mono: t.mono, coef: t.coef })
                    .collect();
                cols.push(vops.normalize(terms));
            }
        }
        GradedMatrix { source: src.clone(), target: tgt.clone(), cols }
    };
    let psi0 = post(r0, &h01, &h00);
    let psi1 = post(r1, &h11, &h10);
    let module = induced_kernel(ring, &phi, &psi0, &psi1)?;
    Ok(HomModule { module, ambient: h00, source_rank: r0, target_rank: s0 })
}

impl<E: Copy + Eq> HomModule<E> {
    /// Σ_a e_a^* ⊗ g_a, the identity when source and target presentations agree.
    pub fn identity_vector<K: Field<Elem = E>>(&self, k: &K) -> Vector<E> {
        let terms = (0..self.source_rank.min(self.target_rank))
            .map(|a| VTerm { comp: (a * self.target_rank + a) as u32, mono: Mono::one(), coef: k.one() })
            .collect();
        Vector { terms }
    }
}

/// Presentation of Hom(coker m, S) = ker(mᵀ).
pub fn dual_module<K: Field>(ring: &Ring<K>, m: &GradedMatrix<K::Elem>) -> Result<GradedMatrix<K::Elem>> {
    let ops = MatOps::new(ring);
    let mt = ops.transpose(m);
    let z = minimal_columns(ring, &syzygies(ring, &mt)?)?;
    if z.ncols() == 0 {
        return Ok(GradedMatrix::zero(GradedFreeModule::default(), GradedFreeModule::default()));
    }
    let rel = syzygies(ring, &z)?;
    crate::syzygy::resolution::minimal_presentation(ring, &rel)
}
