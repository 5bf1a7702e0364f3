//! Lifting the identity of F_L through the neighborhood sequences, and the
//! inductive construction of the ideal J.
//!
//! Sheaf homomorphisms F_L → N~ are computed as degree-0 module maps from a
//! truncation Q = (M_L)_{≥d} of the restricted module, with d past every degree
//! where the target has H^0_m or H^1_m. A splitting of (A_i) is then a solution
//! of a linear system on Hom(P_0, N_i)_0 for a free resolution P_• of Q.

use crate::algebra::field::Field;
use crate::algebra::linalg::{mat_vec, nullspace, rank, rref, solve, Echelon, Mat};
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::module::{GradedFreeModule, VTerm, VecOps, Vector};
use crate::algebra::ring::Poly;
use crate::cohomology::ext::ExtTable;
use crate::cohomology::hom::subquotient;
use crate::error::{Error, Result};
use crate::syzygy::resolution::{minimal_columns, syzygies};

use super::ideal::{ObstructionStep, TowerIdeal};
use super::neighborhood::{sequence_ai, NeighborhoodModule, PresentationAlongL, SequenceAi};
use super::quotient::{hom_slice_matrix, HomSlice, Quotient};

/// Extra truncation degrees tried before giving up on certification.
const CERTIFICATION_BUDGET: i64 = 3;

/// Q with P_0 ← P_1 ← P_2 and the images of the generators of P_0 in M_L.
#[derive(Clone, Debug)]
pub struct Source<E> {
    pub truncation: Option<i64>,
    pub p0: GradedFreeModule,
    pub d1: GradedMatrix<E>,
    pub d2: GradedMatrix<E>,
    pub can: Vec<Vector<E>>,
}

fn next_syzygies<K: Field>(along: &PresentationAlongL<K>, d: &GradedMatrix<K::Elem>) -> Result<GradedMatrix<K::Elem>> {
    if d.ncols() == 0 {
        return Ok(GradedMatrix::zero(GradedFreeModule::default(), d.source.clone()));
    }
    let z = syzygies(&along.small, d)?;
    if z.ncols() == 0 {
        return Ok(z);
    }
    minimal_columns(&along.small, &z)
}

/// The restricted module itself when d is None or at most its lowest
/// generator degree, otherwise its truncation in degrees ≥ d.
pub fn source<K: Field>(along: &PresentationAlongL<K>, d: Option<i64>) -> Result<Source<K::Elem>> {
    let k = &along.small.field;
    let ring = &along.small;
    let ops = MatOps::new(ring);
    let vops = ops.vops();
    let pres = &along.restricted;
    let min_twist = pres.target.twists.iter().copied().min().unwrap_or(0);
    let d = d.filter(|&d| d > min_twist);
    let Some(d) = d else {
        let can = (0..pres.nrows()).map(|g| vops.unit(g as u32, &ring.constant(k.one()))).collect();
        let d2 = next_syzygies(along, pres)?;
        return Ok(Source { truncation: None, p0: pres.target.clone(), d1: pres.clone(), d2, can });
    };
    let mut twists = vec![];
    let mut cols = vec![];
    for (g, mono) in along.restricted_quotient.basis(d).elems {
        twists.push(d);
        cols.push(vops.unit(g as u32, &ring.monomial(mono, k.one())));
    }
    for (g, &t) in pres.target.twists.iter().enumerate() {
        if t > d {
            twists.push(t);
            cols.push(vops.unit(g as u32, &ring.constant(k.one())));
        }
    }
    let h = GradedMatrix { source: GradedFreeModule::new(twists), target: pres.target.clone(), cols };
    let sq = subquotient(ring, &h, pres)?;
    let d2 = next_syzygies(along, &sq.presentation)?;
    Ok(Source { truncation: Some(d), p0: sq.presentation.target.clone(), d1: sq.presentation, d2, can: sq.gens.cols })
}

/// Truncation degree certified for targets whose local cohomology sits at
/// most `shift` degrees above that of the restricted module.
fn truncation_for<K: Field>(along: &PresentationAlongL<K>, shift: i64, extra: i64) -> Option<i64> {
    match along.local_cohomology_bound {
        Some(b) => Some(b + shift + extra),
        None if extra > 0 => Some(along.twists.iter().copied().min().unwrap_or(0) + extra),
        None => None,
    }
}

/// The lifting system for id_{F_L} into a neighborhood module N.
#[derive(Clone, Debug)]
pub struct LiftingSystem<E> {
    pub hom0: HomSlice,
    pub hom1: HomSlice,
    /// u ↦ u∘d_1 on Hom(P_0, N)_0.
    pub delta0: Mat<E>,
    /// Coordinates of P_0 → M_L, placed in block 0.
    pub fixed: Vec<E>,
    /// Coordinates ranging over blocks ≥ 1.
    pub unknowns: Vec<usize>,
    /// A lift of the identity, if one exists.
    pub section: Option<Vec<E>>,
    /// Homomorphisms Q → I·N, spanning all other lifts.
    pub kernel: Vec<Vec<E>>,
}

fn lifting_system<K: Field>(
    k: &K,
    src: &Source<K::Elem>,
    n: &NeighborhoodModule<K::Elem>,
    free_blocks: impl Fn(u32) -> bool,
    fixed: Option<Vec<K::Elem>>,
) -> LiftingSystem<K::Elem> {
    let t = &n.quotient;
    let hom0 = HomSlice::new(&src.p0, t);
    let hom1 = HomSlice::new(&src.d1.source, t);
    let delta0 = hom_slice_matrix(k, t, &src.d1, &hom0, &hom1);
    let fixed = fixed.unwrap_or_else(|| {
        let mut f = vec![k.zero(); hom0.dim];
        for (p, v) in src.can.iter().enumerate() {
            let c = t.coords(k, &hom0.bases[p], v);
            f[hom0.offsets[p]..hom0.offsets[p] + c.len()].copy_from_slice(&c);
        }
        f
    });
    let mut unknowns = vec![];
    for (p, b) in hom0.bases.iter().enumerate() {
        for (s, (comp, _)) in b.elems.iter().enumerate() {
            if free_blocks(n.blocks[*comp]) {
                unknowns.push(hom0.offsets[p] + s);
            }
        }
    }
    let a = delta0.select_cols(&unknowns, k.zero());
    let rhs: Vec<K::Elem> = mat_vec(k, &delta0, &fixed).into_iter().map(|x| k.neg(x)).collect();
    let embed = |x: &[K::Elem], base: &[K::Elem]| {
        let mut u = base.to_vec();
        for (j, &pos) in unknowns.iter().enumerate() {
            u[pos] = k.add(u[pos], x[j]);
        }
        u
    };
    let section = if a.rows == 0 {
        Some(fixed.clone())
    } else {
        solve(k, &a, &rhs).map(|x| embed(&x, &fixed))
    };
    let zero = vec![k.zero(); hom0.dim];
    let kernel = if a.rows == 0 {
        (0..unknowns.len())
            .map(|j| {
                let mut e = vec![k.zero(); unknowns.len()];
                e[j] = k.one();
                embed(&e, &zero)
            })
            .collect()
    } else {
        nullspace(k, &a).iter().map(|x| embed(x, &zero)).collect()
    };
    LiftingSystem { hom0, hom1, delta0, fixed, unknowns, section, kernel }
}

fn splitting_system<K: Field>(seq: &SequenceAi<K>, src: &Source<K::Elem>) -> LiftingSystem<K::Elem> {
    lifting_system(&seq.along.small.field, src, &seq.middle, |b| b >= 1, None)
}

/// Whether (A_i) splits as a sequence of O_L-modules: id_{F_L} lifts to F_L → N_i.
pub fn splitting_test<K: Field>(seq: &SequenceAi<K>) -> Result<bool> {
    let src = source(&seq.along, truncation_for(&seq.along, seq.middle.top_block(), 0))?;
    Ok(splitting_system(seq, &src).section.is_some())
}

/// Re-embeds Hom(P, N_i)_0 coordinates into Hom(P, N')_0 for a module N' whose
/// blocks ≤ i agree with N_i.
fn lift_coords<K: Field>(
    k: &K,
    from: &HomSlice,
    to: &HomSlice,
    u: &[K::Elem],
) -> Result<Vec<K::Elem>> {
    let mut out = vec![k.zero(); to.dim];
    for p in 0..from.bases.len() {
        for (s, (comp, mono)) in from.bases[p].elems.iter().enumerate() {
            let x = u[from.offsets[p] + s];
            if k.is_zero(x) {
                continue;
            }
            let pos = to.bases[p]
                .position(*comp, mono)
                .ok_or_else(|| Error::Invariant("neighborhood modules disagree below the top block".into()))?;
            out[to.offsets[p] + pos] = x;
        }
    }
    Ok(out)
}

/// Ext^1(Q, M_L(−i−1))_0 = Z/B with a fixed complement basis of B in Z.
struct ExtCoordinates<E> {
    t1: HomSlice,
    delta1: Mat<E>,
    /// Columns: a basis of B followed by the complement basis.
    frame: Mat<E>,
    dim_b: usize,
    dim: usize,
}

impl<E: Copy + Eq> ExtCoordinates<E> {
    fn new<K: Field<Elem = E>>(k: &K, src: &Source<E>, t: &Quotient<E>) -> Self {
        let t0 = HomSlice::new(&src.p0, t);
        let t1 = HomSlice::new(&src.d1.source, t);
        let t2 = HomSlice::new(&src.d2.source, t);
        let delta0 = hom_slice_matrix(k, t, &src.d1, &t0, &t1);
        let delta1 = hom_slice_matrix(k, t, &src.d2, &t1, &t2);
        let cycles: Vec<Vec<E>> = if t2.dim == 0 {
            (0..t1.dim)
                .map(|j| {
                    let mut e = vec![k.zero(); t1.dim];
                    e[j] = k.one();
                    e
                })
                .collect()
        } else {
            nullspace(k, &delta1)
        };
        let mut ech = Echelon::new(t1.dim);
        for c in 0..delta0.cols {
            ech.insert(k, &delta0.col(c));
        }
        let dim_b = ech.dim();
        let mut columns: Vec<Vec<E>> = ech.rows.clone();
        for z in &cycles {
            if ech.insert(k, z) {
                columns.push(z.clone());
            }
        }
        let dim = columns.len() - dim_b;
        let mut frame = Mat::new(t1.dim, columns.len(), k.zero());
        for (c, col) in columns.iter().enumerate() {
            for (r, &x) in col.iter().enumerate() {
                frame.set(r, c, x);
            }
        }
        ExtCoordinates { t1, delta1, frame, dim_b, dim }
    }

    /// Class of a cocycle in the complement basis.
    fn class<K: Field<Elem = E>>(&self, k: &K, z: &[E]) -> Result<Vec<E>> {
        if self.delta1.rows > 0 && mat_vec(k, &self.delta1, z).iter().any(|x| !k.is_zero(*x)) {
            return Err(Error::Invariant("obstruction is not a cocycle".into()));
        }
        if self.frame.cols == 0 {
            return Ok(vec![]);
        }
        let x = solve(k, &self.frame, z).ok_or_else(|| Error::Invariant("cocycle outside Z".into()))?;
        Ok(x[self.dim_b..].to_vec())
    }
}

/// Data of one obstruction computation at a fixed truncation degree.
struct Obstruction<E> {
    /// Coordinates of the splitting σ of (A_i) that kills the obstruction.
    section: Vec<E>,
    /// Rows of the reduced class matrix, one per new form, over the basis W.
    forms: Vec<Vec<E>>,
    hom0: HomSlice,
}

/// Reads the class in Ext^1 ⊗ (R/J)_{i+1} of every lift, or None when the
/// truncation is not certified (dimension or ι mismatch).
fn obstruction_at<K: Field>(
    seq: &SequenceAi<K>,
    src: &Source<K::Elem>,
    next: &NeighborhoodModule<K::Elem>,
    ext_dim: usize,
) -> Result<Option<Obstruction<K::Elem>>> {
    let along = &seq.along;
    let k = &along.small.field;
    let i = seq.i;
    let top = i as u32 + 1;
    let sys = splitting_system(seq, src);
    let Some(sigma) = sys.section.clone() else {
        return Err(Error::Invariant(format!("(A_{i}) does not split")));
    };
    let t_next = &next.quotient;
    let n0 = HomSlice::new(&src.p0, t_next);
    let n1 = HomSlice::new(&src.d1.source, t_next);
    let delta_next = hom_slice_matrix(k, t_next, &src.d1, &n0, &n1);

    let target = along.restricted_quotient.shifted(i as i64 + 1);
    let ext = ExtCoordinates::new(k, src, &target);
    if ext.dim != ext_dim {
        return Ok(None);
    }
    let w_basis = seq.ideal.standard_monomials(i as i64 + 1);
    let nw = w_basis.len();

    // ι: M_L(−i−1) ⊗ W → I^{i+1}·N_{i+1}, inverted generator by generator of P_1
    let ops = VecOps::new(k, &t_next.gb.order);
    let mut inverses = vec![];
    for q in 0..n1.bases.len() {
        let top_pos = next.block_positions(&n1.bases[q], top);
        let tb = &ext.t1.bases[q];
        let mut iota = Mat::new(top_pos.len(), nw * tb.len(), k.zero());
        for (wi, w) in w_basis.iter().enumerate() {
            for (s, (g, mono)) in tb.elems.iter().enumerate() {
                let comp = next.component(*g, w).expect("component for a standard monomial") as u32;
                let v = ops.normalize(vec![VTerm { comp, mono: *mono, coef: k.one() }]);
                let c = t_next.coords(k, &n1.bases[q], &v);
                for (r, &pos) in top_pos.iter().enumerate() {
                    iota.set(r, wi * tb.len() + s, c[pos]);
                }
            }
        }
        if iota.rows != iota.cols || rank(k, &iota) != iota.rows {
            return Ok(None);
        }
        inverses.push((top_pos, iota));
    }

    // the class of a lift u, flattened k-major over (ext basis, W)
    let class_of = |u: &[K::Elem]| -> Result<Vec<K::Elem>> {
        let lifted = lift_coords(k, &sys.hom0, &n0, u)?;
        let c = mat_vec(k, &delta_next, &lifted);
        let mut z = vec![vec![k.zero(); ext.t1.dim]; nw];
        for (q, (top_pos, iota)) in inverses.iter().enumerate() {
            let o = n1.offsets[q];
            let block = &c[o..o + n1.bases[q].len()];
            for (s, x) in block.iter().enumerate() {
                if !k.is_zero(*x) && !top_pos.contains(&s) {
                    return Err(Error::Invariant("obstruction not supported in the top block".into()));
                }
            }
            let rhs: Vec<K::Elem> = top_pos.iter().map(|&s| block[s]).collect();
            if iota.rows == 0 {
                continue;
            }
            let x = solve(k, iota, &rhs).expect("ι is invertible");
            let tb = ext.t1.bases[q].len();
            for (wi, zw) in z.iter_mut().enumerate() {
                zw[ext.t1.offsets[q]..ext.t1.offsets[q] + tb].copy_from_slice(&x[wi * tb..(wi + 1) * tb]);
            }
        }
        let mut flat = vec![k.zero(); ext.dim * nw];
        for (wi, zw) in z.iter().enumerate() {
            for (e, a) in ext.class(k, zw)?.into_iter().enumerate() {
                flat[e * nw + wi] = a;
            }
        }
        Ok(flat)
    };

    // canonical representative of the affine space class(σ) + span class(τ_j)
    let len = ext.dim * nw;
    let ntau = sys.kernel.len();
    let mut ech = Echelon::new(len + ntau);
    for (j, tau) in sys.kernel.iter().enumerate() {
        let mut row = class_of(tau)?;
        row.resize(len + ntau, k.zero());
        row[len + j] = k.one();
        ech.insert(k, &row);
    }
    let mut v = class_of(&sigma)?;
    v.resize(len + ntau, k.zero());
    ech.reduce(k, &mut v);
    let mut section = sigma;
    for (j, tau) in sys.kernel.iter().enumerate() {
        let l = v[len + j];
        if !k.is_zero(l) {
            for (s, t) in section.iter_mut().zip(tau) {
                *s = k.add(*s, k.mul(l, *t));
            }
        }
    }
    let mut alpha = Mat::new(ext.dim, nw, k.zero());
    for e in 0..ext.dim {
        for wi in 0..nw {
            alpha.set(e, wi, v[e * nw + wi]);
        }
    }
    let pivots = rref(k, &mut alpha);
    let forms = (0..pivots.len()).map(|r| alpha.row(r).to_vec()).collect();
    Ok(Some(Obstruction { section, forms, hom0: sys.hom0 }))
}

/// One inductive step: from a split (A_i) under J, the forms of degree i + 1
/// whose adjunction makes (A_{i+1}) split. Returns the step and J + (forms).
pub fn obstruction_step<K: Field>(
    seq: &SequenceAi<K>,
    ext_dim: usize,
) -> Result<(ObstructionStep<K::Elem>, TowerIdeal<K>)> {
    let along = &seq.along;
    let k = &along.small.field;
    let i = seq.i;
    let next_order = i + 1;
    let w_basis = seq.ideal.standard_monomials(next_order as i64);
    let trivial = ext_dim == 0 || w_basis.is_empty();

    let mut outcome = None;
    for extra in 0..=CERTIFICATION_BUDGET {
        let shift = if trivial { seq.middle.top_block() } else { i as i64 + 1 };
        let d = truncation_for(along, shift, extra);
        let src = source(along, d)?;
        if trivial {
            if splitting_system(seq, &src).section.is_none() {
                return Err(Error::Invariant(format!("(A_{i}) does not split")));
            }
            outcome = Some((src, None));
            break;
        }
        let next = NeighborhoodModule::build(along, &seq.ideal, next_order)?;
        if let Some(ob) = obstruction_at(seq, &src, &next, ext_dim)? {
            outcome = Some((src, Some(ob)));
            break;
        }
    }
    let Some((src, ob)) = outcome else {
        return Err(Error::Budget(format!(
            "Ext^1 slice at step {i} not certified within {CERTIFICATION_BUDGET} extra truncation degrees"
        )));
    };

    let rring = &along.complement;
    let forms: Vec<Poly<K::Elem>> = match &ob {
        None => vec![],
        Some(ob) => ob
            .forms
            .iter()
            .map(|row| rring.from_terms(w_basis.iter().zip(row).map(|(w, c)| (*w, *c)).collect()))
            .collect(),
    };
    let extended = if forms.is_empty() { seq.ideal.clone() } else { seq.ideal.extend(&forms)? };

    if let Some(ob) = &ob {
        // the chosen σ lifts to the augmented neighborhood
        let next = NeighborhoodModule::build(along, &extended, next_order)?;
        let n0 = HomSlice::new(&src.p0, &next.quotient);
        let fixed = lift_coords(k, &ob.hom0, &n0, &ob.section)?;
        let top = next_order as u32;
        let sys = lifting_system(k, &src, &next, |b| b == top, Some(fixed));
        if sys.section.is_none() {
            return Err(Error::Invariant(format!("augmented ideal does not kill the obstruction at step {i}")));
        }
    }
    let next_seq = sequence_ai(along, &extended, next_order)?;
    if !splitting_test(&next_seq)? {
        return Err(Error::Invariant(format!("(A_{next_order}) does not split after step {i}")));
    }
    let step = ObstructionStep { i, s: forms.len(), forms, ext_dim, truncation: src.truncation };
    Ok((step, extended))
}

/// Default last step: the top of the Ext^1 window, at least 0.
pub fn default_imax(ext: &ExtTable) -> usize {
    ext.hi.max(0) as usize
}

/// J such that every (A_i), i ≤ i_max, splits; one logged step per order.
pub fn build_tower_ideal<K: Field>(
    along: &PresentationAlongL<K>,
    ext: &ExtTable,
    i_max: usize,
) -> Result<TowerIdeal<K>> {
    let mut ideal = TowerIdeal::zero(&along.complement);
    for i in 0..i_max {
        let seq = sequence_ai(along, &ideal, i)?;
        let (step, mut next) = obstruction_step(&seq, ext.get(i as i64 + 1))?;
        if step.s > ext.get(i as i64 + 1) {
            return Err(Error::Invariant(format!("step {i} added more forms than Ext^1 allows")));
        }
        next.log.push(step);
        ideal = next;
    }
    Ok(ideal)
}
