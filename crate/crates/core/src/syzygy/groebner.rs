//! Buchberger's algorithm for homogeneous submodules of graded free modules.
//!
//! Pairs are processed degree by degree (normal strategy), ties broken by
//! index, with the Gebauer–Möller criteria. Processing by degree also tells
//! which input generators are minimal: an input of degree d is redundant iff
//! it reduces to zero against everything found in degrees ≤ d before it.

use std::collections::BTreeMap;

use crate::algebra::field::Field;
use crate::algebra::module::{GradedFreeModule, ModuleOrder, VecOps, Vector};
use crate::algebra::monomial::Mono;
use crate::algebra::slice::SliceBasis;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct Lead {
    comp: u32,
    mono: Mono,
}

/// A reduced Gröbner basis together with its order and ambient module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<E> {
    pub module: GradedFreeModule,
    pub order: ModuleOrder,
    pub elems: Vec<Vector<E>>,
    /// Indices of input generators that are part of a minimal generating set.
    pub minimal_inputs: Vec<usize>,
    leads: Vec<Lead>,
    by_comp: Vec<Vec<usize>>,
}

struct Builder<'a, K: Field> {
    field: &'a K,
    order: &'a ModuleOrder,
    module: &'a GradedFreeModule,
    elems: Vec<Vector<K::Elem>>,
    leads: Vec<Lead>,
    by_comp: Vec<Vec<usize>>,
    // (degree, i, j) -> lcm
    pairs: BTreeMap<(i64, usize, usize), Mono>,
}

impl<'a, K: Field> Builder<'a, K> {
    fn ops(&self) -> VecOps<'a, K> {
        VecOps::new(self.field, self.order)
    }

    fn reduce(&self, v: Vector<K::Elem>) -> Vector<K::Elem> {
        reduce_with(self.field, self.order, &self.elems, &self.leads, &self.by_comp, v, None)
    }

    fn degree(&self, comp: u32, mono: &Mono) -> i64 {
        mono.degree() as i64 + self.module.twists[comp as usize]
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Mono) -> Vector<K::Elem> {
        let ops = self.ops();
        let a = ops.mul_term(&self.elems[i], &self.leads[i].mono.quotient(lcm), self.field.one());
        let qj = self.leads[j].mono.quotient(lcm);
        ops.add_mul(&a, &self.elems[j], &qj, self.field.neg(self.field.one()))
    }

    fn add(&mut self, v: Vector<K::Elem>) {
        let v = self.ops().make_monic(&v);
        let lt = v.lead().expect("adding zero element");
        let (comp, mono) = (lt.comp, lt.mono);
        let new = self.elems.len();

        // candidate pairs with the new element
        let mut cands: Vec<(usize, Mono)> =
            self.by_comp[comp as usize].iter().map(|&i| (i, self.leads[i].mono.lcm(&mono))).collect();

        // Gebauer–Möller B: old pairs made redundant by the new lead
        let doomed: Vec<(i64, usize, usize)> = self
            .pairs
            .iter()
            .filter(|((_, i, j), lcm)| {
                self.leads[*i].comp == comp
                    && mono.divides(lcm)
                    && self.leads[*i].mono.lcm(&mono) != **lcm
                    && self.leads[*j].mono.lcm(&mono) != **lcm
            })
            .map(|(k, _)| *k)
            .collect();
        for k in doomed {
            self.pairs.remove(&k);
        }

        // M: drop (new, i) when another candidate's lcm properly divides its lcm
        let snapshot = cands.clone();
        cands.retain(|(_, l)| !snapshot.iter().any(|(_, o)| o != l && o.divides(l)));
        // F: one pair per lcm, keeping the smallest index
        cands.sort_by_key(|(i, _)| *i);
        let mut seen: Vec<Mono> = vec![];
        for (i, l) in cands {
            if seen.contains(&l) {
                continue;
            }
            seen.push(l);
            let d = self.degree(comp, &l);
            self.pairs.insert((d, i, new), l);
        }

        self.by_comp[comp as usize].push(new);
        self.leads.push(Lead { comp, mono });
        self.elems.push(v);
    }
}

/// Full reduction of v modulo the elements; `skip` excludes one element.
fn reduce_with<K: Field>(
    field: &K,
    order: &ModuleOrder,
    elems: &[Vector<K::Elem>],
    leads: &[Lead],
    by_comp: &[Vec<usize>],
    mut v: Vector<K::Elem>,
    skip: Option<usize>,
) -> Vector<K::Elem> {
    let ops = VecOps::new(field, order);
    let mut pos = 0;
    while pos < v.terms.len() {
        let t = v.terms[pos];
        let div = by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&i| Some(i) != skip && leads[i].mono.divides(&t.mono));
        match div {
            Some(i) => {
                let q = leads[i].mono.quotient(&t.mono);
                let lc = elems[i].terms[0].coef;
                let c = field.neg(field.div(t.coef, lc));
                v = ops.add_mul(&v, &elems[i], &q, c);
            }
            None => pos += 1,
        }
    }
    v
}

/// Gröbner basis of the submodule generated by `gens` in `module`.
pub fn groebner<K: Field>(
    field: &K,
    module: &GradedFreeModule,
    order: &ModuleOrder,
    gens: &[Vector<K::Elem>],
) -> Result<GroebnerBasis<K::Elem>> {
    let ops = VecOps::new(field, order);
    let mut inputs: Vec<(i64, usize, Vector<K::Elem>)> = vec![];
    for (i, g) in gens.iter().enumerate() {
        if g.terms.iter().any(|t| t.comp as usize >= module.rank()) {
            return Err(Error::Malformed(format!("generator {i} has a component out of range")));
        }
        if !g.is_homogeneous(module) {
            return Err(Error::Malformed(format!("generator {i} is not homogeneous")));
        }
        if let Some(d) = g.degree(module) {
            inputs.push((d, i, ops.resort(g)));
        }
    }
    inputs.sort_by_key(|(d, i, _)| (*d, *i));

    let mut b = Builder {
        field,
        order,
        module,
        elems: vec![],
        leads: vec![],
        by_comp: vec![vec![]; module.rank()],
        pairs: BTreeMap::new(),
    };
    let mut minimal = vec![];
    let mut next_input = 0;
    loop {
        let pair_deg = b.pairs.keys().next().map(|k| k.0);
        let input_deg = inputs.get(next_input).map(|x| x.0);
        let d = match (pair_deg, input_deg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(c)) => c,
            (Some(a), Some(c)) => a.min(c),
        };
        while let Some((&key, _)) = b.pairs.iter().next() {
            if key.0 != d {
                break;
            }
            let lcm = b.pairs.remove(&key).unwrap();
            let s = b.spoly(key.1, key.2, &lcm);
            let r = b.reduce(s);
            if !r.is_zero() {
                b.add(r);
            }
        }
        while next_input < inputs.len() && inputs[next_input].0 == d {
            let (_, idx, v) = inputs[next_input].clone();
            next_input += 1;
            let r = b.reduce(v);
            if !r.is_zero() {
                minimal.push(idx);
                b.add(r);
            }
        }
    }

    // tail-reduce; leading terms are already minimal
    let mut elems = b.elems.clone();
    for i in 0..elems.len() {
        let r = reduce_with(field, order, &elems, &b.leads, &b.by_comp, elems[i].clone(), Some(i));
        elems[i] = r;
    }
    // canonical order: ascending degree, then descending lead
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    idx.sort_by(|&i, &j| {
        let (di, dj) = (elems[i].degree(module).unwrap(), elems[j].degree(module).unwrap());
        di.cmp(&dj).then_with(|| {
            let (a, c) = (&elems[i].terms[0], &elems[j].terms[0]);
            order.cmp(c.comp, &c.mono, a.comp, &a.mono)
        })
    });
    let elems: Vec<Vector<K::Elem>> = idx.iter().map(|&i| elems[i].clone()).collect();
    let leads: Vec<Lead> = elems.iter().map(|e| Lead { comp: e.terms[0].comp, mono: e.terms[0].mono }).collect();
    let mut by_comp = vec![vec![]; module.rank()];
    for (i, l) in leads.iter().enumerate() {
        by_comp[l.comp as usize].push(i);
    }
    minimal.sort_unstable();
    Ok(GroebnerBasis { module: module.clone(), order: order.clone(), elems, minimal_inputs: minimal, leads, by_comp })
}

impl<E: Copy + Eq> GroebnerBasis<E> {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Leading monomials per component.
    pub fn lead_monomials(&self) -> Vec<Vec<Mono>> {
        let mut out = vec![vec![]; self.module.rank()];
        for l in &self.leads {
            out[l.comp as usize].push(l.mono);
        }
        out
    }

    pub fn lead_comp(&self, i: usize) -> u32 {
        self.leads[i].comp
    }

    pub fn is_standard(&self, comp: usize, mono: &Mono) -> bool {
        !self.by_comp[comp].iter().any(|&i| self.leads[i].mono.divides(mono))
    }

    /// Standard monomials of degree d, in slice-basis order.
    pub fn standard_monomials(&self, nvars: usize, d: i64) -> Vec<(usize, Mono)> {
        SliceBasis::new(nvars, &self.module, d)
            .elems
            .into_iter()
            .filter(|(c, m)| self.is_standard(*c, m))
            .collect()
    }

    pub fn reduce<K: Field<Elem = E>>(&self, field: &K, v: &Vector<E>) -> Vector<E> {
        let ops = VecOps::new(field, &self.order);
        reduce_with(field, &self.order, &self.elems, &self.leads, &self.by_comp, ops.resort(v), None)
    }

    pub fn contains<K: Field<Elem = E>>(&self, field: &K, v: &Vector<E>) -> bool {
        self.reduce(field, v).is_zero()
    }
}
