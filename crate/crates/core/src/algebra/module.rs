//! Elements of graded free modules and module monomial orders.

use std::cmp::Ordering;

use super::field::Field;
use super::monomial::{Mono, MonoOrder};
use super::ring::{Poly, Ring};

/// ⊕_j S(−twists[j]); generator j sits in degree twists[j].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Same module with the opposite grading, i.e. Hom(F, S).
    pub fn dual(&self) -> Self {
        GradedFreeModule { twists: self.twists.iter().map(|t| -t).collect() }
    }

    pub fn shift(&self, by: i64) -> Self {
        GradedFreeModule { twists: self.twists.iter().map(|t| t + by).collect() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        GradedFreeModule { twists }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VTerm<E> {
    pub comp: u32,
    pub mono: Mono,
    pub coef: E,
}

/// A module element: terms sorted descending in some [`ModuleOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<E> {
    pub terms: Vec<VTerm<E>>,
}

impl<E: Copy> Vector<E> {
    pub fn zero() -> Self {
        Vector { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm<E>> {
        self.terms.first()
    }

    /// Degree in the free module with the given twists; None for zero.
    pub fn degree(&self, f: &GradedFreeModule) -> Option<i64> {
        self.terms.first().map(|t| t.mono.degree() as i64 + f.twists[t.comp as usize])
    }

    pub fn is_homogeneous(&self, f: &GradedFreeModule) -> bool {
        match self.degree(f) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|t| t.mono.degree() as i64 + f.twists[t.comp as usize] == d),
        }
    }

    /// Coefficient polynomial at component `c`, as unsorted terms.
    pub fn component_terms(&self, c: u32) -> Vec<(Mono, E)> {
        self.terms.iter().filter(|t| t.comp == c).map(|t| (t.mono, t.coef)).collect()
    }

    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }
}

/// Block / term-over-position order. Components in a lower block rank
/// higher; inside a block the monomial decides, then the lower component.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModuleOrder {
    pub mono: MonoOrder,
    pub blocks: Vec<u32>,
}

impl ModuleOrder {
    pub fn top(mono: MonoOrder) -> Self {
        ModuleOrder { mono, blocks: vec![] }
    }

    pub fn with_blocks(mono: MonoOrder, blocks: Vec<u32>) -> Self {
        ModuleOrder { mono, blocks }
    }

    #[inline]
    fn block(&self, c: u32) -> u32 {
        self.blocks.get(c as usize).copied().unwrap_or(0)
    }

    #[inline]
    pub fn cmp(&self, c1: u32, m1: &Mono, c2: u32, m2: &Mono) -> Ordering {
        if !self.blocks.is_empty() {
            let (b1, b2) = (self.block(c1), self.block(c2));
            if b1 != b2 {
                return b2.cmp(&b1);
            }
        }
        match self.mono.cmp(m1, m2) {
            Ordering::Equal => c2.cmp(&c1),
            o => o,
        }
    }

    #[inline]
    pub fn cmp_terms<E>(&self, a: &VTerm<E>, b: &VTerm<E>) -> Ordering {
        self.cmp(a.comp, &a.mono, b.comp, &b.mono)
    }
}

/// Arithmetic on [`Vector`]s for a fixed field and order.
pub struct VecOps<'a, K: Field> {
    pub field: &'a K,
    pub order: &'a ModuleOrder,
}

impl<'a, K: Field> VecOps<'a, K> {
    pub fn new(field: &'a K, order: &'a ModuleOrder) -> Self {
        VecOps { field, order }
    }

    pub fn normalize(&self, mut terms: Vec<VTerm<K::Elem>>) -> Vector<K::Elem> {
        let k = self.field;
        terms.sort_by(|a, b| self.order.cmp_terms(b, a));
        let mut out: Vec<VTerm<K::Elem>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.comp == t.comp && l.mono == t.mono => l.coef = k.add(l.coef, t.coef),
                _ => out.push(t),
            }
        }
        out.retain(|t| !k.is_zero(t.coef));
        Vector { terms: out }
    }

    /// Re-sorts a vector produced under another order.
    pub fn resort(&self, v: &Vector<K::Elem>) -> Vector<K::Elem> {
        let mut terms = v.terms.clone();
        terms.sort_by(|a, b| self.order.cmp_terms(b, a));
        Vector { terms }
    }

    /// a + c·m·b
    pub fn add_mul(
        &self,
        a: &Vector<K::Elem>,
        b: &Vector<K::Elem>,
        m: &Mono,
        c: K::Elem,
    ) -> Vector<K::Elem> {
        let k = self.field;
        if k.is_zero(c) || b.is_zero() {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let bt = |j: usize| {
            let t = &b.terms[j];
            VTerm { comp: t.comp, mono: t.mono.mul(m), coef: k.mul(t.coef, c) }
        };
        while i < a.terms.len() || j < b.terms.len() {
            if i == a.terms.len() {
                out.push(bt(j));
                j += 1;
                continue;
            }
            if j == b.terms.len() {
                out.push(a.terms[i]);
                i += 1;
                continue;
            }
            let t = bt(j);
            match self.order.cmp_terms(&a.terms[i], &t) {
                Ordering::Greater => {
                    out.push(a.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(t);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = k.add(a.terms[i].coef, t.coef);
                    if !k.is_zero(s) {
                        out.push(VTerm { coef: s, ..t });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, a: &Vector<K::Elem>, b: &Vector<K::Elem>) -> Vector<K::Elem> {
        self.add_mul(a, b, &Mono::one(), self.field.one())
    }

    pub fn sub(&self, a: &Vector<K::Elem>, b: &Vector<K::Elem>) -> Vector<K::Elem> {
        self.add_mul(a, b, &Mono::one(), self.field.neg(self.field.one()))
    }

    pub fn scale(&self, a: &Vector<K::Elem>, c: K::Elem) -> Vector<K::Elem> {
        self.mul_term(a, &Mono::one(), c)
    }

    pub fn mul_term(&self, a: &Vector<K::Elem>, m: &Mono, c: K::Elem) -> Vector<K::Elem> {
        let k = self.field;
        if k.is_zero(c) {
            return Vector::zero();
        }
        Vector {
            terms: a
                .terms
                .iter()
                .map(|t| VTerm { comp: t.comp, mono: t.mono.mul(m), coef: k.mul(t.coef, c) })
                .collect(),
        }
    }

    pub fn mul_poly(&self, ring: &Ring<K>, a: &Vector<K::Elem>, p: &Poly<K::Elem>) -> Vector<K::Elem> {
        let _ = ring;
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = self.add_mul(&acc, a, m, *c);
        }
        acc
    }

    /// p·e_comp
    pub fn unit(&self, comp: u32, p: &Poly<K::Elem>) -> Vector<K::Elem> {
        self.normalize(
            p.terms().iter().map(|(m, c)| VTerm { comp, mono: *m, coef: *c }).collect(),
        )
    }

    pub fn make_monic(&self, a: &Vector<K::Elem>) -> Vector<K::Elem> {
        match a.lead() {
            None => a.clone(),
            Some(t) => self.scale(a, self.field.inv(t.coef)),
        }
    }

    /// Relabels components through `map` (None drops the term).
    pub fn remap(&self, a: &Vector<K::Elem>, map: impl Fn(u32) -> Option<u32>) -> Vector<K::Elem> {
        self.normalize(
            a.terms
                .iter()
                .filter_map(|t| map(t.comp).map(|c| VTerm { comp: c, ..*t }))
                .collect(),
        )
    }
}
