//! Points of the zero locus of J in L′ = P^{m−1}, over F_p or a small extension.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::{ExtElem, ExtField, Field, PrimeField, MAX_EXT_DEGREE};
use crate::algebra::monomial::{Mono, MonoOrder};
use crate::algebra::ring::{Poly, Ring};
use crate::algebra::univariate::{self as uni, UPoly};
use crate::algebra::linalg::{rank, Mat};
use crate::error::{Error, Result};

use super::ideal::TowerIdeal;

/// Random restarts of the elimination before giving up.
const ATTEMPTS: usize = 16;
/// Cap on the size of an intermediate Gröbner basis.
const GB_LIMIT: usize = 400;

#[derive(Clone, Debug, PartialEq)]
pub struct PointWitness {
    /// F_p[t]/(modulus); degree 1 for rational points.
    pub field: ExtField,
    /// Projective coordinates, first nonzero one equal to 1.
    pub coords: Vec<ExtElem>,
}

impl PointWitness {
    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn format(&self) -> String {
        let c: Vec<String> = self.coords.iter().map(|x| self.field.format(*x)).collect();
        format!("({})", c.join(" : "))
    }

    /// f(p) for a form over the prime field.
    pub fn eval(&self, ring: &Ring<PrimeField>, f: &Poly<u32>) -> ExtElem {
        let er = Ring::new(self.field.clone(), ring.nvars);
        let g = embed_poly(&self.field, &er, f);
        er.eval(&g, &self.coords)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PointChoice {
    Found(PointWitness),
    /// More generators than m − 1: the zero locus need not meet L′.
    BoundViolation { generators: usize, m: usize },
}

fn embed_poly(f: &ExtField, er: &Ring<ExtField>, p: &Poly<u32>) -> Poly<ExtElem> {
    er.from_terms(p.terms().iter().map(|(m, c)| (*m, f.embed(*c))).collect())
}

fn normalize(f: &ExtField, mut coords: Vec<ExtElem>) -> Vec<ExtElem> {
    if let Some(&lead) = coords.iter().find(|c| !f.is_zero(**c)) {
        let inv = f.inv(lead);
        for c in coords.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    coords
}

fn rational_field(base: &PrimeField) -> ExtField {
    ExtField::new(*base, vec![0, 1]).expect("t is monic of degree 1")
}

/// A point of V(J) ⊂ P^{m−1}, deterministic in the seed.
pub fn choose_point(ideal: &TowerIdeal<PrimeField>, seed: u64) -> Result<PointChoice> {
    let ring = &ideal.ring;
    let k = ring.field;
    let m = ring.nvars;
    let gens = &ideal.generators;
    if gens.len() + 1 > m {
        return Ok(PointChoice::BoundViolation { generators: gens.len(), m });
    }
    // coordinate points first
    let f1 = rational_field(&k);
    for j in 0..m {
        let coords: Vec<ExtElem> = (0..m).map(|i| f1.embed((i == j) as u32)).collect();
        let w = PointWitness { field: f1.clone(), coords };
        if gens.iter().all(|g| f1.is_zero(w.eval(ring, g))) {
            return Ok(PointChoice::Found(w));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        if let Some(w) = attempt(ideal, &mut rng)? {
            return Ok(PointChoice::Found(w));
        }
    }
    Err(Error::Budget(format!(
        "no point of V(J) found over extensions of degree ≤ {MAX_EXT_DEGREE}; \
         J is proper: its Gröbner basis is not (1) and R/J has Krull dimension {}",
        ideal.quotient_dim()
    )))
}

fn random_invertible(k: &PrimeField, m: usize, rng: &mut ChaCha8Rng) -> Mat<u32> {
    loop {
        let mut t = Mat::new(m, m, 0);
        for r in 0..m {
            for c in 0..m {
                t.set(r, c, k.random(rng));
            }
        }
        if rank(k, &t) == m {
            return t;
        }
    }
}

/// One randomized elimination: cut by random hyperplanes, change coordinates,
/// dehomogenize and read a root off a shape-position lex basis.
fn attempt(ideal: &TowerIdeal<PrimeField>, rng: &mut ChaCha8Rng) -> Result<Option<PointWitness>> {
    let ring = &ideal.ring;
    let k = ring.field;
    let m = ring.nvars;
    let t = random_invertible(&k, m, rng);
    // y_i = Σ_j t_ij z_j with z_0 = 1, in k[z_1..z_{m−1}]
    let aff = Ring::with_order(k, m - 1, MonoOrder::Lex);
    let images: Vec<Poly<u32>> = (0..m)
        .map(|i| {
            let mut terms = vec![(Mono::one(), t.get(i, 0))];
            for j in 1..m {
                terms.push((Mono::var(j - 1), t.get(i, j)));
            }
            aff.from_terms(terms)
        })
        .collect();
    let to_aff = |f: &Poly<u32>| ring.substitute(f, &aff, &images, |c| c);
    let mut polys: Vec<Poly<u32>> = ideal.generators.iter().map(to_aff).collect();
    let random_linear = |rng: &mut ChaCha8Rng| {
        let terms = (0..m).map(|i| (Mono::var(i), k.random(rng))).collect();
        ring.from_terms(terms)
    };
    for _ in ideal.generators.len()..m - 1 {
        let l = random_linear(rng);
        polys.push(to_aff(&l));
    }
    let mut gb = lex_groebner(&aff, &polys)?;
    // too few independent conditions: cut further
    let mut cuts = 0;
    while !is_unit(&gb) && !is_zero_dimensional(&aff, &gb) {
        if cuts == m {
            return Ok(None);
        }
        let l = random_linear(rng);
        polys.push(to_aff(&l));
        gb = lex_groebner(&aff, &polys)?;
        cuts += 1;
    }
    if is_unit(&gb) {
        return Ok(None);
    }
    // radical by adding squarefree eliminants
    for v in 0..aff.nvars {
        let g = eliminant(&aff, &polys, v)?;
        polys.push(g);
    }
    let gb = lex_groebner(&aff, &polys)?;
    let Some((g, tails)) = shape(&aff, &gb) else { return Ok(None) };
    let sqf = uni::squarefree(&k, &g);
    let Some((e, part)) = uni::smallest_degree_part(&k, &sqf) else { return Ok(None) };
    if e > MAX_EXT_DEGREE {
        return Ok(None);
    }
    let factor = uni::one_factor_of_degree(&k, &part, e, rng);
    let field = ExtField::new(k, factor)?;
    let theta = field.generator();
    let last = aff.nvars - 1;
    let mut z = vec![field.one()];
    for h in &tails {
        z.push(eval_univariate(&field, h, last, theta));
    }
    z.push(theta);
    let coords: Vec<ExtElem> = (0..m)
        .map(|i| {
            (0..m).fold(field.zero(), |acc, j| field.add(acc, field.mul(field.embed(t.get(i, j)), z[j])))
        })
        .collect();
    let w = PointWitness { field: field.clone(), coords: normalize(&field, coords) };
    for g in &ideal.generators {
        if !field.is_zero(w.eval(ring, g)) {
            return Err(Error::Invariant("chosen point does not lie on V(J)".into()));
        }
    }
    Ok(Some(w))
}

fn eval_univariate(f: &ExtField, h: &Poly<u32>, var: usize, x: ExtElem) -> ExtElem {
    let mut acc = f.zero();
    for (mono, c) in h.terms() {
        let mut v = f.embed(*c);
        for _ in 0..mono.exp(var) {
            v = f.mul(v, x);
        }
        acc = f.add(acc, v);
    }
    acc
}

fn is_unit(gb: &[Poly<u32>]) -> bool {
    gb.iter().any(|g| g.lead().is_some_and(|(m, _)| m.degree() == 0))
}

fn is_pure_power(m: &Mono, v: usize, nvars: usize) -> bool {
    m.exp(v) > 0 && (0..nvars).all(|i| i == v || m.exp(i) == 0)
}

fn is_zero_dimensional(ring: &Ring<PrimeField>, gb: &[Poly<u32>]) -> bool {
    (0..ring.nvars).all(|v| gb.iter().any(|g| is_pure_power(&g.lead().unwrap().0, v, ring.nvars)))
}

/// Squarefree part of the monic generator of I ∩ k[z_v].
fn eliminant(ring: &Ring<PrimeField>, polys: &[Poly<u32>], v: usize) -> Result<Poly<u32>> {
    let last = ring.nvars - 1;
    let swap: Vec<Poly<u32>> = (0..ring.nvars)
        .map(|i| ring.var(if i == v { last } else if i == last { v } else { i }))
        .collect();
    let swapped: Vec<Poly<u32>> = polys.iter().map(|f| ring.substitute(f, ring, &swap, |c| c)).collect();
    let gb = lex_groebner(ring, &swapped)?;
    let g = gb
        .iter()
        .find(|g| g.terms().iter().all(|(m, _)| (0..last).all(|i| m.exp(i) == 0)))
        .ok_or_else(|| Error::Invariant("zero-dimensional ideal without an eliminant".into()))?;
    let sqf = uni::squarefree(&ring.field, &to_upoly(g, last));
    let back = from_upoly(ring, &sqf, last);
    Ok(ring.substitute(&back, ring, &swap, |c| c))
}

fn to_upoly(g: &Poly<u32>, var: usize) -> UPoly {
    let d = g.terms().iter().map(|(m, _)| m.exp(var) as usize).max().unwrap_or(0);
    let mut u = vec![0u32; d + 1];
    for (m, c) in g.terms() {
        u[m.exp(var) as usize] = *c;
    }
    u
}

fn from_upoly(ring: &Ring<PrimeField>, u: &UPoly, var: usize) -> Poly<u32> {
    let terms = u
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut e = vec![0u32; ring.nvars];
            e[var] = i as u32;
            (Mono::from_exponents(&e), *c)
        })
        .collect();
    ring.from_terms(terms)
}

/// For a reduced lex basis {z_j − h_j(z_last)}_j ∪ {g(z_last)}: (g, [h_j]).
fn shape(ring: &Ring<PrimeField>, gb: &[Poly<u32>]) -> Option<(UPoly, Vec<Poly<u32>>)> {
    let n = ring.nvars;
    let last = n - 1;
    if gb.len() != n {
        return None;
    }
    let only_last = |m: &Mono| (0..last).all(|i| m.exp(i) == 0);
    let mut tails = vec![];
    for (j, g) in gb.iter().enumerate().take(last) {
        let (lead, c) = g.lead()?;
        if *lead != Mono::var(j) || *c != 1 || !g.terms()[1..].iter().all(|(m, _)| only_last(m)) {
            return None;
        }
        tails.push(ring.neg(&Poly { terms: g.terms()[1..].to_vec() }));
    }
    let g = &gb[last];
    if !g.terms().iter().all(|(m, _)| only_last(m)) {
        return None;
    }
    Some((to_upoly(g, last), tails))
}

fn monic<K: Field>(ring: &Ring<K>, f: &Poly<K::Elem>) -> Poly<K::Elem> {
    match f.lead() {
        Some((_, c)) => ring.scale(f, ring.field.inv(*c)),
        None => Poly::zero(),
    }
}

/// Full reduction of f modulo g_1..g_s.
fn reduce<K: Field>(ring: &Ring<K>, f: &Poly<K::Elem>, basis: &[Poly<K::Elem>]) -> Poly<K::Elem> {
    let k = &ring.field;
    let mut rest = f.clone();
    let mut out: Vec<(Mono, K::Elem)> = vec![];
    'outer: while let Some(&(lm, lc)) = rest.lead() {
        for g in basis {
            let (gm, gc) = g.lead().unwrap();
            if gm.divides(&lm) {
                let q = gm.quotient(&lm);
                rest = ring.sub(&rest, &ring.mul_term(g, &q, k.div(lc, *gc)));
                continue 'outer;
            }
        }
        out.push((lm, lc));
        rest = Poly { terms: rest.terms()[1..].to_vec() };
    }
    ring.from_terms(out)
}

/// Reduced Gröbner basis of arbitrary (inhomogeneous) polynomials in the
/// ring's order, sorted by descending leading monomial.
pub fn lex_groebner<K: Field>(ring: &Ring<K>, gens: &[Poly<K::Elem>]) -> Result<Vec<Poly<K::Elem>>> {
    let mut basis: Vec<Poly<K::Elem>> = vec![];
    for f in gens {
        let r = reduce(ring, f, &basis);
        if !r.is_zero() {
            basis.push(monic(ring, &r));
        }
    }
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (a, _) = basis[i].lead().unwrap();
        let (b, _) = basis[j].lead().unwrap();
        if a.is_coprime(b) {
            continue;
        }
        let l = a.lcm(b);
        let s = ring.sub(
            &ring.mul_term(&basis[i], &a.quotient(&l), ring.field.one()),
            &ring.mul_term(&basis[j], &b.quotient(&l), ring.field.one()),
        );
        let r = reduce(ring, &s, &basis);
        if r.is_zero() {
            continue;
        }
        if basis.len() >= GB_LIMIT {
            return Err(Error::Budget(format!("lex Gröbner basis exceeded {GB_LIMIT} elements")));
        }
        let n = basis.len();
        basis.push(monic(ring, &r));
        pairs.extend((0..n).map(|i| (i, n)));
    }
    // minimize, then inter-reduce
    let leads: Vec<Mono> = basis.iter().map(|g| g.lead().unwrap().0).collect();
    let mut keep: Vec<Poly<K::Elem>> = vec![];
    for (i, g) in basis.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, l)| j != i && l.divides(&leads[i]) && (l != &leads[i] || j < i));
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = vec![];
    for i in 0..keep.len() {
        let others: Vec<Poly<K::Elem>> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let head = Poly { terms: keep[i].terms()[..1].to_vec() };
        let tail = Poly { terms: keep[i].terms()[1..].to_vec() };
        out.push(ring.add(&head, &reduce(ring, &tail, &others)));
    }
    out.sort_by(|f, g| ring.cmp(&g.lead().unwrap().0, &f.lead().unwrap().0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(m: usize) -> Ring<PrimeField> {
        Ring::new(PrimeField::default(), m)
    }

    #[test]
    fn zero_ideal_gives_first_coordinate_point() {
        let r = ring(2);
        let PointChoice::Found(w) = choose_point(&TowerIdeal::zero(&r), 1).unwrap() else { panic!() };
        assert_eq!(w.format(), "(1 : 0)");
    }

    #[test]
    fn coordinate_hyperplane() {
        let r = ring(2);
        let j = TowerIdeal::generated_by(&r, vec![r.var(0)]).unwrap();
        let PointChoice::Found(w) = choose_point(&j, 1).unwrap() else { panic!() };
        assert_eq!(w.format(), "(0 : 1)");
    }

    #[test]
    fn two_generic_forms_in_three_variables() {
        let r = ring(3);
        let k = r.field;
        let (y0, y1, y2) = (r.var(0), r.var(1), r.var(2));
        let q = r.add(&r.add(&r.mul(&y0, &y0), &r.scale(&r.mul(&y1, &y2), k.from_i64(3))), &r.mul(&y2, &y2));
        let l = r.add(&r.add(&y0, &r.scale(&y1, k.from_i64(5))), &r.scale(&y2, k.from_i64(-7)));
        let j = TowerIdeal::generated_by(&r, vec![q.clone(), l.clone()]).unwrap();
        let PointChoice::Found(w) = choose_point(&j, 9).unwrap() else { panic!() };
        let f = &w.field;
        assert!(f.is_zero(w.eval(&r, &q)) && f.is_zero(w.eval(&r, &l)));
        assert_eq!(choose_point(&j, 9).unwrap(), PointChoice::Found(w));
    }

    #[test]
    fn too_many_generators() {
        let r = ring(2);
        let j = TowerIdeal::generated_by(&r, vec![r.var(0), r.var(1)]).unwrap();
        assert_eq!(choose_point(&j, 0).unwrap(), PointChoice::BoundViolation { generators: 2, m: 2 });
    }

    #[test]
    fn lex_basis_of_a_shape_ideal() {
        let r = Ring::with_order(PrimeField::default(), 2, MonoOrder::Lex);
        let k = r.field;
        // z0 − z1^2, z1^2 − 4
        let f = r.sub(&r.var(0), &r.mul(&r.var(1), &r.var(1)));
        let g = r.sub(&r.mul(&r.var(1), &r.var(1)), &r.constant(k.from_i64(4)));
        let gb = lex_groebner(&r, &[f, g]).unwrap();
        assert_eq!(gb.len(), 2);
        assert_eq!(gb[0], r.sub(&r.var(0), &r.constant(k.from_i64(4))));
    }
}
