//! Dense linear algebra over a field: echelon forms, rank, kernels, solving.

use super::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Copy> Mat<E> {
    pub fn new(rows: usize, cols: usize, zero: E) -> Self {
        Mat { rows, cols, data: vec![zero; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize, zero: E) -> Self {
        let mut m = Mat::new(rows.len(), cols, zero);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> E {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Mat<E> {
        let mut t = Mat { rows: self.cols, cols: self.rows, data: self.data.clone() };
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Columns listed in `idx`, in that order.
    pub fn select_cols(&self, idx: &[usize], zero: E) -> Mat<E> {
        let mut m = Mat::new(self.rows, idx.len(), zero);
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    pub fn hstack(&self, other: &Mat<E>, zero: E) -> Mat<E> {
        assert_eq!(self.rows, other.rows);
        let mut m = Mat::new(self.rows, self.cols + other.cols, zero);
        for r in 0..self.rows {
            m.data[r * m.cols..r * m.cols + self.cols].copy_from_slice(self.row(r));
            m.data[r * m.cols + self.cols..(r + 1) * m.cols].copy_from_slice(other.row(r));
        }
        m
    }
}

pub fn is_zero_mat<K: Field>(k: &K, m: &Mat<K::Elem>) -> bool {
    m.data.iter().all(|&x| k.is_zero(x))
}

pub fn matmul<K: Field>(k: &K, a: &Mat<K::Elem>, b: &Mat<K::Elem>) -> Mat<K::Elem> {
    assert_eq!(a.cols, b.rows, "matmul shape mismatch");
    let mut out = Mat::new(a.rows, b.cols, k.zero());
    for i in 0..a.rows {
        for l in 0..a.cols {
            let x = a.get(i, l);
            if k.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(l, j);
                if !k.is_zero(y) {
                    let v = k.add(out.get(i, j), k.mul(x, y));
                    out.set(i, j, v);
                }
            }
        }
    }
    out
}

pub fn mat_vec<K: Field>(k: &K, a: &Mat<K::Elem>, v: &[K::Elem]) -> Vec<K::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|i| {
            let mut s = k.zero();
            for (j, &x) in v.iter().enumerate() {
                if !k.is_zero(x) {
                    s = k.add(s, k.mul(a.get(i, j), x));
                }
            }
            s
        })
        .collect()
}

/// In-place reduced row echelon form; returns pivot columns (one per nonzero row).
pub fn rref<K: Field>(k: &K, m: &mut Mat<K::Elem>) -> Vec<usize> {
    let mut pivots = vec![];
    let mut r = 0;
    let cols = m.cols;
    for c in 0..cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !k.is_zero(m.get(i, c))) else { continue };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(m.get(r, c));
        for j in c..cols {
            let v = k.mul(m.get(r, j), inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c);
            if k.is_zero(f) {
                continue;
            }
            for j in c..cols {
                let x = m.get(r, j);
                if !k.is_zero(x) {
                    let v = k.sub(m.get(i, j), k.mul(f, x));
                    m.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<K: Field>(k: &K, m: &Mat<K::Elem>) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    // eliminate along the shorter side
    let mut work = if m.rows > m.cols { m.transpose() } else { m.clone() };
    let cols = work.cols;
    let mut r = 0;
    for c in 0..cols {
        if r == work.rows {
            break;
        }
        let Some(p) = (r..work.rows).find(|&i| !k.is_zero(work.get(i, c))) else { continue };
        if p != r {
            for j in 0..cols {
                work.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(work.get(r, c));
        for i in r + 1..work.rows {
            let f = work.get(i, c);
            if k.is_zero(f) {
                continue;
            }
            let f = k.mul(f, inv);
            for j in c..cols {
                let x = work.get(r, j);
                if !k.is_zero(x) {
                    let v = k.sub(work.get(i, j), k.mul(f, x));
                    work.set(i, j, v);
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of {x : m·x = 0}, one vector per free column, in column order.
pub fn nullspace<K: Field>(k: &K, m: &Mat<K::Elem>) -> Vec<Vec<K::Elem>> {
    let mut w = m.clone();
    let pivots = rref(k, &mut w);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = vec![];
    for f in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![k.zero(); m.cols];
        v[f] = k.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = k.neg(w.get(r, f));
        }
        out.push(v);
    }
    out
}

/// Some x with m·x = b (free variables set to zero), or None.
pub fn solve<K: Field>(k: &K, m: &Mat<K::Elem>, b: &[K::Elem]) -> Option<Vec<K::Elem>> {
    assert_eq!(b.len(), m.rows);
    let mut aug = Mat::new(m.rows, m.cols + 1, k.zero());
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, m.cols, b[r]);
    }
    let pivots = rref(k, &mut aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![k.zero(); m.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug.get(r, m.cols);
    }
    Some(x)
}

/// Incrementally maintained reduced echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub len: usize,
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
}

impl<E: Copy> Echelon<E> {
    pub fn new(len: usize) -> Self {
        Echelon { len, rows: vec![], pivots: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

impl<E: Copy + Eq> Echelon<E> {
    /// Reduces v against the basis (zeroes every pivot coordinate).
    pub fn reduce<K: Field<Elem = E>>(&self, k: &K, v: &mut [E]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p];
            if k.is_zero(f) {
                continue;
            }
            for (j, &x) in row.iter().enumerate() {
                if !k.is_zero(x) {
                    v[j] = k.sub(v[j], k.mul(f, x));
                }
            }
        }
    }

    /// Adds v to the span; returns false if it was already contained.
    pub fn insert<K: Field<Elem = E>>(&mut self, k: &K, v: &[E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(k, &mut w);
        let Some(p) = w.iter().position(|&x| !k.is_zero(x)) else { return false };
        let inv = k.inv(w[p]);
        for x in w.iter_mut() {
            *x = k.mul(*x, inv);
        }
        // keep the basis fully reduced
        for row in self.rows.iter_mut() {
            let f = row[p];
            if !k.is_zero(f) {
                for (j, &x) in w.iter().enumerate() {
                    if !k.is_zero(x) {
                        row[j] = k.sub(row[j], k.mul(f, x));
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }

    pub fn contains<K: Field<Elem = E>>(&self, k: &K, v: &[E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(k, &mut w);
        w.iter().all(|&x| k.is_zero(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;

    #[test]
    fn rank_nullspace_solve() {
        let k = PrimeField::new(101).unwrap();
        let m = Mat::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]], 3, 0);
        assert_eq!(rank(&k, &m), 2);
        let ns = nullspace(&k, &m);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&k, &m, &ns[0]).iter().all(|&x| x == 0));
        let b = mat_vec(&k, &m, &[5, 7, 9]);
        let x = solve(&k, &m, &b).unwrap();
        assert_eq!(mat_vec(&k, &m, &x), b);
        assert!(solve(&k, &m, &[1, 0, 0]).is_none());
    }

    #[test]
    fn echelon_membership() {
        let k = PrimeField::new(7).unwrap();
        let mut e = Echelon::new(3);
        assert!(e.insert(&k, &[0, 1, 2]));
        assert!(e.insert(&k, &[1, 1, 0]));
        assert!(!e.insert(&k, &[2, 3, 2]));
        assert!(e.contains(&k, &[1, 2, 2]));
        assert!(!e.contains(&k, &[0, 0, 1]));
        assert_eq!(e.pivots, vec![0, 1]);
    }
}
