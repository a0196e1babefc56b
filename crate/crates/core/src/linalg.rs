//! Dense exact linear algebra over a [`Field`].

use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::Field;

pub type Vector<F> = Vec<<F as Field>::Elem>;

/// Row-major dense matrix over `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_i64(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self::from_fn(field, rows, cols, |i, j| field.from_i64(entries[i * cols + j]))
    }

    pub fn from_rows(field: &F, rows: &[Vector<F>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &F, nrows: usize, cols: &[Vector<F>]) -> Self {
        Self::from_fn(field, nrows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let a = a.clone();
                let orow = k * other.cols;
                let base = i * other.cols;
                for j in 0..other.cols {
                    let b = &other.data[orow + j];
                    if !f.is_zero(b) {
                        out.data[base + j] = f.mul_add(&out.data[base + j], &a, b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vector<F> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.mul_add(&acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> F::Elem {
        let f = &self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            let pivot_row: Vec<F::Elem> = self.row(r)[c..].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let factor = f.neg(&factor);
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !f.is_zero(pv) {
                        let j = c + off;
                        let v = f.mul_add(self.get(i, j), &factor, pv);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : Ax = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vector<F>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `Ax = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vector<F>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let aug = Self::from_fn(f, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let aug = Self::from_fn(f, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                f.one()
            } else {
                f.zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(f, n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(|a| self.field.to_json(a)).collect()))
                .collect(),
        )
    }
}

pub fn vec_zero<F: Field>(f: &F, n: usize) -> Vector<F> {
    vec![f.zero(); n]
}

pub fn vec_is_zero<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn vec_add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vector<F> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

/// `acc += c * v`
pub fn vec_axpy<F: Field>(f: &F, acc: &mut [F::Elem], c: &F::Elem, v: &[F::Elem]) {
    if f.is_zero(c) {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !f.is_zero(x) {
            *a = f.mul_add(a, c, x);
        }
    }
}

/// Standard basis vector.
pub fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vector<F> {
    let mut v = vec_zero(f, n);
    v[i] = f.one();
    v
}

/// Rank of a family of vectors.
pub fn span_rank<F: Field>(f: &F, vectors: &[Vector<F>]) -> usize {
    let mut e = Echelon::new(f, vectors.first().map_or(0, |v| v.len()));
    vectors.iter().filter(|v| e.insert(v)).count()
}

/// Incrementally built row-echelon basis of a subspace of `F^dim`.
///
/// Each stored row is reduced against all earlier pivots, so a new vector can
/// be reduced by a single pass in insertion order.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<(usize, Vector<F>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, dim: usize) -> Self {
        Echelon { field: field.clone(), dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn reduce(&self, v: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if !f.is_zero(&w[*p]) {
                let c = f.neg(&w[*p]);
                vec_axpy(f, &mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        vec_is_zero(&self.field, &self.reduce(v))
    }

    /// Adds `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field.clone();
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[p]).expect("nonzero");
        let w = vec_scale(&f, &inv, &w);
        self.rows.push((p, w));
        true
    }

    pub fn basis(&self) -> Vec<Vector<F>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// A fixed basis of a subspace together with a coordinate solver.
#[derive(Clone, Debug)]
pub struct Basis<F: Field> {
    field: F,
    vectors: Vec<Vector<F>>,
    // echelon rows with the combination of `vectors` producing each
    rows: Vec<(usize, Vector<F>, Vector<F>)>,
}

impl<F: Field> Basis<F> {
    /// Fails if the vectors are linearly dependent.
    pub fn new(field: &F, vectors: Vec<Vector<F>>) -> Result<Self> {
        let f = field.clone();
        let k = vectors.len();
        let mut rows: Vec<(usize, Vector<F>, Vector<F>)> = Vec::new();
        for (idx, v) in vectors.iter().enumerate() {
            let mut w = v.clone();
            let mut comb = unit(&f, k, idx);
            for (p, row, rc) in &rows {
                if !f.is_zero(&w[*p]) {
                    let c = f.neg(&w[*p]);
                    vec_axpy(&f, &mut w, &c, row);
                    vec_axpy(&f, &mut comb, &c, rc);
                }
            }
            let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
                return Err(Error::Inconsistent("basis vectors are linearly dependent".into()));
            };
            let inv = f.inv(&w[p]).expect("nonzero");
            rows.push((p, vec_scale(&f, &inv, &w), vec_scale(&f, &inv, &comb)));
        }
        Ok(Basis { field: f, vectors, rows })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector<F>] {
        &self.vectors
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[F::Elem]) -> Option<Vector<F>> {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut out = vec_zero(f, self.vectors.len());
        for (p, row, rc) in &self.rows {
            if !f.is_zero(&w[*p]) {
                let c = w[*p].clone();
                let nc = f.neg(&c);
                vec_axpy(f, &mut w, &nc, row);
                vec_axpy(f, &mut out, &c, rc);
            }
        }
        if vec_is_zero(f, &w) {
            Some(out)
        } else {
            None
        }
    }

    /// `sum c_i v_i`.
    pub fn combine(&self, coeffs: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let n = self.vectors.first().map_or(0, |v| v.len());
        let mut out = vec_zero(f, n);
        for (c, v) in coeffs.iter().zip(&self.vectors) {
            vec_axpy(f, &mut out, c, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rank_and_kernel_over_f5() {
        let f = PrimeField::new(5).unwrap();
        let m = Matrix::from_i64(&f, 2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(vec_is_zero(&f, &m.apply(v)));
        }
    }

    #[test]
    fn inverse_over_rationals() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, 2, 2, &[2, -1, -1, 2]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&q, 2));
        let s = Matrix::from_i64(&q, 2, 2, &[1, 2, 2, 4]);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_i64(&f, 2, 2, &[1, 1, 1, 1]);
        assert!(m.solve(&[1, 2]).is_none());
        let x = m.solve(&[3, 3]).unwrap();
        assert_eq!(m.apply(&x), vec![3, 3]);
    }

    #[test]
    fn basis_coordinates_roundtrip() {
        let f = PrimeField::new(3).unwrap();
        let b = Basis::new(&f, vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let v = b.combine(&[2, 1]);
        assert_eq!(b.coords(&v), Some(vec![2, 1]));
        assert!(b.coords(&[1, 0, 0]).is_none());
        assert!(Basis::new(&f, vec![vec![1, 1], vec![2, 2]]).is_err());
    }

    #[test]
    fn echelon_membership() {
        let f = PrimeField::new(2).unwrap();
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(&[1, 1, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[1, 0, 1]));
        assert!(e.contains(&[1, 0, 1]));
        assert!(!e.contains(&[0, 0, 1]));
    }
}
