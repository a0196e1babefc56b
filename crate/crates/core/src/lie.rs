//! The bracket interface shared by Chevalley and restricted algebras.

use crate::field::Field;
use crate::linalg::{unit, vec_add, vec_axpy, vec_scale, vec_zero, Matrix, Vector};

pub trait LieAlgebra {
    type F: Field;

    fn field(&self) -> &Self::F;
    fn dim(&self) -> usize;
    fn bracket(&self, x: &[<Self::F as Field>::Elem], y: &[<Self::F as Field>::Elem]) -> Vector<Self::F>;

    /// Matrix of `ad x` in the basis.
    fn ad_matrix(&self, x: &[<Self::F as Field>::Elem]) -> Matrix<Self::F> {
        let n = self.dim();
        let cols: Vec<Vector<Self::F>> = (0..n).map(|j| self.bracket(x, &unit(self.field(), n, j))).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    /// `(ad x)^k (v)`.
    fn ad_power(&self, x: &[<Self::F as Field>::Elem], k: usize, v: &[<Self::F as Field>::Elem]) -> Vector<Self::F> {
        let mut w = v.to_vec();
        for _ in 0..k {
            w = self.bracket(x, &w);
        }
        w
    }

    /// Apply `ad` of each element in turn, innermost last: `ad w_1 ... ad w_k (v)`.
    fn ad_word(&self, word: &[&[<Self::F as Field>::Elem]], v: &[<Self::F as Field>::Elem]) -> Vector<Self::F> {
        let mut w = v.to_vec();
        for x in word.iter().rev() {
            w = self.bracket(x, &w);
        }
        w
    }
}

/// The terms `s_1(x, y), ..., s_{p-1}(x, y)` of Jacobson's formula
/// `(x + y)^[p] = x^[p] + y^[p] + Σ s_i(x, y)`, read off from
/// `ad(tx + y)^{p-1}(x) = Σ i s_i(x, y) t^{i-1}` by expanding in `t`.
pub fn jacobson_terms<L: LieAlgebra>(
    g: &L,
    x: &[<L::F as Field>::Elem],
    y: &[<L::F as Field>::Elem],
) -> Vec<Vector<L::F>> {
    let f = g.field();
    let p = f.characteristic() as usize;
    assert!(p > 1, "Jacobson's formula needs positive characteristic");
    let n = g.dim();
    // coefficient of t^k
    let mut poly: Vec<Vector<L::F>> = vec![x.to_vec()];
    for _ in 0..p - 1 {
        let mut next = vec![vec_zero(f, n); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            let a = g.bracket(y, c);
            let b = g.bracket(x, c);
            next[k] = vec_add(f, &next[k], &a);
            next[k + 1] = vec_add(f, &next[k + 1], &b);
        }
        poly = next;
    }
    coefficients_to_terms(f, &poly[..p - 1])
}

/// Same as [`jacobson_terms`], but from the values of `ad(tx + y)^{p-1}(x)`
/// at `t = 0, ..., p - 2`, solving the Vandermonde system.
pub fn jacobson_terms_interpolated<L: LieAlgebra>(
    g: &L,
    x: &[<L::F as Field>::Elem],
    y: &[<L::F as Field>::Elem],
) -> Vec<Vector<L::F>> {
    let f = g.field();
    let p = f.characteristic() as usize;
    assert!(p > 1, "Jacobson's formula needs positive characteristic");
    let n = g.dim();
    let m = p - 1;
    let values: Vec<Vector<L::F>> = (0..m)
        .map(|t| {
            let tt = f.from_i64(t as i64);
            let z = vec_add(f, &vec_scale(f, &tt, x), y);
            g.ad_power(&z, p - 1, x)
        })
        .collect();
    let vandermonde = Matrix::from_fn(f, m, m, |t, k| f.pow(&f.from_i64(t as i64), k as u64));
    let inv = vandermonde.inverse().expect("distinct nodes");
    let coeffs: Vec<Vector<L::F>> = (0..m)
        .map(|k| {
            let mut acc = vec_zero(f, n);
            for (t, v) in values.iter().enumerate() {
                vec_axpy(f, &mut acc, inv.get(k, t), v);
            }
            acc
        })
        .collect();
    coefficients_to_terms(f, &coeffs)
}

fn coefficients_to_terms<F: Field>(f: &F, coeffs: &[Vector<F>]) -> Vec<Vector<F>> {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let inv = f.inv(&f.from_i64(k as i64 + 1)).expect("i < p");
            vec_scale(f, &inv, c)
        })
        .collect()
}
