//! Lie algebras of simply connected groups from a Chevalley basis, over a
//! prime field or the rationals.

mod constants;
pub mod scenarios;

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

pub use constants::SparseInt;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::lie::LieAlgebra;
use crate::linalg::{unit, vec_is_zero, vec_zero, Echelon, Matrix, Vector};
use crate::rootsys::{Cocharacter, LeviPair, NodeSet, Root, RootSystem};

/// Chevalley basis `e_α (α ∈ Φ)`, `h_i = α_i^∨` with integer structure
/// constants reduced into `F`.
#[derive(Debug)]
pub struct ChevalleyAlgebra<F: Field> {
    field: F,
    sys: RootSystem,
    roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    table: Vec<SparseInt>,
    coeffs: Vec<Vec<(u32, F::Elem)>>,
    ppower: OnceLock<std::result::Result<PPowerSolver<F>, String>>,
}

#[derive(Debug)]
struct PPowerSolver<F: Field> {
    // selected equations: coordinate k of [y, b_t]
    rows: Vec<(usize, usize)>,
    inverse: Matrix<F>,
}

impl<F: Field> ChevalleyAlgebra<F> {
    pub fn new(sys: &RootSystem, field: F) -> Result<Self> {
        let (roots, table) = constants::chevalley_table(sys)?;
        let coeffs = table
            .iter()
            .map(|e| e.iter().map(|&(k, c)| (k, field.from_i64(c))).filter(|(_, c)| !field.is_zero(c)).collect())
            .collect();
        let root_index = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        Ok(ChevalleyAlgebra { field, sys: sys.clone(), roots, root_index, table, coeffs, ppower: OnceLock::new() })
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    /// Integer structure constants of `[b_i, b_j]`.
    pub fn integer_bracket(&self, i: usize, j: usize) -> &SparseInt {
        &self.table[i * self.dim() + j]
    }

    /// Root of a basis element, `None` for the Cartan part.
    pub fn basis_root(&self, i: usize) -> Option<&Root> {
        self.roots.get(i)
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.root_index.get(r).copied()
    }

    /// Index of `h_i` (0-based `i`).
    pub fn cartan_index(&self, i: usize) -> usize {
        self.roots.len() + i
    }

    pub fn root_vector(&self, r: &Root) -> Result<Vector<F>> {
        let i = self.root_index(r).ok_or_else(|| Error::InvalidParameter(format!("{r} is not a root")))?;
        Ok(unit(&self.field, self.dim(), i))
    }

    pub fn simple_root_vector(&self, i: usize) -> Vector<F> {
        unit(&self.field, self.dim(), i)
    }

    /// `Σ x_i h_i` for a cocharacter.
    pub fn torus_element(&self, lambda: &Cocharacter) -> Vector<F> {
        let mut v = vec_zero(&self.field, self.dim());
        for (i, &x) in lambda.0.iter().enumerate() {
            v[self.cartan_index(i)] = self.field.from_i64(x);
        }
        v
    }

    /// Label such as `e_23465432`, `e_-00100000` or `h_3`.
    pub fn label(&self, i: usize) -> String {
        match self.roots.get(i) {
            Some(r) => format!("e_{}", r.label()),
            None => format!("h_{}", i - self.roots.len() + 1),
        }
    }

    /// Sparse JSON object of the nonzero coordinates.
    pub fn sparse_json(&self, v: &[F::Elem]) -> Value {
        let mut m = Map::new();
        for (i, c) in v.iter().enumerate() {
            if !self.field.is_zero(c) {
                m.insert(self.label(i), self.field.to_json(c));
            }
        }
        Value::Object(m)
    }

    /// Basis indices carrying a nonzero coordinate.
    pub fn support(&self, v: &[F::Elem]) -> Vec<usize> {
        v.iter().enumerate().filter(|(_, c)| !self.field.is_zero(c)).map(|(i, _)| i).collect()
    }

    /// Degree of each basis element for the grading with `α_i` in degree
    /// `weights[i]`; the Cartan part sits in degree 0.
    pub fn degrees(&self, weights: &[i64]) -> Vec<i64> {
        let mut d: Vec<i64> = self.roots.iter().map(|r| r.0.iter().zip(weights).map(|(c, w)| c * w).sum()).collect();
        d.extend(std::iter::repeat_n(0, self.rank()));
        d
    }

    /// Degrees for the grading by a cocharacter.
    pub fn cocharacter_degrees(&self, lambda: &Cocharacter) -> Vec<i64> {
        self.degrees(&self.sys.simple_weights(lambda))
    }

    /// Degrees for the grading by the coefficients of the simple roots outside `J`.
    pub fn levi_degrees(&self, j: NodeSet) -> Vec<i64> {
        let w: Vec<i64> = (0..self.rank()).map(|i| if j.contains(i) { 0 } else { 1 }).collect();
        self.degrees(&w)
    }

    /// Whether every nonzero coordinate of `v` has degree `d`.
    pub fn is_homogeneous(&self, v: &[F::Elem], degrees: &[i64], d: i64) -> bool {
        self.support(v).iter().all(|&i| degrees[i] == d)
    }

    /// Basis of `{x ∈ span(indices) : [e, x] = 0}`.
    pub fn centralizer_on(&self, e: &[F::Elem], indices: &[usize]) -> Vec<Vector<F>> {
        let f = &self.field;
        let n = self.dim();
        let images: Vec<Vector<F>> = indices.iter().map(|&i| self.bracket(e, &unit(f, n, i))).collect();
        let mut targets: Vec<usize> = images.iter().flat_map(|v| self.support(v)).collect();
        targets.sort_unstable();
        targets.dedup();
        let m = Matrix::from_fn(f, targets.len(), indices.len(), |r, c| images[c][targets[r]].clone());
        m.kernel()
            .into_iter()
            .map(|k| {
                let mut v = vec_zero(f, n);
                for (c, &i) in indices.iter().enumerate() {
                    v[i] = k[c].clone();
                }
                v
            })
            .collect()
    }

    /// Centralizer of `e` split by the degrees of a grading preserved by `ad e`.
    pub fn centralizer_graded(&self, e: &[F::Elem], degrees: &[i64]) -> GradedCentralizer<F> {
        let mut by_deg: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, &d) in degrees.iter().enumerate() {
            by_deg.entry(d).or_default().push(i);
        }
        let pieces = by_deg.into_iter().map(|(d, idx)| (d, self.centralizer_on(e, &idx))).collect();
        GradedCentralizer { pieces }
    }

    /// Whether `(ad e)^2 : g(-2) -> g(2)` is bijective for the given grading.
    pub fn check_ad2_bijective(&self, e: &[F::Elem], degrees: &[i64]) -> bool {
        let f = &self.field;
        let n = self.dim();
        let src: Vec<usize> = (0..n).filter(|&i| degrees[i] == -2).collect();
        let dst: Vec<usize> = (0..n).filter(|&i| degrees[i] == 2).collect();
        if src.len() != dst.len() {
            return false;
        }
        let mut m = Matrix::zeros(f, dst.len(), src.len());
        for (c, &i) in src.iter().enumerate() {
            let img = self.ad_power(e, 2, &unit(f, n, i));
            for (r, &k) in dst.iter().enumerate() {
                m.set(r, c, img[k].clone());
            }
        }
        m.rank() == src.len()
    }

    /// The restricted `p`-th power: the unique `y` with `ad y = (ad x)^p`.
    ///
    /// Requires positive characteristic and a trivial center; the result is
    /// verified against the full matrix `(ad x)^p`.
    pub fn p_power(&self, x: &[F::Elem]) -> Result<Vector<F>> {
        let p = self.field.characteristic();
        if p == 0 {
            return Err(Error::InvalidParameter("p-th powers need positive characteristic".into()));
        }
        let solver = self
            .ppower
            .get_or_init(|| self.build_solver().map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|_| Error::NonTrivialCenter)?;
        let adx_p = self.ad_matrix(x).pow(p);
        let rhs: Vector<F> = solver.rows.iter().map(|&(k, t)| adx_p.get(k, t).clone()).collect();
        let y = solver.inverse.apply(&rhs);
        if self.ad_matrix(&y) != adx_p {
            return Err(Error::NoSolution("(ad x)^p is not inner".into()));
        }
        Ok(y)
    }

    fn build_solver(&self) -> Result<PPowerSolver<F>> {
        let f = &self.field;
        let n = self.dim();
        let l = self.rank();
        let np = self.sys.num_positive();
        let mut order: Vec<usize> = (0..l).map(|i| self.cartan_index(i)).collect();
        order.extend((0..l).flat_map(|i| [i, np + i]));
        order.extend(0..n);
        let mut ech = Echelon::new(f, n);
        let mut rows = Vec::new();
        let mut chosen = Vec::new();
        for t in order {
            if ech.rank() == n {
                break;
            }
            // row k of the map y -> [y, b_t]
            let mut by_row: BTreeMap<usize, Vector<F>> = BTreeMap::new();
            for i in 0..n {
                for (k, c) in &self.coeffs[i * n + t] {
                    by_row.entry(*k as usize).or_insert_with(|| vec_zero(f, n))[i] = c.clone();
                }
            }
            for (k, row) in by_row {
                if ech.insert(&row) {
                    rows.push((k, t));
                    chosen.push(row);
                }
            }
        }
        if ech.rank() < n {
            return Err(Error::NonTrivialCenter);
        }
        let inverse = Matrix::from_rows(f, &chosen).inverse().ok_or(Error::NonTrivialCenter)?;
        Ok(PPowerSolver { rows, inverse })
    }

    /// Whether some iterate of the `p`-th power map kills `x`.
    pub fn is_p_nilpotent(&self, x: &[F::Elem]) -> Result<bool> {
        let p = self.field.characteristic();
        let mut y = x.to_vec();
        let mut bound = 1;
        let mut steps = 0;
        while bound < self.dim() as u64 + 1 {
            bound *= p;
            steps += 1;
        }
        for _ in 0..=steps {
            if vec_is_zero(&self.field, &y) {
                return Ok(true);
            }
            y = self.p_power(&y)?;
        }
        Ok(vec_is_zero(&self.field, &y))
    }

    /// `Σ_{i ∈ S} e_{α_i}`.
    pub fn regular_in_levi(&self, s: NodeSet) -> Vector<F> {
        let mut v = vec_zero(&self.field, self.dim());
        for i in s.indices() {
            v[i] = self.field.one();
        }
        v
    }

    /// Checks the Jacobi identity on basis triples, all of them or a seeded sample.
    pub fn verify_jacobi(&self, sample: Option<(usize, u64)>) -> Result<()> {
        let n = self.dim();
        let check = |i: usize, j: usize, k: usize| -> Result<()> {
            let mut acc: HashMap<u32, i64> = HashMap::new();
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                for &(m, x) in &self.table[b * n + c] {
                    for &(r, y) in &self.table[a * n + m as usize] {
                        *acc.entry(r).or_insert(0) += x * y;
                    }
                }
            }
            if acc.values().any(|&v| v != 0) {
                return Err(Error::BrokenAxiom(format!(
                    "Jacobi identity at ({}, {}, {})",
                    self.label(i),
                    self.label(j),
                    self.label(k)
                )));
            }
            Ok(())
        };
        match sample {
            None => {
                for i in 0..n {
                    for j in i + 1..n {
                        for k in j + 1..n {
                            check(i, j, k)?;
                        }
                    }
                }
            }
            Some((count, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..count {
                    check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> LieAlgebra for ChevalleyAlgebra<F> {
    type F = F;

    fn field(&self) -> &F {
        &self.field
    }

    fn dim(&self) -> usize {
        self.roots.len() + self.sys.rank()
    }

    fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Vector<F> {
        let f = &self.field;
        let n = self.dim();
        let mut out = vec_zero(f, n);
        let ys: Vec<usize> = (0..n).filter(|&j| !f.is_zero(&y[j])).collect();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for &j in &ys {
                let c = f.mul(xi, &y[j]);
                for (k, s) in &self.coeffs[i * n + j] {
                    let k = *k as usize;
                    out[k] = f.mul_add(&out[k], &c, s);
                }
            }
        }
        out
    }
}

/// `z(e)` split into homogeneous pieces.
#[derive(Clone, Debug)]
pub struct GradedCentralizer<F: Field> {
    pub pieces: BTreeMap<i64, Vec<Vector<F>>>,
}

impl<F: Field> GradedCentralizer<F> {
    pub fn dim(&self, degree: i64) -> usize {
        self.pieces.get(&degree).map_or(0, |v| v.len())
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(|v| v.len()).sum()
    }

    /// Flags a nonzero piece in negative degree; this cannot happen for a
    /// grading attached to `e`.
    pub fn has_negative_part(&self) -> bool {
        self.pieces.iter().any(|(&d, v)| d < 0 && !v.is_empty())
    }

    /// Basis of the positive-degree part.
    pub fn positive_part(&self) -> Vec<Vector<F>> {
        self.pieces.iter().filter(|(&d, _)| d > 0).flat_map(|(_, v)| v.iter().cloned()).collect()
    }
}

/// An `sl(2)`-triple `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
#[derive(Clone, Debug)]
pub struct Sl2Triple<F: Field> {
    pub e: Vector<F>,
    pub h: Vector<F>,
    pub f: Vector<F>,
}

impl ChevalleyAlgebra<Rationals> {
    /// Completes `e ∈ g(2; λ)` to a triple with `h` the torus element of `λ`
    /// and `f ∈ g(-2; λ)`.
    pub fn complete_sl2(&self, e: &[<Rationals as Field>::Elem], lambda: &Cocharacter) -> Result<Sl2Triple<Rationals>> {
        let q = Rationals;
        let n = self.dim();
        let h = self.torus_element(lambda);
        let deg = self.cocharacter_degrees(lambda);
        if self.bracket(&h, e) != e.iter().map(|x| x * q.from_i64(2)).collect::<Vec<_>>() {
            return Err(Error::InvalidParameter("e is not in degree 2".into()));
        }
        let src: Vec<usize> = (0..n).filter(|&i| deg[i] == -2).collect();
        let cols: Vec<Vector<Rationals>> = src.iter().map(|&i| self.bracket(e, &unit(&q, n, i))).collect();
        let m = Matrix::from_columns(&q, n, &cols);
        let x = m.solve(&h).ok_or_else(|| Error::NoSolution("no f with [e, f] = h".into()))?;
        let mut f = vec_zero(&q, n);
        for (c, &i) in src.iter().enumerate() {
            f[i] = x[c].clone();
        }
        let minus2f: Vec<_> = f.iter().map(|x| x * q.from_i64(-2)).collect();
        if self.bracket(&h, &f) != minus2f {
            return Err(Error::Inconsistent("[h, f] != -2f".into()));
        }
        Ok(Sl2Triple { e: e.to_vec(), h, f })
    }

    /// A Richardson element of the parabolic of `L_I` given by `J`: a
    /// combination of the degree-2 root vectors of `L_I` with small random
    /// coefficients, accepted once `ad e : l_I(-2) -> [l_I, l_I](0)` is bijective.
    pub fn levi_richardson(&self, pair: LeviPair, lambda: &Cocharacter, seed: u64) -> Result<Vector<Rationals>> {
        let q = Rationals;
        let n = self.dim();
        let deg = self.cocharacter_degrees(lambda);
        let in_levi = |i: usize| match self.basis_root(i) {
            Some(r) => r.support().is_subset(pair.i),
            None => false,
        };
        let deg2: Vec<usize> = (0..n).filter(|&i| in_levi(i) && deg[i] == 2).collect();
        let degm2: Vec<usize> = (0..n).filter(|&i| in_levi(i) && deg[i] == -2).collect();
        // [l_I, l_I](0): degree-0 root vectors of L_I and the coroots of I
        let target_dim = (0..n).filter(|&i| in_levi(i) && deg[i] == 0).count() + pair.i.len();
        if degm2.len() != target_dim {
            return Err(Error::InvalidParameter(format!("{pair} is not distinguished")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..64 {
            let mut e = vec_zero(&q, n);
            for &i in &deg2 {
                e[i] = q.from_i64(rng.gen_range(1..=7));
            }
            let imgs: Vec<Vector<Rationals>> = degm2.iter().map(|&i| self.bracket(&e, &unit(&q, n, i))).collect();
            if crate::linalg::span_rank(&q, &imgs) == degm2.len() {
                return Ok(e);
            }
        }
        Err(Error::Inconsistent(format!("no Richardson element found for {pair}")))
    }

    /// For `(I, J)` in `P(Π)`: with `e` Richardson in `l_I` and `h̃` the torus
    /// element of `λ_J`, checks that `ad h̃` is invertible on the positive part
    /// of `z(e)` graded by `λ_{I,J}`.
    pub fn check_torus_invertible(&self, pair: LeviPair, seed: u64) -> Result<bool> {
        let (_, zplus, _) = self.positive_centralizer(pair, seed)?;
        let full = NodeSet::full(self.rank());
        let lam_j = self.sys.solve_cocharacter(LeviPair { i: full, j: pair.j })?;
        let ht = self.torus_element(&lam_j);
        let imgs: Vec<Vector<Rationals>> = zplus.iter().map(|z| self.bracket(&ht, z)).collect();
        Ok(crate::linalg::span_rank(&Rationals, &imgs) == zplus.len())
    }

    /// Same setting as [`Self::check_torus_invertible`], but decided through weights:
    /// the positive part of `z(e)` meets `g(0; λ_J)` only in zero.
    pub fn check_no_zero_weight(&self, pair: LeviPair, seed: u64) -> Result<bool> {
        let (_, zplus, _) = self.positive_centralizer(pair, seed)?;
        let full = NodeSet::full(self.rank());
        let lam_j = self.sys.solve_cocharacter(LeviPair { i: full, j: pair.j })?;
        let deg_j = self.cocharacter_degrees(&lam_j);
        // dim(S ∩ D) = dim S - rank of S projected off the coordinates of D
        let n = self.dim();
        let off: Vec<usize> = (0..n).filter(|&i| deg_j[i] != 0).collect();
        let proj: Vec<Vector<Rationals>> = zplus.iter().map(|z| off.iter().map(|&i| z[i].clone()).collect()).collect();
        let r = if off.is_empty() { 0 } else { crate::linalg::span_rank(&Rationals, &proj) };
        Ok(r == zplus.len())
    }

    #[allow(clippy::type_complexity)]
    fn positive_centralizer(
        &self,
        pair: LeviPair,
        seed: u64,
    ) -> Result<(Vector<Rationals>, Vec<Vector<Rationals>>, Sl2Triple<Rationals>)> {
        let lambda = self.sys.solve_cocharacter(pair)?;
        let e = self.levi_richardson(pair, &lambda, seed)?;
        let triple = self.complete_sl2(&e, &lambda)?;
        let gc = self.centralizer_graded(&e, &self.cocharacter_degrees(&lambda));
        if gc.has_negative_part() {
            return Err(Error::Inconsistent(format!("{pair}: centralizer has negative degrees")));
        }
        Ok((e, gc.positive_part(), triple))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn alg(t: &str, p: u64) -> ChevalleyAlgebra<PrimeField> {
        ChevalleyAlgebra::new(&RootSystem::parse(t).unwrap(), PrimeField::new(p).unwrap()).unwrap()
    }

    #[test]
    fn jacobi_holds_exhaustively_in_small_rank() {
        for t in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
            alg(t, 5).verify_jacobi(None).unwrap();
        }
    }

    #[test]
    fn jacobi_in_exceptional_types() {
        for t in ["F4", "E6", "E7"] {
            alg(t, 7).verify_jacobi(None).unwrap();
        }
        alg("E8", 7).verify_jacobi(Some((300_000, 11))).unwrap();
    }

    #[test]
    fn dimensions() {
        assert_eq!(alg("G2", 5).dim(), 14);
        assert_eq!(alg("B3", 7).dim(), 21);
    }

    #[test]
    fn cartan_acts_by_pairing() {
        let g = alg("A2", 5);
        let f = *g.field();
        let h1 = unit(&f, g.dim(), g.cartan_index(0));
        let e2 = g.root_vector(&Root(vec![0, 1])).unwrap();
        // <alpha_2, alpha_1^vee> = -1
        assert_eq!(g.bracket(&h1, &e2), e2.iter().map(|x| f.neg(x)).collect::<Vec<_>>());
    }

    #[test]
    fn p_power_of_root_vectors_and_coroots() {
        let g = alg("G2", 5);
        let f = *g.field();
        let e = g.root_vector(&Root(vec![1, 0])).unwrap();
        assert!(vec_is_zero(&f, &g.p_power(&e).unwrap()));
        let h = unit(&f, g.dim(), g.cartan_index(1));
        assert_eq!(g.p_power(&h).unwrap(), h);
    }

    #[test]
    fn gl_like_center_is_detected_in_sl_p() {
        // sl(3) in characteristic 3 has a center
        let g = alg("A2", 3);
        let f = *g.field();
        assert!(matches!(g.p_power(&unit(&f, g.dim(), 0)), Err(Error::NonTrivialCenter)));
    }

    #[test]
    fn sl2_completion_for_regular_a2() {
        let sys = RootSystem::parse("A2").unwrap();
        let g = ChevalleyAlgebra::new(&sys, Rationals).unwrap();
        let full = NodeSet::full(2);
        let lam = sys.solve_cocharacter(LeviPair { i: full, j: NodeSet::empty() }).unwrap();
        let e = g.regular_in_levi(full);
        let t = g.complete_sl2(&e, &lam).unwrap();
        assert_eq!(g.bracket(&t.e, &t.f), t.h);
    }
}

