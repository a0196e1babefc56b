//! Restricted Lie algebras over `F_p` given by structure constants and the
//! `p`-th powers of a basis.
//!
//! The `p`-th power of an arbitrary element is assembled from the basis
//! powers with Jacobson's formula. On top of that sit nilpotency and
//! semisimplicity tests, a search for tori, the pointwise form of the
//! recurrence satisfied by iterated `p`-th powers, and the dimension
//! formulas for the varieties `C(e)`.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classical::{centralizer_basis, nilpotent_jordan_matrix, Partition};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::lie::{jacobson_terms, jacobson_terms_interpolated, LieAlgebra};
use crate::linalg::{span_rank, unit, vec_add, vec_axpy, vec_is_zero, vec_scale, vec_zero, Basis, Echelon, Matrix, Vector};
use crate::rootsys::RootSystem;

type V = Vector<PrimeField>;

/// How the correction terms `s_i` of Jacobson's formula are extracted.
/// Largest algebra (in elements) searched exhaustively for tori.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
const DFS_NODE_LIMIT: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum JacobsonMethod {
    /// Values at `t = 0..p-2`, then a Vandermonde solve.
    #[default]
    Interpolation,
    /// Expansion with `t` kept as an indeterminate.
    Symbolic,
}

#[derive(Clone, Debug)]
pub struct RestrictedAlgebra {
    field: PrimeField,
    dim: usize,
    // [b_i, b_j] at i * dim + j
    table: Vec<Vec<(u32, u64)>>,
    ppowers: Vec<V>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    p: u64,
    dim: usize,
    brackets: Vec<(usize, usize, Vec<i64>)>,
    ppowers: Vec<Vec<i64>>,
}

impl RestrictedAlgebra {
    /// From a dense bracket table (`brackets[i][j]` is `[b_i, b_j]`) and the
    /// basis `p`-th powers. Checks the axioms before returning.
    pub fn new(field: PrimeField, brackets: Vec<Vec<V>>, ppowers: Vec<V>) -> Result<Self> {
        let dim = ppowers.len();
        if brackets.len() != dim || brackets.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!("bracket table is not {dim} x {dim}")));
        }
        let table = brackets
            .iter()
            .flatten()
            .map(|v| {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch(format!("bracket vector of length {}", v.len())));
                }
                Ok(v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, &c)| (k as u32, c)).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        let alg = RestrictedAlgebra { field, dim, table, ppowers };
        alg.verify_axioms()?;
        Ok(alg)
    }

    /// `gl(n, F_p)` with basis `E_{ij}` at index `i * n + j`.
    pub fn gl(n: usize, p: u64) -> Result<Self> {
        let f = PrimeField::new(p)?;
        let basis: Vec<Matrix<PrimeField>> = (0..n * n)
            .map(|k| {
                let mut m = Matrix::zeros(&f, n, n);
                m.set(k / n, k % n, 1);
                m
            })
            .collect();
        Self::from_matrices(&f, &basis)
    }

    /// The subalgebra of `gl(n)` spanned by the given matrices, which must be
    /// closed under commutators and associative `p`-th powers.
    pub fn from_matrices(f: &PrimeField, basis: &[Matrix<PrimeField>]) -> Result<Self> {
        let flat: Vec<V> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let span = Basis::new(f, flat)?;
        let coords = |m: &Matrix<PrimeField>| {
            span.coords(m.entries()).ok_or(Error::NotInSpan)
        };
        let mut brackets = Vec::with_capacity(basis.len());
        for a in basis {
            brackets.push(basis.iter().map(|b| coords(&a.commutator(b))).collect::<Result<Vec<_>>>()?);
        }
        let ppowers = basis.iter().map(|a| coords(&a.pow(f.p()))).collect::<Result<Vec<_>>>()?;
        Self::new(*f, brackets, ppowers)
    }

    /// The centralizer `z(e)` in `gl(n, F_p)` of the nilpotent of Jordan type `λ`.
    pub fn gl_centralizer(lambda: &Partition, p: u64) -> Result<Self> {
        let f = PrimeField::new(p)?;
        let e = nilpotent_jordan_matrix(&f, lambda);
        Self::from_matrices(&f, &centralizer_basis(&e, None))
    }

    /// Diagonal matrices in `gl(n, F_p)`.
    pub fn diagonal(n: usize, p: u64) -> Result<Self> {
        let f = PrimeField::new(p)?;
        let basis: Vec<_> = (0..n).map(|i| Matrix::from_fn(&f, n, n, |r, c| u64::from(r == i && c == i))).collect();
        Self::from_matrices(&f, &basis)
    }

    /// Strictly upper triangular matrices in `gl(n, F_p)`.
    pub fn strictly_upper(n: usize, p: u64) -> Result<Self> {
        let f = PrimeField::new(p)?;
        let basis: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| Matrix::from_fn(&f, n, n, |r, c| u64::from(r == i && c == j)))
            .collect();
        Self::from_matrices(&f, &basis)
    }

    /// Reads `{p, dim, brackets: [[i, j, [coeffs]]], ppowers: [[coeffs]]}`.
    /// Brackets not listed are zero; `[b_j, b_i]` is filled in by antisymmetry.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        let f = PrimeField::new(file.p)?;
        let n = file.dim;
        let conv = |v: &[i64]| -> Result<V> {
            if v.len() != n {
                return Err(Error::DimensionMismatch(format!("coefficient vector of length {} in dimension {n}", v.len())));
            }
            Ok(v.iter().map(|&c| f.from_i64(c)).collect())
        };
        let mut brackets = vec![vec![vec_zero(&f, n); n]; n];
        for (i, j, c) in &file.brackets {
            if *i >= n || *j >= n {
                return Err(Error::Parse(format!("bracket index ({i}, {j}) out of range")));
            }
            let v = conv(c)?;
            brackets[*j][*i] = v.iter().map(|x| f.neg(x)).collect();
            brackets[*i][*j] = v;
        }
        if file.ppowers.len() != n {
            return Err(Error::DimensionMismatch(format!("{} p-th powers for dimension {n}", file.ppowers.len())));
        }
        let ppowers = file.ppowers.iter().map(|v| conv(v)).collect::<Result<Vec<_>>>()?;
        Self::new(f, brackets, ppowers)
    }

    pub fn to_json(&self) -> Value {
        let n = self.dim;
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket(&unit(&self.field, n, i), &unit(&self.field, n, j));
                if !vec_is_zero(&self.field, &v) {
                    brackets.push(json!([i, j, v]));
                }
            }
        }
        json!({"p": self.p(), "dim": n, "brackets": brackets, "ppowers": self.ppowers})
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    /// Antisymmetry, Jacobi on all basis triples when `dim ≤ 12`, and
    /// `ad(b_i^[p]) = (ad b_i)^p` for every basis element.
    pub fn verify_axioms(&self) -> Result<()> {
        let f = &self.field;
        let n = self.dim;
        let b = |i: usize| unit(f, n, i);
        for i in 0..n {
            for j in 0..n {
                let s = vec_add(f, &self.bracket(&b(i), &b(j)), &self.bracket(&b(j), &b(i)));
                if !vec_is_zero(f, &s) {
                    return Err(Error::BrokenAxiom(format!("[b{i}, b{j}] is not antisymmetric")));
                }
            }
        }
        if n <= 12 {
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        let t1 = self.bracket(&b(i), &self.bracket(&b(j), &b(k)));
                        let t2 = self.bracket(&b(j), &self.bracket(&b(k), &b(i)));
                        let t3 = self.bracket(&b(k), &self.bracket(&b(i), &b(j)));
                        if !vec_is_zero(f, &vec_add(f, &vec_add(f, &t1, &t2), &t3)) {
                            return Err(Error::BrokenAxiom(format!("Jacobi identity at ({i}, {j}, {k})")));
                        }
                    }
                }
            }
        }
        for i in 0..n {
            if self.ad_matrix(&self.ppowers[i]) != self.ad_matrix(&b(i)).pow(self.p()) {
                return Err(Error::BrokenAxiom(format!("ad(b{i}^[p]) != (ad b{i})^p")));
            }
        }
        Ok(())
    }

    /// `x^[p]` by Jacobson's formula.
    pub fn p_power(&self, x: &[u64]) -> V {
        self.p_power_with(x, JacobsonMethod::default())
    }

    /// `x^[p]` by folding `x = Σ c_i b_i` one term at a time:
    /// `(u + v)^[p] = u^[p] + v^[p] + Σ s_i(u, v)` and `(c b)^[p] = c^p b^[p]`.
    pub fn p_power_with(&self, x: &[u64], method: JacobsonMethod) -> V {
        let f = &self.field;
        let n = self.dim;
        let mut u = vec_zero(f, n);
        let mut up = vec_zero(f, n);
        for (i, c) in x.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let v = vec_scale(f, c, &unit(f, n, i));
            // c^p = c in F_p
            let vp = vec_scale(f, c, &self.ppowers[i]);
            let terms = match method {
                JacobsonMethod::Interpolation => jacobson_terms_interpolated(self, &u, &v),
                JacobsonMethod::Symbolic => jacobson_terms(self, &u, &v),
            };
            let mut next = vec_add(f, &up, &vp);
            for t in &terms {
                next = vec_add(f, &next, t);
            }
            u = vec_add(f, &u, &v);
            up = next;
        }
        up
    }

    /// `x^[p]^k`.
    pub fn p_power_iter(&self, x: &[u64], k: usize) -> V {
        (0..k).fold(x.to_vec(), |y, _| self.p_power(&y))
    }

    /// Number of `p`-power iterations that certainly reaches zero on a
    /// nilpotent element: `⌈log_p n⌉ + n`.
    fn nil_bound(&self) -> usize {
        let mut k = 0;
        let mut q = 1u64;
        while q < self.dim as u64 {
            q *= self.p();
            k += 1;
        }
        k + self.dim
    }

    pub fn is_nilpotent(&self, x: &[u64]) -> bool {
        let mut y = x.to_vec();
        for _ in 0..=self.nil_bound() {
            if vec_is_zero(&self.field, &y) {
                return true;
            }
            y = self.p_power(&y);
        }
        vec_is_zero(&self.field, &y)
    }

    /// Whether `x` lies in the span of `x^[p], x^[p]^2, ...`.
    pub fn is_semisimple(&self, x: &[u64]) -> bool {
        let mut span = Echelon::new(&self.field, self.dim);
        let mut y = x.to_vec();
        for _ in 0..=self.dim {
            y = self.p_power(&y);
            span.insert(&y);
        }
        span.contains(x)
    }

    /// Least `r` with `x^[p]^r` semisimple.
    pub fn semisimple_index(&self, x: &[u64]) -> usize {
        let mut y = x.to_vec();
        let mut r = 0;
        while !self.is_semisimple(&y) {
            y = self.p_power(&y);
            r += 1;
            assert!(r <= self.nil_bound(), "p-power iterates never became semisimple");
        }
        r
    }

    /// Largest [`Self::semisimple_index`] over the samples. This is only a
    /// lower bound for the exponent `e(L)`, which quantifies over a dense
    /// open set that sampling cannot certify.
    pub fn semisimple_exponent(&self, samples: &[V]) -> Result<usize> {
        if samples.is_empty() {
            return Err(Error::InvalidParameter("no samples".into()));
        }
        Ok(samples.iter().map(|x| self.semisimple_index(x)).max().unwrap_or(0))
    }

    /// Every element, in lexicographic order of coordinates.
    pub fn elements(&self) -> impl Iterator<Item = V> + '_ {
        let p = self.p();
        let n = self.dim;
        let total = p.checked_pow(n as u32).unwrap_or(u64::MAX);
        (0..total).map(move |mut k| {
            let mut v = vec![0; n];
            for c in v.iter_mut().rev() {
                *c = k % p;
                k /= p;
            }
            v
        })
    }

    /// `p^n`, saturating.
    pub fn size(&self) -> u64 {
        self.p().checked_pow(self.dim as u32).unwrap_or(u64::MAX)
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> V {
        (0..self.dim).map(|_| rng.gen_range(0..self.p())).collect()
    }

    /// Whether `x^[p]^{s+e}` lies in the span of `x^[p]^{i+e}`, `0 ≤ i < s`.
    pub fn check_power_span(&self, s: usize, e: usize, x: &[u64]) -> bool {
        let mut powers = vec![self.p_power_iter(x, e)];
        for _ in 0..s {
            let next = self.p_power(powers.last().expect("nonempty"));
            powers.push(next);
        }
        let target = powers.pop().expect("s + 1 powers");
        let mut span = Echelon::new(&self.field, self.dim);
        for v in &powers {
            span.insert(v);
        }
        span.contains(&target)
    }

    fn commutes(&self, x: &[u64], y: &[u64]) -> bool {
        vec_is_zero(&self.field, &self.bracket(x, y))
    }

    /// Checks a candidate torus basis.
    pub fn validate_toral(&self, elements: &[V]) -> bool {
        let f = &self.field;
        elements.iter().all(|t| self.p_power(t) == *t)
            && elements.iter().enumerate().all(|(i, a)| elements[i + 1..].iter().all(|b| self.commutes(a, b)))
            && span_rank(f, elements) == elements.len()
    }

    /// Commuting, linearly independent toral elements, as many as found.
    ///
    /// With `n p^n ≤ budget` and `p^n` ≤ [`EXHAUSTIVE_LIMIT`] every toral element is listed and a depth-first
    /// search finds a largest torus; otherwise a seeded random search
    /// repeatedly takes the semisimple part of a random element of the
    /// centralizer of the current torus and keeps the fixed points of the
    /// `p`-map on the abelian algebra it generates. The size is a lower
    /// bound for the maximal toral dimension either way, and exact in the
    /// exhaustive mode unless the search itself ran out of budget.
    pub fn toral_rank_search(&self, budget: u64, seed: u64) -> ToralSearch {
        let exhaustive_cost = (self.dim as u64).saturating_mul(self.size());
        if exhaustive_cost <= budget && self.size() <= EXHAUSTIVE_LIMIT {
            self.toral_exhaustive(budget.min(DFS_NODE_LIMIT))
        } else {
            self.toral_random(seed)
        }
    }

    fn toral_exhaustive(&self, budget: u64) -> ToralSearch {
        let f = &self.field;
        let toral: Vec<V> = self.elements().filter(|x| !vec_is_zero(f, x) && self.p_power(x) == *x).collect();
        let index: HashMap<V, usize> = toral.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mut dfs = ToralDfs { alg: self, toral: &toral, index, best: Vec::new(), nodes: 0, budget, complete: true };
        let all: Vec<usize> = (0..toral.len()).collect();
        dfs.search(&mut Vec::new(), &[vec_zero(f, self.dim)], &all);
        let elements = dfs.best.iter().map(|&i| toral[i].clone()).collect();
        ToralSearch { witness: ToralWitness { elements }, exhaustive: true, complete: dfs.complete }
    }

    fn toral_random(&self, seed: u64) -> ToralSearch {
        let f = &self.field;
        let n = self.dim;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut torus: Vec<V> = Vec::new();
        let mut misses = 0;
        while misses < 24 && torus.len() < n {
            let cent = self.centralizer_of(&torus);
            let mut x = vec_zero(f, n);
            for b in &cent {
                vec_axpy(f, &mut x, &rng.gen_range(0..self.p()), b);
            }
            let y = self.p_power_iter(&x, self.nil_bound());
            let grown = self.split_part(&torus, &y);
            if grown.len() > torus.len() {
                torus = grown;
                misses = 0;
            } else {
                misses += 1;
            }
        }
        ToralSearch { witness: ToralWitness { elements: torus }, exhaustive: false, complete: true }
    }

    /// Basis of `{x : [t, x] = 0 for all t}`.
    pub fn centralizer_of(&self, ts: &[V]) -> Vec<V> {
        let f = &self.field;
        let n = self.dim;
        if ts.is_empty() {
            return (0..n).map(|i| unit(f, n, i)).collect();
        }
        let cols: Vec<V> = (0..n)
            .map(|j| ts.iter().flat_map(|t| self.bracket(t, &unit(f, n, j))).collect())
            .collect();
        Matrix::from_columns(f, n * ts.len(), &cols).kernel()
    }

    /// Toral elements of the abelian restricted subalgebra generated by the
    /// torus and `y`: the kernel of `π - id`, which is `F_p`-linear there.
    fn split_part(&self, torus: &[V], y: &[u64]) -> Vec<V> {
        let f = &self.field;
        let mut span = Echelon::new(f, self.dim);
        let mut gens: Vec<V> = Vec::new();
        for t in torus {
            if span.insert(t) {
                gens.push(t.clone());
            }
        }
        let mut cur = y.to_vec();
        for _ in 0..=self.dim {
            if !span.insert(&cur) {
                break;
            }
            gens.push(cur.clone());
            cur = self.p_power(&cur);
        }
        if gens.iter().enumerate().any(|(i, a)| gens[i + 1..].iter().any(|b| !self.commutes(a, b))) {
            return torus.to_vec();
        }
        let Ok(basis) = Basis::new(f, gens.clone()) else {
            return torus.to_vec();
        };
        let k = gens.len();
        let mut cols = Vec::with_capacity(k);
        for g in &gens {
            let Some(c) = basis.coords(&self.p_power(g)) else {
                return torus.to_vec();
            };
            cols.push(c);
        }
        let pi = Matrix::from_columns(f, k, &cols);
        let fixed = pi.sub(&Matrix::identity(f, k)).kernel();
        let elements: Vec<V> = fixed.iter().map(|c| basis.combine(c)).collect();
        if self.validate_toral(&elements) {
            elements
        } else {
            torus.to_vec()
        }
    }

    /// Exact number of nilpotent elements, with the exponent `n - s`
    /// predicted from the toral search.
    pub fn nilvariety_point_count(&self, budget: u64, seed: u64) -> Result<NilvarietyCount> {
        let size = self.size();
        if size > budget || size > 1 << 24 {
            return Err(Error::BudgetExceeded { budget, what: format!("{size} elements") });
        }
        let count = self.elements().filter(|x| self.is_nilpotent(x)).count() as u64;
        let search = self.toral_rank_search(budget, seed);
        let s = search.witness.len();
        Ok(NilvarietyCount { p: self.p(), dim: self.dim, count, predicted_exponent: self.dim - s, witness_size: s })
    }
}

impl LieAlgebra for RestrictedAlgebra {
    type F = PrimeField;

    fn field(&self) -> &PrimeField {
        &self.field
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn bracket(&self, x: &[u64], y: &[u64]) -> V {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec_zero(f, n);
        let ys: Vec<usize> = (0..n).filter(|&j| y[j] != 0).collect();
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for &j in &ys {
                let c = f.mul(xi, &y[j]);
                for (k, s) in &self.table[i * n + j] {
                    let k = *k as usize;
                    out[k] = f.mul_add(&out[k], &c, s);
                }
            }
        }
        out
    }
}

/// Depth-first search for a largest torus. Each torus is visited through
/// its greedy basis only: every chosen element is the lowest-indexed toral
/// element of the span it adds.
struct ToralDfs<'a> {
    alg: &'a RestrictedAlgebra,
    toral: &'a [V],
    index: HashMap<V, usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    complete: bool,
}

impl ToralDfs<'_> {
    /// `span` lists every element of the span of `chosen`, zero included.
    fn search(&mut self, chosen: &mut Vec<usize>, span: &[V], candidates: &[usize]) {
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        if chosen.len() + candidates.len() <= self.best.len() {
            return;
        }
        let f = &self.alg.field;
        for (pos, &c) in candidates.iter().enumerate() {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.complete = false;
                return;
            }
            let t = &self.toral[c];
            let mut layer = Vec::with_capacity(span.len() * (self.alg.p() as usize - 1));
            for a in 1..self.alg.p() {
                let at = vec_scale(f, &a, t);
                layer.extend(span.iter().map(|s| vec_add(f, s, &at)));
            }
            if layer.iter().any(|w| self.index.get(w).is_none_or(|&i| i < c)) {
                continue;
            }
            let next: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&d| self.alg.commutes(t, &self.toral[d]) && !layer.contains(&self.toral[d]))
                .collect();
            let mut wider = span.to_vec();
            wider.extend(layer);
            chosen.push(c);
            self.search(chosen, &wider, &next);
            chosen.pop();
            if !self.complete || self.best.len() == self.alg.dim {
                return;
            }
        }
    }
}

/// Commuting, linearly independent elements with `t^[p] = t`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ToralWitness {
    pub elements: Vec<V>,
}

impl ToralWitness {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ToralSearch {
    pub witness: ToralWitness,
    /// Whether all toral elements were enumerated.
    pub exhaustive: bool,
    /// False if the exhaustive search hit its node budget.
    pub complete: bool,
}

impl ToralSearch {
    /// The witness size is the maximal toral dimension, not just a lower bound.
    pub fn is_exact(&self) -> bool {
        self.exhaustive && self.complete
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilvarietyCount {
    pub p: u64,
    pub dim: usize,
    pub count: u64,
    pub predicted_exponent: usize,
    pub witness_size: usize,
}

impl NilvarietyCount {
    pub fn to_json(&self) -> Value {
        json!({
            "params": {"p": self.p, "dim": self.dim},
            "count": self.count,
            "predicted_exponent": self.predicted_exponent,
            "witness_size": self.witness_size,
        })
    }
}

/// `dim C(e) = n^2 - MT(z(e))` for the nilpotent of type `λ` in `gl(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimC {
    pub partition: Partition,
    pub value: usize,
    pub toral_rank: usize,
    /// False when the toral rank is only a lower bound, making `value` an upper bound.
    pub exact: bool,
}

pub fn dim_c_formula(lambda: &Partition, p: u64, budget: u64, seed: u64) -> Result<DimC> {
    let n = lambda.size();
    let z = RestrictedAlgebra::gl_centralizer(lambda, p)?;
    let search = z.toral_rank_search(budget, seed);
    let mt = search.witness.len();
    Ok(DimC { partition: lambda.clone(), value: n * n - mt, toral_rank: mt, exact: search.is_exact() })
}

/// `dim C(e_reg) = dim G - rk G + dim z(e_reg) - dim z(g)`.
pub fn dim_c_reg(dim_g: usize, rank: usize, dim_z_ereg: usize, dim_center: usize) -> i64 {
    dim_g as i64 - rank as i64 + dim_z_ereg as i64 - dim_center as i64
}

/// [`dim_c_reg`] for the simple algebra of a root system.
pub fn dim_c_reg_for(sys: &RootSystem, dim_z_ereg: usize, dim_center: usize) -> i64 {
    dim_c_reg(sys.lie_dimension(), sys.rank(), dim_z_ereg, dim_center)
}

/// `dim_c_formula` for every partition of `n`, keyed by partition.
pub fn dim_c_table(n: usize, p: u64, budget: u64, seed: u64) -> Result<BTreeMap<String, DimC>> {
    Partition::all(n).iter().map(|l| Ok((l.to_string(), dim_c_formula(l, p, budget, seed)?))).collect()
}

/// Matrix `p`-th power, as an oracle for [`RestrictedAlgebra::p_power`] on `gl(n)`.
pub fn gl_matrix_p_power(x: &[u64], n: usize, p: u64) -> Result<V> {
    let f = PrimeField::new(p)?;
    let m = Matrix::from_fn(&f, n, n, |i, j| x[i * n + j]);
    Ok(m.pow(p).entries().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUDGET: u64 = 1 << 20;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn jordan_block_cubes_to_zero() {
        let g = RestrictedAlgebra::gl(3, 3).unwrap();
        let mut x = vec![0; 9];
        x[3] = 1; // E_10
        x[7] = 1; // E_21
        assert!(vec_is_zero(g.field(), &g.p_power(&x)));
        assert_eq!(g.p_power(&x), gl_matrix_p_power(&x, 3, 3).unwrap());
    }

    #[test]
    fn diagonal_elements_are_toral() {
        let g = RestrictedAlgebra::gl(3, 3).unwrap();
        let mut x = vec![0; 9];
        x[0] = 1;
        x[4] = 2;
        assert_eq!(g.p_power(&x), x);
    }

    #[test]
    fn both_jacobson_methods_agree_with_matrix_powers() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for p in [2, 3, 5] {
            let g = RestrictedAlgebra::gl(3, p).unwrap();
            for _ in 0..10 {
                let x = g.random_element(&mut rng);
                let want = gl_matrix_p_power(&x, 3, p).unwrap();
                assert_eq!(g.p_power_with(&x, JacobsonMethod::Interpolation), want);
                assert_eq!(g.p_power_with(&x, JacobsonMethod::Symbolic), want);
            }
        }
    }

    #[test]
    fn nilpotency_and_semisimplicity() {
        let g = RestrictedAlgebra::gl(2, 3).unwrap();
        let e12 = vec![0, 1, 0, 0];
        let d = vec![1, 0, 0, 2];
        let mixed = vec![1, 1, 0, 1]; // I + E_12
        assert!(g.is_nilpotent(&e12) && !g.is_semisimple(&e12));
        assert!(!g.is_nilpotent(&d) && g.is_semisimple(&d));
        assert!(!g.is_nilpotent(&mixed) && !g.is_semisimple(&mixed));
        assert!(g.is_semisimple(&[0, 0, 0, 0]));
        assert_eq!(g.semisimple_index(&mixed), 1);
        let u = RestrictedAlgebra::strictly_upper(3, 2).unwrap();
        assert!(u.elements().all(|x| u.is_nilpotent(&x)));
    }

    #[test]
    fn semisimple_exponents() {
        // E_12 + E_23 squares to E_13 and only the next power is 0
        let u = RestrictedAlgebra::strictly_upper(3, 2).unwrap();
        let all: Vec<V> = u.elements().collect();
        assert_eq!(u.semisimple_exponent(&all).unwrap(), 2);
        let d = RestrictedAlgebra::diagonal(3, 3).unwrap();
        assert_eq!(d.semisimple_exponent(&d.elements().collect::<Vec<_>>()).unwrap(), 0);
        let g = RestrictedAlgebra::gl(2, 2).unwrap();
        let all: Vec<V> = g.elements().collect();
        let want = all.iter().map(|x| g.semisimple_index(x)).max().unwrap();
        assert_eq!(g.semisimple_exponent(&all).unwrap(), want);
        assert!(g.semisimple_exponent(&[]).is_err());
    }

    #[test]
    fn toral_ranks() {
        let g = RestrictedAlgebra::gl(2, 2).unwrap();
        let s = g.toral_rank_search(BUDGET, 1);
        assert!(s.is_exact());
        assert_eq!(s.witness.len(), 2);
        assert!(g.validate_toral(&s.witness.elements));
        let z = RestrictedAlgebra::gl_centralizer(&part("2,1"), 3).unwrap();
        assert_eq!(z.toral_rank_search(BUDGET, 1).witness.len(), 2);
        let u = RestrictedAlgebra::strictly_upper(3, 3).unwrap();
        assert_eq!(u.toral_rank_search(BUDGET, 1).witness.len(), 0);
    }

    #[test]
    fn random_toral_search_on_gl4() {
        let g = RestrictedAlgebra::gl(4, 2).unwrap();
        let s = g.toral_rank_search(1000, 3);
        assert!(!s.exhaustive);
        assert_eq!(s.witness.len(), 4);
    }

    #[test]
    fn power_span_on_gl2_f2() {
        let g = RestrictedAlgebra::gl(2, 2).unwrap();
        let all: Vec<V> = g.elements().collect();
        let e = g.semisimple_exponent(&all).unwrap();
        assert!(all.iter().all(|x| g.check_power_span(2, e, x)));
    }

    #[test]
    fn nilvariety_counts() {
        let g = RestrictedAlgebra::gl(2, 2).unwrap();
        let c = g.nilvariety_point_count(BUDGET, 1).unwrap();
        assert_eq!((c.count, c.predicted_exponent), (4, 2));
        let d = RestrictedAlgebra::diagonal(2, 5).unwrap();
        let c = d.nilvariety_point_count(BUDGET, 1).unwrap();
        assert_eq!((c.count, c.predicted_exponent), (1, 0));
    }

    #[test]
    fn dim_c_examples() {
        assert_eq!(dim_c_formula(&part("3"), 3, BUDGET, 1).unwrap().value, 8);
        assert_eq!(dim_c_formula(&part("2,1"), 3, BUDGET, 1).unwrap().value, 7);
        assert_eq!(dim_c_formula(&part("1,1,1,1"), 3, BUDGET, 1).unwrap().value, 12);
        assert_eq!(dim_c_reg(9, 3, 3, 1), 8);
        assert_eq!(dim_c_reg_for(&RootSystem::parse("A1").unwrap(), 1, 0), 3);
    }

    #[test]
    fn json_round_trip() {
        let g = RestrictedAlgebra::gl_centralizer(&part("2,1"), 3).unwrap();
        let back = RestrictedAlgebra::from_json(&g.to_json().to_string()).unwrap();
        assert_eq!(back.dim(), g.dim());
        let x = [1, 2, 0, 1, 1];
        assert_eq!(back.p_power(&x[..g.dim()]), g.p_power(&x[..g.dim()]));
    }

    #[test]
    fn broken_p_map_is_rejected() {
        let text = r#"{"p": 3, "dim": 2, "brackets": [[0, 1, [0, 1]]], "ppowers": [[0, 0], [0, 0]]}"#;
        // ad(b0)^3 = ad(b0) != 0, so b0^[3] = 0 is wrong
        assert!(matches!(RestrictedAlgebra::from_json(text), Err(Error::BrokenAxiom(_))));
    }
}
