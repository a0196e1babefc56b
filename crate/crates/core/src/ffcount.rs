//! Brute-force point counts over prime fields.
//!
//! Matrices of size at most 4 are packed into fixed arrays, so the
//! enumerations here stay allocation free in their inner loops. Counts are
//! exact; the only approximation is [`dimension_estimate`], which guesses a
//! leading exponent from counts over several primes.

use std::collections::HashSet;
use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classical::{centralizer_basis, nilpotent_jordan_matrix, Partition};
use crate::error::{Error, Result};
use crate::field::{is_prime, Field, PrimeField};
use crate::linalg::Matrix;

/// Largest matrix size handled here.
pub const MAX_N: usize = 4;

/// A square matrix over `F_q`, row-major with stride [`MAX_N`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat([u8; MAX_N * MAX_N]);

/// `n x n` matrices over `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatSpace {
    n: usize,
    q: u8,
}

impl MatSpace {
    pub fn new(n: usize, q: u64) -> Result<Self> {
        if !(1..=MAX_N).contains(&n) {
            return Err(Error::InvalidParameter(format!("matrix size {n} outside 1..={MAX_N}")));
        }
        if !is_prime(q) || q > 251 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime below 256")));
        }
        Ok(MatSpace { n, q: q as u8 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// `q^(n^2)`, saturating.
    pub fn size(&self) -> u64 {
        self.q().checked_pow((self.n * self.n) as u32).unwrap_or(u64::MAX)
    }

    pub fn get(&self, m: &Mat, i: usize, j: usize) -> u8 {
        m.0[i * MAX_N + j]
    }

    pub fn zero(&self) -> Mat {
        Mat([0; MAX_N * MAX_N])
    }

    pub fn identity(&self) -> Mat {
        let mut m = self.zero();
        for i in 0..self.n {
            m.0[i * MAX_N + i] = 1;
        }
        m
    }

    /// The matrix whose entries are the base-`q` digits of `k`.
    pub fn from_index(&self, mut k: u64) -> Mat {
        let mut m = self.zero();
        for i in 0..self.n {
            for j in 0..self.n {
                m.0[i * MAX_N + j] = (k % self.q()) as u8;
                k /= self.q();
            }
        }
        m
    }

    pub fn all(&self) -> impl Iterator<Item = Mat> + '_ {
        (0..self.size()).map(|k| self.from_index(k))
    }

    pub fn from_fn(&self, mut f: impl FnMut(usize, usize) -> i64) -> Mat {
        let mut m = self.zero();
        for i in 0..self.n {
            for j in 0..self.n {
                m.0[i * MAX_N + j] = f(i, j).rem_euclid(self.q as i64) as u8;
            }
        }
        m
    }

    pub fn from_matrix(&self, x: &Matrix<PrimeField>) -> Mat {
        self.from_fn(|i, j| *x.get(i, j) as i64)
    }

    pub fn add(&self, a: &Mat, b: &Mat) -> Mat {
        self.from_fn(|i, j| self.get(a, i, j) as i64 + self.get(b, i, j) as i64)
    }

    pub fn sub(&self, a: &Mat, b: &Mat) -> Mat {
        self.from_fn(|i, j| self.get(a, i, j) as i64 - self.get(b, i, j) as i64)
    }

    pub fn scale(&self, c: i64, a: &Mat) -> Mat {
        self.from_fn(|i, j| c * self.get(a, i, j) as i64)
    }

    pub fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        let q = self.q as u32;
        let mut m = self.zero();
        for i in 0..self.n {
            for j in 0..self.n {
                let mut s = 0u32;
                for k in 0..self.n {
                    s += a.0[i * MAX_N + k] as u32 * b.0[k * MAX_N + j] as u32;
                }
                m.0[i * MAX_N + j] = (s % q) as u8;
            }
        }
        m
    }

    pub fn transpose(&self, a: &Mat) -> Mat {
        self.from_fn(|i, j| self.get(a, j, i) as i64)
    }

    pub fn commute(&self, a: &Mat, b: &Mat) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_zero(&self, a: &Mat) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    /// `a^n = 0`.
    pub fn is_nilpotent(&self, a: &Mat) -> bool {
        let mut p = *a;
        for _ in 1..self.n {
            if self.is_zero(&p) {
                return true;
            }
            p = self.mul(&p, a);
        }
        self.is_zero(&p)
    }

    pub fn is_unipotent(&self, u: &Mat) -> bool {
        self.is_nilpotent(&self.sub(u, &self.identity()))
    }

    pub fn det(&self, a: &Mat) -> u64 {
        let f = self.field();
        let mut rows: Vec<Vec<u64>> = (0..self.n).map(|i| (0..self.n).map(|j| self.get(a, i, j) as u64).collect()).collect();
        let mut det = 1u64;
        for c in 0..self.n {
            let Some(p) = (c..self.n).find(|&r| rows[r][c] != 0) else {
                return 0;
            };
            if p != c {
                rows.swap(p, c);
                det = f.neg(&det);
            }
            det = f.mul(&det, &rows[c][c]);
            let inv = f.inv(&rows[c][c]).expect("nonzero pivot");
            let (top, rest) = rows.split_at_mut(c + 1);
            let pivot = &top[c];
            for row in rest.iter_mut() {
                let factor = f.mul(&row[c], &inv);
                for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
        }
        det
    }

    pub fn inverse(&self, a: &Mat) -> Option<Mat> {
        self.to_matrix(a).inverse().map(|m| self.from_matrix(&m))
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.q()).expect("validated prime")
    }

    pub fn to_matrix(&self, a: &Mat) -> Matrix<PrimeField> {
        Matrix::from_fn(&self.field(), self.n, self.n, |i, j| self.get(a, i, j) as u64)
    }

    /// Rank of the vectors (each of length `n`).
    pub fn rank_of(&self, vectors: &[[u8; MAX_N]]) -> usize {
        let f = self.field();
        let rows: Vec<Vec<u64>> = vectors.iter().map(|v| v[..self.n].iter().map(|&x| x as u64).collect()).collect();
        if rows.is_empty() {
            return 0;
        }
        Matrix::from_rows(&f, &rows).rank()
    }

    pub fn apply(&self, a: &Mat, v: &[u8; MAX_N]) -> [u8; MAX_N] {
        let mut out = [0u8; MAX_N];
        for (i, o) in out.iter_mut().enumerate().take(self.n) {
            let s: u32 = (0..self.n).map(|j| a.0[i * MAX_N + j] as u32 * v[j] as u32).sum();
            *o = (s % self.q as u32) as u8;
        }
        out
    }

    pub fn vectors(&self) -> impl Iterator<Item = [u8; MAX_N]> + '_ {
        let total = self.q().pow(self.n as u32);
        (0..total).map(move |mut k| {
            let mut v = [0u8; MAX_N];
            for x in v.iter_mut().take(self.n) {
                *x = (k % self.q()) as u8;
                k /= self.q();
            }
            v
        })
    }

    pub fn random(&self, rng: &mut impl Rng) -> Mat {
        self.from_fn(|_, _| rng.gen_range(0..self.q as i64))
    }

    pub fn random_invertible(&self, rng: &mut impl Rng) -> Mat {
        loop {
            let m = self.random(rng);
            if self.det(&m) != 0 {
                return m;
            }
        }
    }
}

/// `|GL_n(F_q)|`.
pub fn gl_order(n: usize, q: u64) -> u128 {
    let q = q as u128;
    (0..n as u32).map(|i| q.pow(n as u32) - q.pow(i)).product()
}

/// `|Z_GL(e)(F_q)|` for `e` nilpotent of type `λ`: a unipotent radical of
/// dimension `Σ λ'_i^2 - Σ r_j^2` times `Π GL_{r_j}`, with `r_j` the part
/// multiplicities.
pub fn gl_centralizer_order(lambda: &Partition, q: u64) -> u128 {
    let mults: Vec<usize> = lambda.multiplicities().values().copied().collect();
    let reductive_dim: usize = mults.iter().map(|r| r * r).sum();
    let unipotent_dim = lambda.gl_centralizer_dim() - reductive_dim;
    (q as u128).pow(unipotent_dim as u32) * mults.iter().map(|&r| gl_order(r, q)).product::<u128>()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectKind {
    NilpotentPairs,
    UnipotentPairs,
    HilbertPoints,
    NilpotentMatrices,
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectKind::NilpotentPairs => "nilpotent_pairs",
            ObjectKind::UnipotentPairs => "unipotent_pairs",
            ObjectKind::HilbertPoints => "hilbert_points",
            ObjectKind::NilpotentMatrices => "nilpotent_matrices",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub object_kind: ObjectKind,
    /// `n` for matrices and pairs, `r` for Hilbert points.
    pub n: usize,
    pub q: u64,
    pub count: u128,
    pub leading_exponent: Option<i64>,
}

impl CountReport {
    fn new(object_kind: ObjectKind, n: usize, q: u64, count: u128) -> Self {
        CountReport { object_kind, n, q, count, leading_exponent: None }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "object_kind": self.object_kind,
            "params": {"n_or_r": self.n, "q": self.q},
            "count": self.count.to_string().parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::from(self.count.to_string())),
            "leading_exponent": self.leading_exponent,
        })
    }

    pub fn tsv_row(&self) -> String {
        let exp = self.leading_exponent.map_or_else(|| "-".to_string(), |e| e.to_string());
        format!("{}\t{}\t{}\t{}\t{}", self.object_kind, self.n, self.q, self.count, exp)
    }
}

pub const TSV_HEADER: &str = "object\tn_or_r\tq\tcount\texponent";

fn check_budget(space: &MatSpace, budget: u64) -> Result<()> {
    if space.size() > budget {
        return Err(Error::BudgetExceeded { budget, what: format!("{} matrices", space.size()) });
    }
    Ok(())
}

/// Nilpotent matrices, by enumeration.
pub fn nilpotent_matrices(space: &MatSpace, budget: u64) -> Result<Vec<Mat>> {
    check_budget(space, budget)?;
    Ok(space.all().filter(|m| space.is_nilpotent(m)).collect())
}

pub fn count_nilpotent(n: usize, q: u64, budget: u64) -> Result<CountReport> {
    let space = MatSpace::new(n, q)?;
    let count = nilpotent_matrices(&space, budget)?.len() as u128;
    Ok(CountReport::new(ObjectKind::NilpotentMatrices, n, q, count))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairMethod {
    /// Every pair of nilpotent matrices.
    #[default]
    Naive,
    /// Orbit sizes times nilpotent points of each centralizer.
    Stratified,
}

impl std::str::FromStr for PairMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(PairMethod::Naive),
            "stratified" => Ok(PairMethod::Stratified),
            _ => Err(Error::InvalidParameter(format!("unknown method {s:?}"))),
        }
    }
}

pub fn count_commuting_nilpotent_pairs(n: usize, q: u64, method: PairMethod, budget: u64) -> Result<CountReport> {
    let space = MatSpace::new(n, q)?;
    let count = match method {
        PairMethod::Naive => {
            let nil = nilpotent_matrices(&space, budget)?;
            let mut c = 0u128;
            for a in &nil {
                c += nil.iter().filter(|b| space.commute(a, b)).count() as u128;
            }
            c
        }
        PairMethod::Stratified => stratified_pairs(&space, budget)?.into_iter().map(|s| s.pairs).sum(),
    };
    Ok(CountReport::new(ObjectKind::NilpotentPairs, n, q, count))
}

/// One orbit's contribution to the stratified pair count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub partition: Partition,
    pub orbit_size: u128,
    pub nilpotent_in_centralizer: u128,
    pub pairs: u128,
}

pub fn stratified_pairs(space: &MatSpace, budget: u64) -> Result<Vec<Stratum>> {
    let (n, q) = (space.n(), space.q());
    let f = space.field();
    let gl = gl_order(n, q);
    let mut out = Vec::new();
    for lambda in Partition::all(n) {
        let e = nilpotent_jordan_matrix(&f, &lambda);
        let basis: Vec<Mat> = centralizer_basis(&e, None).iter().map(|m| space.from_matrix(m)).collect();
        let total = q.checked_pow(basis.len() as u32).unwrap_or(u64::MAX);
        if total > budget {
            return Err(Error::BudgetExceeded { budget, what: format!("centralizer of {lambda} has {total} points") });
        }
        let mut nil = 0u128;
        for k in 0..total {
            let mut m = space.zero();
            let mut k = k;
            for b in &basis {
                let c = (k % q) as i64;
                k /= q;
                if c != 0 {
                    m = space.add(&m, &space.scale(c, b));
                }
            }
            if space.is_nilpotent(&m) {
                nil += 1;
            }
        }
        let zc = gl_centralizer_order(&lambda, q);
        if !gl.is_multiple_of(zc) {
            return Err(Error::Inconsistent(format!("|Z({lambda})| = {zc} does not divide |GL_{n}| = {gl}")));
        }
        let orbit = gl / zc;
        out.push(Stratum { partition: lambda, orbit_size: orbit, nilpotent_in_centralizer: nil, pairs: orbit * nil });
    }
    let orbits: u128 = out.iter().map(|s| s.orbit_size).sum();
    let expected = (q as u128).pow((n * n - n) as u32);
    if orbits != expected {
        return Err(Error::Inconsistent(format!("orbit sizes sum to {orbits}, not q^(n^2-n) = {expected}")));
    }
    Ok(out)
}

/// Commuting pairs of nilpotent matrices, listing `z(a)` for each
/// nilpotent `a` instead of testing all pairs.
pub fn commuting_nilpotent_pairs(space: &MatSpace, budget: u64) -> Result<Vec<(Mat, Mat)>> {
    let q = space.q();
    let mut out = Vec::new();
    let mut work = 0u64;
    for a in nilpotent_matrices(space, budget)? {
        let basis: Vec<Mat> = centralizer_basis(&space.to_matrix(&a), None).iter().map(|m| space.from_matrix(m)).collect();
        let total = q.pow(basis.len() as u32);
        work = work.saturating_add(total);
        if work > budget.saturating_mul(16) {
            return Err(Error::BudgetExceeded { budget, what: "commuting pair enumeration".into() });
        }
        for k in 0..total {
            let mut b = space.zero();
            let mut k = k;
            for v in &basis {
                let c = (k % q) as i64;
                k /= q;
                if c != 0 {
                    b = space.add(&b, &space.scale(c, v));
                }
            }
            if space.is_nilpotent(&b) {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// A bilinear form for the classical groups `Sp` and `SO`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormGroup {
    Gl,
    /// `Sp_2` with Gram matrix `[[0, 1], [-1, 0]]`.
    Sp2,
    /// `SO_3` with the antidiagonal Gram matrix.
    So3,
}

impl FormGroup {
    pub fn gram(&self, space: &MatSpace) -> Option<Mat> {
        match self {
            FormGroup::Gl => None,
            FormGroup::Sp2 => Some(space.from_fn(|i, j| match (i, j) {
                (0, 1) => 1,
                (1, 0) => -1,
                _ => 0,
            })),
            FormGroup::So3 => Some(space.from_fn(|i, j| i64::from(i + j == 2))),
        }
    }

    pub fn size(&self) -> Option<usize> {
        match self {
            FormGroup::Gl => None,
            FormGroup::Sp2 => Some(2),
            FormGroup::So3 => Some(3),
        }
    }

    fn in_group(&self, space: &MatSpace, g: &Mat) -> bool {
        match self.gram(space) {
            None => space.det(g) != 0,
            Some(gram) => {
                let preserved = space.mul(&space.mul(&space.transpose(g), &gram), g) == gram;
                preserved && space.det(g) == 1
            }
        }
    }

    fn in_algebra(&self, space: &MatSpace, x: &Mat) -> bool {
        match self.gram(space) {
            None => true,
            Some(gram) => {
                let s = space.add(&space.mul(&space.transpose(x), &gram), &space.mul(&gram, x));
                space.is_zero(&s)
            }
        }
    }
}

/// `η(u) = u - 1` for `GL`; `(u - u^{-1}) / 2` for the form groups, the
/// projection `x ↦ (x - x*)/2` applied to a group element.
pub fn eta_unip_to_nil(space: &MatSpace, u: &Mat, group: FormGroup) -> Result<Mat> {
    if !space.is_unipotent(u) {
        return Err(Error::InvalidParameter("not unipotent".into()));
    }
    match group {
        FormGroup::Gl => Ok(space.sub(u, &space.identity())),
        _ => {
            if space.q() == 2 {
                return Err(Error::Characteristic2);
            }
            let inv = space.inverse(u).expect("unipotent is invertible");
            let half = space.field().inv(&2).expect("odd q") as i64;
            Ok(space.scale(half, &space.sub(u, &inv)))
        }
    }
}

/// Unipotent elements of the group and nilpotent elements of its Lie algebra.
pub fn unipotent_and_nilpotent(space: &MatSpace, group: FormGroup, budget: u64) -> Result<(Vec<Mat>, Vec<Mat>)> {
    check_budget(space, budget)?;
    let unip: Vec<Mat> = space.all().filter(|u| space.is_unipotent(u) && group.in_group(space, u)).collect();
    let nil: Vec<Mat> = space.all().filter(|x| space.is_nilpotent(x) && group.in_algebra(space, x)).collect();
    Ok((unip, nil))
}

/// Result of testing `η` on a group.
#[derive(Clone, Debug, Serialize)]
pub struct EtaCheck {
    pub unipotent: usize,
    pub nilpotent: usize,
    pub bijective: bool,
    pub equivariant: bool,
}

impl EtaCheck {
    pub fn passed(&self) -> bool {
        self.bijective && self.equivariant && self.unipotent == self.nilpotent
    }
}

/// Checks that `η` maps the unipotent elements bijectively onto the
/// nilpotent ones and that `η(g u g^{-1}) = g η(u) g^{-1}` on seeded samples.
pub fn check_eta(space: &MatSpace, group: FormGroup, samples: usize, seed: u64, budget: u64) -> Result<EtaCheck> {
    let (unip, nil) = unipotent_and_nilpotent(space, group, budget)?;
    let nil_set: HashSet<Mat> = nil.iter().copied().collect();
    let images: HashSet<Mat> = unip.iter().map(|u| eta_unip_to_nil(space, u, group)).collect::<Result<_>>()?;
    let bijective = images.len() == unip.len() && images == nil_set;
    let elements: Vec<Mat> = match group {
        FormGroup::Gl => Vec::new(),
        _ => space.all().filter(|g| group.in_group(space, g)).collect(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut equivariant = true;
    for _ in 0..samples {
        let g = match group {
            FormGroup::Gl => space.random_invertible(&mut rng),
            _ => elements[rng.gen_range(0..elements.len())],
        };
        let u = unip[rng.gen_range(0..unip.len())];
        let gi = space.inverse(&g).expect("invertible");
        let conj = |x: &Mat| space.mul(&space.mul(&g, x), &gi);
        if eta_unip_to_nil(space, &conj(&u), group)? != conj(&eta_unip_to_nil(space, &u, group)?) {
            equivariant = false;
        }
    }
    Ok(EtaCheck { unipotent: unip.len(), nilpotent: nil.len(), bijective, equivariant })
}

/// Commuting pairs of unipotent elements of `GL_n(F_q)`, enumerated
/// directly among invertible matrices.
pub fn count_unipotent_commuting_pairs(n: usize, q: u64, budget: u64) -> Result<CountReport> {
    let space = MatSpace::new(n, q)?;
    check_budget(&space, budget)?;
    let unip: Vec<Mat> = space.all().filter(|u| space.det(u) != 0 && space.is_unipotent(u)).collect();
    let mut c = 0u128;
    for a in &unip {
        c += unip.iter().filter(|b| space.commute(a, b)).count() as u128;
    }
    Ok(CountReport::new(ObjectKind::UnipotentPairs, n, q, c))
}

/// Commuting pairs of unipotent elements and of nilpotent elements for a
/// form group.
pub fn form_pair_counts(group: FormGroup, q: u64, budget: u64) -> Result<(u128, u128)> {
    let n = group.size().ok_or_else(|| Error::InvalidParameter("use the GL counts".into()))?;
    let space = MatSpace::new(n, q)?;
    let (unip, nil) = unipotent_and_nilpotent(&space, group, budget)?;
    let pairs = |xs: &[Mat]| xs.iter().map(|a| xs.iter().filter(|b| space.commute(a, b)).count() as u128).sum();
    Ok((pairs(&unip), pairs(&nil)))
}

/// The operators `a^i b^j`, `i + j < r`; for commuting `a, b` their
/// images of `v` span the cyclic module generated by `v`.
pub fn words(space: &MatSpace, a: &Mat, b: &Mat) -> Vec<Mat> {
    let r = space.n();
    let mut out = Vec::with_capacity(r * (r + 1) / 2);
    let mut ai = space.identity();
    for i in 0..r {
        let mut w = ai;
        for _ in 0..r - i {
            out.push(w);
            w = space.mul(&w, b);
        }
        ai = space.mul(&ai, a);
    }
    out
}

/// Whether `v` generates `F_q^r` under the algebra generated by `a` and `b`.
pub fn is_cyclic(space: &MatSpace, a: &Mat, b: &Mat, v: &[u8; MAX_N]) -> bool {
    cyclic_under(space, &words(space, a, b), v)
}

/// Incremental elimination over the images `w v`, stopping at full rank.
fn cyclic_under(space: &MatSpace, words: &[Mat], v: &[u8; MAX_N]) -> bool {
    let (r, q) = (space.n(), space.q as u32);
    let mut pivots: [Option<[u8; MAX_N]>; MAX_N] = [None; MAX_N];
    let mut rank = 0;
    for w in words {
        let mut u = space.apply(w, v);
        for c in 0..r {
            if u[c] == 0 {
                continue;
            }
            match &pivots[c] {
                Some(row) => {
                    // row[c] == 1
                    let k = q - u[c] as u32;
                    for j in c..r {
                        u[j] = ((u[j] as u32 + k * row[j] as u32) % q) as u8;
                    }
                }
                None => {
                    let inv = inv_mod(u[c] as u32, q);
                    for x in u.iter_mut().take(r).skip(c) {
                        *x = ((*x as u32 * inv) % q) as u8;
                    }
                    pivots[c] = Some(u);
                    rank += 1;
                    break;
                }
            }
        }
        if rank == r {
            return true;
        }
    }
    false
}

fn inv_mod(a: u32, q: u32) -> u32 {
    (1..q).find(|&b| a * b % q == 1).expect("nonzero mod a prime")
}

/// Breakdown of the Hilbert scheme count.
#[derive(Clone, Debug, Serialize)]
pub struct HilbertCount {
    pub r: usize,
    pub q: u64,
    /// `|U(F_q)|`: commuting nilpotent pairs with a cyclic vector.
    pub triples: u128,
    pub gl_order: u128,
    pub points: u128,
}

/// `|U| / |GL_r|` where `U` is the set of `(a, b; v)` with `a, b` commuting
/// nilpotent and `v` cyclic. Fails if the division is not exact, which
/// would contradict the freeness of the action.
pub fn hilbert_point_count(r: usize, q: u64, budget: u64) -> Result<HilbertCount> {
    let space = MatSpace::new(r, q)?;
    let pairs = commuting_nilpotent_pairs(&space, budget)?;
    let vectors: Vec<[u8; MAX_N]> = space.vectors().collect();
    let mut triples = 0u128;
    for (a, b) in &pairs {
        let ws = words(&space, a, b);
        triples += vectors.iter().filter(|v| cyclic_under(&space, &ws, v)).count() as u128;
    }
    let gl = gl_order(r, q);
    if !triples.is_multiple_of(gl) {
        return Err(Error::Inconsistent(format!("|GL_{r}| = {gl} does not divide |U| = {triples}")));
    }
    Ok(HilbertCount { r, q, triples, gl_order: gl, points: triples / gl })
}

pub fn hilbert_report(r: usize, q: u64, budget: u64) -> Result<CountReport> {
    let h = hilbert_point_count(r, q, budget)?;
    Ok(CountReport::new(ObjectKind::HilbertPoints, r, q, h.points))
}

/// The ideal `{φ ∈ k[x, y]/m^r : φ(a, b) v = 0}`, as the reduced row
/// echelon form of its coefficient vectors over the monomials `x^i y^j`,
/// `i + j < r`.
pub fn ideal_of(space: &MatSpace, a: &Mat, b: &Mat, v: &[u8; MAX_N]) -> Matrix<PrimeField> {
    let f = space.field();
    let r = space.n();
    let mut cols = Vec::new();
    for i in 0..r {
        for j in 0..r - i {
            let mut w = *v;
            for _ in 0..j {
                w = space.apply(b, &w);
            }
            for _ in 0..i {
                w = space.apply(a, &w);
            }
            cols.push(w[..r].iter().map(|&x| x as u64).collect::<Vec<u64>>());
        }
    }
    let m = Matrix::from_columns(&f, r, &cols);
    let kernel = m.kernel();
    if kernel.is_empty() {
        return Matrix::zeros(&f, 0, cols.len());
    }
    Matrix::from_rows(&f, &kernel).rref().0
}

#[derive(Clone, Debug, Serialize)]
pub struct PrincipalFamily {
    pub r: usize,
    pub q: u64,
    pub members: usize,
    pub distinct_points: usize,
    pub all_colength_r: bool,
}

impl PrincipalFamily {
    pub fn passed(&self) -> bool {
        self.all_colength_r && self.distinct_points == self.members
    }
}

/// The ideals `(x - (t_1 y + ... + t_{r-1} y^{r-1}))` realized by
/// `b = J_r`, `a = Σ t_i b^i` and the cyclic vector `e_1`.
pub fn verify_principal_family(r: usize, q: u64) -> Result<PrincipalFamily> {
    let space = MatSpace::new(r, q)?;
    let f = space.field();
    let b = space.from_matrix(&nilpotent_jordan_matrix(&f, &Partition::new(vec![r])?));
    let mut v = [0u8; MAX_N];
    v[0] = 1;
    let powers: Vec<Mat> = (1..r).scan(space.identity(), |acc, _| {
        *acc = space.mul(acc, &b);
        Some(*acc)
    }).collect();
    let members = q.pow(r as u32 - 1) as usize;
    let mut points = HashSet::new();
    let mut all_colength_r = true;
    for k in 0..members as u64 {
        let mut a = space.zero();
        let mut k = k;
        for p in &powers {
            let t = (k % q) as i64;
            k /= q;
            a = space.add(&a, &space.scale(t, p));
        }
        if !is_cyclic(&space, &a, &b, &v) {
            all_colength_r = false;
        }
        let ideal = ideal_of(&space, &a, &b, &v);
        // colength r: the kernel has codimension r among r(r+1)/2 monomials
        all_colength_r &= ideal.rows() == r * (r + 1) / 2 - r;
        points.insert(ideal.entries().to_vec());
    }
    Ok(PrincipalFamily { r, q, members, distinct_points: points.len(), all_colength_r })
}

/// Best integer exponent for counts across primes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionEstimate {
    pub exponent: i64,
    /// `(max - min) / (max + min)` of `count / q^d` at the chosen `d`.
    pub deviation: f64,
    pub inconclusive: bool,
}

/// The `d` making `count / q^d` closest to constant across the reports.
pub fn dimension_estimate(reports: &[CountReport]) -> Result<DimensionEstimate> {
    let mut qs: Vec<u64> = reports.iter().map(|r| r.q).collect();
    qs.sort_unstable();
    qs.dedup();
    if qs.len() < 2 || qs.len() != reports.len() {
        return Err(Error::InvalidParameter("need one report per prime, at least two primes".into()));
    }
    if reports.iter().any(|r| r.object_kind != reports[0].object_kind || r.n != reports[0].n) {
        return Err(Error::InvalidParameter("reports describe different objects".into()));
    }
    if reports.iter().any(|r| r.count == 0) {
        return Ok(DimensionEstimate { exponent: 0, deviation: f64::INFINITY, inconclusive: true });
    }
    let max_d = reports.iter().map(|r| (r.count as f64).log(r.q as f64).ceil() as i64 + 1).max().unwrap_or(1);
    let mut best: Option<(i64, f64)> = None;
    for d in 0..=max_d {
        let ratios: Vec<f64> = reports.iter().map(|r| r.count as f64 / (r.q as f64).powi(d as i32)).collect();
        let hi = ratios.iter().cloned().fold(f64::MIN, f64::max);
        let lo = ratios.iter().cloned().fold(f64::MAX, f64::min);
        let dev = (hi - lo) / (hi + lo);
        if best.is_none_or(|(_, b)| dev < b) {
            best = Some((d, dev));
        }
    }
    let (exponent, deviation) = best.expect("at least one exponent tried");
    Ok(DimensionEstimate { exponent, deviation, inconclusive: deviation > 0.5 })
}

/// Sets the fitted exponent on every report.
pub fn attach_exponent(reports: &mut [CountReport]) -> Result<DimensionEstimate> {
    let est = dimension_estimate(reports)?;
    if !est.inconclusive {
        for r in reports.iter_mut() {
            r.leading_exponent = Some(est.exponent);
        }
    }
    Ok(est)
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUDGET: u64 = 1 << 26;

    /// `Σ_{λ ⊢ r} q^{r - ℓ(λ)}`, the cell count of the punctual Hilbert scheme.
    fn hilbert_cells(r: usize, q: u64) -> u128 {
        Partition::all(r).iter().map(|l| (q as u128).pow((r - l.len()) as u32)).sum()
    }

    #[test]
    fn group_orders() {
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(3, 2), 168);
        assert_eq!(gl_centralizer_order(&"1,1".parse().unwrap(), 3), gl_order(2, 3));
        // regular nilpotent: centralizer k[e]^*, order (q - 1) q^{n-1}
        assert_eq!(gl_centralizer_order(&"3".parse().unwrap(), 5), 4 * 25);
    }

    #[test]
    fn nilpotent_counts_match_q_to_n2_minus_n() {
        for (n, q) in [(1, 5), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let c = count_nilpotent(n, q, BUDGET).unwrap().count;
            assert_eq!(c, (q as u128).pow((n * n - n) as u32), "n={n} q={q}");
        }
    }

    #[test]
    fn pair_counts_both_methods() {
        for (n, q) in [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3)] {
            let a = count_commuting_nilpotent_pairs(n, q, PairMethod::Naive, BUDGET).unwrap().count;
            let b = count_commuting_nilpotent_pairs(n, q, PairMethod::Stratified, BUDGET).unwrap().count;
            assert_eq!(a, b, "n={n} q={q}");
            if n == 2 {
                let q = q as u128;
                assert_eq!(a, q * q * q + q * q - q);
            }
        }
    }

    #[test]
    fn pair_enumeration_by_centralizers_matches_count() {
        let space = MatSpace::new(3, 2).unwrap();
        let listed = commuting_nilpotent_pairs(&space, BUDGET).unwrap().len() as u128;
        let counted = count_commuting_nilpotent_pairs(3, 2, PairMethod::Naive, BUDGET).unwrap().count;
        assert_eq!(listed, counted);
    }

    #[test]
    fn unipotent_pairs_match_nilpotent_pairs() {
        for (n, q) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            let u = count_unipotent_commuting_pairs(n, q, BUDGET).unwrap().count;
            let v = count_commuting_nilpotent_pairs(n, q, PairMethod::Naive, BUDGET).unwrap().count;
            assert_eq!(u, v);
        }
    }

    #[test]
    fn eta_examples() {
        let space = MatSpace::new(2, 5).unwrap();
        let j2 = space.from_fn(|i, j| i64::from(i == 1 && j == 0));
        let u = space.add(&space.identity(), &j2);
        assert_eq!(eta_unip_to_nil(&space, &u, FormGroup::Gl).unwrap(), j2);
        assert_eq!(eta_unip_to_nil(&space, &space.identity(), FormGroup::Gl).unwrap(), space.zero());
        assert!(eta_unip_to_nil(&space, &space.scale(2, &space.identity()), FormGroup::Gl).is_err());
        let c = check_eta(&space, FormGroup::Sp2, 100, 1, BUDGET).unwrap();
        assert_eq!((c.unipotent, c.nilpotent), (25, 25));
        assert!(c.passed());
        let so = MatSpace::new(3, 3).unwrap();
        let c = check_eta(&so, FormGroup::So3, 100, 1, BUDGET).unwrap();
        assert_eq!((c.unipotent, c.nilpotent), (9, 9));
        assert!(c.passed());
        assert!(check_eta(&MatSpace::new(2, 3).unwrap(), FormGroup::Gl, 100, 2, BUDGET).unwrap().passed());
    }

    #[test]
    fn form_pair_counts_agree() {
        let (u, n) = form_pair_counts(FormGroup::Sp2, 5, BUDGET).unwrap();
        assert_eq!(u, n);
        // zero commutes with all 25 nilpotents, a nonzero one with its 5 multiples
        assert_eq!(n, 25 + 24 * 5);
    }

    #[test]
    fn hilbert_counts() {
        let h = hilbert_point_count(2, 2, BUDGET).unwrap();
        assert_eq!((h.triples, h.points), (18, 3));
        for (r, q) in [(2, 3), (3, 2), (3, 3)] {
            assert_eq!(hilbert_point_count(r, q, BUDGET).unwrap().points, hilbert_cells(r, q), "r={r} q={q}");
        }
    }

    #[test]
    fn principal_family() {
        let fam = verify_principal_family(2, 2).unwrap();
        assert!(fam.passed());
        assert_eq!(fam.distinct_points, 2);
        let fam = verify_principal_family(3, 2).unwrap();
        assert!(fam.passed());
        assert_eq!(fam.distinct_points, 4);
    }

    #[test]
    fn monomial_point_for_t_zero() {
        let space = MatSpace::new(3, 3).unwrap();
        let f = space.field();
        let b = space.from_matrix(&nilpotent_jordan_matrix(&f, &"3".parse().unwrap()));
        let mut v = [0u8; MAX_N];
        v[0] = 1;
        let ideal = ideal_of(&space, &space.zero(), &b, &v);
        // (x, y^3): spanned by x, x^2, xy among 1, y, y^2, x, xy, x^2
        assert_eq!(ideal.rows(), 3);
    }

    #[test]
    fn exponent_fits() {
        let rep = |q, c| CountReport::new(ObjectKind::NilpotentPairs, 2, q, c);
        assert_eq!(dimension_estimate(&[rep(2, 10), rep(3, 33)]).unwrap().exponent, 3);
        let rep = |q, c| CountReport::new(ObjectKind::HilbertPoints, 2, q, c);
        assert_eq!(dimension_estimate(&[rep(2, 3), rep(3, 4)]).unwrap().exponent, 1);
        let rep = |q, c| CountReport::new(ObjectKind::NilpotentMatrices, 2, q, c);
        assert_eq!(dimension_estimate(&[rep(2, 4), rep(3, 9)]).unwrap().exponent, 2);
        assert!(dimension_estimate(&[rep(2, 4)]).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(count_nilpotent(3, 3, 1000), Err(Error::BudgetExceeded { .. })));
    }
}
