//! Nilpotent matrices in gl(n), so(n) and sp(n): Jordan types, centralizers
//! and explicit commuting nilpotent witnesses.
//!
//! Matrices act on column vectors. A nilpotent of type `λ` in standard form
//! has one block per part, blocks in the order of `λ`, and sends the `i`-th
//! basis vector of a block to the `(i+1)`-th.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

/// Partition with nonincreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.0.first().copied().unwrap_or(0);
        Partition((1..=max).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// Part size to multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// `self ⪰ other` in the dominance order.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::UnequalSums(self.size(), other.size()));
        }
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(other.len()) {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Σ (λ'_i)^2`, the centralizer dimension in gl(n).
    pub fn gl_centralizer_dim(&self) -> usize {
        self.conjugate().0.iter().map(|c| c * c).sum()
    }

    /// All partitions of `n`, starting from `(n)` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Offsets of the blocks in the standard basis.
    pub fn block_offsets(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                let o = *acc;
                *acc += p;
                Some(o)
            })
            .collect()
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

/// Which classical Lie algebra a Jordan type lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    /// gl(n), no form.
    None,
    /// Symmetric form, `κ = 0`.
    Orthogonal,
    /// Alternating form, `κ = 1`.
    Symplectic,
}

impl Form {
    pub fn from_kappa(kappa: Option<u8>) -> Result<Self> {
        match kappa {
            None => Ok(Form::None),
            Some(0) => Ok(Form::Orthogonal),
            Some(1) => Ok(Form::Symplectic),
            Some(k) => Err(Error::InvalidParameter(format!("kappa must be 0 or 1, got {k}"))),
        }
    }

    pub fn kappa(&self) -> Option<usize> {
        match self {
            Form::None => None,
            Form::Orthogonal => Some(0),
            Form::Symplectic => Some(1),
        }
    }
}

/// Parts `d` with `d + κ` even must occur with even multiplicity (and the
/// space must be even-dimensional for an alternating form).
pub fn is_valid_jordan_type(lambda: &Partition, form: Form) -> bool {
    match form.kappa() {
        None => true,
        Some(k) => lambda.multiplicities().iter().all(|(&d, &r)| (d + k) % 2 == 1 || r % 2 == 0),
    }
}

fn require_valid(lambda: &Partition, form: Form) -> Result<()> {
    if is_valid_jordan_type(lambda, form) {
        Ok(())
    } else {
        Err(Error::InvalidJordanType(format!("{lambda} for {form:?}")))
    }
}

/// gl: all parts distinct. Forms: every part has `d + κ` odd and occurs at
/// most twice.
pub fn is_almost_distinguished(lambda: &Partition, form: Form) -> Result<bool> {
    require_valid(lambda, form)?;
    let m = lambda.multiplicities();
    Ok(match form.kappa() {
        None => m.values().all(|&r| r == 1),
        Some(k) => m.iter().all(|(&d, &r)| (d + k) % 2 == 1 && r <= 2),
    })
}

/// gl: a single part. Forms: distinct parts, all with `d + κ` odd.
pub fn is_distinguished(lambda: &Partition, form: Form) -> Result<bool> {
    require_valid(lambda, form)?;
    Ok(match form.kappa() {
        None => lambda.len() == 1,
        Some(k) => lambda.multiplicities().iter().all(|(&d, &r)| (d + k) % 2 == 1 && r == 1),
    })
}

/// Standard nilpotent of Jordan type `λ`.
pub fn nilpotent_jordan_matrix<F: Field>(f: &F, lambda: &Partition) -> Matrix<F> {
    let n = lambda.size();
    let mut e = Matrix::zeros(f, n, n);
    for (&d, o) in lambda.parts().iter().zip(lambda.block_offsets()) {
        for i in 0..d - 1 {
            e.set(o + i + 1, o + i, f.one());
        }
    }
    e
}

/// Jordan type read off from the ranks of successive powers.
pub fn partition_of_nilpotent<F: Field>(x: &Matrix<F>) -> Result<Partition> {
    if !x.is_square() {
        return Err(Error::DimensionMismatch("nilpotent test needs a square matrix".into()));
    }
    let n = x.rows();
    let mut ranks = vec![n];
    let mut pow = Matrix::identity(x.field(), n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(Error::NotNilpotent);
        }
        pow = pow.mul(x);
        let r = pow.rank();
        if r == *ranks.last().unwrap() {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
    }
    // number of blocks of size >= k is rank(x^{k-1}) - rank(x^k)
    let conj: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Partition::new(conj).map(|p| p.conjugate())
}

pub fn is_nilpotent_matrix<F: Field>(x: &Matrix<F>) -> bool {
    x.pow(x.rows() as u64).is_zero()
}

/// Basis of `{X : [e, X] = 0}`, intersected with the skew-adjoint matrices of
/// the Gram matrix when one is given.
pub fn centralizer_basis<F: Field>(e: &Matrix<F>, gram: Option<&Matrix<F>>) -> Vec<Matrix<F>> {
    let f = e.field();
    let n = e.rows();
    let nn = n * n;
    let var = |a: usize, b: usize| a * n + b;
    let extra = if gram.is_some() { nn } else { 0 };
    let mut sys = Matrix::zeros(f, nn + extra, nn);
    for a in 0..n {
        for b in 0..n {
            let row = var(a, b);
            for c in 0..n {
                // (eX)_{ab} - (Xe)_{ab}
                let v = f.add(sys.get(row, var(c, b)), e.get(a, c));
                sys.set(row, var(c, b), v);
                let v = f.sub(sys.get(row, var(a, c)), e.get(c, b));
                sys.set(row, var(a, c), v);
            }
            if let Some(g) = gram {
                let row = nn + var(a, b);
                for c in 0..n {
                    // (X^T G)_{ab} + (G X)_{ab}
                    let v = f.add(sys.get(row, var(c, a)), g.get(c, b));
                    sys.set(row, var(c, a), v);
                    let v = f.add(sys.get(row, var(c, b)), g.get(a, c));
                    sys.set(row, var(c, b), v);
                }
            }
        }
    }
    sys.kernel()
        .into_iter()
        .map(|v| Matrix::from_fn(f, n, n, |a, b| v[var(a, b)].clone()))
        .collect()
}

/// `X^T G + G X = 0`.
pub fn is_skew_adjoint<F: Field>(x: &Matrix<F>, gram: &Matrix<F>) -> bool {
    x.transpose().mul(gram).add(&gram.mul(x)).is_zero()
}

fn sign<F: Field>(f: &F, odd: bool) -> F::Elem {
    if odd {
        f.neg(&f.one())
    } else {
        f.one()
    }
}

/// Standard nilpotent of type `λ` with a Gram matrix making it skew-adjoint.
///
/// A block with `d + κ` odd pairs with itself through `Ψ(m_i, m_k) =
/// (-1)^{i-1} δ_{i, d+1-k}`; blocks with `d + κ` even come in adjacent pairs
/// `V, V'` of equal size paired by the same formula across `V × V'`.
pub fn jordan_basis_with_form<F: Field>(f: &F, lambda: &Partition, form: Form) -> Result<(Matrix<F>, Matrix<F>)> {
    let Some(kappa) = form.kappa() else {
        return Err(Error::InvalidParameter("a form is required".into()));
    };
    if f.characteristic() == 2 {
        return Err(Error::Characteristic2);
    }
    require_valid(lambda, form)?;
    let n = lambda.size();
    let e = nilpotent_jordan_matrix(f, lambda);
    let mut g = Matrix::zeros(f, n, n);
    let parts = lambda.parts();
    let offsets = lambda.block_offsets();
    let mut k = 0;
    while k < parts.len() {
        let d = parts[k];
        let o = offsets[k];
        if (d + kappa) % 2 == 1 {
            for i in 1..=d {
                g.set(o + i - 1, o + (d + 1 - i) - 1, sign(f, (i - 1) % 2 == 1));
            }
            k += 1;
        } else {
            debug_assert_eq!(parts[k + 1], d);
            let o2 = offsets[k + 1];
            for i in 1..=d {
                let kk = d + 1 - i;
                let s = sign(f, (i - 1) % 2 == 1);
                let t = if kappa == 1 { f.neg(&s) } else { s.clone() };
                g.set(o + i - 1, o2 + kk - 1, s);
                g.set(o2 + kk - 1, o + i - 1, t);
            }
            k += 2;
        }
    }
    Ok((e, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessChecks {
    pub commutes: bool,
    pub nilpotent: bool,
    pub not_dominated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skew_adjoint: Option<bool>,
}

impl WitnessChecks {
    pub fn all_pass(&self) -> bool {
        self.commutes && self.nilpotent && self.not_dominated && self.skew_adjoint.unwrap_or(true)
    }
}

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// Two equal blocks of gl(n) merged into one block of twice the size.
    GlPair,
    /// Three equal self-paired blocks merged into one block of thrice the size.
    FormTriple,
    /// Two equal blocks paired with each other, giving a block one longer.
    FormPair,
}

/// `e` together with a commuting nilpotent `zhat` whose Jordan type is not
/// dominated by that of `e`.
#[derive(Clone, Debug)]
pub struct Witness<F: Field> {
    pub kind: WitnessKind,
    pub form: Form,
    pub e: Matrix<F>,
    pub zhat: Matrix<F>,
    pub gram: Option<Matrix<F>>,
    pub partition_e: Partition,
    pub partition_zhat: Partition,
    pub checks: WitnessChecks,
}

impl<F: Field> Witness<F> {
    fn build(kind: WitnessKind, form: Form, e: Matrix<F>, zhat: Matrix<F>, gram: Option<Matrix<F>>) -> Result<Self> {
        let partition_e = partition_of_nilpotent(&e)?;
        let nilpotent = is_nilpotent_matrix(&zhat);
        let partition_zhat = if nilpotent { partition_of_nilpotent(&zhat)? } else { partition_e.clone() };
        let checks = WitnessChecks {
            commutes: e.commutator(&zhat).is_zero(),
            nilpotent,
            not_dominated: nilpotent && !partition_e.dominates(&partition_zhat)?,
            skew_adjoint: gram.as_ref().map(|g| is_skew_adjoint(&zhat, g) && is_skew_adjoint(&e, g)),
        };
        Ok(Witness { kind, form, e, zhat, gram, partition_e, partition_zhat, checks })
    }

    pub fn to_json(&self) -> Value {
        let f = self.e.field();
        let mut v = json!({
            "schema": 1,
            "kind": self.kind,
            "form": self.form,
            "characteristic": f.characteristic(),
            "e": self.e.to_json(),
            "zhat": self.zhat.to_json(),
            "partition_e": self.partition_e.to_string(),
            "partition_zhat": self.partition_zhat.to_string(),
            "checks": self.checks,
        });
        if let Some(g) = &self.gram {
            v["gram"] = g.to_json();
        }
        v
    }
}

fn check_block_run(lambda: &Partition, j: usize, len: usize) -> Result<usize> {
    let parts = lambda.parts();
    if j + len > parts.len() || parts[j..j + len].iter().any(|&p| p != parts[j]) {
        return Err(Error::NoWitness(format!("blocks {j}..{} of {lambda} are not equal", j + len)));
    }
    Ok(parts[j])
}

/// gl(n) witness merging blocks `j` and `j + 1` (0-based) of equal size `d`:
/// `v_i -> w_i -> v_{i+1}`, `w_d -> 0`, and `e` on every other block.
pub fn witness_gl<F: Field>(f: &F, lambda: &Partition, j: usize) -> Result<Witness<F>> {
    let d = check_block_run(lambda, j, 2)?;
    let e = nilpotent_jordan_matrix(f, lambda);
    let offs = lambda.block_offsets();
    let (ov, ow) = (offs[j], offs[j + 1]);
    let mut z = e.clone();
    for i in 0..d {
        for c in [ov + i, ow + i] {
            for r in 0..z.rows() {
                z.set(r, c, f.zero());
            }
        }
        z.set(ow + i, ov + i, f.one());
        if i + 1 < d {
            z.set(ov + i + 1, ow + i, f.one());
        }
    }
    Witness::build(WitnessKind::GlPair, Form::None, e, z, None)
}

/// Witness for three equal blocks `j, j+1, j+2` with `d + κ` odd.
///
/// Uses `u_i = (m_{i,0} + ι m_{i,2}) / √2`, `v_i = m_{i,1}`,
/// `w_i = -(m_{i,0} - ι m_{i,2}) / √2` with `ι² = -1`, and the single chain
/// `u_i -> v_i -> w_i -> u_{i+1}`. Needs `√2` and `√-1` in the field.
pub fn witness_bcd_odd<F: Field>(f: &F, lambda: &Partition, form: Form, j: usize) -> Result<Witness<F>> {
    let (e, g) = jordan_basis_with_form(f, lambda, form)?;
    let kappa = form.kappa().expect("form present");
    let d = check_block_run(lambda, j, 3)?;
    if (d + kappa).is_multiple_of(2) {
        return Err(Error::NoWitness(format!("part {d} has d + κ even")));
    }
    let root2 = f
        .sqrt(&f.from_i64(2))
        .ok_or_else(|| Error::MissingSquareRoot(format!("2 in characteristic {}", f.characteristic())))?;
    let iota = f
        .sqrt(&f.from_i64(-1))
        .ok_or_else(|| Error::MissingSquareRoot(format!("-1 in characteristic {}", f.characteristic())))?;
    let s = f.inv(&root2).expect("nonzero");
    let n = lambda.size();
    let offs = lambda.block_offsets();
    let (o0, o1, o2) = (offs[j], offs[j + 1], offs[j + 2]);
    // new basis: u_i in block j, v_i in block j+1, w_i in block j+2
    let mut p = Matrix::identity(f, n);
    let si = f.mul(&s, &iota);
    for i in 0..d {
        for r in [o0 + i, o2 + i] {
            p.set(r, o0 + i, f.zero());
            p.set(r, o2 + i, f.zero());
        }
        p.set(o0 + i, o0 + i, s.clone());
        p.set(o2 + i, o0 + i, si.clone());
        p.set(o0 + i, o2 + i, f.neg(&s));
        p.set(o2 + i, o2 + i, si.clone());
    }
    // images of the new basis vectors, in old coordinates
    let mut img = e.mul(&p);
    for i in 0..d {
        let col_u = p.column(o1 + i);
        let col_v = p.column(o2 + i);
        let col_w = if i + 1 < d { p.column(o0 + i + 1) } else { vec![f.zero(); n] };
        for r in 0..n {
            img.set(r, o0 + i, col_u[r].clone());
            img.set(r, o1 + i, col_v[r].clone());
            img.set(r, o2 + i, col_w[r].clone());
        }
    }
    let pinv = p.inverse().ok_or_else(|| Error::Inconsistent("change of basis is singular".into()))?;
    let z = img.mul(&pinv);
    Witness::build(WitnessKind::FormTriple, form, e, z, Some(g))
}

/// Witness for a pair of equal blocks `j, j+1` with `d + κ` even:
/// `v_i -> v_{i+1} + v'_{i+2}`, `v'_i -> v'_{i+1} + v_i`.
pub fn witness_bcd_even<F: Field>(f: &F, lambda: &Partition, form: Form, j: usize) -> Result<Witness<F>> {
    let (e, g) = jordan_basis_with_form(f, lambda, form)?;
    let kappa = form.kappa().expect("form present");
    let d = check_block_run(lambda, j, 2)?;
    if (d + kappa) % 2 == 1 {
        return Err(Error::NoWitness(format!("part {d} has d + κ odd")));
    }
    // blocks of this size are paired from the first one on
    let first = lambda.parts().iter().position(|&p| p == d).expect("present");
    if (j - first) % 2 == 1 {
        return Err(Error::NoWitness(format!("blocks {j} and {} are not paired by the form", j + 1)));
    }
    let offs = lambda.block_offsets();
    let (ov, ow) = (offs[j], offs[j + 1]);
    let mut z = e.clone();
    for i in 0..d {
        for c in [ov + i, ow + i] {
            for r in 0..z.rows() {
                z.set(r, c, f.zero());
            }
        }
        if i + 1 < d {
            z.set(ov + i + 1, ov + i, f.one());
            z.set(ow + i + 1, ow + i, f.one());
        }
        if i + 2 < d {
            z.set(ow + i + 2, ov + i, f.one());
        }
        z.set(ov + i, ow + i, f.one());
    }
    Witness::build(WitnessKind::FormPair, form, e, z, Some(g))
}

/// A witness for `λ` if it is not almost distinguished, choosing the first
/// block that admits one.
pub fn find_witness<F: Field>(f: &F, lambda: &Partition, form: Form) -> Result<Option<Witness<F>>> {
    if is_almost_distinguished(lambda, form)? {
        return Ok(None);
    }
    let parts = lambda.parts();
    match form.kappa() {
        None => {
            let j = (0..parts.len() - 1).find(|&k| parts[k] == parts[k + 1]).expect("repeated part");
            witness_gl(f, lambda, j).map(Some)
        }
        Some(kappa) => {
            for j in 0..parts.len() {
                let d = parts[j];
                if j > 0 && parts[j - 1] == d {
                    continue;
                }
                let r = lambda.multiplicity(d);
                if (d + kappa) % 2 == 1 && r >= 3 {
                    return witness_bcd_odd(f, lambda, form, j).map(Some);
                }
                if (d + kappa).is_multiple_of(2) && r >= 2 {
                    return witness_bcd_even(f, lambda, form, j).map(Some);
                }
            }
            unreachable!("not almost distinguished implies a block qualifies")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_basics() {
        assert_eq!(part("1,3,2").to_string(), "3,2,1");
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
        assert!("0,1".parse::<Partition>().is_err());
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(4)[0], part("4"));
    }

    #[test]
    fn dominance_examples() {
        assert!(part("3,1").dominates(&part("2,2")).unwrap());
        assert!(!part("2,2").dominates(&part("3,1")).unwrap());
        assert!(!part("3,3").dominates(&part("4,1,1")).unwrap());
        assert!(matches!(part("2,1").dominates(&part("2")), Err(Error::UnequalSums(3, 2))));
    }

    #[test]
    fn jordan_type_from_ranks() {
        let f = PrimeField::new(3).unwrap();
        for lam in Partition::all(5) {
            let e = nilpotent_jordan_matrix(&f, &lam);
            assert_eq!(partition_of_nilpotent(&e).unwrap(), lam);
        }
        let id = Matrix::identity(&f, 2);
        assert!(matches!(partition_of_nilpotent(&id), Err(Error::NotNilpotent)));
    }

    #[test]
    fn gl_centralizer_dimension() {
        let q = Rationals;
        let lam = part("2,1");
        let e = nilpotent_jordan_matrix(&q, &lam);
        assert_eq!(centralizer_basis(&e, None).len(), 5);
    }

    #[test]
    fn almost_distinguished_examples() {
        assert!(is_almost_distinguished(&part("3,2,1"), Form::None).unwrap());
        assert!(!is_almost_distinguished(&part("2,2"), Form::None).unwrap());
        assert!(is_almost_distinguished(&part("3,3,1"), Form::Orthogonal).unwrap());
        assert!(!is_almost_distinguished(&part("3,3,3"), Form::Orthogonal).unwrap());
        assert!(matches!(
            is_almost_distinguished(&part("2,1"), Form::Orthogonal),
            Err(Error::InvalidJordanType(_))
        ));
    }

    #[test]
    fn gram_of_a_single_odd_block() {
        let f = PrimeField::new(17).unwrap();
        let (_, g) = jordan_basis_with_form(&f, &part("3"), Form::Orthogonal).unwrap();
        let expect = Matrix::from_i64(&f, 3, 3, &[0, 0, 1, 0, -1, 0, 1, 0, 0]);
        assert_eq!(g, expect);
    }

    #[test]
    fn gl_witness_example() {
        let q = Rationals;
        let w = witness_gl(&q, &part("3,2,2"), 1).unwrap();
        assert_eq!(w.partition_zhat, part("4,3"));
        assert!(w.checks.all_pass());
        assert!(matches!(witness_gl(&q, &part("3,2,1"), 0), Err(Error::NoWitness(_))));
    }

    #[test]
    fn odd_triple_witness_over_f17() {
        let f = PrimeField::new(17).unwrap();
        let w = witness_bcd_odd(&f, &part("3,3,3"), Form::Orthogonal, 0).unwrap();
        assert_eq!(w.partition_zhat, part("9"));
        assert!(w.checks.all_pass(), "{:?}", w.checks);
        let w = witness_bcd_odd(&f, &part("1,1,1"), Form::Orthogonal, 0).unwrap();
        assert_eq!(w.partition_zhat, part("3"));
        assert!(w.checks.all_pass());
    }

    #[test]
    fn odd_triple_needs_square_roots() {
        let f = PrimeField::new(7).unwrap();
        assert!(matches!(
            witness_bcd_odd(&f, &part("3,3,3"), Form::Orthogonal, 0),
            Err(Error::MissingSquareRoot(_))
        ));
    }

    #[test]
    fn even_pair_witness() {
        let f = PrimeField::new(5).unwrap();
        let w = witness_bcd_even(&f, &part("2,2"), Form::Symplectic, 0);
        // (2,2) has d + κ odd for κ = 1
        assert!(w.is_err());
        let w = witness_bcd_even(&f, &part("2,2"), Form::Orthogonal, 0).unwrap();
        assert!(w.checks.all_pass(), "{:?}", w.checks);
        assert_eq!(w.partition_zhat, part("3,1"));
        let w = witness_bcd_even(&f, &part("3,3"), Form::Symplectic, 0).unwrap();
        assert!(w.checks.all_pass(), "{:?}", w.checks);
        assert_eq!(w.partition_zhat, part("4,1,1"));
    }

    #[test]
    fn characteristic_two_rejected() {
        let f = PrimeField::new(2).unwrap();
        assert!(matches!(
            jordan_basis_with_form(&f, &part("3"), Form::Orthogonal),
            Err(Error::Characteristic2)
        ));
    }
}
