//! Root data of the irreducible reduced root systems, parabolic pairs and
//! weighted Dynkin diagrams.
//!
//! Simple roots follow Bourbaki numbering. The Cartan matrix is stored as
//! `a[i][j] = <alpha_i^vee, alpha_j>`; roots are integer coefficient vectors
//! over the simple roots.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{rational_to_i64, Field, Rationals};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=32).contains(&rank),
            Family::B | Family::C => (2..=32).contains(&rank),
            Family::D => (4..=32).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{family:?}{rank}")))
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidCartanType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank).map_err(|_| bad())
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// A subset of the simple roots, bit `i` standing for `alpha_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct NodeSet(pub u64);

impl NodeSet {
    pub fn empty() -> Self {
        NodeSet(0)
    }

    pub fn full(rank: usize) -> Self {
        NodeSet(if rank == 64 { u64::MAX } else { (1u64 << rank) - 1 })
    }

    /// From 1-based node labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        NodeSet(labels.iter().fold(0, |acc, &l| acc | 1 << (l - 1)))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn minus(&self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    /// 0-based indices in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// 1-based labels in increasing order.
    pub fn labels(&self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(&self) -> impl Iterator<Item = NodeSet> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some((s.wrapping_sub(full)) & full) };
            Some(NodeSet(s))
        })
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the sorted label lists, so the empty set comes first.
impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.labels().cmp(&other.labels())
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

impl Serialize for NodeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

/// A pair `J ⊆ I ⊆ Π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LeviPair {
    pub i: NodeSet,
    pub j: NodeSet,
}

impl LeviPair {
    pub fn new(i: NodeSet, j: NodeSet) -> Result<Self> {
        if !j.is_subset(i) {
            return Err(Error::InvalidParameter(format!("{j} is not contained in {i}")));
        }
        Ok(LeviPair { i, j })
    }
}

impl fmt::Display for LeviPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// Integer coefficient vector over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Root {
        Root(self.0.iter().map(|c| c * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> NodeSet {
        NodeSet(self.0.iter().enumerate().filter(|(_, &c)| c != 0).fold(0, |a, (i, _)| a | 1 << i))
    }

    /// Compact label such as `23465432` or `-0100000`.
    pub fn label(&self) -> String {
        let neg = self.0.iter().any(|&c| c < 0);
        let digits: Vec<String> = self.0.iter().map(|c| c.abs().to_string()).collect();
        let sep = if self.0.iter().any(|c| c.abs() > 9) { "," } else { "" };
        format!("{}{}", if neg { "-" } else { "" }, digits.join(sep))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Cocharacter in the coroot lattice, `sum x_i alpha_i^vee`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cocharacter(pub Vec<i64>);

#[derive(Clone, Debug)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    half_len: Vec<i64>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let l = t.rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.family {
        Family::A => (0..l - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(l - 2, l - 1, -1, -2);
        }
        Family::C => {
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(l - 2, l - 1, -2, -1);
        }
        Family::D => {
            (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(l - 3, l - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..l - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -3, -1),
    }
    a
}

fn expected_positive_count(t: CartanType) -> usize {
    let l = t.rank;
    match t.family {
        Family::A => l * (l + 1) / 2,
        Family::B | Family::C => l * l,
        Family::D => l * (l - 1),
        Family::E => [36, 63, 120][l - 6],
        Family::F => 24,
        Family::G => 6,
    }
}

/// Symmetrizing factors `d_i` with `d_i a_ij = d_j a_ji`, scaled to
/// coprime positive integers.
fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let l = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; l];
    d[0] = Some(Ratio::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Ratio::new(a[i][j], a[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let lcm = d.iter().fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    ints.into_iter().map(|x| x / g).collect()
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Result<Self> {
        let cartan = cartan_matrix(ctype);
        let half_len = symmetrizer(&cartan);
        let l = ctype.rank;
        let mut positive: Vec<Root> = (0..l).map(|i| Root::simple(l, i)).collect();
        let mut index: HashMap<Root, usize> =
            positive.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        // Grow by height; alpha-strings decide which beta + alpha_i are roots.
        let mut start = 0;
        while start < positive.len() {
            let end = positive.len();
            for k in start..end {
                let beta = positive[k].clone();
                for (i, row) in cartan.iter().enumerate() {
                    let ai = Root::simple(l, i);
                    let mut q = 0;
                    let mut down = beta.sub(&ai);
                    while index.contains_key(&down) {
                        q += 1;
                        down = down.sub(&ai);
                    }
                    let pairing: i64 = beta.0.iter().zip(row).map(|(b, c)| b * c).sum();
                    if q - pairing > 0 {
                        let up = beta.add(&ai);
                        if !index.contains_key(&up) {
                            index.insert(up.clone(), positive.len());
                            positive.push(up);
                        }
                    }
                }
            }
            start = end;
        }
        if positive.len() != expected_positive_count(ctype) {
            return Err(Error::InconsistentRootSystem(format!(
                "{ctype}: closure produced {} positive roots, expected {}",
                positive.len(),
                expected_positive_count(ctype)
            )));
        }
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        let index = positive.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        Ok(RootSystem { ctype, cartan, half_len, positive, index })
    }

    pub fn parse(s: &str) -> Result<Self> {
        RootSystem::new(s.parse()?)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    /// `a[i][j] = <alpha_i^vee, alpha_j>`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(alpha_i, alpha_i) / 2` up to a common scalar; the short roots get 1.
    pub fn half_lengths(&self) -> &[i64] {
        &self.half_len
    }

    /// Positive roots sorted by height, then reverse lexicographically, so
    /// the simple roots come first in their natural order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots followed by their negatives in the same order.
    pub fn roots(&self) -> Vec<Root> {
        let mut all = self.positive.clone();
        all.extend(self.positive.iter().map(Root::neg));
        all
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// `dim g = |Φ| + rank`.
    pub fn lie_dimension(&self) -> usize {
        2 * self.positive.len() + self.rank()
    }

    pub fn positive_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r) || self.index.contains_key(&r.neg())
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("nonempty")
    }

    /// `<alpha, alpha_i^vee>`.
    pub fn pairing(&self, alpha: &Root, i: usize) -> i64 {
        alpha.0.iter().zip(&self.cartan[i]).map(|(c, a)| c * a).sum()
    }

    /// Invariant form normalized so short roots have `(a, a) = 2`.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += a.0[i] * self.half_len[i] * self.cartan[i][j] * b.0[j];
            }
        }
        s
    }

    /// Coefficients of the coroot `alpha^vee` over the simple coroots.
    pub fn coroot(&self, alpha: &Root) -> Vec<i64> {
        let d_alpha = self.inner(alpha, alpha) / 2;
        alpha.0.iter().zip(&self.half_len).map(|(c, d)| c * d / d_alpha).collect()
    }

    /// The grading that puts `alpha_i` in degree 0 for `i ∈ J` and 2 otherwise.
    pub fn eta_level(&self, j: NodeSet, alpha: &Root) -> i64 {
        alpha.0.iter().enumerate().map(|(i, c)| if j.contains(i) { 0 } else { 2 * c }).sum()
    }

    /// Positive roots with support in `I`.
    pub fn levi_positive_roots(&self, i: NodeSet) -> impl Iterator<Item = &Root> {
        self.positive.iter().filter(move |r| r.support().is_subset(i))
    }

    /// Whether `J` defines a distinguished parabolic of the Levi `L_I`:
    /// `|I| + |Φ_J|` equals the number of roots of `Φ_I` in degree 2.
    ///
    /// The left side always dominates the right; a violation is reported as
    /// an error since it means the root data is broken.
    pub fn is_distinguished_parabolic(&self, pair: LeviPair) -> Result<bool> {
        let mut phi_j = 0;
        let mut level2 = 0;
        for r in self.levi_positive_roots(pair.i) {
            if r.support().is_subset(pair.j) {
                phi_j += 2;
            } else if self.eta_level(pair.j, r) == 2 {
                level2 += 1;
            }
        }
        let lhs = pair.i.len() + phi_j;
        if lhs < level2 {
            return Err(Error::Inconsistent(format!(
                "{pair}: derived Levi part {lhs} smaller than degree-2 part {level2}"
            )));
        }
        Ok(lhs == level2)
    }

    /// The cocharacter in the coroot span of `I` with `alpha_j` of degree 0 on
    /// `J` and 2 on `I \ J`.
    pub fn solve_cocharacter(&self, pair: LeviPair) -> Result<Cocharacter> {
        let idx: Vec<usize> = pair.i.indices().collect();
        let q = Rationals;
        let m = Matrix::from_fn(&q, idx.len(), idx.len(), |r, c| q.from_i64(self.cartan[idx[c]][idx[r]]));
        let rhs: Vec<_> = idx.iter().map(|&j| q.from_i64(if pair.j.contains(j) { 0 } else { 2 })).collect();
        let x = m
            .solve(&rhs)
            .ok_or_else(|| Error::Inconsistent(format!("singular Levi Cartan matrix for {pair}")))?;
        let mut coeffs = vec![0; self.rank()];
        for (k, &i) in idx.iter().enumerate() {
            coeffs[i] = rational_to_i64(&x[k])
                .ok_or_else(|| Error::IntegralityViolation(format!("{pair}: coefficient {} at node {}", x[k], i + 1)))?;
        }
        Ok(Cocharacter(coeffs))
    }

    /// `alpha_j(λ)` for every simple root.
    pub fn simple_weights(&self, lambda: &Cocharacter) -> Vec<i64> {
        let l = self.rank();
        (0..l).map(|j| (0..l).map(|i| lambda.0[i] * self.cartan[i][j]).sum()).collect()
    }

    /// `alpha(λ)`.
    pub fn degree(&self, lambda: &Cocharacter, alpha: &Root) -> i64 {
        self.simple_weights(lambda).iter().zip(&alpha.0).map(|(w, c)| w * c).sum()
    }

    /// Dominant representative of the Weyl orbit of a coweight given by its
    /// values on the simple roots.
    pub fn dominant_weights(&self, mut w: Vec<i64>) -> Vec<i64> {
        while let Some(i) = w.iter().position(|&x| x < 0) {
            let wi = w[i];
            for (j, x) in w.iter_mut().enumerate() {
                *x -= wi * self.cartan[i][j];
            }
        }
        w
    }

    /// Weighted Dynkin diagram attached to a cocharacter.
    pub fn weighted_diagram(&self, lambda: &Cocharacter) -> Vec<i64> {
        self.dominant_weights(self.simple_weights(lambda))
    }

    /// All `J` with `(Π, J)` distinguished, sorted by label list.
    pub fn enumerate_distinguished(&self) -> Result<Vec<NodeSet>> {
        let full = NodeSet::full(self.rank());
        let mut out = Vec::new();
        for j in full.subsets() {
            if self.is_distinguished_parabolic(LeviPair { i: full, j })? {
                out.push(j);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Number of irreducible components of the commuting nilpotent variety
    /// and their common dimension `dim g`.
    pub fn component_count_and_dim(&self) -> Result<(usize, usize)> {
        Ok((self.enumerate_distinguished()?.len(), self.lie_dimension()))
    }

    /// Every pair in the parabolic set `P(Π)`.
    pub fn distinguished_pairs(&self) -> Result<Vec<LeviPair>> {
        let mut out = Vec::new();
        for i in NodeSet::full(self.rank()).subsets() {
            for j in i.subsets() {
                let pair = LeviPair { i, j };
                if self.is_distinguished_parabolic(pair)? {
                    out.push(pair);
                }
            }
        }
        Ok(out)
    }

    /// Pairs `(I, J)` in `P(Π)` for which `(Π, J)` fails to be distinguished.
    /// Empty for every root system; the search is exhaustive.
    pub fn distinguished_closure_failures(&self) -> Result<Vec<LeviPair>> {
        let full = NodeSet::full(self.rank());
        let mut bad = Vec::new();
        for pair in self.distinguished_pairs()? {
            if !self.is_distinguished_parabolic(LeviPair { i: full, j: pair.j })? {
                bad.push(pair);
            }
        }
        Ok(bad)
    }

    /// Pairs of `P(Π)` grouped by the weighted diagram of their cocharacter;
    /// one group per nilpotent orbit in characteristic 0.
    pub fn bala_carter_groups(&self) -> Result<Vec<BalaCarterGroup>> {
        let mut groups: BTreeMap<Vec<i64>, Vec<LeviPair>> = BTreeMap::new();
        for pair in self.distinguished_pairs()? {
            let lambda = self.solve_cocharacter(pair)?;
            groups.entry(self.weighted_diagram(&lambda)).or_default().push(pair);
        }
        Ok(groups.into_iter().map(|(diagram, pairs)| BalaCarterGroup { diagram, pairs }).collect())
    }

    /// JSON rows `{J, diagram, count, dim}` for the distinguished parabolics.
    pub fn components_json(&self) -> Result<Value> {
        let js = self.enumerate_distinguished()?;
        let count = js.len();
        let dim = self.lie_dimension();
        let rows: Vec<Value> = js
            .iter()
            .map(|j| {
                let diagram: Vec<i64> = (0..self.rank()).map(|i| if j.contains(i) { 0 } else { 2 }).collect();
                json!({ "J": j.labels(), "diagram": diagram, "count": count, "dim": dim })
            })
            .collect();
        Ok(json!({ "schema": 1, "type": self.ctype.to_string(), "count": count, "dim": dim, "components": rows }))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BalaCarterGroup {
    pub diagram: Vec<i64>,
    pub pairs: Vec<LeviPair>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn parse_rejects_bad_types() {
        for bad in ["E9", "F5", "G3", "D3", "X2", "A0", "B1", ""] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
        assert_eq!("e8".parse::<CartanType>().unwrap().to_string(), "E8");
    }

    #[test]
    fn simple_roots_lead_the_positive_roots() {
        let e8 = sys("E8");
        for i in 0..8 {
            assert_eq!(e8.positive_roots()[i], Root::simple(8, i));
        }
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(sys("A5").num_positive(), 15);
        assert_eq!(sys("G2").num_positive(), 6);
        assert_eq!(sys("E8").num_positive(), 120);
        assert_eq!(sys("F4").num_positive(), 24);
    }

    #[test]
    fn highest_roots_in_bourbaki_numbering() {
        assert_eq!(sys("E8").highest_root().0, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(sys("E7").highest_root().0, vec![2, 2, 3, 4, 3, 2, 1]);
        assert_eq!(sys("G2").highest_root().0, vec![3, 2]);
        assert_eq!(sys("F4").highest_root().0, vec![2, 3, 4, 2]);
    }

    #[test]
    fn g2_first_simple_root_is_short() {
        let g = sys("G2");
        assert_eq!(g.half_lengths(), &[1, 3]);
    }

    #[test]
    fn a2_distinguished_examples() {
        let a2 = sys("A2");
        let full = NodeSet::full(2);
        assert!(a2.is_distinguished_parabolic(LeviPair { i: full, j: NodeSet::empty() }).unwrap());
        assert!(!a2.is_distinguished_parabolic(LeviPair { i: full, j: NodeSet::from_labels(&[1]) }).unwrap());
    }

    #[test]
    fn cocharacters() {
        let a2 = sys("A2");
        let full = NodeSet::full(2);
        let lam = a2.solve_cocharacter(LeviPair { i: full, j: NodeSet::empty() }).unwrap();
        assert_eq!(lam.0, vec![2, 2]);
        let one = NodeSet::from_labels(&[1]);
        assert_eq!(a2.solve_cocharacter(LeviPair { i: one, j: one }).unwrap().0, vec![0, 0]);
        // ({1,2},{1}) is not distinguished and its cocharacter is fractional
        assert!(matches!(
            a2.solve_cocharacter(LeviPair { i: full, j: one }),
            Err(Error::IntegralityViolation(_))
        ));
    }

    #[test]
    fn weighted_diagram_of_a_simple_coroot() {
        let a2 = sys("A2");
        assert_eq!(a2.simple_weights(&Cocharacter(vec![1, 0])), vec![2, -1]);
        assert_eq!(a2.weighted_diagram(&Cocharacter(vec![1, 0])), vec![1, 1]);
    }

    #[test]
    fn distinguished_counts() {
        assert_eq!(sys("A4").enumerate_distinguished().unwrap().len(), 1);
        assert_eq!(sys("G2").enumerate_distinguished().unwrap().len(), 2);
        assert_eq!(sys("B4").enumerate_distinguished().unwrap().len(), 2);
        assert_eq!(sys("A2").component_count_and_dim().unwrap(), (1, 8));
        assert_eq!(sys("G2").component_count_and_dim().unwrap(), (2, 14));
    }

    #[test]
    fn bala_carter_group_counts() {
        let a1 = sys("A1").bala_carter_groups().unwrap();
        assert_eq!(a1.len(), 2);
        assert_eq!(sys("A2").bala_carter_groups().unwrap().len(), 3);
        assert_eq!(sys("G2").bala_carter_groups().unwrap().len(), 5);
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = NodeSet::from_labels(&[1, 3, 4]);
        assert_eq!(s.subsets().count(), 8);
        assert!(s.subsets().all(|t| t.is_subset(s)));
    }

    #[test]
    fn coroots_of_b2() {
        let b2 = sys("B2");
        // long alpha_1, short alpha_2; the short root alpha_1 + alpha_2 has coroot 2a1v + a2v
        assert_eq!(b2.coroot(&Root(vec![1, 1])), vec![2, 1]);
        assert_eq!(b2.coroot(&Root(vec![1, 2])), vec![1, 1]);
    }
}
