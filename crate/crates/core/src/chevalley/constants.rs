//! Integer structure constants of a Chevalley basis.
//!
//! For every non-simple positive root `ξ` the extraspecial pair is
//! `(α_i, ξ - α_i)` with `i` the smallest index for which `ξ - α_i` is a
//! root, and `N_{α_i, ξ - α_i} = +(p + 1)`. All other constants follow from
//! the standard identities relating `N_{α,β}`, `N_{-α,-β}`, cyclic triples
//! and quadruples summing to zero.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

type Q = Ratio<i64>;

pub(crate) struct Constants<'a> {
    sys: &'a RootSystem,
    memo: HashMap<(Root, Root), i64>,
}

impl<'a> Constants<'a> {
    pub(crate) fn new(sys: &'a RootSystem) -> Self {
        Constants { sys, memo: HashMap::new() }
    }

    fn len2(&self, a: &Root) -> Q {
        Q::from_integer(self.sys.inner(a, a))
    }

    /// Largest `k` with `b - k a` a root.
    pub(crate) fn string_down(&self, a: &Root, b: &Root) -> i64 {
        let mut k = 0;
        let mut cur = b.sub(a);
        while self.sys.is_root(&cur) {
            k += 1;
            cur = cur.sub(a);
        }
        k
    }

    fn extraspecial(&self, xi: &Root) -> (Root, Root) {
        let l = self.sys.rank();
        for i in 0..l {
            let a = Root::simple(l, i);
            let rest = xi.sub(&a);
            if rest.is_positive() && self.sys.is_root(&rest) {
                return (a, rest);
            }
        }
        unreachable!("every non-simple positive root has a simple summand")
    }

    /// `N_{a,b}`; zero unless `a + b` is a root.
    pub(crate) fn n(&mut self, a: &Root, b: &Root) -> i64 {
        let s = a.add(b);
        if s.is_zero() || !self.sys.is_root(&s) {
            return 0;
        }
        match (a.is_positive(), b.is_positive()) {
            (true, true) => self.n_pos(a, b),
            (false, false) => {
                let p = self.string_down(a, b);
                let m = self.n_pos(&a.neg(), &b.neg());
                -(p + 1) * (p + 1) / m
            }
            (false, true) => -self.n(b, a),
            (true, false) => {
                let r = if s.is_positive() {
                    // N_{a,b} (a,a) = (s,s) N_{b,-s}
                    self.len2(&s) / self.len2(a) * Q::from_integer(self.n(b, &s.neg()))
                } else {
                    // N_{a,b} (b,b) = (s,s) N_{-s,a}
                    self.len2(&s) / self.len2(b) * Q::from_integer(self.n(&s.neg(), a))
                };
                assert!(r.is_integer(), "non-integral structure constant");
                r.to_integer()
            }
        }
    }

    fn n_pos(&mut self, a: &Root, b: &Root) -> i64 {
        let key = (a.clone(), b.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let xi = a.add(b);
        let (eps, eta) = self.extraspecial(&xi);
        let p_ext = self.string_down(&eps, &eta);
        let v = if *a == eps {
            p_ext + 1
        } else if *b == eps {
            -(p_ext + 1)
        } else {
            // quadruple a + b - eps - eta = 0
            let mut acc = Q::from_integer(0);
            let me = eps.neg();
            let mh = eta.neg();
            let b_e = b.sub(&eps);
            if self.sys.is_root(&b_e) {
                let t = Q::from_integer(self.n(b, &me) * self.n(a, &mh)) / self.len2(&b_e);
                acc += t;
            }
            let a_e = a.sub(&eps);
            if self.sys.is_root(&a_e) {
                let t = Q::from_integer(self.n(&me, a) * self.n(b, &mh)) / self.len2(&a_e);
                acc += t;
            }
            let r = self.len2(&xi) * acc / Q::from_integer(p_ext + 1);
            assert!(r.is_integer(), "non-integral structure constant");
            r.to_integer()
        };
        self.memo.insert(key, v);
        v
    }
}

/// Sparse integer vector: `(basis index, coefficient)` pairs.
pub type SparseInt = Vec<(u32, i64)>;

/// Structure constants table of the Chevalley basis, indexed `i * dim + j`.
///
/// Basis order: positive roots, negative roots (same order), then `h_1..h_l`.
pub fn chevalley_table(sys: &RootSystem) -> Result<(Vec<Root>, Vec<SparseInt>)> {
    let l = sys.rank();
    let pos = sys.positive_roots().to_vec();
    let np = pos.len();
    let mut roots = pos.clone();
    roots.extend(pos.iter().map(Root::neg));
    let n = 2 * np + l;
    let idx: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
    let mut c = Constants::new(sys);
    let mut table = vec![Vec::new(); n * n];
    for (i, a) in roots.iter().enumerate() {
        for (j, b) in roots.iter().enumerate() {
            let s = a.add(b);
            let entry: SparseInt = if s.is_zero() {
                sys.coroot(a)
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(k, &x)| ((2 * np + k) as u32, x))
                    .collect()
            } else if let Some(&k) = idx.get(&s) {
                let v = c.n(a, b);
                let p = c.string_down(a, b);
                if v.abs() != p + 1 {
                    return Err(Error::BrokenAxiom(format!("|N({a},{b})| = {} but p + 1 = {}", v.abs(), p + 1)));
                }
                vec![(k as u32, v)]
            } else {
                Vec::new()
            };
            table[i * n + j] = entry;
        }
        for k in 0..l {
            let w = sys.pairing(a, k);
            if w != 0 {
                let h = 2 * np + k;
                table[h * n + i] = vec![(i as u32, w)];
                table[i * n + h] = vec![(i as u32, -w)];
            }
        }
    }
    Ok((roots, table))
}
