//! Self-contained certificates for the exceptional orbits where the
//! centralizer contains a nilpotent element with nonzero `p`-th power.
//!
//! Each scenario builds its algebra over `F_p`, solves for every element it
//! needs and records one [`Check`] per identity. Nothing is assumed about
//! the sign conventions of the structure constants: the identities checked
//! are either intrinsic or stated up to a nonzero scalar.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use super::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::lie::{jacobson_terms, LieAlgebra};
use crate::linalg::{span_rank, unit, vec_add, vec_is_zero, vec_scale, vec_zero, Basis, Echelon, Vector};
use crate::rootsys::{LeviPair, NodeSet, Root, RootSystem};

type Fp = PrimeField;
type V = Vector<Fp>;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_vector: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub schema: u32,
    pub scenario: String,
    pub p: u64,
    pub checks: Vec<Check>,
}

impl Certificate {
    fn new(scenario: Scenario) -> Self {
        Certificate { schema: 1, scenario: scenario.to_string(), p: scenario.prime(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, pass: bool) {
        self.checks.push(Check { name: name.into(), pass, witness_vector: None, detail: None });
    }

    fn push_detail(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, witness_vector: None, detail: Some(detail.into()) });
    }

    fn push_vector(&mut self, name: &str, pass: bool, g: &ChevalleyAlgebra<Fp>, v: &[u64]) {
        self.checks.push(Check { name: name.into(), pass, witness_vector: Some(g.sparse_json(v)), detail: None });
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("certificate serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// `E8`, `p = 7`, orbit `A6 + A1`.
    E8p7,
    /// `E7`, `p = 5`, orbit `A4 + A2`.
    E7p5,
    /// The `E8` witness pushed into the fixed points of the parity involution.
    E8Tau,
    /// `G2`, `p = 5`, the short root orbit.
    G2,
}

impl Scenario {
    pub const ALL: [Scenario; 4] = [Scenario::E8p7, Scenario::E7p5, Scenario::E8Tau, Scenario::G2];

    pub fn prime(&self) -> u64 {
        match self {
            Scenario::E8p7 | Scenario::E8Tau => 7,
            Scenario::E7p5 | Scenario::G2 => 5,
        }
    }

    pub fn run(&self) -> Result<Certificate> {
        match self {
            Scenario::E8p7 => verify_witness_e8_p7(),
            Scenario::E7p5 => verify_witness_e7_p5(),
            Scenario::E8Tau => verify_tau_e8(),
            Scenario::G2 => verify_g2_short(),
        }
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e8p7" => Ok(Scenario::E8p7),
            "e7p5" => Ok(Scenario::E7p5),
            "e8tau" => Ok(Scenario::E8Tau),
            "g2" | "g2p5" => Ok(Scenario::G2),
            _ => Err(Error::InvalidParameter(format!("unknown scenario {s:?}; expected e8p7, e7p5, e8tau or g2"))),
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scenario::E8p7 => "e8p7",
            Scenario::E7p5 => "e7p5",
            Scenario::E8Tau => "e8tau",
            Scenario::G2 => "g2",
        })
    }
}

fn algebra(t: &str, p: u64) -> Result<ChevalleyAlgebra<Fp>> {
    ChevalleyAlgebra::new(&RootSystem::parse(t)?, PrimeField::new(p)?)
}

fn indices(n: usize, pred: impl Fn(usize) -> bool) -> Vec<usize> {
    (0..n).filter(|&i| pred(i)).collect()
}

/// Both vectors nonzero and spanning a line.
fn proportional(f: &Fp, a: &[u64], b: &[u64]) -> bool {
    !vec_is_zero(f, a) && !vec_is_zero(f, b) && span_rank(f, &[a.to_vec(), b.to_vec()]) == 1
}

/// Whether `[x, b] = c b` for every listed basis element.
fn acts_by_scalar(g: &ChevalleyAlgebra<Fp>, x: &[u64], idx: &[usize], c: i64) -> bool {
    let f = *g.field();
    let c = f.from_i64(c);
    idx.iter().all(|&i| {
        let b = unit(&f, g.dim(), i);
        g.bracket(x, &b) == vec_scale(&f, &c, &b)
    })
}

/// The element and its triple in `z(e; 0)`, together with the gradings used.
struct LeviSetup {
    e: V,
    deg: Vec<i64>,
    lev: Vec<i64>,
    z0_dim: usize,
    e0: V,
    h0: V,
    f0: V,
}

/// Builds `e = Σ_{i ∈ J} e_{α_i}` and an `sl2`-triple `(e0, h0, f0)` in
/// `z(e; 0)` with `e0` in level `step` and `f0` in level `-step` of the
/// grading by the coefficient of the simple root outside `J`. When
/// `f0_raw` is given it is used for `f0` up to scaling.
fn levi_setup(g: &ChevalleyAlgebra<Fp>, j: NodeSet, step: i64, f0_raw: Option<V>) -> Result<LeviSetup> {
    let f = *g.field();
    let n = g.dim();
    let sys = g.system();
    let e = g.regular_in_levi(j);
    let lambda = sys.solve_cocharacter(LeviPair { i: j, j: NodeSet::empty() })?;
    let deg = g.cocharacter_degrees(&lambda);
    let lev = g.levi_degrees(j);
    let z0_dim = g.centralizer_on(&e, &indices(n, |i| deg[i] == 0)).len();
    let piece = |l: i64| g.centralizer_on(&e, &indices(n, |i| deg[i] == 0 && lev[i] == l));
    let up = piece(step);
    let down = piece(-step);
    if up.len() != 1 || down.len() != 1 {
        return Err(Error::Inconsistent(format!(
            "z(e;0) meets levels ±{step} in dimensions {} and {}",
            up.len(),
            down.len()
        )));
    }
    let e0 = up[0].clone();
    let f0_raw = f0_raw.unwrap_or_else(|| down[0].clone());
    let h_raw = g.bracket(&e0, &f0_raw);
    let he = g.bracket(&h_raw, &e0);
    let k = e0.iter().position(|c| !f.is_zero(c)).expect("nonzero e0");
    let mu = f.div(&he[k], &e0[k]).expect("nonzero pivot");
    if f.is_zero(&mu) || he != vec_scale(&f, &mu, &e0) {
        return Err(Error::Inconsistent("[e0, f0] does not act on e0 by a nonzero scalar".into()));
    }
    let s = f.div(&f.from_i64(2), &mu).expect("mu is nonzero");
    Ok(LeviSetup { e, deg, lev, z0_dim, e0, h0: vec_scale(&f, &s, &h_raw), f0: vec_scale(&f, &s, &f0_raw) })
}

fn push_triple_checks(cert: &mut Certificate, g: &ChevalleyAlgebra<Fp>, s: &LeviSetup) {
    let f = *g.field();
    let two = f.from_i64(2);
    let m2 = f.from_i64(-2);
    cert.push_detail("z(e;0) has dimension 3", s.z0_dim == 3, format!("dim = {}", s.z0_dim));
    let sl2 = g.bracket(&s.h0, &s.e0) == vec_scale(&f, &two, &s.e0)
        && g.bracket(&s.h0, &s.f0) == vec_scale(&f, &m2, &s.f0)
        && g.bracket(&s.e0, &s.f0) == s.h0;
    cert.push("(e0, h0, f0) is an sl2-triple", sl2);
    let central = [&s.e0, &s.h0, &s.f0].iter().all(|x| vec_is_zero(&f, &g.bracket(&s.e, x)));
    cert.push("e0, h0, f0 centralize e", central);
    let h0_cartan = g.support(&s.h0).iter().all(|&i| g.basis_root(i).is_none());
    cert.push("h0 lies in the Cartan subalgebra", h0_cartan);
    cert.push_vector("e0", !vec_is_zero(&f, &s.e0), g, &s.e0);
    cert.push_vector("f0", !vec_is_zero(&f, &s.f0), g, &s.f0);
    cert.push_vector("h0", !vec_is_zero(&f, &s.h0), g, &s.h0);
}

/// `(ad e)^2 : g(-2) -> g(2)` fails to be bijective and the nilpotent part of
/// the triple lies in `[e, g(-2)]`, so no contradiction comes from the
/// tangent space argument and an explicit witness is needed.
fn push_tangent_checks(cert: &mut Certificate, g: &ChevalleyAlgebra<Fp>, s: &LeviSetup) {
    let f = *g.field();
    let n = g.dim();
    cert.push("(ad e)^2 on g(-2) is not bijective", !g.check_ad2_bijective(&s.e, &s.deg));
    let mut image = Echelon::new(&f, n);
    for i in indices(n, |i| s.deg[i] == -2) {
        image.insert(&g.bracket(&s.e, &unit(&f, n, i)));
    }
    cert.push("e0 and f0 lie in [e, g(-2)]", image.contains(&s.e0) && image.contains(&s.f0));
}

/// Data of the `E8`, `p = 7` witness, shared with the involution scenario.
struct E8Witness {
    g: ChevalleyAlgebra<Fp>,
    setup: LeviSetup,
    a: V,
    z: V,
}

fn e8_j() -> NodeSet {
    NodeSet::from_labels(&[1, 2, 4, 5, 6, 7, 8])
}

fn build_e8_witness() -> Result<E8Witness> {
    let g = algebra("E8", 7)?;
    let n = g.dim();
    let setup = levi_setup(&g, e8_j(), 2, None)?;
    let top = g.centralizer_on(&setup.e, &indices(n, |i| setup.lev[i] == 4));
    if top.len() != 1 {
        return Err(Error::Inconsistent(format!("z(e) meets level 4 in dimension {}", top.len())));
    }
    let a = top[0].clone();
    let z = vec_add(g.field(), &setup.f0, &a);
    Ok(E8Witness { g, setup, a, z })
}

/// `E8` over `F_7`, `J = {1,2,4,5,6,7,8}`: the element `z = f0 + a` of
/// `z(e)` is nilpotent with `z^[7] = -2 [f0^2 a f0^3 a] ≠ 0`, while `e^[7] = 0`.
pub fn verify_witness_e8_p7() -> Result<Certificate> {
    let mut cert = Certificate::new(Scenario::E8p7);
    let E8Witness { g, setup: s, a, z } = build_e8_witness()?;
    let f = *g.field();
    let n = g.dim();
    let sys = g.system();
    push_triple_checks(&mut cert, &g, &s);
    let by_level = |l: i64| indices(n, |i| s.lev[i] == l);
    let ok = [-4, -2, 2, 4].iter().all(|&l| acts_by_scalar(&g, &s.h0, &by_level(l), l));
    cert.push("ad h0 acts on level l as l", ok);
    cert.push("f0 in level -2", g.is_homogeneous(&s.f0, &s.lev, -2));

    let highest = sys.highest_root().clone();
    let delta = Root(vec![2, 2, 4, 5, 4, 3, 2, 1]);
    let hi = g.root_index(&highest).expect("highest root");
    cert.push_vector("a spans z(e) in level 4 and is a multiple of the highest root vector", g.support(&a) == [hi], &g, &a);
    cert.push("a has λ_e-degree 6", g.is_homogeneous(&a, &s.deg, 6));
    cert.push("[h0, a] = 4a", g.bracket(&s.h0, &a) == vec_scale(&f, &f.from_i64(4), &a));
    let low = g.centralizer_on(&s.e, &by_level(-4)).len();
    cert.push_detail("z(e) meets level -4 in a line", low == 1, format!("dim = {low}"));

    let f0 = &s.f0[..];
    let a_ = &a[..];
    let f4a = g.ad_power(f0, 4, a_);
    let md = g.root_index(&delta.neg()).expect("-δ is a root");
    cert.push_vector("[f0^4 a] is a nonzero multiple of e_-δ", g.support(&f4a) == [md], &g, &f4a);
    cert.push("highest root minus δ is a root", sys.is_root(&highest.sub(&delta)));
    let words: [(&str, Vec<&[u64]>); 6] = [
        ("[a f0 a] = 0", vec![a_, f0]),
        ("[a f0^2 a] = 0", vec![a_, f0, f0]),
        ("[a^2 f0^3 a] = 0", vec![a_, a_, f0, f0, f0]),
        ("[f0^5 a] = 0", vec![f0; 5]),
        ("[a^2 f0^4 a] = 0", vec![a_, a_, f0, f0, f0, f0]),
        ("[a f0 a f0^3 a] = 0", vec![a_, f0, a_, f0, f0, f0]),
    ];
    for (name, w) in words {
        cert.push(name, vec_is_zero(&f, &g.ad_word(&w, a_)));
    }
    let af4a = g.ad_word(&[a_, f0, f0, f0, f0], a_);
    cert.push("[a f0^4 a] ≠ 0", !vec_is_zero(&f, &af4a));
    let af3a = g.ad_word(&[a_, f0, f0, f0], a_);
    cert.push("[a f0^3 a] ≠ 0", !vec_is_zero(&f, &af3a));
    let target = g.ad_word(&[f0, f0, a_, f0, f0, f0], a_);
    cert.push("[f0^2 a f0^3 a] ≠ 0", !vec_is_zero(&f, &target));

    let zp = g.p_power(&z)?;
    cert.push_vector("z^[7] ≠ 0", !vec_is_zero(&f, &zp), &g, &zp);
    cert.push("z^[7] lies in level -2", g.is_homogeneous(&zp, &s.lev, -2));
    cert.push("z^[7] = -2 [f0^2 a f0^3 a]", zp == vec_scale(&f, &f.from_i64(-2), &target));
    let terms = jacobson_terms(&g, a_, f0);
    let only_s2 = terms.iter().enumerate().all(|(k, t)| k == 1 || vec_is_zero(&f, t));
    cert.push("s_i(a, f0) = 0 for i ≠ 2", only_s2);
    cert.push("z^[7] = s_2(a, f0)", terms[1] == zp);
    let f0p = g.p_power(f0)?;
    let ap = g.p_power(a_)?;
    cert.push("f0^[7] = a^[7] = 0", vec_is_zero(&f, &f0p) && vec_is_zero(&f, &ap));
    cert.push("z is nilpotent", g.is_p_nilpotent(&z)?);
    cert.push("[e, z] = 0", vec_is_zero(&f, &g.bracket(&s.e, &z)));
    cert.push("e^[7] = 0", vec_is_zero(&f, &g.p_power(&s.e)?));
    push_tangent_checks(&mut cert, &g, &s);
    Ok(cert)
}

/// Roots `γ_1..γ_6` spanning `g_J(-1) ∩ g(0; λ_e)` in `E7`.
fn e7_gammas() -> [Root; 6] {
    [
        Root(vec![0, 1, 0, 1, 1, 1, 1]),
        Root(vec![0, 0, 1, 1, 1, 1, 1]),
        Root(vec![1, 0, 1, 1, 1, 1, 0]),
        Root(vec![0, 1, 1, 1, 1, 1, 0]),
        Root(vec![1, 1, 1, 1, 1, 0, 0]),
        Root(vec![0, 1, 1, 2, 1, 0, 0]),
    ]
}

/// The vectors `e_{-γ_i}` normalized through brackets with `e_{-β}`,
/// `β = α_1 + ... + α_7`.
fn e7_gamma_vectors(g: &ChevalleyAlgebra<Fp>) -> Result<Vec<V>> {
    let f = *g.field();
    let simple = |i: usize| g.simple_root_vector(i - 1);
    let mb = g.root_vector(&Root(vec![-1; 7]))?;
    let chain = |outer: usize, inner: usize| g.bracket(&simple(outer), &g.bracket(&simple(inner), &mb));
    let v1 = chain(3, 1);
    let v2 = chain(2, 1);
    let v3 = chain(2, 7);
    let v4 = chain(7, 1);
    let v5 = chain(6, 7);
    // [e_{α_4}, e_{-γ_6}] = [e_{α_1}, e_{-γ_5}]
    let raw6 = g.root_vector(&e7_gammas()[5].neg())?;
    let lhs = g.bracket(&simple(4), &raw6);
    let rhs = g.bracket(&simple(1), &v5);
    let k = lhs.iter().position(|c| !f.is_zero(c)).ok_or_else(|| Error::Inconsistent("[e_α4, e_-γ6] = 0".into()))?;
    let c = f.div(&rhs[k], &lhs[k]).expect("nonzero");
    let v6 = vec_scale(&f, &c, &raw6);
    let vs = vec![v1, v2, v3, v4, v5, v6];
    for (v, gamma) in vs.iter().zip(e7_gammas()) {
        let idx = g.root_index(&gamma.neg()).expect("root");
        if g.support(v) != [idx] {
            return Err(Error::Inconsistent(format!("bracket chain does not give e_-{gamma}")));
        }
    }
    Ok(vs)
}

/// `E7` over `F_5`, `J = {1,2,3,4,6,7}`: `z = f0 + a` has
/// `z^[5] = [f0^4 a] ≠ 0` while `e^[5] = 0`.
pub fn verify_witness_e7_p5() -> Result<Certificate> {
    let mut cert = Certificate::new(Scenario::E7p5);
    let g = algebra("E7", 5)?;
    let f = *g.field();
    let n = g.dim();
    let sys = g.system();
    let j = NodeSet::from_labels(&[1, 2, 3, 4, 6, 7]);
    let s = levi_setup(&g, j, 1, None)?;

    let gammas = e7_gammas();
    let mut slot = indices(n, |i| s.lev[i] == -1 && s.deg[i] == 0);
    let mut expected: Vec<usize> = gammas.iter().map(|r| g.root_index(&r.neg()).expect("root")).collect();
    slot.sort_unstable();
    expected.sort_unstable();
    cert.push("g_J(-1) ∩ g(0) is spanned by e_-γ1..e_-γ6", slot == expected);
    let basis = Basis::new(&f, e7_gamma_vectors(&g)?)?;
    let svec = basis.coords(&s.f0).ok_or_else(|| Error::Inconsistent("f0 outside the γ span".into()))?;
    let sum = |ix: &[usize]| ix.iter().fold(0, |acc, &i| f.add(&acc, &svec[i]));
    let relations = [
        ("s1 + s2 = 0", sum(&[0, 1])),
        ("s1 + s4 = 0", sum(&[0, 3])),
        ("s3 + s5 = 0", sum(&[2, 4])),
        ("s2 + s3 + s4 = 0", sum(&[1, 2, 3])),
        ("s4 + s5 + s6 = 0", sum(&[3, 4, 5])),
    ];
    for (name, v) in relations {
        cert.push(name, v == 0);
    }
    let coeffs: Vec<i64> = svec.iter().map(|&c| f.centered(c)).collect();
    cert.push_detail("all s_i ≠ 0", svec.iter().all(|c| *c != 0), format!("s = {coeffs:?}"));

    push_triple_checks(&mut cert, &g, &s);
    let ok = [-3, -2, -1, 1, 2, 3].iter().all(|&l| acts_by_scalar(&g, &s.h0, &indices(n, |i| s.lev[i] == l), 2 * l));
    cert.push("ad h0 acts on level l as 2l", ok);

    let plus = g.centralizer_on(&s.e, &indices(n, |i| s.lev[i] == 3));
    let minus = g.centralizer_on(&s.e, &indices(n, |i| s.lev[i] == -3));
    cert.push_detail(
        "z(e) meets levels ±3 in lines",
        plus.len() == 1 && minus.len() == 1,
        format!("dims {} and {}", plus.len(), minus.len()),
    );
    let a = plus.first().cloned().unwrap_or_else(|| vec_zero(&f, n));
    let hi = g.root_index(sys.highest_root()).expect("highest root");
    cert.push_vector("a is a multiple of the highest root vector", g.support(&a) == [hi], &g, &a);
    cert.push("a has λ_e-degree 4", g.is_homogeneous(&a, &s.deg, 4));
    let z = vec_add(&f, &s.f0, &a);

    let f0 = &s.f0[..];
    let a_ = &a[..];
    for (name, w) in [
        ("[a f0 a] = 0", vec![a_, f0]),
        ("[a f0^2 a] = 0", vec![a_, f0, f0]),
        ("[a f0^3 a] = 0", vec![a_, f0, f0, f0]),
    ] {
        cert.push(name, vec_is_zero(&f, &g.ad_word(&w, a_)));
    }
    let f2a = g.ad_power(f0, 2, a_);
    let allowed: Vec<usize> = [[0, 1, 1, 2, 1, 1, 1], [1, 1, 1, 1, 1, 1, 1], [1, 1, 1, 2, 1, 1, 0]]
        .iter()
        .map(|c| g.root_index(&Root(c.to_vec())).expect("root"))
        .collect();
    // α̃ - γ_3 - γ_1 = 1122100 also shows up, with coefficient ±s_1 s_3 N N
    let supp = g.support(&f2a);
    let labels: Vec<String> = supp.iter().map(|&i| g.label(i)).collect();
    cert.checks.push(Check {
        name: "[f0^2 a] ≠ 0 and involves e_0112111, e_1111111, e_1112110".into(),
        pass: !supp.is_empty() && allowed.iter().all(|i| supp.contains(i)),
        witness_vector: Some(g.sparse_json(&f2a)),
        detail: Some(format!("support {}", labels.join(", "))),
    });
    let f4a = g.ad_power(f0, 4, a_);
    let back = g.ad_power(&s.e0, 2, &f4a);
    cert.push("(ad e0)^2 [f0^4 a] is a nonzero multiple of [f0^2 a]", proportional(&f, &back, &f2a));
    let zp = g.p_power(&z)?;
    cert.push_vector("z^[5] = [f0^4 a] ≠ 0", zp == f4a && !vec_is_zero(&f, &zp), &g, &zp);
    cert.push("z^[5] lies in level -1", g.is_homogeneous(&zp, &s.lev, -1));
    let terms = jacobson_terms(&g, a_, f0);
    let only_s1 = terms.iter().skip(1).all(|t| vec_is_zero(&f, t));
    cert.push("s_i(a, f0) = 0 for i > 1 and s_1 = [f0^4 a]", only_s1 && terms[0] == f4a);
    let f0p = g.p_power(f0)?;
    let ap = g.p_power(a_)?;
    cert.push("f0^[5] = a^[5] = 0", vec_is_zero(&f, &f0p) && vec_is_zero(&f, &ap));
    cert.push("z is nilpotent", g.is_p_nilpotent(&z)?);
    cert.push("[e, z] = 0", vec_is_zero(&f, &g.bracket(&s.e, &z)));
    cert.push("e^[5] = 0", vec_is_zero(&f, &g.p_power(&s.e)?));
    push_tangent_checks(&mut cert, &g, &s);
    Ok(cert)
}

/// Fixed points of the involution acting by `(-1)^l` on level `l`, split
/// into simple ideals.
#[derive(Clone, Debug)]
pub struct TauDecomposition {
    /// Basis indices of the fixed root vectors plus the Cartan part.
    pub fixed: Vec<usize>,
    /// Each ideal as a basis, largest first.
    pub ideals: Vec<Vec<V>>,
}

impl TauDecomposition {
    pub fn dim(&self) -> usize {
        self.fixed.len()
    }

    pub fn ideal_dims(&self) -> Vec<usize> {
        self.ideals.iter().map(Vec::len).collect()
    }

    /// Components of `x` in the ideals; `None` if `x` is not fixed.
    pub fn project(&self, f: &Fp, x: &[u64]) -> Option<Vec<V>> {
        let all: Vec<V> = self.ideals.iter().flatten().cloned().collect();
        let basis = Basis::new(f, all).ok()?;
        let c = basis.coords(x)?;
        let mut out = Vec::new();
        let mut start = 0;
        for ideal in &self.ideals {
            let part = Basis::new(f, ideal.clone()).ok()?;
            out.push(part.combine(&c[start..start + ideal.len()]));
            start += ideal.len();
        }
        Some(out)
    }
}

/// Ideals of the fixed points of the parity involution for the grading by
/// the simple roots outside `j`: roots of even level, grouped into
/// connected components of the non-orthogonality graph, each with the span
/// of its coroots.
pub fn tau_fixed_subalgebra(g: &ChevalleyAlgebra<Fp>, j: NodeSet) -> TauDecomposition {
    let f = *g.field();
    let n = g.dim();
    let sys = g.system();
    let lev = g.levi_degrees(j);
    let fixed = indices(n, |i| lev[i] % 2 == 0);
    let roots: Vec<usize> = fixed.iter().copied().filter(|&i| g.basis_root(i).is_some()).collect();
    let mut parent: Vec<usize> = (0..roots.len()).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for x in 0..roots.len() {
        for y in x + 1..roots.len() {
            let (a, b) = (g.basis_root(roots[x]).unwrap(), g.basis_root(roots[y]).unwrap());
            if sys.inner(a, b) != 0 {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx] = ry;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (x, &root) in roots.iter().enumerate() {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(root);
    }
    let mut ideals: Vec<Vec<V>> = groups
        .into_values()
        .map(|members| {
            let mut cartan = Echelon::new(&f, n);
            for &i in &members {
                let mut h = vec_zero(&f, n);
                for (k, c) in sys.coroot(g.basis_root(i).unwrap()).iter().enumerate() {
                    h[g.cartan_index(k)] = f.from_i64(*c);
                }
                cartan.insert(&h);
            }
            let mut basis: Vec<V> = members.iter().map(|&i| unit(&f, n, i)).collect();
            basis.extend(cartan.basis());
            basis
        })
        .collect();
    ideals.sort_by_key(|b| std::cmp::Reverse(b.len()));
    TauDecomposition { fixed, ideals }
}

/// Whether `[g^τ, I] ⊆ I`.
fn is_ideal(g: &ChevalleyAlgebra<Fp>, fixed: &[usize], ideal: &[V]) -> bool {
    let f = *g.field();
    let mut span = Echelon::new(&f, g.dim());
    for v in ideal {
        span.insert(v);
    }
    fixed.iter().all(|&i| {
        let b = unit(&f, g.dim(), i);
        ideal.iter().all(|v| span.contains(&g.bracket(&b, v)))
    })
}

/// The `E8` witness inside the fixed points of the parity involution: its
/// component in the `E7` ideal still has nonzero `7`-th power.
pub fn verify_tau_e8() -> Result<Certificate> {
    let mut cert = Certificate::new(Scenario::E8Tau);
    let E8Witness { g, setup: s, z, .. } = build_e8_witness()?;
    let f = *g.field();
    let tau = tau_fixed_subalgebra(&g, e8_j());
    cert.push_detail("dim g^τ = 136", tau.dim() == 136, format!("dim = {}", tau.dim()));
    let dims = tau.ideal_dims();
    cert.push_detail("ideals of dimensions 133 and 3", dims == [133, 3], format!("dims = {dims:?}"));
    let all: Vec<V> = tau.ideals.iter().flatten().cloned().collect();
    cert.push("the ideals form a direct sum equal to g^τ", span_rank(&f, &all) == tau.dim() && all.len() == tau.dim());
    let ideals_ok = tau.ideals.iter().all(|i| is_ideal(&g, &tau.fixed, i));
    cert.push("each summand is an ideal", ideals_ok);
    let (Some(ep), Some(zp)) = (tau.project(&f, &s.e), tau.project(&f, &z)) else {
        cert.push("e and z are fixed", false);
        return Ok(cert);
    };
    cert.push("e and z are fixed", true);
    let (e1, z1, z2) = (&ep[0], &zp[0], &zp[1]);
    cert.push("e1^[7] = 0", vec_is_zero(&f, &g.p_power(e1)?));
    let z1p = g.p_power(z1)?;
    cert.push_vector("z1^[7] ≠ 0", !vec_is_zero(&f, &z1p), &g, &z1p);
    cert.push("[e1, z1] = 0", vec_is_zero(&f, &g.bracket(e1, z1)));
    cert.push("z2^[7] = 0", vec_is_zero(&f, &g.p_power(z2)?));
    Ok(cert)
}

/// `G2` over `F_5` with `e` a short simple root vector: `(ad e)^2` is
/// bijective on `g(-2)`, so the nilpotent elements of `z(e; 0) ≅ sl2` lie
/// outside `[e, g(-2)]` and the orbit is ruled out without a witness.
pub fn verify_g2_short() -> Result<Certificate> {
    let mut cert = Certificate::new(Scenario::G2);
    let g = algebra("G2", 5)?;
    let f = *g.field();
    let n = g.dim();
    let sys = g.system();
    let short = (0..2).min_by_key(|&i| sys.half_lengths()[i]).expect("rank 2");
    cert.push_detail("e is the short simple root vector", true, format!("alpha_{}", short + 1));
    let e = g.simple_root_vector(short);
    let mut lam = vec![0; 2];
    lam[short] = 1;
    let deg = g.cocharacter_degrees(&crate::rootsys::Cocharacter(lam));
    let d2 = indices(n, |i| deg[i] == 2).len();
    let dm2 = indices(n, |i| deg[i] == -2).len();
    cert.push_detail("dim g(±2) = 1", d2 == 1 && dm2 == 1, format!("dims {d2} and {dm2}"));
    let z0 = g.centralizer_on(&e, &indices(n, |i| deg[i] == 0));
    cert.push_detail("z(e;0) has dimension 3", z0.len() == 3, format!("dim = {}", z0.len()));
    let nilp = z0.iter().find(|v| g.support(v).iter().all(|&i| g.basis_root(i).is_some()));
    cert.push("z(e;0) contains a nonzero nilpotent element", match nilp {
        Some(x) => g.is_p_nilpotent(x)?,
        None => false,
    });
    cert.push("(ad e)^2 on g(-2) is bijective", g.check_ad2_bijective(&e, &deg));
    let mut both = Echelon::new(&f, n);
    for v in &z0 {
        both.insert(v);
    }
    let image: Vec<V> = indices(n, |i| deg[i] == -2).iter().map(|&i| g.bracket(&e, &unit(&f, n, i))).collect();
    let meet = z0.len() + span_rank(&f, &image) - {
        for v in &image {
            both.insert(v);
        }
        both.rank()
    };
    cert.push_detail("z(e;0) ∩ [e, g(-2)] = 0", meet == 0, format!("dim = {meet}"));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_certificate_passes() {
        let c = verify_g2_short().unwrap();
        assert!(c.passed(), "{:#?}", c.failures().collect::<Vec<_>>());
    }

    #[test]
    fn scenario_names_round_trip() {
        for s in Scenario::ALL {
            assert_eq!(s.to_string().parse::<Scenario>().unwrap(), s);
        }
        assert!("e6p5".parse::<Scenario>().is_err());
    }

    #[test]
    fn e7_gamma_chain_matches_roots() {
        let g = algebra("E7", 5).unwrap();
        assert_eq!(e7_gamma_vectors(&g).unwrap().len(), 6);
    }
}
