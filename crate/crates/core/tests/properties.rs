//! Property tests for the structural invariants.

use nilvar::chevalley::ChevalleyAlgebra;
use nilvar::classical::Partition;
use nilvar::ffcount::{self, check_eta, eta_unip_to_nil, FormGroup, MatSpace, PairMethod};
use nilvar::field::{PrimeField, Rationals};
use nilvar::lie::LieAlgebra;
use nilvar::linalg::{unit, Matrix};
use nilvar::restricted::{dim_c_formula, JacobsonMethod, RestrictedAlgebra};
use nilvar::rootsys::RootSystem;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BUDGET: u64 = 1 << 22;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobson_matches_matrix_power(p in prime(), n in 2usize..=3, seed in any::<u64>()) {
        let g = RestrictedAlgebra::gl(n, p).unwrap();
        let f = PrimeField::new(p).unwrap();
        let x = g.random_element(&mut ChaCha8Rng::seed_from_u64(seed));
        let want = Matrix::from_fn(&f, n, n, |i, j| x[i * n + j]).pow(p).entries().to_vec();
        prop_assert_eq!(g.p_power_with(&x, JacobsonMethod::Interpolation), want.clone());
        prop_assert_eq!(g.p_power_with(&x, JacobsonMethod::Symbolic), want);
    }

    #[test]
    fn nilpotent_and_semisimple_are_consistent(p in prime(), seed in any::<u64>()) {
        let n = 3;
        let g = RestrictedAlgebra::gl(n, p).unwrap();
        let f = PrimeField::new(p).unwrap();
        let x = g.random_element(&mut ChaCha8Rng::seed_from_u64(seed));
        let m = Matrix::from_fn(&f, n, n, |i, j| x[i * n + j]);
        prop_assert_eq!(g.is_nilpotent(&x), m.pow(n as u64).is_zero());
        if g.is_nilpotent(&x) && g.is_semisimple(&x) {
            prop_assert!(x.iter().all(|&c| c == 0));
        }
        let r = g.semisimple_index(&x);
        prop_assert!(g.is_semisimple(&g.p_power_iter(&x, r)));
    }

    #[test]
    fn brackets_respect_gradings(
        t in prop::sample::select(vec!["A3", "B3", "C3", "G2", "F4", "D4", "E6"]),
        weights in prop::collection::vec(-3i64..=3, 6),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
    ) {
        let sys = RootSystem::parse(t).unwrap();
        let g = ChevalleyAlgebra::new(&sys, PrimeField::new(101).unwrap()).unwrap();
        let deg = g.degrees(&weights[..sys.rank()]);
        let n = g.dim();
        let (a, b) = (i.index(n), j.index(n));
        let c = g.bracket(&unit(g.field(), n, a), &unit(g.field(), n, b));
        for k in g.support(&c) {
            prop_assert_eq!(deg[k], deg[a] + deg[b]);
        }
    }

    #[test]
    fn toral_search_finds_one_torus_per_block(p in prop::sample::select(vec![2u64, 3]), k in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let all: Vec<Partition> = (1..=4).flat_map(Partition::all).collect();
        let lambda = &all[k.index(all.len())];
        let z = RestrictedAlgebra::gl_centralizer(lambda, p).unwrap();
        let found = z.toral_rank_search(BUDGET, seed);
        prop_assert!(z.validate_toral(&found.witness.elements));
        prop_assert_eq!(found.witness.len(), lambda.len());
    }

    #[test]
    fn eta_is_equivariant_on_gl(n in 1usize..=3, q in prop::sample::select(vec![2u64, 3, 5]), seed in any::<u64>()) {
        let space = MatSpace::new(n, q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = space.random_invertible(&mut rng);
        let gi = space.inverse(&g).unwrap();
        // a random unipotent: identity plus a strictly lower triangular conjugated by g
        let low = space.from_fn(|i, j| if i > j { rand::Rng::gen_range(&mut rng, 0..q as i64) } else { 0 });
        let u = space.add(&space.identity(), &low);
        let conj = |x| space.mul(&space.mul(&g, &x), &gi);
        let lhs = eta_unip_to_nil(&space, &conj(u), FormGroup::Gl).unwrap();
        let rhs = conj(eta_unip_to_nil(&space, &u, FormGroup::Gl).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert!(space.is_nilpotent(&lhs));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn torus_acts_invertibly_for_small_ranks(
        t in prop::sample::select(vec!["A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]),
        k in any::<prop::sample::Index>(),
        seed in 0u64..1000,
    ) {
        let sys = RootSystem::parse(t).unwrap();
        let pairs = sys.distinguished_pairs().unwrap();
        let pair = pairs[k.index(pairs.len())];
        let g = ChevalleyAlgebra::new(&sys, Rationals).unwrap();
        prop_assert!(g.check_torus_invertible(pair, seed).unwrap(), "{} {}", t, pair);
        prop_assert!(g.check_no_zero_weight(pair, seed).unwrap(), "{} {}", t, pair);
    }

    #[test]
    fn regular_orbit_maximizes_dim_c(n in 2usize..=5, k in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let parts = Partition::all(n);
        let lambda = &parts[k.index(parts.len())];
        let reg = Partition::new(vec![n]).unwrap();
        let top = dim_c_formula(&reg, 2, BUDGET, seed).unwrap();
        prop_assert!(top.exact);
        prop_assert_eq!(top.value, n * n - 1);
        if *lambda != reg {
            prop_assert!(dim_c_formula(lambda, 2, BUDGET, seed).unwrap().value < top.value);
        }
    }

    #[test]
    fn eta_on_form_groups(seed in any::<u64>()) {
        let c = check_eta(&MatSpace::new(2, 5).unwrap(), FormGroup::Sp2, 100, seed, BUDGET).unwrap();
        prop_assert!(c.passed());
        let c = check_eta(&MatSpace::new(3, 3).unwrap(), FormGroup::So3, 100, seed, BUDGET).unwrap();
        prop_assert!(c.passed());
    }
}

#[test]
fn pair_methods_agree_for_gl4_over_f2() {
    let a = ffcount::count_commuting_nilpotent_pairs(4, 2, PairMethod::Naive, 1 << 26).unwrap();
    let b = ffcount::count_commuting_nilpotent_pairs(4, 2, PairMethod::Stratified, 1 << 26).unwrap();
    assert_eq!(a.count, b.count);
}

#[test]
fn unipotent_and_nilpotent_pair_counts_for_gl3_over_f3() {
    let u = ffcount::count_unipotent_commuting_pairs(3, 3, 1 << 26).unwrap();
    let v = ffcount::count_commuting_nilpotent_pairs(3, 3, PairMethod::Stratified, 1 << 26).unwrap();
    assert_eq!(u.count, v.count);
}

#[test]
fn eta_bijects_for_every_gl() {
    for (n, q) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)] {
        assert!(check_eta(&MatSpace::new(n, q).unwrap(), FormGroup::Gl, 100, 9, 1 << 26).unwrap().passed(), "GL{n} F{q}");
    }
}
