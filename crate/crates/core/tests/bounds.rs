mod support;

use cubeideal::bounds::{self, VerifyOptions};
use cubeideal::graphapps::{cycle_space, fixtures};
use cubeideal::setsys::SetSystem;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn entropy_anchors() {
    assert_eq!(bounds::entropy(0.0).unwrap(), 0.0);
    assert!(close(bounds::entropy(0.5).unwrap(), 1.0, 1e-12));
    assert!(close(bounds::entropy(1.0 / 3.0).unwrap(), 0.9183, 5e-5));
    assert!(bounds::entropy(0.6).is_err());
    assert!(bounds::entropy(-0.1).is_err());
}

#[test]
fn inverse_entropy_anchors() {
    assert_eq!(bounds::entropy_inv(0.0).unwrap(), 0.0);
    assert_eq!(bounds::entropy_inv(1.0).unwrap(), 0.5);
    for k in 1..10 {
        let y = k as f64 / 10.0;
        assert!(close(bounds::entropy(bounds::entropy_inv(y).unwrap()).unwrap(), y, 1e-10));
    }
    let f3 = bounds::entropy_inv(1.0 - bounds::entropy(1.0 / 3.0).unwrap()).unwrap();
    assert!(f3 >= 0.01013);
    assert!(bounds::entropy_inv(1.5).is_err());
}

#[test]
fn entropy_round_trips_on_a_grid() {
    for k in 0..=1000 {
        let x = 0.5 * k as f64 / 1000.0;
        let y = bounds::entropy(x).unwrap();
        assert!(close(bounds::entropy(bounds::entropy_inv(y).unwrap()).unwrap(), y, 1e-10), "x = {x}");
        let y = k as f64 / 1000.0;
        assert!(close(bounds::entropy(bounds::entropy_inv(y).unwrap()).unwrap(), y, 1e-10), "y = {y}");
    }
}

#[test]
fn rate_examples() {
    let r = bounds::rates(3).unwrap();
    assert!(r.g >= 0.0817);
    assert!(close(r.h, 1.0 / 3.0, 1e-15));
    assert!(r.f >= 0.01013);
    for l in 3..20 {
        let (a, b) = (bounds::rates(l).unwrap(), bounds::rates(l + 1).unwrap());
        assert!(a.f < b.f && a.g < b.g && a.h < b.h, "λ = {l}");
    }
    assert!(bounds::rates(2).is_err());
}

#[test]
fn subset_count_sweep() {
    assert!(bounds::subset_count_check(3, 3).unwrap());
    for n in 0..=30 {
        assert!(bounds::subset_count_check(n, 2).unwrap());
        for l in 2..=6 {
            assert!(bounds::subset_count_check(n, l).unwrap(), "n = {n}, λ = {l}");
        }
    }
    assert!(bounds::subset_count_check(31, 3).is_err());
    assert_eq!(bounds::binomial_prefix(3, 1), 4);
}

#[test]
fn sauer_shelah_examples() {
    for n in 1..=8 {
        let r = bounds::sauer_shelah_check(&SetSystem::full_cube(n).unwrap()).unwrap();
        assert_eq!(r.bound, 1 << n);
        assert!(r.pass);
    }
    let r = bounds::sauer_shelah_check(&cycle_space(&fixtures::k4()).unwrap()).unwrap();
    assert_eq!((r.size, r.bound), (8, 42));
    assert!(r.pass);
}

#[test]
fn sauer_shelah_on_seeded_random_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let density: f64 = rng.gen_range(0.01..1.0);
        let pts: Vec<u64> = (0..1u64 << n).filter(|_| rng.gen_bool(density)).collect();
        let pts = if pts.is_empty() { vec![0] } else { pts };
        let s = support::set_system(n, pts);
        let r = bounds::sauer_shelah_check(&s).unwrap();
        assert!(r.pass, "{r:?}");
    }
}

#[test]
#[allow(clippy::approx_constant)]
fn digression_constants() {
    for (l, expected) in [(3.0, 0.0566330), (1e2, 0.6371456), (1e6, 0.6931323), (1e12, 0.6931472)] {
        assert!(close(bounds::gamma_hat(l).unwrap(), expected, 1e-6), "λ = {l}");
    }
    for (l, expected) in [(3.0, 0.0012451), (1e2, 0.0298718)] {
        let p = bounds::gamma_at_lambda(l, 0.1, 3.462).unwrap();
        assert!(p.valid);
        assert!(close(p.gamma, expected, 1e-6), "λ = {l}: {}", p.gamma);
    }
    let p = bounds::barvinok_gamma(1.0, 3.0, 0.1, 3.462).unwrap();
    assert!(close(p.gamma, 0.0012451, 1e-6));
    assert!(!bounds::barvinok_gamma(1.0, 3.0, 0.1, 0.5).unwrap().valid);
    assert!(bounds::barvinok_gamma(0.5, 3.0, 0.1, 1.0).is_err());
    assert!(bounds::barvinok_gamma(1.0, 3.0, 1.0, 1.0).is_err());
    assert!(bounds::barvinok_gamma(1.0, 3.0, 0.1, 0.0).is_err());
}

#[test]
fn gamma_optimum() {
    let l = 1e6;
    let p = bounds::optimize_gamma(1.0, l / (l - 2.0)).unwrap();
    assert!(p.valid);
    assert!(close(p.gamma, 0.0312814, 1e-4), "{p:?}");
    assert!(close(p.epsilon, 0.089650, 1e-3), "{p:?}");
    assert!(close(p.rho, 3.524481, 1e-3), "{p:?}");
    assert!(bounds::gamma_hat(l).unwrap() > 20.0 * p.gamma);
}

#[test]
fn theta_is_positive() {
    assert!(bounds::theta_faces(3, 1.0 / 3.0).unwrap() > 0.0);
    assert!(bounds::theta_faces(4, 1.0 - 3.0 / 4.0).unwrap() > 0.0);
    assert!(bounds::theta_faces(2, 0.5).is_err());
    assert!(bounds::theta_faces(3, 0.0).is_err());
}

fn verified(s: &SetSystem) -> bounds::TheoremReport {
    let r = bounds::verify_theorems(s, VerifyOptions::default()).unwrap();
    assert!(r.failures().is_empty(), "{:?}", r.failures());
    r
}

#[test]
fn verification_on_k4_cycle_space() {
    let r = verified(&cycle_space(&fixtures::k4()).unwrap());
    let size = r.row("size-lower-bound").unwrap();
    assert!(close(size.lhs, 3.0, 1e-12));
    assert!(close(size.rhs, 0.49, 1e-2));
    let vc = r.row("vc-lower-bound").unwrap();
    assert!(close(vc.rhs, 0.0608, 1e-3));
    let conj = r.row("vc-linear-conjecture").unwrap();
    assert!(conj.conjecture && conj.tight);
    assert!(close(conj.lhs, 3.0, 0.0) && close(conj.rhs, 3.0, 1e-12));
    assert!(r.row("subcube-containment").unwrap().pass);
    let face = r.row("face-lattice-lower-bound").unwrap();
    assert!(face.params["theta"].as_f64().unwrap() > 0.0);
}

#[test]
fn verification_on_chain() {
    let r = verified(&fixtures::chain(3));
    assert_eq!((r.d, r.kappa, r.core_size), (1, cubeideal::Extended::Infinity, 2));
    let core = r.row("core-size-lower-bound").unwrap();
    assert!(core.tight && core.pass);
}

#[test]
fn verification_on_shipped_fixtures() {
    for n in 2..=6 {
        verified(&fixtures::chain(n));
    }
    for n in 1..=6 {
        let r = bounds::verify_theorems(&SetSystem::full_cube(n).unwrap(), VerifyOptions::default()).unwrap();
        assert!(r.failures().is_empty());
    }
    for g in [fixtures::triangle(), fixtures::k4(), fixtures::k5()] {
        let r = verified(&cycle_space(&g).unwrap());
        assert!(r.polyhedral);
    }
    let pet = cycle_space(&fixtures::petersen()).unwrap();
    assert!(bounds::verify_theorems(&pet, VerifyOptions::default()).is_err());
    let r = bounds::verify_theorems(&pet, VerifyOptions { assume_cube_ideal: true }).unwrap();
    assert!(r.failures().is_empty());
    assert!(!r.polyhedral);
    assert!(r.row("size-lower-bound").unwrap().pass && r.row("vc-lower-bound").unwrap().pass);
}

#[test]
fn verification_rejects_non_cube_ideal_input() {
    let even = SetSystem::full_cube(4).unwrap().filter(|p| p.weight() % 2 == 0 && p.0 != 0);
    let err = bounds::verify_theorems(&even, VerifyOptions::default()).unwrap_err();
    assert!(err.to_string().contains("0,1/2,1/2,1/2"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theorem_rows_never_fail_on_cube_ideal_systems(n in 2usize..=5, pts in prop::collection::btree_set(0u64..32, 1..=32)) {
        let s = support::set_system(n, pts.into_iter().map(|p| p & ((1 << n) - 1)));
        prop_assume!(cubeideal::gsc::connectivity(&s).unwrap() >= cubeideal::Extended::Finite(2));
        prop_assume!(cubeideal::polytope::is_cube_ideal(&s).unwrap().verdict);
        let r = bounds::verify_theorems(&s, VerifyOptions::default()).unwrap();
        prop_assert!(r.failures().is_empty(), "{:?}", r.failures());
    }

    #[test]
    fn sauer_shelah_holds(n in 1usize..=6, pts in prop::collection::btree_set(0u64..64, 1..=64)) {
        let s = support::set_system(n, pts.into_iter().map(|p| p & ((1 << n) - 1)));
        prop_assert!(bounds::sauer_shelah_check(&s).unwrap().pass);
    }
}
