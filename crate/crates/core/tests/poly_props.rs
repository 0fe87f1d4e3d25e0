//! Property tests for the polynomial correspondence and its arithmetic.

mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use wernerpoly::poly::{
    monomial_basis, poly_to_symmetric, symmetric_to_poly, Monomial, TriPolynomial,
};
use wernerpoly::rotation::{haar_random_su2, phi, Rotation3};

fn random_poly<R: Rng>(rng: &mut R, n: usize) -> TriPolynomial {
    TriPolynomial::from_terms(
        n,
        monomial_basis(n)
            .into_iter()
            .map(|m| (m, rng.random_range(-1.0..1.0))),
    )
    .unwrap()
}

#[test]
fn polynomial_map_round_trips_on_symmetric_input() {
    let mut rng = ChaCha12Rng::seed_from_u64(200);
    for trial in 0..20 {
        let n = 1 + (trial % 5);
        let d = random_symmetric_decomposition(&mut rng, n);
        let f = symmetric_to_poly(&d, true).unwrap();
        let back = poly_to_symmetric(&f).unwrap();
        let err = back.max_abs_diff(&d);
        assert!(err < 1e-10, "trial {trial}, n {n}: error {err} (seed 200)");

        let forward_again = symmetric_to_poly(&back, true).unwrap();
        assert!(forward_again.max_abs_diff(&f) < 1e-10);
    }
}

#[test]
fn polynomial_map_is_linear() {
    let mut rng = ChaCha12Rng::seed_from_u64(201);
    for trial in 0..10 {
        let d1 = random_symmetric_decomposition(&mut rng, 3);
        let d2 = random_symmetric_decomposition(&mut rng, 3);
        let p: f64 = rng.random_range(0.0..1.0);
        let mixed = d1.scaled(p).add(&d2.scaled(1.0 - p)).unwrap();
        let lhs = symmetric_to_poly(&mixed, true).unwrap();
        let rhs = symmetric_to_poly(&d1, true)
            .unwrap()
            .scaled(p)
            .add(&symmetric_to_poly(&d2, true).unwrap().scaled(1.0 - p))
            .unwrap();
        let err = lhs.max_abs_diff(&rhs);
        assert!(err < 1e-12, "trial {trial}: error {err} (seed 201)");
    }
}

#[test]
fn product_law_via_symmetrized_tensor() {
    let mut rng = ChaCha12Rng::seed_from_u64(202);
    for trial in 0..10 {
        let d1 = random_symmetric_decomposition(&mut rng, 2);
        let d2 = random_symmetric_decomposition(&mut rng, 1);
        let lhs = symmetric_to_poly(&d1.tensor(&d2).unwrap().symmetrize(), true).unwrap();
        let rhs = symmetric_to_poly(&d1, true)
            .unwrap()
            .mul(&symmetric_to_poly(&d2, true).unwrap());
        let err = lhs.max_abs_diff(&rhs);
        assert!(err < 1e-10, "trial {trial}: error {err} (seed 202)");
    }
}

#[test]
fn rotation_is_a_group_action() {
    // with the row-vector substitution convention, applying R1 then R2
    // composes to the product with the outer rotation on the left
    let mut rng = ChaCha12Rng::seed_from_u64(203);
    for trial in 0..10 {
        let f = random_poly(&mut rng, 4);
        let r1 = phi(&haar_random_su2(&mut rng));
        let r2 = phi(&haar_random_su2(&mut rng));
        let stepwise = f.rotated(&r1).rotated(&r2);
        let combined = f.rotated(&r2.mul(&r1));
        let err = stepwise.max_abs_diff(&combined);
        assert!(err < 1e-9, "trial {trial}: error {err} (seed 203)");
    }
}

#[test]
fn rotating_by_identity_is_identity() {
    let mut rng = ChaCha12Rng::seed_from_u64(204);
    let f = random_poly(&mut rng, 3);
    assert!(f.rotated(&Rotation3::identity()).max_abs_diff(&f) < 1e-14);
}

#[test]
fn radius_is_rotation_invariant() {
    let mut rng = ChaCha12Rng::seed_from_u64(205);
    let r2 = TriPolynomial::radial(2, &[0.0, 1.0]).unwrap();
    for trial in 0..20 {
        let r = phi(&haar_random_su2(&mut rng));
        let err = r2.rotated(&r).max_abs_diff(&r2);
        assert!(err < 1e-10, "trial {trial}: error {err} (seed 205)");
    }
}

#[test]
fn rotation_mapping_z_axis_to_x_axis_takes_up_state_to_plus_state() {
    // column 3 of the substitution matrix is e_x, so z maps to x
    let r = Rotation3::new(nalgebra::Matrix3::new(
        0.0, 0.0, 1.0, //
        0.0, 1.0, 0.0, //
        -1.0, 0.0, 0.0,
    ))
    .unwrap();
    let up = TriPolynomial::from_terms(
        1,
        [(Monomial::constant(), 1.0), (Monomial::new(0, 0, 1), 1.0)],
    )
    .unwrap();
    let rotated = up.rotated(&r);
    assert_eq!(rotated.to_string(), "1 + 1 x");
}

#[test]
fn rotation_preserves_homogeneous_degrees() {
    // rotating a homogeneous component never leaks into other degrees
    let mut rng = ChaCha12Rng::seed_from_u64(206);
    let f = random_poly(&mut rng, 5);
    let r = phi(&haar_random_su2(&mut rng));
    let whole = f.rotated(&r);
    let mut parts = TriPolynomial::zero(5);
    for p in 0..=5u32 {
        let component =
            TriPolynomial::from_terms(5, f.terms().filter(|(m, _)| m.degree() == p).map(|(&m, c)| (m, c)))
                .unwrap();
        let rotated = component.rotated(&r);
        assert!(rotated.terms().all(|(m, _)| m.degree() == p), "degree {p} leaked (seed 206)");
        parts = parts.add(&rotated).unwrap();
    }
    assert!(parts.max_abs_diff(&whole) < 1e-12);
}

#[test]
fn radial_extraction_recovers_random_radial_polynomials() {
    let mut rng = ChaCha12Rng::seed_from_u64(207);
    for trial in 0..20 {
        let n = 2 + (trial % 7);
        let len = n / 2 + 1;
        let b: Vec<f64> = (0..len).map(|_| rng.random_range(-2.0..2.0)).collect();
        let f = TriPolynomial::radial(n, &b).unwrap();
        let (got, residual) = f.radial_extract();
        assert!(residual <= 1e-12, "trial {trial}: residual {residual} (seed 207)");
        for (g, w) in got.values().iter().zip(&b) {
            assert!((g - w).abs() <= 1e-10, "trial {trial} (seed 207)");
        }
    }
}

#[test]
fn radial_extraction_measures_non_radial_content() {
    let mut rng = ChaCha12Rng::seed_from_u64(208);
    let radial = TriPolynomial::radial(4, &[1.0, 0.5, 0.1]).unwrap();
    let noise = random_poly(&mut rng, 4);
    let dirty = radial.add(&noise.scaled(0.01)).unwrap();
    let (_, residual) = dirty.radial_extract();
    assert!(residual > 1e-6);
}
