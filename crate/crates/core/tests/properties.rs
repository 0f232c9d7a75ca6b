use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use proptest::prelude::*;
use ybgate_core::eightvertex::{build_b_phi, build_r_theta, build_r_x, build_r_x_normalized, Sign};
use ybgate_core::entangle::{concurrence, r_theta_action, PureState2Q};
use ybgate_core::gates::{rotation, PauliAxis3D};
use ybgate_core::hamiltonian::pauli_decompose;
use ybgate_core::linalg::{dagger, expm, inverse, kron, residual, unitarity_residual};
use ybgate_core::yangbaxter::{braid_residual, qybe_residual};
use ybgate_core::{Dim, Matrix};

fn complex(bound: f64) -> impl Strategy<Value = Complex64> {
    (-bound..bound, -bound..bound).prop_map(|(re, im)| Complex64::new(re, im))
}

fn matrix2() -> impl Strategy<Value = Matrix> {
    prop::array::uniform4(complex(2.0)).prop_map(|e| Matrix::from_entries(2, &e).unwrap())
}

fn matrix4(bound: f64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(complex(bound), 16).prop_map(|e| Matrix::from_entries(4, &e).unwrap())
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn axis() -> impl Strategy<Value = PauliAxis3D> {
    (-1.0..1.0f64, 0.0..(2.0 * PI)).prop_map(|(z, a)| {
        let r = (1.0 - z * z).sqrt();
        PauliAxis3D::new(r * a.cos(), r * a.sin(), z).unwrap()
    })
}

fn local_unitary() -> impl Strategy<Value = Matrix> {
    (axis(), -PI..PI).prop_map(|(n, t)| rotation(n, t))
}

fn state() -> impl Strategy<Value = PureState2Q> {
    prop::array::uniform4(complex(1.0))
        .prop_filter("non-zero", |a| {
            a.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3
        })
        .prop_map(|a| PureState2Q::normalized(a).unwrap())
}

proptest! {
    #[test]
    fn kron_mixed_product(a in matrix2(), b in matrix2(), c in matrix2(), d in matrix2()) {
        let lhs = kron(&a, &b) * kron(&c, &d);
        let rhs = kron(&(a * c), &(b * d));
        prop_assert!(residual(&lhs, &rhs).unwrap() < 1e-12);
    }

    #[test]
    fn kron_associative(a in matrix2(), b in matrix2(), c in matrix2()) {
        let lhs = kron(&kron(&a, &b), &c);
        let rhs = kron(&a, &kron(&b, &c));
        prop_assert!(residual(&lhs, &rhs).unwrap() < 1e-12);
    }

    #[test]
    fn kron_bilinear(a in matrix2(), b in matrix2(), c in matrix2(), s in complex(2.0)) {
        let lhs = kron(&(a + c.scale(s)), &b);
        let rhs = kron(&a, &b) + kron(&c, &b).scale(s);
        prop_assert!(residual(&lhs, &rhs).unwrap() < 1e-12);
    }

    #[test]
    fn dagger_is_an_involution(m in matrix4(5.0)) {
        prop_assert_eq!(dagger(&dagger(&m)), m);
    }

    #[test]
    fn expm_inverse_pair(m in matrix4(PI)) {
        // i·(M + M†)/2 has Hermitian-scale entries
        let h = (m + m.dagger()).scale_re(0.5);
        let a = h.scale(Complex64::new(0.0, 1.0));
        let prod = expm(&a).unwrap() * expm(&(-a)).unwrap();
        prop_assert!(residual(&prod, &Matrix::identity(Dim::D4)).unwrap() < 1e-10);
    }

    #[test]
    fn inverse_of_well_conditioned(m in matrix4(0.2)) {
        let a = Matrix::identity(Dim::D4) + m;
        let inv = inverse(&a).unwrap();
        prop_assert!(residual(&(a * inv), &Matrix::identity(Dim::D4)).unwrap() < 1e-12);
    }

    #[test]
    fn pauli_reconstruction(m in matrix4(3.0)) {
        let d = pauli_decompose(&m).unwrap();
        prop_assert!(residual(&d.reconstruct(), &m).unwrap() < 1e-12);
    }

    #[test]
    fn hermitian_sources_give_real_coefficients(m in matrix4(3.0)) {
        let h = m + m.dagger();
        prop_assert!(pauli_decompose(&h).unwrap().max_imaginary() < 1e-12);
    }

    #[test]
    fn b_phi_unitary_and_braided(s in sign(), phi in 0.0..(2.0 * PI)) {
        let b = build_b_phi(s, phi);
        prop_assert!(unitarity_residual(&b) < 1e-12);
        prop_assert!(braid_residual(&b).unwrap() < 1e-12);
        let w = b * b;
        prop_assert!(residual(&(w * w), &(-Matrix::identity(Dim::D4))).unwrap() < 1e-12);
    }

    #[test]
    fn normalized_r_x_is_unitary(s in sign(), phi in -PI..PI, x in -50.0..50.0f64) {
        prop_assert!(unitarity_residual(&build_r_x_normalized(s, phi, x)) < 1e-12);
    }

    #[test]
    fn qybe_random_points(s in sign(), phi in -PI..PI, x in 0.01..2.0f64, y in 0.01..2.0f64) {
        let q = Complex64::from_polar(1.0, -phi);
        let r = qybe_residual(|t| build_r_x(s, q, t).unwrap(), x, y).unwrap();
        prop_assert!(r < 1e-10);
    }

    #[test]
    fn theta_and_x_forms_agree(s in sign(), phi in -PI..PI, x in -20.0..20.0f64) {
        let a = build_r_theta(s, phi, x.atan());
        let b = build_r_x_normalized(s, phi, x);
        prop_assert!(residual(&a, &b).unwrap() < 1e-12);
    }

    #[test]
    fn r_theta_concurrence_closed_form(s in sign(), phi in -PI..PI, theta in -FRAC_PI_2..FRAC_PI_2, k in 0usize..4) {
        let c = concurrence(&r_theta_action(s, phi, theta, k).unwrap());
        prop_assert!((c - (2.0 * theta).cos().abs()).abs() < 1e-12);
    }

    #[test]
    fn concurrence_local_invariance(u in local_unitary(), v in local_unitary(), psi in state()) {
        let moved = ybgate_core::entangle::apply_gate(&kron(&u, &v), &psi).unwrap();
        prop_assert!((concurrence(&moved) - concurrence(&psi)).abs() < 1e-12);
    }

    #[test]
    fn rotation_composes(n in axis(), a in -PI..PI, b in -PI..PI) {
        let lhs = rotation(n, a) * rotation(n, b);
        prop_assert!(residual(&lhs, &rotation(n, a + b)).unwrap() < 1e-12);
        prop_assert!(unitarity_residual(&rotation(n, a)) < 1e-12);
    }
}
