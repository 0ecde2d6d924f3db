//! Property-based invariants over randomly drawn triples and partition
//! vectors.

use proptest::prelude::*;

use neutroval::algebra5::{
    complement_primary, complement_vec, dual_primary, dual_vec, intersection_vec, negation_primary,
    negation_vec, s_implication_vec, union_vec,
};
use neutroval::bipolar::{decompose, tetra_partition};
use neutroval::hexa::{penta_of_hexa, to_hexa};
use neutroval::penta::{from_penta, ten_term_decomposition, to_penta};
use neutroval::{Error, NeutroTriple, PentaVector, TolerancePolicy, Variant};

fn tol() -> TolerancePolicy {
    TolerancePolicy::default()
}

fn unit() -> impl Strategy<Value = f64> {
    0.0..=1.0f64
}

fn triple() -> impl Strategy<Value = NeutroTriple> {
    (unit(), unit(), unit())
        .prop_map(|(mu, omega, nu)| NeutroTriple::new(mu, omega, nu, &tol()).unwrap())
}

/// Partition vector with `c * u = 0`, components on no particular lattice.
fn exclusive_penta() -> impl Strategy<Value = PentaVector> {
    (unit(), unit(), unit(), unit(), any::<bool>()).prop_map(|(a, b, c, d, into_c)| {
        let sum = a + b + c + d;
        if sum == 0.0 {
            return PentaVector::H;
        }
        let (t, x, f) = (a / sum, b / sum, d / sum);
        let h = (1.0 - t - x - f).max(0.0);
        if into_c {
            PentaVector::new(t, x, h, 0.0, f, &tol()).unwrap()
        } else {
            PentaVector::new(t, 0.0, h, x, f, &tol()).unwrap()
        }
    })
}

/// Partition vector on the dyadic lattice (multiples of 2^-12), where every
/// operation inside the vector operators is exact in f64.
fn dyadic_exclusive_penta() -> impl Strategy<Value = PentaVector> {
    const DENOM: u32 = 1 << 12;
    (0..=DENOM, 0..=DENOM, 0..=DENOM, any::<bool>()).prop_map(|(x, y, z, into_c)| {
        let mut cuts = [x, y, z];
        cuts.sort_unstable();
        let scale = 1.0 / f64::from(DENOM);
        let t = f64::from(cuts[0]) * scale;
        let shared = f64::from(cuts[1] - cuts[0]) * scale;
        let h = f64::from(cuts[2] - cuts[1]) * scale;
        let f = f64::from(DENOM - cuts[2]) * scale;
        if into_c {
            PentaVector::new(t, shared, h, 0.0, f, &tol()).unwrap()
        } else {
            PentaVector::new(t, 0.0, h, shared, f, &tol()).unwrap()
        }
    })
}

fn max_diff(a: &PentaVector, b: &PentaVector) -> f64 {
    a.components()
        .iter()
        .zip(b.components())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

proptest! {
    #[test]
    fn bipolar_partitions_and_exclusivity(mu in unit(), nu in unit()) {
        let b = decompose(mu, nu);
        prop_assert!((mu + nu + b.pi() - b.kappa() - 1.0).abs() < 1e-12);
        prop_assert!((b.partition_sum() - 1.0).abs() < 1e-12);
        prop_assert_eq!(b.pi() * b.kappa(), 0.0);
        prop_assert_eq!(b.tau_plus() * b.tau_minus(), 0.0);
        prop_assert!(b.components().iter().all(|&c| (0.0..=1.0).contains(&c)));
        let tetra: f64 = tetra_partition(mu, nu).iter().sum();
        prop_assert!((tetra - 1.0).abs() < 1e-12);

        let swapped = decompose(nu, mu);
        prop_assert_eq!(b.tau_plus(), swapped.tau_minus());
        prop_assert_eq!(b.alpha(), swapped.alpha());
        prop_assert_eq!(b.pi(), swapped.pi());
        prop_assert_eq!(b.kappa(), swapped.kappa());
    }

    #[test]
    fn forward_transforms_partition_the_unit(x in triple()) {
        for v in [Variant::I, Variant::II] {
            let p = to_penta(x, v);
            prop_assert!((p.partition_sum() - 1.0).abs() < 1e-12);
            prop_assert!(p.components().iter().all(|&c| (0.0..=1.0).contains(&c)));
            prop_assert_eq!(p.u() * p.c(), 0.0);

            let hx = to_hexa(x, v);
            prop_assert!((hx.partition_sum() - 1.0).abs() < 1e-12);
            prop_assert_eq!(hx.t() * hx.f(), 0.0);
            prop_assert_eq!(hx.u() * hx.c(), 0.0);
            prop_assert!(hx.components().iter().filter(|&&c| c > 0.0).count() <= 4);
            prop_assert_eq!(hx.h(), p.h());
            prop_assert_eq!(hx.u(), p.u());
            prop_assert_eq!(hx.c(), p.c());
        }
    }

    #[test]
    fn round_trips_recover_the_triple(x in triple()) {
        for v in [Variant::I, Variant::II] {
            let back = from_penta(to_penta(x, v), v, &tol()).unwrap();
            prop_assert!((back.mu() - x.mu()).abs() <= 1e-9);
            prop_assert!((back.omega() - x.omega()).abs() <= 1e-9);
            prop_assert!((back.nu() - x.nu()).abs() <= 1e-9);
        }
    }

    #[test]
    fn ten_term_view_is_consistent(x in triple()) {
        let ten = ten_term_decomposition(x);
        prop_assert!((ten.partition_sum() - 1.0).abs() < 1e-12);
        prop_assert!(max_diff(&ten.fold(), &to_penta(x, Variant::I)) < 1e-12);
    }

    #[test]
    fn hexa_fold_matches_penta(x in triple()) {
        for v in [Variant::I, Variant::II] {
            let folded = penta_of_hexa(&to_hexa(x, v), v, &tol()).unwrap();
            prop_assert!(max_diff(&folded, &to_penta(x, v)) < 1e-12);
        }
    }

    #[test]
    fn unary_diagrams_commute(x in triple()) {
        for v in [Variant::I, Variant::II] {
            let p = to_penta(x, v);
            prop_assert!(max_diff(&to_penta(complement_primary(x), v), &complement_vec(&p)) < 1e-12);
            prop_assert!(max_diff(&to_penta(negation_primary(x), v), &negation_vec(&p)) < 1e-12);
            prop_assert!(max_diff(&to_penta(dual_primary(x), v), &dual_vec(&p)) < 1e-12);
        }
    }

    #[test]
    fn validation_clamps_idempotently(raw in -2e-12..=1.0 + 2e-12) {
        let t = tol();
        match NeutroTriple::new(raw, 0.5, 0.5, &t) {
            Ok(x) => {
                prop_assert!((x.mu() - raw).abs() <= t.eps_zero);
                let again = NeutroTriple::new(x.mu(), x.omega(), x.nu(), &t).unwrap();
                prop_assert_eq!(x, again);
            }
            Err(Error::OutOfRange { field, .. }) => {
                prop_assert_eq!(field, "mu");
                prop_assert!(raw < -t.eps_zero || raw > 1.0 + t.eps_zero);
            }
            Err(other) => prop_assert!(false, "unexpected error {other:?}"),
        }
    }

    #[test]
    fn binary_operators_preserve_the_property_block(
        a in exclusive_penta(),
        b in exclusive_penta(),
    ) {
        let t = tol();
        for d in [union_vec(&a, &b, &t).unwrap(), intersection_vec(&a, &b, &t).unwrap()] {
            prop_assert_eq!(d.c() * d.u(), 0.0);
            prop_assert!(d.t() + d.c() + d.u() + d.f() <= 1.0 + 1e-12);
            prop_assert!((d.partition_sum() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn commutativity_and_de_morgan_are_bit_exact(
        a in exclusive_penta(),
        b in exclusive_penta(),
    ) {
        let t = tol();
        prop_assert_eq!(union_vec(&a, &b, &t).unwrap(), union_vec(&b, &a, &t).unwrap());
        prop_assert_eq!(
            intersection_vec(&a, &b, &t).unwrap(),
            intersection_vec(&b, &a, &t).unwrap()
        );
        prop_assert_eq!(
            complement_vec(&union_vec(&a, &b, &t).unwrap()),
            intersection_vec(&complement_vec(&a), &complement_vec(&b), &t).unwrap()
        );
        prop_assert_eq!(
            complement_vec(&intersection_vec(&a, &b, &t).unwrap()),
            union_vec(&complement_vec(&a), &complement_vec(&b), &t).unwrap()
        );
        // S-implication is union against the complement by definition.
        prop_assert_eq!(
            s_implication_vec(&a, &b, &t).unwrap(),
            union_vec(&complement_vec(&a), &b, &t).unwrap()
        );
    }

    #[test]
    fn lattice_laws_are_exact_on_dyadic_vectors(
        a in dyadic_exclusive_penta(),
        b in dyadic_exclusive_penta(),
        c in dyadic_exclusive_penta(),
    ) {
        let t = tol();
        prop_assert_eq!(union_vec(&a, &a, &t).unwrap(), a);
        prop_assert_eq!(intersection_vec(&a, &a, &t).unwrap(), a);
        prop_assert_eq!(
            union_vec(&union_vec(&a, &b, &t).unwrap(), &c, &t).unwrap(),
            union_vec(&a, &union_vec(&b, &c, &t).unwrap(), &t).unwrap()
        );
        prop_assert_eq!(
            intersection_vec(&intersection_vec(&a, &b, &t).unwrap(), &c, &t).unwrap(),
            intersection_vec(&a, &intersection_vec(&b, &c, &t).unwrap(), &t).unwrap()
        );
    }

    #[test]
    fn unary_vector_operators_are_involutions(a in exclusive_penta()) {
        prop_assert_eq!(complement_vec(&complement_vec(&a)), a);
        prop_assert_eq!(negation_vec(&negation_vec(&a)), a);
        prop_assert_eq!(dual_vec(&dual_vec(&a)), a);
        prop_assert_eq!(complement_vec(&negation_vec(&a)), dual_vec(&a));
        prop_assert_eq!(negation_vec(&dual_vec(&a)), complement_vec(&a));
        prop_assert_eq!(dual_vec(&complement_vec(&a)), negation_vec(&a));
    }

    #[test]
    fn inverse_rejects_nonexclusive_vectors(share in 0.05..=0.2f64) {
        let p = PentaVector::new(0.2, share, 0.6 - 2.0 * share, share, 0.2, &tol()).unwrap();
        for v in [Variant::I, Variant::II] {
            let rejected = matches!(
                from_penta(p, v, &tol()),
                Err(Error::ExclusivityViolation { .. })
            );
            prop_assert!(rejected, "variant {} accepted a non-exclusive vector", v);
        }
    }
}
