//! Hexa-valued extensions of both penta variants: the ambiguity shared
//! between truth and falsity is pulled out into its own component, leaving
//! `t * f = 0` alongside `u * c = 0`.

use crate::bipolar::decompose;
use crate::error::{Error, Result};
use crate::penta::Variant;
use crate::tolerance::TolerancePolicy;
use crate::types::{HexaVector, NeutroTriple, PentaVector};

/// Forward transform of a triple into a hexa partition.
///
/// The hesitation, ignorance, and contradiction components coincide exactly
/// with the penta transform of the same variant; truth and falsity lose the
/// ambiguity share they carry there.
pub fn to_hexa(x: NeutroTriple, v: Variant) -> HexaVector {
    let omega = x.omega();
    let b = decompose(x.mu(), x.nu());
    match v {
        Variant::I => {
            let scale = 1.0 - omega / 2.0;
            let t = scale * b.tau_plus();
            let f = scale * b.tau_minus();
            let a = (1.0 - omega) * b.alpha();
            let u = scale * b.pi();
            let c = scale * b.kappa();
            let h = (1.0 + b.alpha()) / 2.0 * omega;
            HexaVector::new_unchecked(t, c, h, u, f, a)
        }
        Variant::II => {
            let denom = 1.0 + (1.0 - b.alpha()) * omega;
            let t = b.tau_plus() / denom;
            let f = b.tau_minus() / denom;
            let a = (1.0 - omega) * b.alpha() / denom;
            let u = b.pi() / denom;
            let c = b.kappa() / denom;
            let h = omega / denom;
            HexaVector::new_unchecked(t, c, h, u, f, a)
        }
    }
}

/// Folds the ambiguity component back, recovering the penta vector of the
/// same variant: for both variants the penta truth and falsity each carry
/// exactly half of the hexa ambiguity, while h, u, c are shared verbatim.
///
/// The input must be a transform output (or indistinguishable from one); a
/// fold that does not land on a valid exclusive partition is rejected.
pub fn penta_of_hexa(x: &HexaVector, v: Variant, tol: &TolerancePolicy) -> Result<PentaVector> {
    let _ = v; // same fold coefficients in both variants
    let half = x.a() / 2.0;
    let p =
        PentaVector::new(x.t() + half, x.c(), x.h(), x.u(), x.f() + half, tol).map_err(|e| {
            Error::ConsistencyViolation {
                detail: e.to_string(),
            }
        })?;
    let product = p.u() * p.c();
    if product > tol.eps_zero {
        return Err(Error::ConsistencyViolation {
            detail: format!("u*c={product}"),
        });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::penta::to_penta;

    const TOL: TolerancePolicy = TolerancePolicy {
        eps_partition: 1e-9,
        eps_zero: 1e-12,
        eps_roundtrip: 1e-9,
    };

    fn triple(mu: f64, omega: f64, nu: f64) -> NeutroTriple {
        NeutroTriple::new(mu, omega, nu, &TOL).unwrap()
    }

    fn cube_grid(n: u32) -> impl Iterator<Item = NeutroTriple> {
        (0..=n).flat_map(move |i| {
            (0..=n).flat_map(move |j| {
                (0..=n).map(move |k| {
                    triple(
                        f64::from(i) / f64::from(n),
                        f64::from(j) / f64::from(n),
                        f64::from(k) / f64::from(n),
                    )
                })
            })
        })
    }

    #[test]
    fn forward_variant1_worked_point() {
        let x = to_hexa(triple(0.8, 0.4, 0.5), Variant::I);
        let expected = [0.24, 0.24, 0.28, 0.0, 0.0, 0.24];
        for (got, want) in x.components().iter().zip(expected.iter()) {
            assert!((got - want).abs() < 1e-12, "{:?}", x.components());
        }
    }

    #[test]
    fn forward_pure_truth() {
        for v in [Variant::I, Variant::II] {
            let x = to_hexa(triple(1.0, 0.0, 0.0), v);
            assert_eq!(x.components(), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        }
    }

    #[test]
    fn forward_variant2_worked_point() {
        let x = to_hexa(triple(0.6, 0.5, 0.2), Variant::II);
        let expected = [0.4 / 1.3, 0.0, 0.5 / 1.3, 0.2 / 1.3, 0.0, 0.2 / 1.3];
        for (got, want) in x.components().iter().zip(expected.iter()) {
            assert!((got - want).abs() < 1e-12, "{:?}", x.components());
        }
    }

    #[test]
    fn partition_and_double_exclusivity_on_grid() {
        for v in [Variant::I, Variant::II] {
            for x in cube_grid(10) {
                let hx = to_hexa(x, v);
                assert!((hx.partition_sum() - 1.0).abs() < 1e-12, "{x:?} {v:?}");
                assert_eq!(hx.t() * hx.f(), 0.0, "t*f at {x:?} {v:?}");
                assert_eq!(hx.u() * hx.c(), 0.0, "u*c at {x:?} {v:?}");
                let positive = hx.components().iter().filter(|&&z| z > 0.0).count();
                assert!(positive <= 4, "{positive} positive components at {x:?}");
            }
        }
    }

    #[test]
    fn shared_components_match_penta_exactly() {
        for v in [Variant::I, Variant::II] {
            for x in cube_grid(10) {
                let hx = to_hexa(x, v);
                let p = to_penta(x, v);
                assert_eq!(hx.h(), p.h(), "h at {x:?} {v:?}");
                assert_eq!(hx.u(), p.u(), "u at {x:?} {v:?}");
                assert_eq!(hx.c(), p.c(), "c at {x:?} {v:?}");
            }
        }
    }

    #[test]
    fn ambiguity_split_against_penta() {
        // t_penta + f_penta = t_hexa + f_hexa + a, for both variants.
        for v in [Variant::I, Variant::II] {
            for x in cube_grid(10) {
                let hx = to_hexa(x, v);
                let p = to_penta(x, v);
                let lhs = p.t() + p.f();
                let rhs = hx.t() + hx.f() + hx.a();
                assert!((lhs - rhs).abs() < 1e-12, "split at {x:?} {v:?}");
            }
        }
    }

    #[test]
    fn fold_matches_penta_transform() {
        for v in [Variant::I, Variant::II] {
            for x in cube_grid(10) {
                let folded = penta_of_hexa(&to_hexa(x, v), v, &TOL).unwrap();
                let direct = to_penta(x, v);
                for (a, b) in folded.components().iter().zip(direct.components().iter()) {
                    assert!((a - b).abs() < 1e-12, "fold at {x:?} {v:?}");
                }
            }
        }
    }

    #[test]
    fn fold_zero_ambiguity_drops_component() {
        // alpha = 0 whenever mu or nu is extreme enough; the hexa vector is
        // then the penta vector with a = 0 appended.
        let x = triple(1.0, 0.5, 0.0);
        let hx = to_hexa(x, Variant::I);
        assert_eq!(hx.a(), 0.0);
        let p = penta_of_hexa(&hx, Variant::I, &TOL).unwrap();
        assert_eq!(p.components(), [hx.t(), hx.c(), hx.h(), hx.u(), hx.f()]);
    }

    #[test]
    fn fold_at_zero_omega_restores_ambiguity_halves() {
        let x = triple(0.6, 0.0, 0.2);
        let hx = to_hexa(x, Variant::I);
        assert!((hx.a() - 0.4).abs() < 1e-12);
        let p = penta_of_hexa(&hx, Variant::I, &TOL).unwrap();
        assert!((p.t() - (hx.t() + 0.2)).abs() < 1e-12);
        assert!((p.f() - (hx.f() + 0.2)).abs() < 1e-12);
    }

    #[test]
    fn fold_variant2_shift_is_half_ambiguity() {
        let x = triple(0.6, 0.5, 0.2);
        let hx = to_hexa(x, Variant::II);
        let p = to_penta(x, Variant::II);
        assert!((p.t() - hx.t() - 0.1 / 1.3).abs() < 1e-12);
        assert!((hx.a() / 2.0 - 0.1 / 1.3).abs() < 1e-12);
    }

    #[test]
    fn fold_rejects_invalid_input() {
        // A hand-built vector whose fold breaks exclusivity.
        let bad = HexaVector::new(0.2, 0.2, 0.2, 0.2, 0.1, 0.1, &TOL).unwrap();
        assert!(matches!(
            penta_of_hexa(&bad, Variant::I, &TOL),
            Err(Error::ConsistencyViolation { .. })
        ));
    }
}
