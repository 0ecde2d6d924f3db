//! Value types: the primary triple, the bipolar profile, and the penta and
//! hexa partition vectors.
//!
//! All types are immutable plain values. Constructors validate against a
//! [`TolerancePolicy`]; values within `eps_zero` of a bound are clamped onto
//! it, values further out are rejected. Negative zeros are normalized to +0
//! on construction so exact-zero product checks are well defined.

use crate::error::{Error, Result};
use crate::tolerance::TolerancePolicy;

/// Normalizes -0.0 to +0.0 and leaves every other value untouched.
#[inline]
pub(crate) fn normalize_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Clamps `x` onto `[0, 1]` when it lies within `eps` of the interval.
/// Returns `None` when `x` is out of range beyond `eps` (or NaN).
#[inline]
fn clamp_unit(x: f64, eps: f64) -> Option<f64> {
    if x >= -eps && x <= 1.0 + eps {
        Some(normalize_zero(x.clamp(0.0, 1.0)))
    } else {
        None
    }
}

fn validate_component(value: f64, field: &'static str, eps: f64) -> Result<f64> {
    clamp_unit(value, eps).ok_or(Error::OutOfRange { field, value })
}

/// Primary representation: degree of truth `mu`, degree of indeterminacy
/// `omega`, and degree of falsity `nu`, each independently in `[0, 1]`.
/// There is no joint constraint; the domain is the full unit cube.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeutroTriple {
    mu: f64,
    omega: f64,
    nu: f64,
}

impl NeutroTriple {
    /// Validates raw reals into a triple. Values within `eps_zero` outside
    /// the unit interval are clamped; anything further out is rejected.
    pub fn new(mu: f64, omega: f64, nu: f64, tol: &TolerancePolicy) -> Result<Self> {
        Ok(Self {
            mu: validate_component(mu, "mu", tol.eps_zero)?,
            omega: validate_component(omega, "omega", tol.eps_zero)?,
            nu: validate_component(nu, "nu", tol.eps_zero)?,
        })
    }

    /// Constructs without range checks. Callers guarantee membership of the
    /// unit cube up to rounding; components are snapped onto it.
    pub(crate) fn new_unchecked(mu: f64, omega: f64, nu: f64) -> Self {
        debug_assert!((-1e-9..=1.0 + 1e-9).contains(&mu), "mu out of cube: {mu}");
        debug_assert!(
            (-1e-9..=1.0 + 1e-9).contains(&omega),
            "omega out of cube: {omega}"
        );
        debug_assert!((-1e-9..=1.0 + 1e-9).contains(&nu), "nu out of cube: {nu}");
        Self {
            mu: normalize_zero(mu.clamp(0.0, 1.0)),
            omega: normalize_zero(omega.clamp(0.0, 1.0)),
            nu: normalize_zero(nu.clamp(0.0, 1.0)),
        }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// Derived features of a bipolar pair `(mu, nu)`: net truth `tau_plus`, net
/// falsity `tau_minus`, ambiguity `alpha`, ignorance `pi`, and contradiction
/// `kappa`. The five components always partition 1, with
/// `tau_plus * tau_minus = 0` and `pi * kappa = 0` exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BipolarProfile {
    tau_plus: f64,
    tau_minus: f64,
    alpha: f64,
    pi: f64,
    kappa: f64,
}

impl BipolarProfile {
    /// Built only by the decomposition; clamps rounding dust below zero.
    pub(crate) fn new_unchecked(
        tau_plus: f64,
        tau_minus: f64,
        alpha: f64,
        pi: f64,
        kappa: f64,
    ) -> Self {
        Self {
            tau_plus: snap_nonneg(tau_plus),
            tau_minus: snap_nonneg(tau_minus),
            alpha: snap_nonneg(alpha),
            pi: snap_nonneg(pi),
            kappa: snap_nonneg(kappa),
        }
    }

    pub fn tau_plus(&self) -> f64 {
        self.tau_plus
    }

    pub fn tau_minus(&self) -> f64 {
        self.tau_minus
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn pi(&self) -> f64 {
        self.pi
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Components in storage order `(tau_plus, tau_minus, alpha, pi, kappa)`.
    pub fn components(&self) -> [f64; 5] {
        [
            self.tau_plus,
            self.tau_minus,
            self.alpha,
            self.pi,
            self.kappa,
        ]
    }

    /// Left-to-right sum of the components; 1 up to rounding.
    pub fn partition_sum(&self) -> f64 {
        self.tau_plus + self.tau_minus + self.alpha + self.pi + self.kappa
    }
}

#[inline]
fn snap_nonneg(x: f64) -> f64 {
    debug_assert!(x >= -1e-9, "component below zero beyond rounding: {x}");
    if x <= 0.0 {
        0.0
    } else {
        x
    }
}

/// Five-component fuzzy partition `(t, c, h, u, f)` over the logical values
/// true, contradictory, hesitant, unknown, false. Components are nonnegative
/// and sum to 1 within the construction tolerance.
///
/// `u * c = 0` holds for every vector produced by the forward transforms but
/// is not an invariant of the type; operations that rely on it state it as a
/// precondition and verify it there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentaVector {
    t: f64,
    c: f64,
    h: f64,
    u: f64,
    f: f64,
}

impl PentaVector {
    /// Canonical unit vector for *true*.
    pub const T: Self = Self {
        t: 1.0,
        c: 0.0,
        h: 0.0,
        u: 0.0,
        f: 0.0,
    };
    /// Canonical unit vector for *contradictory*.
    pub const C: Self = Self {
        t: 0.0,
        c: 1.0,
        h: 0.0,
        u: 0.0,
        f: 0.0,
    };
    /// Canonical unit vector for *hesitant*.
    pub const H: Self = Self {
        t: 0.0,
        c: 0.0,
        h: 1.0,
        u: 0.0,
        f: 0.0,
    };
    /// Canonical unit vector for *unknown*.
    pub const U: Self = Self {
        t: 0.0,
        c: 0.0,
        h: 0.0,
        u: 1.0,
        f: 0.0,
    };
    /// Canonical unit vector for *false*.
    pub const F: Self = Self {
        t: 0.0,
        c: 0.0,
        h: 0.0,
        u: 0.0,
        f: 1.0,
    };

    /// Validates five raw components as a partition of unity. Each component
    /// must lie in `[0, 1]` (clamped within `eps_zero`) and the sum must be
    /// within `eps_partition` of 1. Components are stored as-is; no
    /// renormalization happens here.
    pub fn new(t: f64, c: f64, h: f64, u: f64, f: f64, tol: &TolerancePolicy) -> Result<Self> {
        let v = Self {
            t: validate_component(t, "t", tol.eps_zero)?,
            c: validate_component(c, "c", tol.eps_zero)?,
            h: validate_component(h, "h", tol.eps_zero)?,
            u: validate_component(u, "u", tol.eps_zero)?,
            f: validate_component(f, "f", tol.eps_zero)?,
        };
        let sum = v.partition_sum();
        if (sum - 1.0).abs() > tol.eps_partition {
            return Err(Error::PartitionViolation { sum });
        }
        Ok(v)
    }

    /// Constructs from transform output. Rounding dust below zero is snapped
    /// to +0 and values a hair above 1 are snapped to 1; the partition
    /// property is the caller's algebraic guarantee.
    pub(crate) fn new_unchecked(t: f64, c: f64, h: f64, u: f64, f: f64) -> Self {
        Self {
            t: snap_unit(t),
            c: snap_unit(c),
            h: snap_unit(h),
            u: snap_unit(u),
            f: snap_unit(f),
        }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    /// Components in storage order `(t, c, h, u, f)`.
    pub fn components(&self) -> [f64; 5] {
        [self.t, self.c, self.h, self.u, self.f]
    }

    /// Left-to-right sum of the components; 1 up to rounding.
    pub fn partition_sum(&self) -> f64 {
        self.t + self.c + self.h + self.u + self.f
    }

    /// Opt-in repair for noisy external data: rescales the components so
    /// they sum to exactly the partition target. Fails when the sum is too
    /// small to carry a direction.
    pub fn renormalized(&self) -> Result<Self> {
        let sum = self.partition_sum();
        if sum <= f64::EPSILON {
            return Err(Error::PartitionViolation { sum });
        }
        Ok(Self::new_unchecked(
            self.t / sum,
            self.c / sum,
            self.h / sum,
            self.u / sum,
            self.f / sum,
        ))
    }
}

#[inline]
fn snap_unit(x: f64) -> f64 {
    debug_assert!(
        (-1e-9..=1.0 + 1e-9).contains(&x),
        "component out of range: {x}"
    );
    normalize_zero(x.clamp(0.0, 1.0))
}

/// Six-component fuzzy partition `(t, c, h, u, f, a)`: the penta components
/// with ambiguity `a` separated out of truth and falsity. Transform outputs
/// additionally satisfy `t * f = 0` and `u * c = 0` exactly, so at most four
/// of the six components are nonzero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HexaVector {
    t: f64,
    c: f64,
    h: f64,
    u: f64,
    f: f64,
    a: f64,
}

impl HexaVector {
    /// Validates six raw components as a partition of unity, with the same
    /// clamping rules as [`PentaVector::new`].
    pub fn new(
        t: f64,
        c: f64,
        h: f64,
        u: f64,
        f: f64,
        a: f64,
        tol: &TolerancePolicy,
    ) -> Result<Self> {
        let v = Self {
            t: validate_component(t, "t", tol.eps_zero)?,
            c: validate_component(c, "c", tol.eps_zero)?,
            h: validate_component(h, "h", tol.eps_zero)?,
            u: validate_component(u, "u", tol.eps_zero)?,
            f: validate_component(f, "f", tol.eps_zero)?,
            a: validate_component(a, "a", tol.eps_zero)?,
        };
        let sum = v.partition_sum();
        if (sum - 1.0).abs() > tol.eps_partition {
            return Err(Error::PartitionViolation { sum });
        }
        Ok(v)
    }

    pub(crate) fn new_unchecked(t: f64, c: f64, h: f64, u: f64, f: f64, a: f64) -> Self {
        Self {
            t: snap_unit(t),
            c: snap_unit(c),
            h: snap_unit(h),
            u: snap_unit(u),
            f: snap_unit(f),
            a: snap_unit(a),
        }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// Components in storage order `(t, c, h, u, f, a)`.
    pub fn components(&self) -> [f64; 6] {
        [self.t, self.c, self.h, self.u, self.f, self.a]
    }

    /// Left-to-right sum of the components; 1 up to rounding.
    pub fn partition_sum(&self) -> f64 {
        self.t + self.c + self.h + self.u + self.f + self.a
    }

    /// Opt-in repair for noisy external data; see [`PentaVector::renormalized`].
    pub fn renormalized(&self) -> Result<Self> {
        let sum = self.partition_sum();
        if sum <= f64::EPSILON {
            return Err(Error::PartitionViolation { sum });
        }
        Ok(Self::new_unchecked(
            self.t / sum,
            self.c / sum,
            self.h / sum,
            self.u / sum,
            self.f / sum,
            self.a / sum,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: TolerancePolicy = TolerancePolicy {
        eps_partition: 1e-9,
        eps_zero: 1e-12,
        eps_roundtrip: 1e-9,
    };

    #[test]
    fn triple_in_range_identity() {
        let x = NeutroTriple::new(0.6, 0.5, 0.2, &TOL).unwrap();
        assert_eq!((x.mu(), x.omega(), x.nu()), (0.6, 0.5, 0.2));
    }

    #[test]
    fn triple_clamps_within_eps() {
        let x = NeutroTriple::new(1.0 + 1e-15, 0.0, 0.0, &TOL).unwrap();
        assert_eq!((x.mu(), x.omega(), x.nu()), (1.0, 0.0, 0.0));
        let y = NeutroTriple::new(-1e-15, 0.3, 1.0, &TOL).unwrap();
        assert_eq!(y.mu(), 0.0);
    }

    #[test]
    fn triple_rejects_out_of_range() {
        let err = NeutroTriple::new(1.2, 0.0, 0.0, &TOL).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfRange {
                field: "mu",
                value: 1.2
            }
        );
        assert_eq!(err.to_string(), "OutOfRange(mu)");
        assert!(NeutroTriple::new(0.0, f64::NAN, 0.0, &TOL).is_err());
    }

    #[test]
    fn triple_validation_idempotent() {
        let x = NeutroTriple::new(1.0 + 9e-13, -9e-13, 0.25, &TOL).unwrap();
        let y = NeutroTriple::new(x.mu(), x.omega(), x.nu(), &TOL).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn penta_canonical_unit() {
        let v = PentaVector::new(1.0, 0.0, 0.0, 0.0, 0.0, &TOL).unwrap();
        assert_eq!(v, PentaVector::T);
    }

    #[test]
    fn penta_uniform_partition() {
        let v = PentaVector::new(0.2, 0.2, 0.2, 0.2, 0.2, &TOL).unwrap();
        assert_eq!(v.partition_sum(), 1.0);
    }

    #[test]
    fn penta_rejects_bad_sum() {
        let err = PentaVector::new(0.5, 0.5, 0.5, 0.0, 0.0, &TOL).unwrap_err();
        assert_eq!(err, Error::PartitionViolation { sum: 1.5 });
        assert_eq!(err.to_string(), "PartitionViolation(sum=1.5)");
    }

    #[test]
    fn penta_rejects_component_out_of_range() {
        assert!(matches!(
            PentaVector::new(1.4, -0.4, 0.0, 0.0, 0.0, &TOL),
            Err(Error::OutOfRange { field: "t", .. })
        ));
    }

    #[test]
    fn negative_zero_is_normalized() {
        let v = PentaVector::new(1.0, -0.0, 0.0, 0.0, 0.0, &TOL).unwrap();
        assert!(v.c().is_sign_positive());
        let b = BipolarProfile::new_unchecked(-0.0, 0.5, 0.5, -0.0, 0.0);
        assert!(b.tau_plus().is_sign_positive());
        assert!(b.pi().is_sign_positive());
    }

    #[test]
    fn renormalize_repairs_noisy_input() {
        let v = PentaVector::new_unchecked(0.2, 0.0, 0.2, 0.0, 0.2)
            .renormalized()
            .unwrap();
        assert!((v.partition_sum() - 1.0).abs() < 1e-15);
        assert!((v.t() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn hexa_partition_check() {
        assert!(HexaVector::new(0.2, 0.2, 0.2, 0.2, 0.1, 0.1, &TOL).is_ok());
        assert!(matches!(
            HexaVector::new(0.2, 0.2, 0.2, 0.2, 0.2, 0.2, &TOL),
            Err(Error::PartitionViolation { .. })
        ));
    }
}
