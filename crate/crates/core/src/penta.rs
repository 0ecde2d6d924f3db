//! Forward and inverse transforms between the primary triple and the
//! five-component partition `(t, c, h, u, f)`, in two inequivalent variants,
//! plus the ten-term inspection decomposition behind variant I.

use crate::bipolar::decompose;
use crate::error::{Error, Result};
use crate::tolerance::TolerancePolicy;
use crate::types::{normalize_zero, NeutroTriple, PentaVector};

/// Selects one of the two penta-valued representations. The variants encode
/// the same triple differently and are not interchangeable; every transform
/// takes the variant explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Affine redistribution of the upper-cube mass into hesitation.
    I,
    /// Normalized form with denominator `1 + (1 - alpha) * omega`.
    II,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::I => write!(out, "1"),
            Variant::II => write!(out, "2"),
        }
    }
}

/// Forward transform of a triple into a penta partition.
///
/// The output sums to 1 (algebraic identity in both variants) and satisfies
/// `u * c = 0` exactly, because exactly one of ignorance and contradiction
/// is an exact zero and scaling preserves it.
pub fn to_penta(x: NeutroTriple, v: Variant) -> PentaVector {
    let (mu, omega, nu) = (x.mu(), x.omega(), x.nu());
    let b = decompose(mu, nu);
    let (alpha, pi, kappa) = (b.alpha(), b.pi(), b.kappa());
    match v {
        Variant::I => {
            let scale = 1.0 - omega / 2.0;
            let t = scale * (mu - kappa) - omega * alpha / 4.0;
            let f = scale * (nu - kappa) - omega * alpha / 4.0;
            let u = scale * pi;
            let c = scale * kappa;
            let h = (1.0 + alpha) / 2.0 * omega;
            PentaVector::new_unchecked(t, c, h, u, f)
        }
        Variant::II => {
            let denom = 1.0 + (1.0 - alpha) * omega;
            let t = (mu - kappa - alpha * omega / 2.0) / denom;
            let f = (nu - kappa - alpha * omega / 2.0) / denom;
            let u = pi / denom;
            let c = kappa / denom;
            let h = omega / denom;
            PentaVector::new_unchecked(t, c, h, u, f)
        }
    }
}

/// Inverse transform of a penta partition back to the primary triple.
///
/// Defined on vectors in the image of the forward map: the partition holds
/// by construction of [`PentaVector`], and this function additionally
/// requires `u * c = 0` within `eps_zero` and a nonnegative radicand.
/// Radicands in `[-eps_zero, 0)` are treated as rounding dust and taken as
/// zero. Recovered components within `eps_roundtrip` of the unit interval
/// are clamped onto it.
pub fn from_penta(p: PentaVector, v: Variant, tol: &TolerancePolicy) -> Result<NeutroTriple> {
    let (t, c, h, u, f) = (p.t(), p.c(), p.h(), p.u(), p.f());
    let exclusivity = u * c;
    if exclusivity > tol.eps_zero {
        return Err(Error::ExclusivityViolation {
            product: exclusivity,
        });
    }
    let (mu, omega, nu) = match v {
        Variant::I => {
            // min(t, f) is symmetric, so no tie-break is needed when t = f.
            let beta = 0.5 + h + f64::min(t, f);
            let root = guarded_sqrt(beta * beta - 2.0 * h, tol)?;
            let omega = beta - root;
            let denom = 2.0 - beta + root;
            let mu = 0.5 + (t - f + c - u) / denom;
            let nu = 0.5 + (f - t + c - u) / denom;
            (mu, omega, nu)
        }
        Variant::II => {
            let spread = (t - f).abs() + (c - u).abs();
            let root = guarded_sqrt(1.0 - 4.0 * h * spread, tol)?;
            let denom = 1.0 + root;
            let mu = 0.5 + (t - f + c - u) / denom;
            let omega = 2.0 * h / denom;
            let nu = 0.5 + (f - t + c - u) / denom;
            (mu, omega, nu)
        }
    };
    NeutroTriple::new(
        clamp_roundtrip(mu, tol),
        clamp_roundtrip(omega, tol),
        clamp_roundtrip(nu, tol),
        tol,
    )
}

/// For any componentwise-valid partition the radicand is provably
/// nonnegative (variant I: `(h - 1/2)^2 + 2m(1/2 + h) + m^2` with
/// `m = min(t, f)`; variant II: at worst `(1 - 2h)^2`), so the error branch
/// guards only NaN inputs and policy misuse.
fn guarded_sqrt(radicand: f64, tol: &TolerancePolicy) -> Result<f64> {
    if radicand < -tol.eps_zero || radicand.is_nan() {
        return Err(Error::DiscriminantNegative { radicand });
    }
    Ok(f64::max(radicand, 0.0).sqrt())
}

#[inline]
fn clamp_roundtrip(x: f64, tol: &TolerancePolicy) -> f64 {
    if x < 0.0 && x >= -tol.eps_roundtrip {
        0.0
    } else if x > 1.0 && x <= 1.0 + tol.eps_roundtrip {
        1.0
    } else {
        x
    }
}

/// Expansion of the variant I construction into ten terms: the bipolar
/// profile weighted by `omega` (upper square of the cube) and by
/// `1 - omega` (bottom square). The ten components sum to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TenTermDecomposition {
    pub weak_true: f64,
    pub weak_false: f64,
    pub neutral: f64,
    pub saturated: f64,
    pub hesitant_part: f64,
    pub true_part: f64,
    pub false_part: f64,
    pub unknown_part: f64,
    pub contradictory_part: f64,
    pub ambiguous_part: f64,
}

impl TenTermDecomposition {
    /// Components in fixed order: the five upper-square terms
    /// (weak true, weak false, neutral, saturated, hesitant) followed by the
    /// five bottom-square terms (true, false, unknown, contradictory,
    /// ambiguous).
    pub fn components(&self) -> [f64; 10] {
        [
            self.weak_true,
            self.weak_false,
            self.neutral,
            self.saturated,
            self.hesitant_part,
            self.true_part,
            self.false_part,
            self.unknown_part,
            self.contradictory_part,
            self.ambiguous_part,
        ]
    }

    /// Left-to-right sum of the ten components; 1 up to rounding.
    pub fn partition_sum(&self) -> f64 {
        self.components().iter().sum()
    }

    /// Folds the ten terms pairwise back into the five-component form:
    /// half of each weak term joins hesitation, the other half joins its
    /// bottom-square counterpart, and ambiguity splits equally between
    /// truth and falsity. Reproduces the variant I forward transform.
    pub fn fold(&self) -> PentaVector {
        let t = self.true_part + self.weak_true / 2.0 + self.ambiguous_part / 2.0;
        let f = self.false_part + self.weak_false / 2.0 + self.ambiguous_part / 2.0;
        let u = self.unknown_part + self.neutral / 2.0;
        let c = self.contradictory_part + self.saturated / 2.0;
        let h = self.hesitant_part
            + (self.weak_true + self.weak_false) / 2.0
            + (self.neutral + self.saturated) / 2.0;
        PentaVector::new_unchecked(t, c, h, u, f)
    }
}

/// Ten-term inspection decomposition of a triple.
pub fn ten_term_decomposition(x: NeutroTriple) -> TenTermDecomposition {
    let b = decompose(x.mu(), x.nu());
    let upper = x.omega();
    let bottom = 1.0 - x.omega();
    let scaled = |w: f64, v: f64| normalize_zero(w * v);
    TenTermDecomposition {
        weak_true: scaled(upper, b.tau_plus()),
        weak_false: scaled(upper, b.tau_minus()),
        neutral: scaled(upper, b.pi()),
        saturated: scaled(upper, b.kappa()),
        hesitant_part: scaled(upper, b.alpha()),
        true_part: scaled(bottom, b.tau_plus()),
        false_part: scaled(bottom, b.tau_minus()),
        unknown_part: scaled(bottom, b.pi()),
        contradictory_part: scaled(bottom, b.kappa()),
        ambiguous_part: scaled(bottom, b.alpha()),
    }
}
