//! Continuous operators on penta vectors and the matching unary operators
//! on the primary triple.
//!
//! The binary operators require their operands to satisfy the bound
//! `t + c + u + f <= 1` and the exclusivity `c * u = 0`; both properties are
//! preserved by the operators, exclusivity bit-exactly. On the five
//! canonical unit vectors every operator reproduces the corresponding
//! symbolic truth table.

use crate::error::{Error, Result};
use crate::logic5::LogicValue5;
use crate::tolerance::TolerancePolicy;
use crate::types::{NeutroTriple, PentaVector};

fn check_operand(x: &PentaVector, tol: &TolerancePolicy) -> Result<()> {
    let product = x.c() * x.u();
    if product > tol.eps_zero {
        return Err(Error::PreconditionViolation {
            detail: "c*u",
            value: product,
        });
    }
    let bound = x.t() + x.c() + x.u() + x.f();
    if bound > 1.0 + tol.eps_zero {
        return Err(Error::PreconditionViolation {
            detail: "t+c+u+f",
            value: bound,
        });
    }
    Ok(())
}

// The hesitation residual is grouped as (t + f) + (c + u) so that swapping
// the roles of t and f (or c and u) cannot change the rounding; this keeps
// De Morgan and the involution identities bit-exact.
#[inline]
fn residual(t: f64, c: f64, u: f64, f: f64) -> f64 {
    1.0 - ((t + f) + (c + u))
}

/// Union: truth takes the maximum, falsity the minimum, and the
/// contradiction/ignorance masses shift by the falsity overlap.
pub fn union_vec(a: &PentaVector, b: &PentaVector, tol: &TolerancePolicy) -> Result<PentaVector> {
    check_operand(a, tol)?;
    check_operand(b, tol)?;
    let t = f64::max(a.t(), b.t());
    let f = f64::min(a.f(), b.f());
    let c = f64::min(a.c() + a.f(), b.c() + b.f()) - f;
    let u = f64::min(a.u() + a.f(), b.u() + b.f()) - f;
    let h = residual(t, c, u, f);
    Ok(PentaVector::new_unchecked(t, c, h, u, f))
}

/// Intersection: mirror image of the union with truth and falsity swapped.
pub fn intersection_vec(
    a: &PentaVector,
    b: &PentaVector,
    tol: &TolerancePolicy,
) -> Result<PentaVector> {
    check_operand(a, tol)?;
    check_operand(b, tol)?;
    let t = f64::min(a.t(), b.t());
    let f = f64::max(a.f(), b.f());
    let c = f64::min(a.c() + a.t(), b.c() + b.t()) - t;
    let u = f64::min(a.u() + a.t(), b.u() + b.t()) - t;
    let h = residual(t, c, u, f);
    Ok(PentaVector::new_unchecked(t, c, h, u, f))
}

/// Complement: `(t, c, h, u, f) -> (f, c, h, u, t)`.
pub fn complement_vec(x: &PentaVector) -> PentaVector {
    PentaVector::new_unchecked(x.f(), x.c(), x.h(), x.u(), x.t())
}

/// Negation: `(t, c, h, u, f) -> (f, u, h, c, t)`.
pub fn negation_vec(x: &PentaVector) -> PentaVector {
    PentaVector::new_unchecked(x.f(), x.u(), x.h(), x.c(), x.t())
}

/// Dual: `(t, c, h, u, f) -> (t, u, h, c, f)`.
pub fn dual_vec(x: &PentaVector) -> PentaVector {
    PentaVector::new_unchecked(x.t(), x.u(), x.h(), x.c(), x.f())
}

/// Equivalence lifted to vectors by composition:
/// `(¬a ∪ b) ∩ (a ∪ ¬b)`. There is no direct vector formula.
pub fn equivalence_vec(
    a: &PentaVector,
    b: &PentaVector,
    tol: &TolerancePolicy,
) -> Result<PentaVector> {
    let left = union_vec(&complement_vec(a), b, tol)?;
    let right = union_vec(a, &complement_vec(b), tol)?;
    intersection_vec(&left, &right, tol)
}

/// S-implication lifted to vectors by composition: `¬a ∪ b`.
pub fn s_implication_vec(
    a: &PentaVector,
    b: &PentaVector,
    tol: &TolerancePolicy,
) -> Result<PentaVector> {
    union_vec(&complement_vec(a), b, tol)
}

/// Complement on the primary triple: `(mu, omega, nu) -> (nu, omega, mu)`.
pub fn complement_primary(x: NeutroTriple) -> NeutroTriple {
    NeutroTriple::new_unchecked(x.nu(), x.omega(), x.mu())
}

/// Negation on the primary triple:
/// `(mu, omega, nu) -> (1 - mu, omega, 1 - nu)`.
pub fn negation_primary(x: NeutroTriple) -> NeutroTriple {
    NeutroTriple::new_unchecked(1.0 - x.mu(), x.omega(), 1.0 - x.nu())
}

/// Dual on the primary triple:
/// `(mu, omega, nu) -> (1 - nu, omega, 1 - mu)`.
pub fn dual_primary(x: NeutroTriple) -> NeutroTriple {
    NeutroTriple::new_unchecked(1.0 - x.nu(), x.omega(), 1.0 - x.mu())
}

impl PentaVector {
    /// Canonical unit vector carrying all mass on one logical value.
    pub fn unit(value: LogicValue5) -> Self {
        match value {
            LogicValue5::True => Self::T,
            LogicValue5::Contradictory => Self::C,
            LogicValue5::Hesitant => Self::H,
            LogicValue5::Unknown => Self::U,
            LogicValue5::False => Self::F,
        }
    }

    /// The logical value this vector is the unit of, if it is one.
    pub fn as_logic(&self) -> Option<LogicValue5> {
        crate::logic5::VALUES
            .into_iter()
            .find(|&v| *self == Self::unit(v))
    }
}
