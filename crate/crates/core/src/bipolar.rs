//! Decomposition of a bipolar pair `(mu, nu)` into ignorance, contradiction,
//! ambiguity, and net truth/falsity indices.
//!
//! The pair carries two kinds of uncertainty: unassigned mass when
//! `mu + nu < 1` (ignorance) and overcommitted mass when `mu + nu > 1`
//! (contradiction). After removing contradiction, the mass shared equally
//! between truth and falsity is the ambiguity; what remains on each side is
//! the net index of truth or falsity. At most one of ignorance/contradiction
//! and at most one of the net indices is nonzero.
//!
//! All functions expect inputs in `[0, 1]` and are total on that domain.

use crate::types::{normalize_zero, BipolarProfile};

/// Index of ignorance: `1 - min(1, mu + nu)`.
pub fn ignorance(mu: f64, nu: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&mu) && (0.0..=1.0).contains(&nu));
    normalize_zero(1.0 - f64::min(1.0, mu + nu))
}

/// Index of contradiction: `max(1, mu + nu) - 1`.
pub fn contradiction(mu: f64, nu: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&mu) && (0.0..=1.0).contains(&nu));
    normalize_zero(f64::max(1.0, mu + nu) - 1.0)
}

/// Bipolar ambiguity: `2 * min(mu - kappa, nu - kappa)` with `kappa` the
/// index of contradiction.
pub fn ambiguity(mu: f64, nu: f64) -> f64 {
    let kappa = contradiction(mu, nu);
    normalize_zero(2.0 * f64::min(mu - kappa, nu - kappa))
}

/// Full decomposition into `(tau_plus, tau_minus, alpha, pi, kappa)`.
///
/// Evaluation follows the dependency order kappa, then alpha, then the net
/// indices, so that `tau_plus * tau_minus = 0` and `pi * kappa = 0` hold
/// bit-exactly: the smaller of the two ambiguity-free sides subtracts to an
/// exact floating-point zero.
pub fn decompose(mu: f64, nu: f64) -> BipolarProfile {
    debug_assert!((0.0..=1.0).contains(&mu) && (0.0..=1.0).contains(&nu));
    let pi = 1.0 - f64::min(1.0, mu + nu);
    let kappa = f64::max(1.0, mu + nu) - 1.0;
    let mu_net = mu - kappa;
    let nu_net = nu - kappa;
    let half_alpha = f64::min(mu_net, nu_net);
    let alpha = 2.0 * half_alpha;
    let tau_plus = mu_net - half_alpha;
    let tau_minus = nu_net - half_alpha;
    BipolarProfile::new_unchecked(tau_plus, tau_minus, alpha, pi, kappa)
}

/// The four Belnap-aligned terms `(mu - kappa, nu - kappa, pi, kappa)`,
/// which partition 1.
pub fn tetra_partition(mu: f64, nu: f64) -> [f64; 4] {
    let pi = ignorance(mu, nu);
    let kappa = contradiction(mu, nu);
    [
        normalize_zero(mu - kappa),
        normalize_zero(nu - kappa),
        pi,
        kappa,
    ]
}
