//! Multi-valued fuzzy representations of truth/indeterminacy/falsity
//! triples.
//!
//! A triple `(mu, omega, nu)` from the unit cube is re-expressed as a fuzzy
//! partition of unity over logical values:
//!
//! - [`bipolar`]: the pair `(mu, nu)` split into net truth, net falsity,
//!   ambiguity, ignorance, and contradiction;
//! - [`penta`]: two invertible five-component encodings `(t, c, h, u, f)`
//!   of the full triple, plus a ten-term inspection view;
//! - [`hexa`]: six-component extensions separating ambiguity from truth
//!   and falsity;
//! - [`logic5`]: the symbolic five-valued logic the partitions live over;
//! - [`algebra5`]: continuous union/intersection/complement/negation/dual
//!   operators on partition vectors, agreeing with the symbolic tables on
//!   the canonical unit vectors.
//!
//! All types are immutable values and all operations are pure functions;
//! everything is safe to share and send between threads.
//!
//! ```
//! use neutroval::{NeutroTriple, TolerancePolicy, Variant};
//!
//! let tol = TolerancePolicy::default();
//! let x = NeutroTriple::new(0.6, 0.5, 0.2, &tol).unwrap();
//! let p = neutroval::penta::to_penta(x, Variant::I);
//! assert!((p.partition_sum() - 1.0).abs() < tol.eps_partition);
//! let back = neutroval::penta::from_penta(p, Variant::I, &tol).unwrap();
//! assert!((back.mu() - 0.6).abs() < tol.eps_roundtrip);
//! ```

pub mod algebra5;
pub mod bipolar;
pub mod cli;
mod error;
pub mod hexa;
pub mod logic5;
pub mod penta;
mod tolerance;
mod types;

pub use error::{Error, Result};
pub use logic5::LogicValue5;
pub use penta::{TenTermDecomposition, Variant};
pub use tolerance::TolerancePolicy;
pub use types::{BipolarProfile, HexaVector, NeutroTriple, PentaVector};
