/// Comparison tolerances shared by validation and the inverse transforms.
///
/// The forward transforms are exact algebraic identities, so in double
/// precision the defaults are generous: partition sums land within a few
/// ulps of 1 and exact-zero products are preserved bit-for-bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TolerancePolicy {
    /// Allowed deviation of a partition sum from 1.
    pub eps_partition: f64,
    /// Threshold under which an exact-zero product or radicand is accepted.
    pub eps_zero: f64,
    /// Componentwise slack granted when an inverse transform lands just
    /// outside the unit cube.
    pub eps_roundtrip: f64,
}

impl TolerancePolicy {
    /// Build a policy from explicit tolerances.
    ///
    /// Panics if any tolerance is not strictly positive.
    pub fn new(eps_partition: f64, eps_zero: f64, eps_roundtrip: f64) -> Self {
        assert!(
            eps_partition > 0.0 && eps_zero > 0.0 && eps_roundtrip > 0.0,
            "tolerances must be strictly positive"
        );
        Self {
            eps_partition,
            eps_zero,
            eps_roundtrip,
        }
    }
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self {
            eps_partition: 1e-9,
            eps_zero: 1e-12,
            eps_roundtrip: 1e-9,
        }
    }
}
