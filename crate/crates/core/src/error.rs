use thiserror::Error;

/// Errors raised by validation, inverse transforms, and vector operators.
///
/// Display strings follow a `Name(detail)` convention so they can be embedded
/// verbatim in per-row CLI diagnostics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A component lies outside `[0, 1]` by more than the zero tolerance.
    #[error("OutOfRange({field})")]
    OutOfRange { field: &'static str, value: f64 },

    /// Partition components do not sum to 1 within the partition tolerance.
    #[error("PartitionViolation(sum={sum})")]
    PartitionViolation { sum: f64 },

    /// The radicand of an inverse transform is negative beyond tolerance,
    /// i.e. the input is not in the image of the forward transform.
    #[error("DiscriminantNegative(radicand={radicand})")]
    DiscriminantNegative { radicand: f64 },

    /// Two mutually exclusive components are simultaneously nonzero.
    #[error("ExclusivityViolation(product={product})")]
    ExclusivityViolation { product: f64 },

    /// A vector operator input fails the `t + c + u + f <= 1` bound or the
    /// `c * u = 0` exclusivity requirement.
    #[error("PreconditionViolation({detail}={value})")]
    PreconditionViolation { detail: &'static str, value: f64 },

    /// Folding an ambiguity component back into a partition produced a
    /// vector that is not a valid partition.
    #[error("ConsistencyViolation({detail})")]
    ConsistencyViolation { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
