use alloc::string::String;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("hypergeometric denominator (c)_k vanishes: c = {0}")]
    PoleInC(String),
    #[error("rising factorial vanishes in the analytic zero census")]
    DegenerateIndex,
    #[error("degenerate seed: {0}")]
    Degenerate(DegenerateReason),
    #[error("outer-root denominator vanishes")]
    DegenerateDenominator,
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),
    #[error("seed polynomial has a root inside the quantization interval")]
    SingularInsideInterval,
    #[error("HPG sign constraint violated: {0}")]
    SignConstraint(&'static str),
    #[error("requested member falls in a sparse-sequence gap")]
    SparseGap,
    #[error("normalizing denominator vanishes")]
    DegenerateScale,
    #[error("parameters outside the strict validity range: {0}")]
    RangeViolation(&'static str),
    #[error("case-II exceptional Laguerre requires m < lambda0")]
    CaseIIRange,
    #[error("lambda = mu merges the outer singular point")]
    MergedSingularity,
    #[error("seed type does not belong to the family")]
    FamilyMismatch,
    #[error("weight is not integrable: {0}")]
    NonIntegrable(&'static str),
    #[error("quadrature tolerance not met (estimate {estimate:e}, error {error:e})")]
    ToleranceNotMet { estimate: f64, error: f64 },
    #[error("finite-difference grid too coarse (extrapolation spread {0:e})")]
    GridTooCoarse(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegenerateReason {
    /// The polynomial part drops below the nominal order.
    OrderCollapse,
    /// The polynomial vanishes at an end of the quantization interval.
    Endpoint,
}

impl core::fmt::Display for DegenerateReason {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DegenerateReason::OrderCollapse => f.write_str("order-collapse"),
            DegenerateReason::Endpoint => f.write_str("endpoint"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
