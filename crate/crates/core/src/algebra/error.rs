use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("not a power series: pole at t = 0")]
    NotPowerSeries,
    #[error("series domain: {0}")]
    SeriesDomain(&'static str),
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
}
