use thiserror::Error;

use crate::quadforms::QForm;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("series inverse requires a unit constant term, found {0}")]
    NotAUnit(String),

    #[error("series coefficient at q^{exponent} is not divisible by {divisor}")]
    InexactDivision { exponent: i64, divisor: i64 },

    #[error("p({n}) {sign} alpha({n}) is odd; rank counts would not be integral")]
    RankParity { n: usize, sign: char },

    #[error("enumeration of partitions of {n} exceeds the cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("invalid discriminant {0}")]
    InvalidDiscriminant(i64),

    #[error("square divisor {u} of {d} is not a unit modulo 12")]
    NonUnitSquareDivisor { d: i64, u: i64 },

    #[error("form {form} matched {matches} coset representatives, expected exactly one")]
    CosetUniqueness { form: QForm, matches: usize },

    #[error("working precision {0} bits is below the minimum")]
    PrecisionTooLow(u32),

    #[error("imaginary part {0} is too small for convergent q-series evaluation")]
    ImaginaryPartTooSmall(f64),

    #[error("trace for n = {n} rounds to {rounded} with residual {residual}, above tolerance {tolerance}")]
    Certification {
        n: u64,
        rounded: String,
        residual: String,
        tolerance: String,
    },

    #[error("Kloosterman sum S({a},{b};{c}) has imaginary part {imag} above tolerance")]
    KloostermanImaginary { a: i64, b: i64, c: i64, imag: String },

    #[error("no sign change on the bracket for a = {0}")]
    NoSignChange(u32),

    #[error("{0}")]
    Domain(String),
}
