use thiserror::Error;

/// Everything that can go wrong when building or querying a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multidegree is empty")]
    EmptyMultidegree,
    #[error("hypersurface degree {0} is below 2")]
    DegreeTooSmall(i64),
    #[error("codimension {codim} in P^{ambient} leaves dimension {} < 2", ambient - codim)]
    CodimTooLarge { ambient: i64, codim: i64 },
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("cover is not a double cover over an intermediate cover: {0}")]
    NotATower(String),
    #[error("9k must be even for N = 9k/2 to be an integer (k = {0})")]
    BadParity(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no bound lemma for {criterion} on {family} covers")]
    UnsupportedCombination { criterion: String, family: String },
    #[error("parameters lie outside the admissible region: {0}")]
    OutOfBoundBox(String),
    #[error("closed-form subcanonicity {closed_form} disagrees with computed {computed}")]
    ClosedFormMismatch { closed_form: i64, computed: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
