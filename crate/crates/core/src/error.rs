use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("element is singular (|a|^2 - t|b|^2 = {det})")]
    Singular { det: f64 },

    #[error("the zero element has no inverse")]
    Zero,

    #[error("matrix is not a realization (template residual {residual:e})")]
    NotInRealization { residual: f64 },

    #[error("adjoint leaves the realization set for t = {t} with b != 0")]
    NotClosed { t: f64 },

    #[error("operation requires a negative scale, got t = {t}")]
    BadScale { t: f64 },

    #[error("conjugator requires b != 0")]
    ZeroB,

    #[error("similarity with the spectral form is not established for t = {t} with b != 0")]
    SimilarityNotEstablished { t: f64 },

    #[error("closed form does not cover mixed star words for t = {t} with b != 0")]
    AdjointNotIntertwined { t: f64 },

    #[error("polar decomposition of zero is undefined")]
    ZeroInput,

    #[error("closed-form {flag} flag disagrees with the matrix predicate")]
    ClassificationDisagreement { flag: &'static str },

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
