use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator {0} is not in the denominator monoid")]
    DenominatorNotInMonoid(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("element involves variable {var} at or above the cut of {cut}")]
    VariableAboveCut { var: String, cut: String },

    #[error("monomial counting is only defined for unlocalized towers")]
    LocalizedTowerUnsupported,

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("unbound name `{0}`")]
    UnboundName(String),

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("GJMA condition failed: {check}; residual {residual}")]
    GjmaConditionFailed { check: String, residual: String },

    #[error("image {0} does not lie in the unlocalized ring")]
    ImageNotInP(String),

    #[error("declared factors do not multiply to {0} up to a scalar")]
    FactorizationMismatch(String),

    #[error("no normality certificate for ideal generator {0}")]
    MissingNormalityCertificate(String),

    #[error("malformed tower: {0}")]
    MalformedTower(String),

    #[error("ansatz of {size} unknowns exceeds the limit {limit}")]
    ResourceGuard { size: usize, limit: usize },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
