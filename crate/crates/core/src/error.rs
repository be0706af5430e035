use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree m={0} outside supported range 2..=16")]
    DegreeOutOfRange(u32),

    #[error("modulus {modulus:#b} is not an irreducible binary polynomial of degree {m}")]
    NotIrreducible { m: u32, modulus: u32 },

    #[error("element {alpha} does not generate the multiplicative group of GF(2^{m})")]
    NotPrimitive { m: u32, alpha: u32 },

    #[error("value {value} is not an element of GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },

    #[error("operands belong to different field contexts")]
    ContextMismatch,

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("family {family} is not applicable at m={m}: {reason}")]
    Inapplicable {
        family: String,
        m: u32,
        reason: String,
    },

    #[error("invalid parameter for family {family}: {reason}")]
    InvalidParameter { family: String, reason: String },

    #[error("{family} at m={m} failed oval-polynomial verification: {violation}")]
    NotOvalPolynomial {
        family: String,
        m: u32,
        violation: String,
    },

    #[error("{what} needs {required} units of work, cap is {cap}")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    #[error("matrix has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("inconsistent weight distribution: {0}")]
    InconsistentDistribution(String),

    #[error("closed form yields negative count {value} at weight {weight}")]
    NegativeCount { weight: usize, value: String },

    #[error("not a hyperoval: {0}")]
    NotHyperoval(String),

    #[error("code is not a [q+2,3,q] MDS code: {0}")]
    NotHyperovalCode(String),

    #[error("minimum-weight support pairing violated: {0}")]
    PairingViolation(String),

    #[error("{0}")]
    Precondition(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the error comes from an enumeration or search budget cap.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
