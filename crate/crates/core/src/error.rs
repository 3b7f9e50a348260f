use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge endpoints coincide: {0}")]
    InvalidEdge(String),

    #[error("degenerate sun {0}: repeated vertex or edge")]
    DegenerateSun(String),

    #[error("difference {d} is the half difference of Z_{u} and forms a 1-factor")]
    NotTwoFactor { u: u32, d: u32 },

    #[error("invalid hole graph: {0}")]
    InvalidGraph(String),

    #[error("{construction}: precondition violated: {detail}")]
    PreconditionViolated {
        construction: &'static str,
        detail: String,
    },

    #[error("order {0} is not admissible (must be 0, 1, 4 or 9 mod 12)")]
    NotAdmissible(u32),

    #[error("no 3-sun system of order {0} exists")]
    NonExistent(u32),

    #[error(
        "a 3-sun system of order {n} embeds only in orders m = {n} or m >= {min}; got m = {m}"
    )]
    BoundViolated { n: u32, m: u32, min: u32 },

    #[error("no construction case matches n = {n}, u = {u}")]
    NoCaseMatch { n: u32, u: u32 },

    #[error("no frozen base system of order {0}")]
    UnsupportedBase(u32),

    #[error("plan for n = {n}, u = {u} is inconsistent: {detail}")]
    InvalidPlan { n: u32, u: u32, detail: String },

    #[error("construction failed verification: {0}")]
    VerificationFailed(String),

    #[error("certificate: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(construction: &'static str, detail: impl Into<String>) -> Error {
    Error::PreconditionViolated {
        construction,
        detail: detail.into(),
    }
}
