use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid uniformity profile: {0}")]
    InvalidProfile(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    SizeCap { what: &'static str, n: usize, cap: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("CZ expansion needs arity >= 1")]
    ZeroArity,

    #[error("Z string {z_support} touches the X site {x_site}")]
    XSiteInZString { x_site: usize, z_support: String },

    #[error("the C0 = 0 predicate is only defined for single-uniformity profiles, got {0}")]
    MultiUniformity(String),

    #[error("functional/hypergraph mismatch: {0}")]
    Mismatch(String),

    #[error("binomial identity violated at m = {m}, r = {r}: lhs = {lhs}, rhs = {rhs}")]
    IdentityViolation {
        m: u64,
        r: u64,
        lhs: BigInt,
        rhs: BigInt,
    },

    #[error("cannot parse dyadic rational {0:?}")]
    ParseDyadic(String),

    #[error("malformed hypergraph file: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short stable identifier, used by the CLI for machine-readable error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidProfile(_) => "invalid-profile",
            Error::InvalidHypergraph(_) => "invalid-hypergraph",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::SizeCap { .. } => "size-cap",
            Error::OutOfRange(_) => "out-of-range",
            Error::ZeroArity => "zero-arity",
            Error::XSiteInZString { .. } => "x-site-in-z-string",
            Error::MultiUniformity(_) => "multi-uniformity",
            Error::Mismatch(_) => "mismatch",
            Error::IdentityViolation { .. } => "identity-violation",
            Error::ParseDyadic(_) => "parse-dyadic",
            Error::Json(_) => "json",
        }
    }
}

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeCap { what, n, cap })
    } else {
        Ok(())
    }
}
