use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("image table is not a bijection on 0..{degree}")]
    NotBijection { degree: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("element closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("group order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("partition is not invariant under the group")]
    NotInvariant,

    #[error("not a subgroup of the ambient group")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("edge multiplicity between adjacent orbits is not constant ({0})")]
    InconsistentEll(String),

    #[error("unexpected quotient shape: {0}")]
    UnexpectedShape(String),

    #[error("kernel criterion violated: {0}")]
    KernelCriterion(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("group is arc-transitive; no half-orbit exists")]
    ArcTransitive,

    #[error("group is not half-arc-transitive: {0}")]
    NotHalfTransitive(String),

    #[error("bad parameter: {0}")]
    BadParam(String),

    #[error("graph is disconnected: {0}")]
    Disconnected(String),

    #[error("connection set does not generate the group")]
    NotGenerating,

    #[error("connection set is not of the form S0 ∪ S0⁻¹ with S0 ∩ S0⁻¹ empty")]
    NotInverseClosed,

    #[error("connection set contains the identity")]
    ContainsIdentity,

    #[error("permutation is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("not the full kernel of a cyclic quotient: {0}")]
    NotKernel(String),

    #[error("normal quotient is not a cover: {0}")]
    NotACover(String),

    #[error("no classification line matches: {0}")]
    NoMatch(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("assertion failed: {0}")]
    AssertionFailed(String),

    #[error("pair document: {0}")]
    Document(String),
}

impl Error {
    /// Errors that falsify a structural theorem the library relies on, as
    /// opposed to bad input or resource limits.
    pub fn is_theorem_violation(&self) -> bool {
        matches!(
            self,
            Error::InconsistentEll(_)
                | Error::UnexpectedShape(_)
                | Error::KernelCriterion(_)
                | Error::NotACover(_)
                | Error::NoMatch(_)
                | Error::AssertionFailed(_)
        )
    }
}
