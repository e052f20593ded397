//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `(d-2)(d̂-2) < 4`: the spec describes a spherical solid, not a
    /// tessellation of the plane.
    #[error("spherical spec: ({d},{codegree}) has (d-2)(codegree-2) = {product} < 4")]
    SphericalSpec { d: u32, codegree: u32, product: i64 },

    /// Degree or codegree below 3.
    #[error("degenerate spec: d = {d}, codegree = {codegree} (both must be >= 3)")]
    DegenerateSpec { d: u32, codegree: u32 },

    /// The graph has no complete face, so no dual vertex can be formed.
    #[error("graph has no complete face")]
    NoFaces,

    /// The requested ball does not fit inside the built patch.
    #[error("ball of radius {radius} about vertex {center} reaches the patch frontier")]
    TruncatedBall { center: u32, radius: u32 },

    /// A vertex-set operation was given a frontier (non-interior) vertex.
    #[error("vertex {vertex} lies on the patch frontier")]
    FrontierVertex { vertex: u32 },

    /// A closure operation escaped the built part of the patch.
    #[error("closure operation reached the patch frontier: {context}")]
    FrontierContact { context: String },

    /// Empty vertex set where a nonempty one is required.
    #[error("empty patch")]
    EmptyPatch,

    /// `|K|/|E(K)|` requested for a set with no internal edges.
    #[error("patch has no internal edges")]
    NoInternalEdges,

    /// An enumeration exceeded its configured cap.
    #[error("enumeration budget exceeded: {visited} items (cap {cap})")]
    BudgetExceeded { visited: u64, cap: u64 },

    /// Argument outside the domain of a closed-form map.
    #[error("domain error: {0}")]
    DomainError(String),

    /// A threshold formula's hypotheses cannot be satisfied for this input.
    #[error("inapplicable: {0}")]
    Inapplicable(String),

    /// Coupling from the past failed to coalesce within the horizon cap.
    #[error("no coalescence within {max_sweeps} sweeps")]
    NoCoalescence { max_sweeps: u64 },

    /// A stochastic-domination check failed. This is a genuine finding,
    /// not an input error.
    #[error("domination violated: {0}")]
    DominationViolated(String),

    /// Potts spin outside `1..=q`.
    #[error("spin {spin} outside 1..={q}")]
    BadSpin { spin: u32, q: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
