use thiserror::Error;

/// Errors reported by complex constructors, engines and poset tools.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("facet list is empty")]
    EmptyInput,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("not a face of the complex")]
    NotAFace,
    #[error("not a facet of the complex")]
    NotAFacet,
    #[error("complex is not pure")]
    NotPure,
    #[error("complex has no vertex")]
    VoidComplex,
    #[error("dimension {value} out of range [{min}, {max}]")]
    DimensionOutOfRange { value: isize, min: isize, max: isize },
    #[error("complex has no facet of dimension {dim}")]
    NoFacetOfDimension { dim: isize },
    #[error("expansion arity {got} does not match vertex count {n}")]
    ExpansionArity { got: usize, n: usize },
    #[error("expansion entry at vertex {vertex} must be positive")]
    ExpansionEntry { vertex: usize },
    #[error("sequence is not a permutation of the facet indices")]
    NotAPermutation,
    #[error("order is not a strong shelling order")]
    NotAStrongShellingOrder,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("interval endpoints out of order")]
    BadInterval,
    #[error("operation supports at most {max} facets, complex has {got}")]
    TooManyFacets { got: usize, max: usize },
    #[error("operation supports at most {max} support vertices, complex has {got}")]
    SupportTooLarge { got: usize, max: usize },
    #[error("assignment does not realize the h-vector label multiset")]
    BadAssignment,
    #[error("h-vector has a negative entry")]
    NegativeHVector,
    #[error("monomials live in different variable counts")]
    MismatchedVariables,
    #[error("cover relations contain a cycle")]
    PosetCycle,
    #[error("poset is empty")]
    PosetEmpty,
    #[error("poset is not pure")]
    PosetNotPure,
    #[error("element {element} out of range [1, {m}]")]
    ElementOutOfRange { element: usize, m: usize },
    #[error("interval is empty: lower bound is not below upper bound")]
    EmptyInterval,
    #[error("rank selection exceeds rank range [1, {r}]")]
    RankSetOutOfRange { r: usize },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
