use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("modulus {0:?} is reducible over GF({1})")]
    ReducibleModulus(Vec<u32>, u32),
    #[error("modulus {modulus:?} does not define a degree-{degree} extension")]
    InvalidModulus { modulus: Vec<u32>, degree: u32 },
    #[error("no modulus available for GF({p}^{u})")]
    UnsupportedExtension { p: u32, u: u32 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field of order {0} is too large for table-driven arithmetic")]
    FieldTooLarge(u64),
    #[error("value {0} is not a canonical field element")]
    NotAnElement(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("{count} subspaces exceed the enumeration cap {cap}")]
    TooManySubspaces { count: u128, cap: usize },
    #[error("matrix is singular")]
    SingularElement,

    #[error("generator {0} is singular")]
    SingularGenerator(usize),
    #[error("group order exceeds the cap {0}")]
    OrderCapExceeded(usize),
    #[error("matrix is not an element of the group")]
    NotInGroup,
    #[error("subgroup is not contained in the expected overgroup")]
    SubgroupNotContained,
    #[error("overgroup interval exceeds the cap {0}")]
    IntervalTooLarge(usize),
    #[error("Lemma hypothesis violated: T is not contained in the stabilizer of point {0}")]
    HypothesisViolated(usize),
    #[error("powerset over {size} items exceeds the bound {bound}")]
    PowersetTooLarge { size: usize, bound: usize },

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("poset is not a lattice: elements {0} and {1} have no meet")]
    NotALattice(usize, usize),
    #[error("coatom {0} is missing from the crosscut")]
    CoatomsNotCovered(usize),
    #[error("the crosscut contains the top element")]
    TopInX,
    #[error("poset has no {0}")]
    Unbounded(&'static str),
    #[error("lattice is trivial (bottom equals top)")]
    TrivialLattice,
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("face family is not downward closed (missing a subset of face {0:#b})")]
    NotDownwardClosed(u64),
    #[error("vertex {0} has no singleton face")]
    MissingVertexFace(usize),
    #[error("complex has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("the ambient group is reducible")]
    ReducibleAmbientGroup,
    #[error("malformed closure dump: {0}")]
    MalformedDump(String),
    #[error("H equals G; the identities are stated for proper subgroups")]
    WholeGroup,
}

pub type Result<T> = std::result::Result<T, Error>;
