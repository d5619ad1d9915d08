use thiserror::Error;

/// Errors raised by the group engines and the witness constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("matrix is singular (determinant 0 mod {p})")]
    Singular { p: u32 },

    #[error("matrix is not a symplectic similitude for the given form")]
    NotSimilitude,

    #[error("dimension {dim} over F_{p} is too large for exhaustive spinning")]
    DimensionTooLarge { dim: usize, p: u32 },

    #[error("enumeration cap exceeded ({cap} elements)")]
    CapExceeded { cap: usize },

    #[error("group of order {order} is not a p-group")]
    NotPGroup { order: u128 },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("congruence condition violated: {0}")]
    BadCongruence(String),

    #[error("operands have incompatible kinds: {0}")]
    KindMismatch(String),

    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("matrix does not preserve the squaring form (witness vector {witness:#b})")]
    NotOrthogonal { witness: u32 },

    #[error("scalar correction search failed; orders found: {orders:?}")]
    ScalarSearchFailed { orders: Vec<Option<u128>> },

    #[error("search failed: {0}")]
    SearchFailed(String),

    #[error("lift search exhausted; achieved orders: {achieved:?}")]
    SearchExhausted { achieved: Vec<u128> },

    #[error("index {index} out of range for table {table}")]
    OutOfRange { table: &'static str, index: usize },

    #[error("stage {stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<GroupError>,
    },
}

impl GroupError {
    pub fn at_stage(self, stage: &'static str) -> Self {
        GroupError::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, GroupError>;
