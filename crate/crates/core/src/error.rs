use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    NotDecreasing(Vec<u32>),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("quantum characteristic must be at least 2, got {0}")]
    BadQuantumCharacteristic(u32),
    #[error("residue {residue} out of range for e = {e}")]
    BadResidue { residue: u32, e: u32 },
    #[error("{0} is not a prime (use 0 for characteristic zero)")]
    NotPrime(u64),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("node {0} is not in the diagram")]
    NodeOutsideDiagram(String),
    #[error("shape has {size} boxes, above the configured bound of {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("tableau is not standard")]
    NotStandard,
    #[error("{0} is not regular for e = {1}")]
    NotRegular(String, u32),
    #[error("invalid induction parameters a = {a}, b = {b} for e = {e}")]
    BadInduction { a: u32, b: u32, e: u32 },
    #[error("no cogood {residue}-node on {shape}")]
    NoCogoodNode { residue: u32, shape: String },
    #[error("partition {0} has a part larger than 2")]
    NotTwoColumn(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("convention fault: {0}")]
    Convention(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unsupported output: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
