use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("exponent at position {pos} is not a nonnegative integer")]
    BadExponent { pos: usize },
    #[error("arity mismatch: expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("polynomials live over different variable lists")]
    VariableMismatch,
    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorSize { k: usize, rows: usize, cols: usize },
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is not invariant under the block permutation group")]
    NotInvariant,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{s} equations exceed the {vars} available variables")]
    TooManyEquations { s: usize, vars: usize },
    #[error("input polynomial #{index} is not symmetric")]
    NotSymmetric { index: usize },
    #[error("the number of equations s = {s} must be smaller than the number of variables n = {n}")]
    TooManyInputEquations { s: usize, n: usize },
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("expected {expected} coordinates for the partition blocks, got {got}")]
    BlockMismatch { expected: usize, got: usize },
    #[error("no witness data recorded for this verdict")]
    NoWitness,
    #[error("witness certification failed: {0}")]
    Certification(String),
    #[error("the Jacobian rank condition fails: the system has singular points")]
    ConditionA,
}
