//! Crate-wide error type.
//!
//! Errors fall into three classes, which the command-line front end maps to
//! exit codes:
//!
//! * **input errors** (exit 2): malformed files, failed table validation,
//!   elements that do not satisfy a command's preconditions;
//! * **unsupported requests** (exit 3): computations the tool refuses to
//!   guess at — exhausted p-adic precision, degenerate Hensel lifting,
//!   radical computations outside the supported range, search budgets;
//! * everything else is a definite mathematical verdict, not an error.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    // ---- field arithmetic ----
    /// Division by an element that is exactly zero.
    #[error("division by zero")]
    DivisionByZero,

    /// A p-adic computation needed more significant digits than remain.
    /// `context` says which decision could not be certified.
    #[error("p-adic precision exhausted: {context}")]
    PrecisionExhausted { context: String },

    /// Root finding over Q_p hit a residue where f' vanishes mod p and the
    /// refinement could not separate or certify the root at the working
    /// precision. Reported, never guessed.
    #[error("Hensel lifting degenerate at residue {residue} (mod {p}): {context}")]
    HenselDegenerate { p: u64, residue: String, context: String },

    /// Element string or structure that does not parse for the given field.
    #[error("cannot parse {text:?} as an element of {field}")]
    BadElement { field: String, text: String },

    /// Two elements of different fields met in one operation.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    // ---- structure-constant tables ----
    /// Commutativity c(i,j) = c(j,i) failed.
    #[error("table not commutative: b{i}*b{j} != b{j}*b{i}")]
    NotCommutative { i: usize, j: usize },

    /// Associativity (b_i b_j) b_k = b_i (b_j b_k) failed.
    #[error("table not associative: (b{i}*b{j})*b{k} != b{i}*(b{j}*b{k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    /// The declared unit does not satisfy 1*b = b at basis index `index`.
    #[error("declared unit fails 1*b{index} = b{index}")]
    BadUnit { index: usize },

    /// Dimension outside the supported range (1..=64).
    #[error("dimension {dim} outside supported range 1..=64")]
    DimensionOutOfRange { dim: usize },

    // ---- algebra-level computations ----
    /// The radical computation is not available for this algebra; the
    /// message records why (e.g. characteristic <= dimension and the
    /// brute-force range exceeded).
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),

    /// An element claimed to be idempotent is not.
    #[error("element is not idempotent: {0}")]
    NotIdempotent(String),

    /// Primitive idempotent decomposition needs the semisimple quotient to
    /// split into one-dimensional factors, and it does not.
    #[error("semisimple quotient does not split into base-field factors: {0}")]
    NotGelfandUnsplit(String),

    /// An ideal that turned out to contain the unit.
    #[error("ideal is improper (contains the unit): {0}")]
    ImproperIdeal(String),

    /// A matrix claimed to be an algebra morphism fails unitality or
    /// multiplicativity; the message names the failing constraint.
    #[error("not an algebra morphism: {0}")]
    NotMorphism(String),

    // ---- searches ----
    /// Character enumeration exceeded its node budget.
    #[error("character search budget exceeded after visiting {visited} nodes (budget {budget})")]
    SearchBudgetExceeded { visited: u64, budget: u64 },

    // ---- profinite towers ----
    /// A continuity-modulus claim failed; the witness pair is two points of
    /// the finest level lying in one cell whose values are too far apart.
    #[error("claimed continuity modulus violated at level-{level} points {x} and {y} (index {index})")]
    ModulusViolated { level: usize, x: usize, y: usize, index: i64 },

    /// A request referred to a tower level beyond the stored depth.
    #[error("tower depth exceeded: requested level {requested}, tower stores {available}")]
    DepthExceeded { requested: usize, available: usize },

    // ---- input handling ----
    /// Structured-file schema violation; `location` points into the file.
    #[error("schema error at {location}: {message}")]
    SchemaError { location: String, message: String },

    /// Underlying I/O failure.
    #[error("i/o error on {path}: {message}")]
    IoError { path: String, message: String },

    /// An internal invariant failed; indicates a bug, never user input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Exit class used by the command-line front end: 2 for input errors,
    /// 3 for unsupported requests, and 1 for anything that slips through
    /// (internal errors surface as 1 so scripts never mistake them for
    /// clean verdicts).
    pub fn exit_class(&self) -> i32 {
        match self {
            Error::BadElement { .. }
            | Error::FieldMismatch(_)
            | Error::NotCommutative { .. }
            | Error::NotAssociative { .. }
            | Error::BadUnit { .. }
            | Error::DimensionOutOfRange { .. }
            | Error::NotIdempotent(_)
            | Error::ImproperIdeal(_)
            | Error::NotMorphism(_)
            | Error::ModulusViolated { .. }
            | Error::SchemaError { .. }
            | Error::IoError { .. }
            | Error::DivisionByZero => 2,
            Error::PrecisionExhausted { .. }
            | Error::HenselDegenerate { .. }
            | Error::UnsupportedAlgebra(_)
            | Error::NotGelfandUnsplit(_)
            | Error::SearchBudgetExceeded { .. }
            | Error::DepthExceeded { .. } => 3,
            Error::Internal(_) => 1,
        }
    }

    /// Convenience constructor for precision failures.
    pub fn precision(context: impl Into<String>) -> Self {
        Error::PrecisionExhausted { context: context.into() }
    }

    /// Stable machine-readable tag for structured reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division-by-zero",
            Error::PrecisionExhausted { .. } => "precision-exhausted",
            Error::HenselDegenerate { .. } => "hensel-degenerate",
            Error::BadElement { .. } => "bad-element",
            Error::FieldMismatch(_) => "field-mismatch",
            Error::NotCommutative { .. } => "not-commutative",
            Error::NotAssociative { .. } => "not-associative",
            Error::BadUnit { .. } => "bad-unit",
            Error::DimensionOutOfRange { .. } => "dimension-out-of-range",
            Error::UnsupportedAlgebra(_) => "unsupported-algebra",
            Error::NotIdempotent(_) => "not-idempotent",
            Error::NotGelfandUnsplit(_) => "not-gelfand-unsplit",
            Error::ImproperIdeal(_) => "improper-ideal",
            Error::NotMorphism(_) => "not-morphism",
            Error::SearchBudgetExceeded { .. } => "search-budget-exceeded",
            Error::ModulusViolated { .. } => "modulus-violated",
            Error::DepthExceeded { .. } => "depth-exceeded",
            Error::SchemaError { .. } => "schema-error",
            Error::IoError { .. } => "io-error",
            Error::Internal(_) => "internal",
        }
    }
}
