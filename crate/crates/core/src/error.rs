use core::fmt;

use crate::VertexSet;

/// Errors raised by constructors and operations of this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// More than 64 vertices requested.
    TooManyVertices(usize),
    /// A vertex index outside the structure's vertex set.
    BadIndex { index: usize, n: usize },
    /// A vertex lies in no hyperedge.
    UncoveredVertex(usize),
    /// A graph edge `{v, v}` or an arc `(v, v)`.
    Loop(usize),
    /// The same edge or arc given twice.
    ParallelEdge(usize, usize),
    /// `structured_cover` called on an instance outside the Theorem's equality case.
    NotEqualityCase,
    /// A corollary check requested while `n > 2(ρ - 1)`.
    ConditionNotMet { n: usize, rho: usize },
    /// A forbidden pattern with one vertex would exclude singletons.
    SingletonExcluded,
    /// A forbidden pattern larger than the supported pattern size.
    PatternTooLarge(usize),
    /// Class-size bound below 2.
    BadK(usize),
    /// A negative or non-finite edge weight.
    NegativeWeight { u: usize, v: usize },
    /// Singletons fail the threshold predicate.
    LambdaTooSmall,
    /// An oracle accepted `larger` but rejected its subset `smaller`.
    MonotonicityViolation { larger: VertexSet, smaller: VertexSet },
    /// Maximal-set enumeration exceeded its budget.
    GeneratorBudgetExceeded(usize),
    /// Exhaustive enumeration requested above the supported size.
    TooLarge(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooManyVertices(n) => write!(f, "{n} vertices exceeds the limit of 64"),
            Error::BadIndex { index, n } => write!(f, "vertex index {index} out of range (n = {n})"),
            Error::UncoveredVertex(v) => write!(f, "vertex {v} lies in no hyperedge"),
            Error::Loop(v) => write!(f, "loop at vertex {v}"),
            Error::ParallelEdge(u, v) => write!(f, "parallel edge {u} {v}"),
            Error::NotEqualityCase => f.write_str("hypergraph is not in the equality case"),
            Error::ConditionNotMet { n, rho } => {
                write!(f, "condition n <= 2(rho - 1) not met (n = {n}, rho = {rho})")
            }
            Error::SingletonExcluded => f.write_str("a forbidden pattern has a single vertex"),
            Error::PatternTooLarge(k) => write!(f, "forbidden pattern has {k} vertices (max 5)"),
            Error::BadK(k) => write!(f, "class size bound k = {k} must be at least 2"),
            Error::NegativeWeight { u, v } => write!(f, "edge {u} {v} has a negative weight"),
            Error::LambdaTooSmall => f.write_str("threshold excludes singletons"),
            Error::MonotonicityViolation { larger, smaller } => {
                write!(f, "oracle accepts {larger} but rejects its subset {smaller}")
            }
            Error::GeneratorBudgetExceeded(cap) => {
                write!(f, "more than {cap} maximal sets")
            }
            Error::TooLarge(n) => write!(f, "exhaustive enumeration supports n <= 5, got {n}"),
        }
    }
}

impl core::error::Error for Error {}
