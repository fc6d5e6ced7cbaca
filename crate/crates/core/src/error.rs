//! Error types shared across the crate.

use std::fmt;

/// Errors raised by exact arithmetic on rationals, polynomials and
/// rational functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithmeticError {
    /// A rational function was constructed with a zero denominator.
    ZeroDenominator,
    /// A rational function was evaluated at a root of its denominator.
    /// Carries the offending evaluation point as a canonical string.
    PoleEvaluation(String),
    /// Exact polynomial division left a nonzero remainder.
    InexactDivision,
}

impl fmt::Display for ArithmeticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithmeticError::ZeroDenominator => write!(f, "zero denominator"),
            ArithmeticError::PoleEvaluation(at) => {
                write!(f, "evaluation at pole lambda = {at}")
            }
            ArithmeticError::InexactDivision => write!(f, "polynomial division is not exact"),
        }
    }
}

impl std::error::Error for ArithmeticError {}

/// Errors raised by truncated formal power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// Binary series operation on mismatched truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// The constant term is not invertible in the coefficient ring.
    NonUnitConstantTerm,
    /// Square root requires constant term exactly one.
    ConstantTermNotOne,
    /// A closed-form coefficient identity for the square root failed at
    /// the given index (implementation bug canary).
    SqrtCoefficientMismatch { index: usize },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            SeriesError::NonUnitConstantTerm => {
                write!(f, "constant term is not a unit")
            }
            SeriesError::ConstantTermNotOne => {
                write!(f, "constant term must be one")
            }
            SeriesError::SqrtCoefficientMismatch { index } => {
                write!(f, "square-root coefficient identity failed at index {index}")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// Errors raised by composition combinatorics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    /// The size parameter must be at least one.
    InvalidN(i64),
    /// A composition must be a nonempty sequence of parts >= 1.
    InvalidComposition,
}

impl fmt::Display for CombinatoricsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombinatoricsError::InvalidN(n) => write!(f, "invalid size N = {n}, need N >= 1"),
            CombinatoricsError::InvalidComposition => {
                write!(f, "composition must be nonempty with all parts >= 1")
            }
        }
    }
}

impl std::error::Error for CombinatoricsError {}

/// Errors raised by model construction and the operator recursions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    /// Model dimension must be even and at least six.
    UnsupportedDimension(i64),
    /// The formal Laplace eigenvalue must be nonnegative.
    NegativeEigenvalue(String),
    /// Invalid truncation or recursion order.
    InvalidOrder(i64),
    /// Recursion order not supported by a closed form.
    UnsupportedN(i64),
    /// Division by an identically zero factor in the recursion.
    SingularRecursion,
    /// Clearing the pole prefactor left a nontrivial denominator.
    NonPolynomialFamily { family: usize },
    /// A quantity expected to be polynomial kept a denominator.
    NonPolynomialResult,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::UnsupportedDimension(n) => {
                write!(f, "unsupported dimension n = {n}: need even n >= 6")
            }
            ModelError::NegativeEigenvalue(mu) => {
                write!(f, "eigenvalue parameter mu = {mu} must be >= 0")
            }
            ModelError::InvalidOrder(k) => write!(f, "invalid order {k}"),
            ModelError::UnsupportedN(n) => write!(f, "no closed form for N = {n}"),
            ModelError::SingularRecursion => write!(f, "division by zero in the recursion"),
            ModelError::NonPolynomialFamily { family } => {
                write!(f, "family P_{} is not polynomial after pole clearing", 2 * family)
            }
            ModelError::NonPolynomialResult => {
                write!(f, "pole clearing left a nontrivial denominator")
            }
        }
    }
}

impl std::error::Error for ModelError {}

/// Errors raised by the verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteError {
    /// The requested check id is not in the registry.
    UnknownCheck(String),
    /// The check is not defined for the given model.
    InadmissibleModel { check: String, n: i64 },
}

impl fmt::Display for SuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteError::UnknownCheck(id) => write!(f, "unknown check id {id}"),
            SuiteError::InadmissibleModel { check, n } => {
                write!(f, "check {check} is not admissible in dimension n = {n}")
            }
        }
    }
}

impl std::error::Error for SuiteError {}
