#pragma once

#include <stdexcept>
#include <string>

namespace trigspline {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract inputs. The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numerical failures of otherwise valid inputs (degenerate denominators,
/// truncation budgets, singular systems). The CLI maps these to exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

class EvenNodeCount : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NodeCountTooSmall : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonFinite : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IndexOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class AllZeroParams : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class GridMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DerivativeOrderTooHigh : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class FundamentalRequiresEqualParams : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OddPanels : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateFit : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateFactor : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class TailBudgetExceeded : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularSystem : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoWitnessFound : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace trigspline
