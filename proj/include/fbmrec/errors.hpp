#ifndef FBMREC_ERRORS_HPP
#define FBMREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fbmrec {

// Numerical failures inside the generators and estimators. The CLI maps
// these to exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A circulant eigenvalue fell below -tol; the embedding is not usable.
struct EmbeddingNotPsdError : NumericalError {
    using NumericalError::NumericalError;
};

// Durbin-Levinson innovation variance became non-positive.
struct NumericalBreakdownError : NumericalError {
    using NumericalError::NumericalError;
};

// Cholesky factorization of the fBm covariance failed beyond tolerance.
struct NotPositiveDefiniteError : NumericalError {
    using NumericalError::NumericalError;
};

// Requested box scale is finer than the grid supports.
struct ScaleTooFineError : NumericalError {
    using NumericalError::NumericalError;
};

// Regression input has fewer than 3 points or no x spread.
struct DegenerateRegressionError : NumericalError {
    using NumericalError::NumericalError;
};

// Too few Monte Carlo successes to fit an exponent or assess a ratio.
// The CLI maps this to exit code 4.
struct InsufficientHitsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failure while writing outputs. The CLI maps this to exit code 5.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fbmrec

#endif
