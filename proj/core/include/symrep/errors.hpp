#pragma once

#include <stdexcept>
#include <string>

namespace symrep {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct NotMonic : Error {
    explicit NotMonic(const std::string& what = "polynomial must be monic") : Error(what) {}
};

struct DivisorNotMonic : Error {
    DivisorNotMonic() : Error("division requires a monic divisor of degree >= 1") {}
};

struct DegreeTooHigh : Error {
    explicit DegreeTooHigh(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct NotSquare : Error {
    NotSquare() : Error("matrix must be square") {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("matrix must be symmetric") {}
};

struct NegativeInput : Error {
    NegativeInput() : Error("input must be nonnegative") {}
};

struct NotPositiveDefinite : Error {
    NotPositiveDefinite() : Error("matrix must be positive definite") {}
};

struct NotPositiveSemidefinite : Error {
    NotPositiveSemidefinite() : Error("matrix must be positive semidefinite") {}
};

struct NotStrictRealZero : Error {
    explicit NotStrictRealZero(const std::string& what) : Error(what) {}
};

struct NotRealZero : Error {
    explicit NotRealZero(const std::string& what) : Error(what) {}
};

struct InternalCertificateFailure : Error {
    explicit InternalCertificateFailure(const std::string& what) : Error(what) {}
};

struct BoundsTooLarge : Error {
    explicit BoundsTooLarge(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace symrep
