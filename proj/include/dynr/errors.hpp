#ifndef DYNR_ERRORS_HPP
#define DYNR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynr {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Vector/matrix sizes do not match the algebra dimension.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// The bilinear form is (numerically) singular.
class SingularFormError : public Error {
public:
  using Error::Error;
};

/// Evaluation requested within DELTA_POLE of a pole of f (points 2*pi*i*k, k != 0).
class PoleError : public Error {
public:
  using Error::Error;
};

/// omega lies outside the admissible domain, or an expression denominator vanishes.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Eigenvalue clusters cannot be enclosed by disjoint contours with safe margins.
class ClusterSeparationError : public Error {
public:
  using Error::Error;
};

/// A resolvent factor (xi*I - T) is numerically singular at a quadrature node.
class SingularResolventError : public Error {
public:
  using Error::Error;
};

/// Spectral radius exceeds the convergence radius of the truncated series.
class RadiusError : public Error {
public:
  using Error::Error;
};

/// An operator expected to be diagonalizable has a nontrivial Jordan block.
class NotDiagonalizableError : public Error {
public:
  using Error::Error;
};

/// A vector expected to be an eigenvector fails the residual test.
class NotEigenvectorError : public Error {
public:
  using Error::Error;
};

/// Malformed algebra file, catalog name, or omega expression.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Exact rational arithmetic exceeded the 128-bit working width.
class OverflowError : public Error {
public:
  using Error::Error;
};

} // namespace dynr

#endif
