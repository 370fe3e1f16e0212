// Common typedefs, tolerances and the error type shared by every module.

#ifndef QENT_CORE_HPP
#define QENT_CORE_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qent {

using Index = Eigen::Index;
using Real = double;
using Complex = std::complex<Real>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = MatrixX<Complex>;
using ComplexVector = VectorX<Complex>;
using RealVector = VectorX<Real>;

namespace tol {
// Hermiticity, orthonormality, trace and positivity of density operators.
inline constexpr Real kStrict = 1e-10;
// Partition-of-unity, POVM completeness and channel identities.
inline constexpr Real kOperational = 1e-8;
// Eigenvalues at or below this are outside the numerical range of an operator.
inline constexpr Real kRangeCutoff = 1e-12;
}  // namespace tol

inline constexpr Index kDefaultDimensionCap = 4096;

enum class ErrorKind {
  NotHermitian,
  NotPositive,
  TraceNotOne,
  NoConvergence,
  DimensionOverflow,
  DimensionMismatch,
  DomainError,
  BadDimension,
  InfeasibleCount,
  NotAProbabilityVector,
  ConstraintOutOfRange,
  SupportsNotOrthogonal,
  NotAProjectionFamily,
  NotAPartition,
  NotAPovm,
  NotOrthogonal,
  NotOrthonormal,
  NotUnitNorm,
  MatrixNotPsd,
  SectorViolation,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionOverflow: return "DimensionOverflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::InfeasibleCount: return "InfeasibleCount";
    case ErrorKind::NotAProbabilityVector: return "NotAProbabilityVector";
    case ErrorKind::ConstraintOutOfRange: return "ConstraintOutOfRange";
    case ErrorKind::SupportsNotOrthogonal: return "SupportsNotOrthogonal";
    case ErrorKind::NotAProjectionFamily: return "NotAProjectionFamily";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotAPovm: return "NotAPovm";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::NotUnitNorm: return "NotUnitNorm";
    case ErrorKind::MatrixNotPsd: return "MatrixNotPsd";
    case ErrorKind::SectorViolation: return "SectorViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Raised for every violated precondition or invariant. The message names
/// the invariant and the magnitude of the violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qent

#endif  // QENT_CORE_HPP
