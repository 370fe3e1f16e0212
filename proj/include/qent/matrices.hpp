// Dense linear algebra on square matrices: Hermitian eigensystems, Kronecker
// products, partial traces, trace distance and spectral matrix functions.
//
// Everything here is templated on the Eigen expression type so real and
// complex matrices (and unevaluated expressions) are accepted alike.

#ifndef QENT_MATRICES_HPP
#define QENT_MATRICES_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "qent/core.hpp"

namespace qent {

template <typename RealScalar>
struct EigenSystem {
  VectorX<RealScalar> values;                    // ascending
  MatrixX<std::complex<RealScalar>> vectors;     // orthonormal columns
};

enum class Keep { First, Second };

struct FactorDims {
  Index first;
  Index second;
};

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? typename Derived::RealScalar(0) : m.cwiseAbs().maxCoeff();
}

/// Largest entrywise deviation |m - m^dagger|.
template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return max_abs(m - m.adjoint());
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must be a non-empty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::DomainError, std::string(what) + " has non-finite entries");
  }
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar tolerance,
                       const char* what) {
  require_square(m, what);
  const auto defect = hermiticity_defect(m);
  if (defect > tolerance) {
    throw Error(ErrorKind::NotHermitian,
                std::string(what) + " deviates from its adjoint by " + std::to_string(defect));
  }
}

/// Spectral decomposition of a Hermitian matrix. The input is symmetrized
/// before solving so round-off in the lower triangle is not silently dropped.
template <typename Derived>
EigenSystem<typename Derived::RealScalar> eig_hermitian(const Eigen::MatrixBase<Derived>& m) {
  using RealScalar = typename Derived::RealScalar;
  using CMatrix = MatrixX<std::complex<RealScalar>>;
  require_hermitian(m, RealScalar(tol::kStrict), "matrix");

  const CMatrix a = m.template cast<std::complex<RealScalar>>();
  const CMatrix sym = (a + a.adjoint()) * RealScalar(0.5);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NoConvergence,
                "Hermitian eigensolver did not converge for dim " + std::to_string(m.rows()));
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Kronecker product with row-major pairing (i,k) -> i*dim(b)+k.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
          Index dimension_cap = kDefaultDimensionCap) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (std::max(rows, cols) > dimension_cap) {
    throw Error(ErrorKind::DimensionOverflow, "Kronecker product dimension " +
                                                  std::to_string(std::max(rows, cols)) +
                                                  " exceeds cap " + std::to_string(dimension_cap));
  }
  MatrixX<Scalar> out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          Scalar(a(i, j)) * b.template cast<Scalar>();
    }
  }
  return out;
}

/// Traces out one tensor factor of an operator on C^first (x) C^second.
template <typename Derived>
MatrixX<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& d,
                                                FactorDims dims, Keep keep) {
  require_square(d, "operator");
  if (dims.first < 1 || dims.second < 1 || d.rows() != dims.first * dims.second) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator of dim " + std::to_string(d.rows()) + " does not factor as " +
                    std::to_string(dims.first) + "x" + std::to_string(dims.second));
  }
  const Index kept = keep == Keep::First ? dims.first : dims.second;
  MatrixX<typename Derived::Scalar> out = MatrixX<typename Derived::Scalar>::Zero(kept, kept);
  if (keep == Keep::First) {
    for (Index i = 0; i < dims.first; ++i)
      for (Index j = 0; j < dims.first; ++j)
        for (Index k = 0; k < dims.second; ++k)
          out(i, j) += d(i * dims.second + k, j * dims.second + k);
  } else {
    for (Index k = 0; k < dims.second; ++k)
      for (Index l = 0; l < dims.second; ++l)
        for (Index i = 0; i < dims.first; ++i)
          out(k, l) += d(i * dims.second + k, i * dims.second + l);
  }
  return out;
}

/// Half the trace norm of a - b.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar trace_distance(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  require_square(a, "first operand");
  require_square(b, "second operand");
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "trace distance between dims " +
                                                  std::to_string(a.rows()) + " and " +
                                                  std::to_string(b.rows()));
  }
  require_hermitian(a, typename DerivedA::RealScalar(tol::kStrict), "first operand");
  require_hermitian(b, typename DerivedB::RealScalar(tol::kStrict), "second operand");
  return eig_hermitian(a - b).values.cwiseAbs().sum() / 2;
}

/// Sum_i f(lambda_i) |v_i><v_i| over the spectral decomposition of d.
/// A non-finite value of f at an eigenvalue is reported as DomainError.
template <typename Derived, typename Function>
MatrixX<std::complex<typename Derived::RealScalar>> apply_function(
    const Eigen::MatrixBase<Derived>& d, Function&& f) {
  auto eig = eig_hermitian(d);
  VectorX<typename Derived::RealScalar> mapped(eig.values.size());
  for (Index i = 0; i < eig.values.size(); ++i) {
    mapped(i) = f(eig.values(i));
    if (!std::isfinite(mapped(i))) {
      throw Error(ErrorKind::DomainError,
                  "function undefined at eigenvalue " + std::to_string(eig.values(i)));
    }
  }
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

/// |v><v|
template <typename Derived>
MatrixX<typename Derived::Scalar> projector(const Eigen::MatrixBase<Derived>& v) {
  return v * v.adjoint();
}

}  // namespace qent

#endif  // QENT_MATRICES_HPP
