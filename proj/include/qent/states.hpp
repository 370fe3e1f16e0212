// Density operators, pure states and convex decompositions of states.

#ifndef QENT_STATES_HPP
#define QENT_STATES_HPP

#include <cstdint>
#include <vector>

#include "qent/core.hpp"
#include "qent/matrices.hpp"

namespace qent {

/// Hermitian, positive semidefinite, unit-trace matrix. Only constructible
/// through validate_density.
class DensityOperator {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

  EigenSystem<Real> eigensystem() const { return eig_hermitian(matrix_); }
  /// Ascending eigenvalues with round-off negatives clipped to zero.
  RealVector spectrum() const;
  /// Number of eigenvalues above tol::kRangeCutoff.
  Index rank() const;

 private:
  explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
  friend DensityOperator validate_density(const ComplexMatrix& m, Real tolerance);

  ComplexMatrix matrix_;
};

/// Checks the density-operator invariants (in that order: Hermitian,
/// positive, unit trace) to `tolerance`. Eigenvalues in [-tolerance, 0) are
/// clipped and a trace drift within tolerance is renormalized away.
DensityOperator validate_density(const ComplexMatrix& m, Real tolerance = tol::kStrict);

class PureState {
 public:
  /// Throws NotUnitNorm unless |norm - 1| <= 1e-10.
  explicit PureState(ComplexVector v);
  /// Normalizes any nonzero vector.
  static PureState normalized(const ComplexVector& v);

  const ComplexVector& vector() const noexcept { return vector_; }
  Index dim() const noexcept { return vector_.size(); }
  DensityOperator density() const;

 private:
  ComplexVector vector_;
};

/// sum_i weights[i] * components[i]
struct Decomposition {
  std::vector<Real> weights;
  std::vector<DensityOperator> components;

  ComplexMatrix reconstruct() const;
};

/// Spectral (Schatten) decomposition; zero-weight terms are dropped. Weights
/// come out in descending order.
Decomposition schatten(const DensityOperator& d);

/// Shannon entropy of the decomposition weights, in nats.
Real mixing_entropy(const Decomposition& dec);

/// Decomposition of d into `count` pure states. For count == rank this is a
/// seeded permutation of the Schatten decomposition; for larger counts the
/// weighted eigenvectors sqrt(lambda_i)|phi_i> are mixed by a Haar random
/// count x rank isometry.
Decomposition random_pure_decomposition(const DensityOperator& d, Index count,
                                        std::uint64_t seed);

/// G G^dagger / Tr(G G^dagger) with G a dim x dim complex Ginibre matrix drawn
/// from Rng(seed). Requires 2 <= dim <= 64.
DensityOperator random_density(Index dim, std::uint64_t seed);

}  // namespace qent

#endif  // QENT_STATES_HPP
