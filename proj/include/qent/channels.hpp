// Measurement conditional expectations (pinchings), operational partitions
// of unity in both pictures, and measurement steering of a pure state.

#ifndef QENT_CHANNELS_HPP
#define QENT_CHANNELS_HPP

#include <span>
#include <vector>

#include "qent/core.hpp"
#include "qent/entropy.hpp"
#include "qent/states.hpp"

namespace qent {

/// Orthonormal basis stored as the columns of a unitary matrix.
class PinchingBasis {
 public:
  /// Throws NotOrthonormal unless the Gram matrix is I to 1e-10.
  explicit PinchingBasis(ComplexMatrix columns);
  static PinchingBasis computational(Index dim);

  const ComplexMatrix& vectors() const noexcept { return vectors_; }
  Index dim() const noexcept { return vectors_.rows(); }

 private:
  ComplexMatrix vectors_;
};

/// Kraus family (V_1..V_n) with sum_i V_i^dagger V_i = I to 1e-8.
class OperationalPartition {
 public:
  explicit OperationalPartition(std::vector<ComplexMatrix> kraus);
  /// Rank-one projectors onto the basis vectors.
  static OperationalPartition from_basis(const PinchingBasis& basis);

  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  Index dim() const noexcept { return kraus_.front().rows(); }
  std::size_t size() const noexcept { return kraus_.size(); }

 private:
  std::vector<ComplexMatrix> kraus_;
};

/// Largest entry of |sum_i V_i^dagger V_i - I|.
Real partition_defect(std::span<const ComplexMatrix> kraus);

/// T -> sum_i <psi_i|T|psi_i> |psi_i><psi_i|
ComplexMatrix pinch(const ComplexMatrix& t, const PinchingBasis& basis);

/// T -> sum_i P_i T P_i for pairwise orthogonal projections summing to I.
ComplexMatrix pinch_projective(const ComplexMatrix& t, std::span<const ComplexMatrix> projections);

/// D -> sum_i V_i D V_i^dagger
DensityOperator apply_schrodinger(const OperationalPartition& w, const DensityOperator& d);

/// A -> sum_i V_i^dagger A V_i
ComplexMatrix apply_heisenberg(const OperationalPartition& w, const ComplexMatrix& a);

struct MonotonicityReport {
  Real before;  // S_f(D)
  Real after;   // S_f(E(D))

  bool holds(Real slack = tol::kOperational) const { return before <= after + slack; }
};

MonotonicityReport check_monotonicity(const DensityOperator& d, const PinchingBasis& basis,
                                      const RealFunction& f);

/// Completes v to an orthonormal basis with v as the first column. The
/// standard basis vector with the largest overlap with v is dropped and the
/// rest are Gram-Schmidt orthonormalized against v in index order.
PinchingBasis extend_to_basis(const ComplexVector& v);

/// The k states E_n(...E_1(|phi1><phi1|)...), n = 1..k, where E_n pinches in a
/// basis extending cos(pi n / 2k)|phi1> + sin(pi n / 2k)|phi2>.
std::vector<DensityOperator> steering_sequence(const PureState& phi1, const PureState& phi2,
                                               int k);

/// <phi|rho|phi>
Real fidelity(const DensityOperator& rho, const PureState& phi);

}  // namespace qent

#endif  // QENT_CHANNELS_HPP
