// Noiseless quantum channel: pure-state ensembles, POVM read-out, the induced
// classical channel and its mutual information against the entropy bound.

#ifndef QENT_CAPACITY_HPP
#define QENT_CAPACITY_HPP

#include <cstdint>
#include <vector>

#include "qent/core.hpp"
#include "qent/entropy.hpp"
#include "qent/states.hpp"

namespace qent {

using RealMatrix = MatrixX<Real>;

class Ensemble {
 public:
  Ensemble(ProbabilityVector weights, std::vector<PureState> states);

  const ProbabilityVector& weights() const noexcept { return weights_; }
  const std::vector<PureState>& states() const noexcept { return states_; }
  Index dim() const noexcept { return states_.front().dim(); }
  std::size_t size() const noexcept { return states_.size(); }

 private:
  ProbabilityVector weights_;
  std::vector<PureState> states_;
};

/// Positive operators summing to the identity, both to 1e-8.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> elements);
  /// Rank-one projectors onto the columns of a unitary.
  static Povm projective(const ComplexMatrix& basis);

  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  Index dim() const noexcept { return elements_.front().rows(); }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  std::vector<ComplexMatrix> elements_;
};

/// p(j, i) = probability of outcome j given message i; columns sum to one.
struct JointDistribution {
  RealMatrix conditional;
};

DensityOperator ensemble_state(const Ensemble& ens);

JointDistribution channel_matrix(const Ensemble& ens, const Povm& povm);

/// I(X;Y) in nats for the joint law lambda_i p(j|i), as H(Y) - H(Y|X).
Real mutual_information(const Ensemble& ens, const Povm& povm);

struct HolevoReport {
  Real information;
  Real entropy;  // S of the ensemble state

  bool holds(Real slack = tol::kOperational) const { return information <= entropy + slack; }
};

HolevoReport check_holevo_bound(const Ensemble& ens, const Povm& povm);

struct MeasurementOptimum {
  Povm povm;
  Real information;
};

/// Best projective measurement found by coordinate ascent over Givens
/// rotations of the measurement basis, from `restarts` Haar-random starts.
MeasurementOptimum optimize_measurement(const Ensemble& ens, int restarts, std::uint64_t seed);

}  // namespace qent

#endif  // QENT_CAPACITY_HPP
