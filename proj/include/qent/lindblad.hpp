// Operational (Lindblad) entropy of a state: observed-entropy matrices of
// operational partitions, state invariance, the canonical partition attaining
// 2S(D), sampled lower bounds and superselection-sector variants.

#ifndef QENT_LINDBLAD_HPP
#define QENT_LINDBLAD_HPP

#include <cstdint>
#include <vector>

#include "qent/channels.hpp"
#include "qent/core.hpp"
#include "qent/states.hpp"

namespace qent {

/// Direct sum of blocks, e.g. {2, 3} for M_2 (+) M_3.
class SectorSpace {
 public:
  explicit SectorSpace(std::vector<Index> block_dims);

  const std::vector<Index>& block_dims() const noexcept { return block_dims_; }
  Index dim() const noexcept { return dim_; }
  /// Block index of a basis index.
  Index sector_of(Index i) const;
  /// Largest matrix element of m connecting different sectors.
  Real cross_sector_norm(const ComplexMatrix& m) const;

 private:
  std::vector<Index> block_dims_;
  Index dim_ = 0;
};

/// [Tr(D V_i^dagger V_j)]_{ij}
ComplexMatrix observed_entropy_matrix(const OperationalPartition& w, const DensityOperator& d);

/// Von Neumann entropy of observed_entropy_matrix. Throws MatrixNotPsd when
/// that matrix is not a unit-trace PSD matrix to 1e-8.
Real observed_entropy(const OperationalPartition& w, const DensityOperator& d);

bool is_state_invariant(const OperationalPartition& w, const DensityOperator& d);

/// V_kl = sqrt(lambda_k) |psi_k><psi_l| over the eigensystem of d. For a
/// rank-deficient d the indices run over the support only and the projector
/// onto the kernel is appended as one extra element, which keeps the family a
/// partition of unity without touching the observed entropy.
OperationalPartition canonical_partition(const DensityOperator& d);

struct LindbladBound {
  Real lower_bound;
  Real two_s;
  Real canonical_value;
  Real pinching_value;
  std::vector<Real> sampled_values;

  std::size_t samples_kept() const noexcept { return sampled_values.size(); }
};

/// Maximum observed entropy over the canonical partition, the eigenbasis
/// pinching and `trials` seeded random state-invariant partitions.
LindbladBound lindblad_lower_bound(const DensityOperator& d, int trials, std::uint64_t seed);

/// -2 sum_i l_i ln l_i - (l1+l2) ln(l1+l2) - (l1+l2+l3) ln(l1+l2+l3)
Real sector_example_formula(Real l1, Real l2, Real l3);

/// observed_entropy after checking that d and every V_i are block diagonal.
Real sector_observed_entropy(const OperationalPartition& w, const DensityOperator& d,
                             const SectorSpace& sectors);

/// Union over sectors of the canonical partitions of the normalized
/// restrictions of d; d must be block diagonal and full rank.
OperationalPartition sector_canonical_partition(const DensityOperator& d,
                                                const SectorSpace& sectors);

}  // namespace qent

#endif  // QENT_LINDBLAD_HPP
