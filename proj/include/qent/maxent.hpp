// Constrained entropy maximization: Gibbs states, the inverse temperature
// fixed by an energy constraint, the free-energy functional and entropy
// densities of finite open spin chains.

#ifndef QENT_MAXENT_HPP
#define QENT_MAXENT_HPP

#include <utility>
#include <vector>

#include "qent/core.hpp"
#include "qent/states.hpp"

namespace qent {

/// Hermitian energy operator.
class Hamiltonian {
 public:
  /// Throws NotHermitian beyond 1e-10.
  explicit Hamiltonian(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// Translation-invariant nearest-neighbour chain with open boundaries.
struct ChainSpec {
  Index site_dim = 2;
  Index length = 1;
  ComplexMatrix site_term;      // site_dim x site_dim
  ComplexMatrix coupling_term;  // site_dim^2 x site_dim^2

  /// Checks shapes, Hermiticity and site_dim^length <= 4096.
  void validate() const;
};

/// exp(-beta H) / Tr exp(-beta H)
DensityOperator gibbs_state(const Hamiltonian& h, Real beta);

struct MaxEntropyState {
  DensityOperator state;
  Real beta;
};

/// Gibbs state whose mean energy Tr(DH) equals e to 1e-10.
MaxEntropyState max_entropy_state(const Hamiltonian& h, Real e);

/// Tr(DH) - S(D)/beta. The Gibbs state at the same beta is its minimizer.
Real free_energy(const DensityOperator& d, const Hamiltonian& h, Real beta);

/// sum_n site_term(n) + sum_n coupling_term(n, n+1)
Hamiltonian build_chain(const ChainSpec& spec);

struct FeketeCheck {
  Index m;
  Index n;
  Real lhs;  // S_{m+n}
  Real rhs;  // S_m + S_n

  bool holds(Real slack = tol::kOperational) const { return lhs <= rhs + slack; }
};

struct EntropyDensityProfile {
  std::vector<std::pair<Index, Real>> densities;  // (N, S_N / N)
  std::vector<Real> block_entropies;              // S_N, N = 1..up_to
  std::vector<FeketeCheck> fekete;

  bool fekete_holds() const;
};

/// Entropy densities S_N/N of the leading N-site marginals of the
/// length-`up_to` Gibbs chain, plus the subadditivity checks S_{m+n} <= S_m + S_n.
EntropyDensityProfile entropy_density_profile(const ChainSpec& spec, Real beta, Index up_to);

}  // namespace qent

#endif  // QENT_MAXENT_HPP
