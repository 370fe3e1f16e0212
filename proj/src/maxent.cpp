#include "qent/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qent/entropy.hpp"

namespace qent {

Hamiltonian::Hamiltonian(ComplexMatrix m) : matrix_(std::move(m)) {
  require_hermitian(matrix_, tol::kStrict, "Hamiltonian");
  matrix_ = (matrix_ + matrix_.adjoint()) / 2;
}

namespace {

Index checked_power(Index base, Index exponent) {
  Index result = 1;
  for (Index i = 0; i < exponent; ++i) {
    result *= base;
    if (result > kDefaultDimensionCap) {
      throw Error(ErrorKind::DimensionOverflow,
                  std::to_string(base) + "^" + std::to_string(exponent) + " exceeds cap " +
                      std::to_string(kDefaultDimensionCap));
    }
  }
  return result;
}

DensityOperator spectral_state(const EigenSystem<Real>& eig, Real beta) {
  const std::vector<Real> energies(eig.values.data(), eig.values.data() + eig.values.size());
  const auto weights = detail::boltzmann_weights(energies, beta);
  const RealVector w = Eigen::Map<const RealVector>(weights.data(), eig.values.size());
  return validate_density(eig.vectors * w.asDiagonal() * eig.vectors.adjoint());
}

}  // namespace

void ChainSpec::validate() const {
  if (site_dim < 2 || length < 1) {
    throw Error(ErrorKind::BadDimension, "chain needs site_dim >= 2 and length >= 1");
  }
  checked_power(site_dim, length);
  if (site_term.rows() != site_dim || coupling_term.rows() != site_dim * site_dim) {
    throw Error(ErrorKind::DimensionMismatch, "chain terms do not match site_dim " +
                                                  std::to_string(site_dim));
  }
  require_hermitian(site_term, tol::kStrict, "site term");
  require_hermitian(coupling_term, tol::kStrict, "coupling term");
}

DensityOperator gibbs_state(const Hamiltonian& h, Real beta) {
  if (!std::isfinite(beta)) throw Error(ErrorKind::DomainError, "beta must be finite");
  return spectral_state(eig_hermitian(h.matrix()), beta);
}

MaxEntropyState max_entropy_state(const Hamiltonian& h, Real e) {
  const auto eig = eig_hermitian(h.matrix());
  const std::vector<Real> energies(eig.values.data(), eig.values.data() + eig.values.size());
  const Real beta = detail::solve_inverse_temperature(energies, e);
  return {spectral_state(eig, beta), beta};
}

Real free_energy(const DensityOperator& d, const Hamiltonian& h, Real beta) {
  if (!(beta > 0)) throw Error(ErrorKind::DomainError, "free energy needs beta > 0");
  if (d.dim() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "state and Hamiltonian");
  return (d.matrix() * h.matrix()).trace().real() - von_neumann(d) / beta;
}

Hamiltonian build_chain(const ChainSpec& spec) {
  spec.validate();
  const Index dim = checked_power(spec.site_dim, spec.length);
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Index n = 0; n < spec.length; ++n) {
    const ComplexMatrix left = ComplexMatrix::Identity(checked_power(spec.site_dim, n),
                                                       checked_power(spec.site_dim, n));
    const Index right_dim = checked_power(spec.site_dim, spec.length - n - 1);
    h += kron(kron(left, spec.site_term), ComplexMatrix::Identity(right_dim, right_dim));
    if (n + 1 < spec.length) {
      const Index tail = checked_power(spec.site_dim, spec.length - n - 2);
      h += kron(kron(left, spec.coupling_term), ComplexMatrix::Identity(tail, tail));
    }
  }
  return Hamiltonian(std::move(h));
}

bool EntropyDensityProfile::fekete_holds() const {
  return std::all_of(fekete.begin(), fekete.end(), [](const FeketeCheck& c) { return c.holds(); });
}

EntropyDensityProfile entropy_density_profile(const ChainSpec& spec, Real beta, Index up_to) {
  if (up_to < 1) throw Error(ErrorKind::BadDimension, "profile needs up_to >= 1");
  ChainSpec chain = spec;
  chain.length = up_to;
  const DensityOperator gibbs = gibbs_state(build_chain(chain), beta);

  EntropyDensityProfile profile;
  const Index total = gibbs.dim();
  for (Index n = 1; n <= up_to; ++n) {
    const Index kept = checked_power(spec.site_dim, n);
    const Real s = n == up_to
                       ? von_neumann(gibbs)
                       : von_neumann(validate_density(
                             partial_trace(gibbs.matrix(), {kept, total / kept}, Keep::First)));
    profile.block_entropies.push_back(s);
    profile.densities.emplace_back(n, s / static_cast<Real>(n));
  }
  const auto& s = profile.block_entropies;
  for (Index m = 1; m < up_to; ++m)
    for (Index n = 1; m + n <= up_to; ++n)
      profile.fekete.push_back({m, n, s[m + n - 1], s[m - 1] + s[n - 1]});
  return profile;
}

}  // namespace qent
