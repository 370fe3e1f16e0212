// Entropy functionals (Shannon, von Neumann, trace functionals S_f), the
// multinomial counting behind them, the discrete Maxwell-Boltzmann solver and
// verifiers for mixing, subadditivity and strong subadditivity.
//
// All entropies are in nats with the Boltzmann constant set to one.

#ifndef QENT_ENTROPY_HPP
#define QENT_ENTROPY_HPP

#include <functional>
#include <span>
#include <vector>

#include "qent/core.hpp"
#include "qent/states.hpp"

namespace qent {

using RealFunction = std::function<Real(Real)>;

/// Non-negative entries summing to one within 1e-12.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<Real> probs);

  std::span<const Real> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  Real operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<Real> probs_;
};

/// Occupation numbers N_1..N_m of a macrostate.
struct Macrostate {
  std::vector<long> occupations;

  long total() const;
};

/// -t ln t, continuously extended by 0 at t = 0. DomainError for t < 0.
Real eta(Real t);

/// -p ln p - (1-p) ln(1-p)
Real binary_entropy(Real p);

Real shannon(const ProbabilityVector& p);
/// Shannon entropy of unnormalized non-negative weights, no validation.
Real shannon_unchecked(std::span<const Real> weights);

Real von_neumann(const DensityOperator& d);

/// Tr f(D) = sum_i f(lambda_i).
Real s_f(const DensityOperator& d, const RealFunction& f);

/// ln(N! / (N_1! ... N_m!)) as a sum of logarithms.
Real log_multinomial(const Macrostate& ms);

/// |(1/N) ln W - H(N_i/N)|, the remainder of the Stirling estimate.
Real stirling_gap(const Macrostate& ms);

struct MaxwellBoltzmann {
  ProbabilityVector probs;
  Real lambda;  // Lagrange multiplier of the energy constraint
};

/// Entropy maximizer over level populations subject to sum_i p_i E_i = e.
/// Levels must be strictly increasing and E_1 < e < E_m.
MaxwellBoltzmann maxwell_boltzmann(std::span<const Real> levels, Real e);

/// Returns |S(lam d1 + (1-lam) d2) - lam S(d1) - (1-lam) S(d2) - h(lam)|.
/// The supports of d1 and d2 must be orthogonal.
Real check_mixing_law(const DensityOperator& d1, const DensityOperator& d2, Real lam);

struct SubadditivityReport {
  Real joint;
  Real first;
  Real second;

  bool holds(Real slack = tol::kOperational) const { return joint <= first + second + slack; }
};

SubadditivityReport check_subadditivity(const DensityOperator& d12, FactorDims dims);

struct TripartiteDims {
  Index first;
  Index second;
  Index third;
};

struct StrongSubadditivityReport {
  Real s123;
  Real s12;
  Real s23;
  Real s2;

  bool holds(Real slack = tol::kOperational) const { return s123 + s2 <= s12 + s23 + slack; }
};

StrongSubadditivityReport check_ssa(const DensityOperator& d123, TripartiteDims dims);

namespace detail {
/// Solves sum_i E_i exp(-beta E_i) / Z = e for beta. Energies need not be
/// sorted or distinct; requires min E < e < max E.
Real solve_inverse_temperature(std::span<const Real> energies, Real e);
/// exp(-beta E_i) / Z with the largest exponent shifted to zero.
std::vector<Real> boltzmann_weights(std::span<const Real> energies, Real beta);
}  // namespace detail

}  // namespace qent

#endif  // QENT_ENTROPY_HPP
