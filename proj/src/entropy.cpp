#include "qent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qent {

ProbabilityVector::ProbabilityVector(std::vector<Real> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw Error(ErrorKind::NotAProbabilityVector, "empty probability vector");
  Real sum = 0;
  for (Real p : probs_) {
    if (!(p >= 0) || !std::isfinite(p)) {
      throw Error(ErrorKind::NotAProbabilityVector, "entry " + std::to_string(p) + " is negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1) > 1e-12) {
    throw Error(ErrorKind::NotAProbabilityVector,
                "entries sum to " + std::to_string(sum) + ", not 1");
  }
}

long Macrostate::total() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0L);
}

Real eta(Real t) {
  if (t < 0) throw Error(ErrorKind::DomainError, "eta undefined at " + std::to_string(t));
  return t == 0 ? Real(0) : -t * std::log(t);
}

Real binary_entropy(Real p) {
  if (p < 0 || p > 1) {
    throw Error(ErrorKind::DomainError, "binary entropy undefined at " + std::to_string(p));
  }
  return eta(p) + eta(1 - p);
}

Real shannon_unchecked(std::span<const Real> weights) {
  Real h = 0;
  for (Real w : weights) h += w > 0 ? -w * std::log(w) : Real(0);
  return h;
}

Real shannon(const ProbabilityVector& p) {
  return shannon_unchecked(p.probs());
}

Real von_neumann(const DensityOperator& d) {
  const RealVector values = d.spectrum();
  return shannon_unchecked(std::span<const Real>(values.data(), values.size()));
}

Real s_f(const DensityOperator& d, const RealFunction& f) {
  const RealVector values = d.spectrum();
  Real sum = 0;
  for (Real v : values) {
    const Real fv = f(std::min(v, Real(1)));
    if (!std::isfinite(fv)) {
      throw Error(ErrorKind::DomainError, "f undefined at eigenvalue " + std::to_string(v));
    }
    sum += fv;
  }
  return sum;
}

namespace {

Real log_factorial(long n) {
  Real sum = 0;
  for (long k = 2; k <= n; ++k) sum += std::log(static_cast<Real>(k));
  return sum;
}

void require_macrostate(const Macrostate& ms) {
  if (ms.occupations.empty()) throw Error(ErrorKind::DomainError, "empty macrostate");
  for (long n : ms.occupations) {
    if (n < 0) throw Error(ErrorKind::DomainError, "negative occupation number");
  }
  if (ms.total() < 1) throw Error(ErrorKind::DomainError, "macrostate needs N >= 1");
}

}  // namespace

Real log_multinomial(const Macrostate& ms) {
  require_macrostate(ms);
  Real value = log_factorial(ms.total());
  for (long n : ms.occupations) value -= log_factorial(n);
  return value;
}

Real stirling_gap(const Macrostate& ms) {
  const Real total = static_cast<Real>(ms.total());
  const Real per_particle = log_multinomial(ms) / total;
  std::vector<Real> freqs;
  for (long n : ms.occupations) freqs.push_back(static_cast<Real>(n) / total);
  return std::abs(per_particle - shannon_unchecked(freqs));
}

namespace detail {

std::vector<Real> boltzmann_weights(std::span<const Real> energies, Real beta) {
  Real shift = -std::numeric_limits<Real>::infinity();
  for (Real energy : energies) shift = std::max(shift, -beta * energy);
  std::vector<Real> weights;
  weights.reserve(energies.size());
  Real z = 0;
  for (Real energy : energies) {
    weights.push_back(std::exp(-beta * energy - shift));
    z += weights.back();
  }
  for (Real& w : weights) w /= z;
  return weights;
}

Real solve_inverse_temperature(std::span<const Real> energies, Real e) {
  const auto [lo_it, hi_it] = std::minmax_element(energies.begin(), energies.end());
  if (energies.empty() || !(*lo_it < e && e < *hi_it)) {
    throw Error(ErrorKind::ConstraintOutOfRange,
                "energy " + std::to_string(e) + " outside the open spectral range");
  }
  const Real scale = std::max(Real(1), *hi_it - *lo_it);
  // mean energy minus target, strictly decreasing in beta
  auto residual = [&](Real beta) {
    const auto w = boltzmann_weights(energies, beta);
    Real mean = 0;
    for (std::size_t i = 0; i < w.size(); ++i) mean += w[i] * energies[i];
    return mean - e;
  };

  Real lo = -1;
  Real hi = 1;
  Real f_lo = residual(lo);
  Real f_hi = residual(hi);
  for (int doubling = 0; f_hi > 0; ++doubling) {
    if (doubling > 1000) throw Error(ErrorKind::NoConvergence, "no upper bracket for beta");
    lo = hi;
    f_lo = f_hi;
    hi *= 2;
    f_hi = residual(hi);
  }
  for (int doubling = 0; f_lo < 0; ++doubling) {
    if (doubling > 1000) throw Error(ErrorKind::NoConvergence, "no lower bracket for beta");
    hi = lo;
    f_hi = f_lo;
    lo *= 2;
    f_lo = residual(lo);
  }
  if (f_lo == 0) return lo;
  if (f_hi == 0) return hi;

  // Illinois-modified regula falsi, with a bisection step whenever the
  // bracket fails to halve.
  Real best = lo;
  Real f_best = f_lo;
  int stale_side = 0;
  for (int iteration = 0; iteration < 200; ++iteration) {
    const Real width = hi - lo;
    Real x = hi - f_hi * (hi - lo) / (f_hi - f_lo);
    if (!(x > lo && x < hi)) x = lo + width / 2;
    const Real fx = residual(x);
    if (std::abs(fx) < std::abs(f_best)) {
      best = x;
      f_best = fx;
    }
    if (std::abs(fx) <= 1e-15 * scale) return x;
    if (fx > 0) {
      lo = x;
      f_lo = fx;
      if (stale_side == 1) f_hi /= 2;
      stale_side = 1;
    } else {
      hi = x;
      f_hi = fx;
      if (stale_side == -1) f_lo /= 2;
      stale_side = -1;
    }
    if (hi - lo > width / 2) {
      const Real mid = lo + (hi - lo) / 2;
      const Real fm = residual(mid);
      if (std::abs(fm) < std::abs(f_best)) {
        best = mid;
        f_best = fm;
      }
      if (fm > 0) {
        lo = mid;
        f_lo = fm;
      } else {
        hi = mid;
        f_hi = fm;
      }
      stale_side = 0;
    }
    if (hi - lo <= 4 * std::numeric_limits<Real>::epsilon() * (1 + std::abs(best))) break;
  }
  if (std::abs(f_best) > tol::kStrict) {
    throw Error(ErrorKind::NoConvergence,
                "energy residual " + std::to_string(f_best) + " after 200 iterations");
  }
  return best;
}

}  // namespace detail

MaxwellBoltzmann maxwell_boltzmann(std::span<const Real> levels, Real e) {
  if (levels.size() < 2) throw Error(ErrorKind::DomainError, "need at least two levels");
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!(levels[i - 1] < levels[i])) {
      throw Error(ErrorKind::DomainError, "levels must be strictly increasing");
    }
  }
  const Real lambda = detail::solve_inverse_temperature(levels, e);
  return {ProbabilityVector(detail::boltzmann_weights(levels, lambda)), lambda};
}

namespace {

ComplexMatrix range_projection(const DensityOperator& d) {
  const auto eig = d.eigensystem();
  ComplexMatrix p = ComplexMatrix::Zero(d.dim(), d.dim());
  for (Index i = 0; i < eig.values.size(); ++i)
    if (eig.values(i) > tol::kRangeCutoff) p += projector(eig.vectors.col(i));
  return p;
}

}  // namespace

Real check_mixing_law(const DensityOperator& d1, const DensityOperator& d2, Real lam) {
  if (d1.dim() != d2.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "mixing states of different dimension");
  }
  if (!(lam > 0 && lam < 1)) {
    throw Error(ErrorKind::DomainError, "mixing weight must lie in (0,1)");
  }
  const Real overlap = (range_projection(d1) * range_projection(d2)).norm();
  if (overlap > tol::kOperational) {
    throw Error(ErrorKind::SupportsNotOrthogonal,
                "range projections overlap with norm " + std::to_string(overlap));
  }
  const DensityOperator mix = validate_density(lam * d1.matrix() + (1 - lam) * d2.matrix());
  return std::abs(von_neumann(mix) - lam * von_neumann(d1) - (1 - lam) * von_neumann(d2) -
                  binary_entropy(lam));
}

SubadditivityReport check_subadditivity(const DensityOperator& d12, FactorDims dims) {
  const auto first = validate_density(partial_trace(d12.matrix(), dims, Keep::First));
  const auto second = validate_density(partial_trace(d12.matrix(), dims, Keep::Second));
  return {von_neumann(d12), von_neumann(first), von_neumann(second)};
}

StrongSubadditivityReport check_ssa(const DensityOperator& d123, TripartiteDims dims) {
  if (dims.first < 1 || dims.second < 1 || dims.third < 1 ||
      d123.dim() != dims.first * dims.second * dims.third) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator of dim " + std::to_string(d123.dim()) + " does not factor as " +
                    std::to_string(dims.first) + "x" + std::to_string(dims.second) + "x" +
                    std::to_string(dims.third));
  }
  const ComplexMatrix d12 =
      partial_trace(d123.matrix(), {dims.first * dims.second, dims.third}, Keep::First);
  const ComplexMatrix d23 =
      partial_trace(d123.matrix(), {dims.first, dims.second * dims.third}, Keep::Second);
  const ComplexMatrix d2 = partial_trace(d12, {dims.first, dims.second}, Keep::Second);
  return {von_neumann(d123), von_neumann(validate_density(d12)),
          von_neumann(validate_density(d23)), von_neumann(validate_density(d2))};
}

}  // namespace qent
