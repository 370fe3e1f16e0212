#include "qent/capacity.hpp"

#include <cmath>
#include <string>

#include "qent/random.hpp"

namespace qent {

Ensemble::Ensemble(ProbabilityVector weights, std::vector<PureState> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
  if (states_.empty() || states_.size() != weights_.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(weights_.size()) + " weights for " +
                    std::to_string(states_.size()) + " states");
  }
  for (const auto& s : states_) {
    if (s.dim() != states_.front().dim()) {
      throw Error(ErrorKind::DimensionMismatch, "ensemble states differ in dimension");
    }
  }
}

Povm::Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorKind::NotAPovm, "empty POVM");
  const Index dim = elements_.front().rows();
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    const auto& a = elements_[j];
    require_square(a, "POVM element");
    if (a.rows() != dim) throw Error(ErrorKind::DimensionMismatch, "POVM elements differ in dim");
    const Real defect = hermiticity_defect(a);
    if (defect > tol::kOperational) {
      throw Error(ErrorKind::NotAPovm, "element " + std::to_string(j) +
                                           " is not Hermitian (defect " + std::to_string(defect) +
                                           ")");
    }
    const Real smallest = eig_hermitian((a + a.adjoint()) / 2).values.minCoeff();
    if (smallest < -tol::kOperational) {
      throw Error(ErrorKind::NotAPovm, "element " + std::to_string(j) + " has eigenvalue " +
                                           std::to_string(smallest));
    }
    total += a;
  }
  const Real completeness = max_abs(total - ComplexMatrix::Identity(dim, dim));
  if (completeness > tol::kOperational) {
    throw Error(ErrorKind::NotAPovm,
                "elements sum to identity only within " + std::to_string(completeness));
  }
}

Povm Povm::projective(const ComplexMatrix& basis) {
  std::vector<ComplexMatrix> elements;
  for (Index j = 0; j < basis.cols(); ++j) elements.push_back(projector(basis.col(j)));
  return Povm(std::move(elements));
}

DensityOperator ensemble_state(const Ensemble& ens) {
  ComplexMatrix d = ComplexMatrix::Zero(ens.dim(), ens.dim());
  for (std::size_t i = 0; i < ens.size(); ++i)
    d += ens.weights()[i] * projector(ens.states()[i].vector());
  return validate_density(d);
}

JointDistribution channel_matrix(const Ensemble& ens, const Povm& povm) {
  if (ens.dim() != povm.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "ensemble and POVM differ in dimension");
  }
  RealMatrix p(static_cast<Index>(povm.size()), static_cast<Index>(ens.size()));
  for (std::size_t i = 0; i < ens.size(); ++i) {
    const ComplexVector& psi = ens.states()[i].vector();
    for (std::size_t j = 0; j < povm.size(); ++j) {
      const Real value = psi.dot(povm.elements()[j] * psi).real();
      p(static_cast<Index>(j), static_cast<Index>(i)) = std::max(value, Real(0));
    }
  }
  return {p};
}

namespace {

Real information_from_channel(const ProbabilityVector& weights, const RealMatrix& p) {
  std::vector<Real> output(static_cast<std::size_t>(p.rows()), 0);
  Real conditional = 0;
  for (Index i = 0; i < p.cols(); ++i) {
    const Real w = weights[static_cast<std::size_t>(i)];
    std::vector<Real> column(static_cast<std::size_t>(p.rows()));
    for (Index j = 0; j < p.rows(); ++j) {
      column[static_cast<std::size_t>(j)] = p(j, i);
      output[static_cast<std::size_t>(j)] += w * p(j, i);
    }
    conditional += w * shannon_unchecked(column);
  }
  return shannon_unchecked(output) - conditional;
}

Real projective_information(const Ensemble& ens, const ComplexMatrix& basis) {
  RealMatrix p(basis.cols(), static_cast<Index>(ens.size()));
  for (std::size_t i = 0; i < ens.size(); ++i) {
    const ComplexVector amplitudes = basis.adjoint() * ens.states()[i].vector();
    p.col(static_cast<Index>(i)) = amplitudes.cwiseAbs2();
  }
  return information_from_channel(ens.weights(), p);
}

// Right-multiplies columns a, b of the basis by a 2x2 unitary; `twisted`
// selects the [c, i s; i s, c] generator instead of the real rotation.
ComplexMatrix rotate(const ComplexMatrix& basis, Index a, Index b, Real angle, bool twisted) {
  ComplexMatrix out = basis;
  const Real c = std::cos(angle);
  const Real s = std::sin(angle);
  const Complex off = twisted ? Complex(0, s) : Complex(s, 0);
  const Complex off_t = twisted ? Complex(0, s) : Complex(-s, 0);
  out.col(a) = c * basis.col(a) + off * basis.col(b);
  out.col(b) = off_t * basis.col(a) + c * basis.col(b);
  return out;
}

}  // namespace

Real mutual_information(const Ensemble& ens, const Povm& povm) {
  return information_from_channel(ens.weights(), channel_matrix(ens, povm).conditional);
}

HolevoReport check_holevo_bound(const Ensemble& ens, const Povm& povm) {
  return {mutual_information(ens, povm), von_neumann(ensemble_state(ens))};
}

MeasurementOptimum optimize_measurement(const Ensemble& ens, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw Error(ErrorKind::DomainError, "optimize_measurement needs restarts >= 1");
  const Index dim = ens.dim();
  Rng rng(seed);
  ComplexMatrix best_basis;
  Real best_value = -1;
  for (int restart = 0; restart < restarts; ++restart) {
    ComplexMatrix basis = haar_unitary(dim, rng);
    Real value = projective_information(ens, basis);
    Real step = 0.5;
    for (int sweep = 0; sweep < 20000 && step > 1e-9; ++sweep) {
      const Real start = value;
      for (Index a = 0; a < dim; ++a) {
        for (Index b = a + 1; b < dim; ++b) {
          for (bool twisted : {false, true}) {
            for (Real direction : {1.0, -1.0}) {
              // keep stepping while the objective improves
              for (;;) {
                ComplexMatrix candidate = rotate(basis, a, b, direction * step, twisted);
                const Real trial = projective_information(ens, candidate);
                if (!(trial > value)) break;
                basis = std::move(candidate);
                value = trial;
              }
            }
          }
        }
      }
      if (value - start < 1e-9) step /= 2;
    }
    if (value > best_value) {
      best_value = value;
      best_basis = basis;
    }
  }
  return {Povm::projective(best_basis), best_value};
}

}  // namespace qent
