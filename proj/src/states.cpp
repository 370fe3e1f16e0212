#include "qent/states.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qent/entropy.hpp"
#include "qent/random.hpp"

namespace qent {

RealVector DensityOperator::spectrum() const {
  return eig_hermitian(matrix_).values.cwiseMax(Real(0));
}

Index DensityOperator::rank() const {
  const RealVector values = spectrum();
  return static_cast<Index>((values.array() > tol::kRangeCutoff).count());
}

DensityOperator validate_density(const ComplexMatrix& m, Real tolerance) {
  require_square(m, "density operator");
  const Real defect = hermiticity_defect(m);
  if (defect > tolerance) {
    throw Error(ErrorKind::NotHermitian,
                "density operator deviates from its adjoint by " + std::to_string(defect));
  }
  ComplexMatrix sym = (m + m.adjoint()) / 2;
  const auto eig = eig_hermitian(sym);
  const Real smallest = eig.values.minCoeff();
  if (smallest < -tolerance) {
    throw Error(ErrorKind::NotPositive,
                "density operator has eigenvalue " + std::to_string(smallest));
  }
  const Real trace = sym.trace().real();
  if (std::abs(trace - 1) > tolerance) {
    throw Error(ErrorKind::TraceNotOne, "density operator has trace " + std::to_string(trace));
  }
  if (smallest < 0) {
    const RealVector clipped = eig.values.cwiseMax(Real(0));
    sym = eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
  }
  const Real clipped_trace = sym.trace().real();
  if (clipped_trace != 1) sym /= clipped_trace;
  return DensityOperator(std::move(sym));
}

PureState::PureState(ComplexVector v) : vector_(std::move(v)) {
  const Real norm = vector_.norm();
  if (vector_.size() == 0 || std::abs(norm - 1) > tol::kStrict) {
    throw Error(ErrorKind::NotUnitNorm, "state vector has norm " + std::to_string(norm));
  }
}

PureState PureState::normalized(const ComplexVector& v) {
  const Real norm = v.norm();
  if (!(norm > 0)) throw Error(ErrorKind::NotUnitNorm, "cannot normalize the zero vector");
  return PureState(v / norm);
}

DensityOperator PureState::density() const {
  return validate_density(projector(vector_));
}

ComplexMatrix Decomposition::reconstruct() const {
  if (components.empty()) return {};
  ComplexMatrix sum = ComplexMatrix::Zero(components.front().dim(), components.front().dim());
  for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] * components[i].matrix();
  return sum;
}

Decomposition schatten(const DensityOperator& d) {
  const auto eig = d.eigensystem();
  Decomposition dec;
  for (Index i = eig.values.size() - 1; i >= 0; --i) {
    if (eig.values(i) <= tol::kRangeCutoff) continue;
    dec.weights.push_back(eig.values(i));
    dec.components.push_back(validate_density(projector(eig.vectors.col(i))));
  }
  return dec;
}

Real mixing_entropy(const Decomposition& dec) {
  return shannon(ProbabilityVector(dec.weights));
}

Decomposition random_pure_decomposition(const DensityOperator& d, Index count,
                                        std::uint64_t seed) {
  const auto eig = d.eigensystem();
  std::vector<Index> support;
  for (Index i = eig.values.size() - 1; i >= 0; --i)
    if (eig.values(i) > tol::kRangeCutoff) support.push_back(i);
  const auto rank = static_cast<Index>(support.size());
  if (count < rank) {
    throw Error(ErrorKind::InfeasibleCount, "cannot decompose a rank-" + std::to_string(rank) +
                                                " state into " + std::to_string(count) +
                                                " pure states");
  }

  Rng rng(seed);
  Decomposition dec;
  if (count == rank) {
    // Fisher-Yates over the spectral terms
    for (Index i = rank - 1; i > 0; --i) {
      const auto j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(support[i], support[j]);
    }
    for (Index i : support) {
      dec.weights.push_back(eig.values(i));
      dec.components.push_back(validate_density(projector(eig.vectors.col(i))));
    }
    return dec;
  }

  // Columns sqrt(lambda_i) phi_i of A satisfy A A^dagger = D; any isometry U
  // gives D = sum_j psi_j psi_j^dagger with psi_j = A * conj(U.row(j)).
  ComplexMatrix weighted(d.dim(), rank);
  for (Index c = 0; c < rank; ++c)
    weighted.col(c) = std::sqrt(eig.values(support[c])) * eig.vectors.col(support[c]);
  const ComplexMatrix isometry = haar_isometry(count, rank, rng);
  Real total = 0;
  for (Index j = 0; j < count; ++j) {
    const ComplexVector psi = weighted * isometry.row(j).adjoint();
    const Real weight = psi.squaredNorm();
    if (weight <= tol::kRangeCutoff) continue;
    dec.weights.push_back(weight);
    dec.components.push_back(validate_density(projector(psi / std::sqrt(weight))));
    total += weight;
  }
  for (Real& w : dec.weights) w /= total;
  return dec;
}

DensityOperator random_density(Index dim, std::uint64_t seed) {
  if (dim < 2 || dim > 64) {
    throw Error(ErrorKind::BadDimension,
                "random_density needs 2 <= dim <= 64, got " + std::to_string(dim));
  }
  Rng rng(seed);
  const ComplexMatrix g = ginibre(dim, dim, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return validate_density(m);
}

}  // namespace qent
