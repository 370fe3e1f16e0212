#include "qent/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qent {

PinchingBasis::PinchingBasis(ComplexMatrix columns) : vectors_(std::move(columns)) {
  require_square(vectors_, "pinching basis");
  const Real defect =
      max_abs(vectors_.adjoint() * vectors_ - ComplexMatrix::Identity(dim(), dim()));
  if (defect > tol::kStrict) {
    throw Error(ErrorKind::NotOrthonormal,
                "basis Gram matrix deviates from identity by " + std::to_string(defect));
  }
}

PinchingBasis PinchingBasis::computational(Index dim) {
  return PinchingBasis(ComplexMatrix::Identity(dim, dim));
}

Real partition_defect(std::span<const ComplexMatrix> kraus) {
  const Index dim = kraus.front().rows();
  ComplexMatrix sum = -ComplexMatrix::Identity(dim, dim);
  for (const auto& v : kraus) sum += v.adjoint() * v;
  return max_abs(sum);
}

OperationalPartition::OperationalPartition(std::vector<ComplexMatrix> kraus)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorKind::NotAPartition, "empty operational partition");
  for (const auto& v : kraus_) {
    require_square(v, "partition element");
    if (v.rows() != kraus_.front().rows()) {
      throw Error(ErrorKind::DimensionMismatch, "partition elements differ in dimension");
    }
  }
  const Real defect = partition_defect(kraus_);
  if (defect > tol::kOperational) {
    throw Error(ErrorKind::NotAPartition,
                "sum of V^dagger V deviates from identity by " + std::to_string(defect));
  }
}

OperationalPartition OperationalPartition::from_basis(const PinchingBasis& basis) {
  std::vector<ComplexMatrix> kraus;
  for (Index i = 0; i < basis.dim(); ++i) kraus.push_back(projector(basis.vectors().col(i)));
  return OperationalPartition(std::move(kraus));
}

namespace {

void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": dims " + std::to_string(a) +
                                                  " and " + std::to_string(b));
  }
}

}  // namespace

ComplexMatrix pinch(const ComplexMatrix& t, const PinchingBasis& basis) {
  require_square(t, "operator");
  require_same_dim(t.rows(), basis.dim(), "pinch");
  const ComplexMatrix& v = basis.vectors();
  const ComplexVector diagonal = (v.adjoint() * t * v).diagonal();
  return v * diagonal.asDiagonal() * v.adjoint();
}

ComplexMatrix pinch_projective(const ComplexMatrix& t,
                               std::span<const ComplexMatrix> projections) {
  require_square(t, "operator");
  if (projections.empty()) throw Error(ErrorKind::NotAProjectionFamily, "no projections");
  const Index dim = t.rows();
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < projections.size(); ++i) {
    const auto& p = projections[i];
    require_same_dim(p.rows(), dim, "pinch_projective");
    require_square(p, "projection");
    const Real defect = std::max(hermiticity_defect(p), max_abs(p * p - p));
    if (defect > tol::kOperational) {
      throw Error(ErrorKind::NotAProjectionFamily,
                  "element " + std::to_string(i) + " is not an orthogonal projection (defect " +
                      std::to_string(defect) + ")");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Real overlap = max_abs(p * projections[j]);
      if (overlap > tol::kOperational) {
        throw Error(ErrorKind::NotAProjectionFamily,
                    "projections " + std::to_string(j) + " and " + std::to_string(i) +
                        " are not orthogonal (overlap " + std::to_string(overlap) + ")");
      }
    }
    total += p;
  }
  const Real completeness = max_abs(total - ComplexMatrix::Identity(dim, dim));
  if (completeness > tol::kOperational) {
    throw Error(ErrorKind::NotAProjectionFamily,
                "projections sum to identity only within " + std::to_string(completeness));
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& p : projections) out += p * t * p;
  return out;
}

DensityOperator apply_schrodinger(const OperationalPartition& w, const DensityOperator& d) {
  require_same_dim(w.dim(), d.dim(), "apply_schrodinger");
  ComplexMatrix out = ComplexMatrix::Zero(d.dim(), d.dim());
  for (const auto& v : w.kraus()) out += v * d.matrix() * v.adjoint();
  return validate_density(out, tol::kOperational);
}

ComplexMatrix apply_heisenberg(const OperationalPartition& w, const ComplexMatrix& a) {
  require_square(a, "observable");
  require_same_dim(w.dim(), a.rows(), "apply_heisenberg");
  ComplexMatrix out = ComplexMatrix::Zero(a.rows(), a.rows());
  for (const auto& v : w.kraus()) out += v.adjoint() * a * v;
  return out;
}

MonotonicityReport check_monotonicity(const DensityOperator& d, const PinchingBasis& basis,
                                      const RealFunction& f) {
  const DensityOperator pinched = validate_density(pinch(d.matrix(), basis));
  return {s_f(d, f), s_f(pinched, f)};
}

PinchingBasis extend_to_basis(const ComplexVector& v) {
  const Index dim = v.size();
  const ComplexVector lead = v / v.norm();
  Index dropped = 0;
  for (Index i = 1; i < dim; ++i)
    if (std::abs(lead(i)) > std::abs(lead(dropped))) dropped = i;

  ComplexMatrix basis(dim, dim);
  basis.col(0) = lead;
  Index filled = 1;
  for (Index i = 0; i < dim; ++i) {
    if (i == dropped) continue;
    ComplexVector candidate = ComplexVector::Unit(dim, i);
    // two Gram-Schmidt passes for orthogonality at round-off level
    for (int pass = 0; pass < 2; ++pass)
      for (Index c = 0; c < filled; ++c)
        candidate -= basis.col(c).dot(candidate) * basis.col(c);
    basis.col(filled++) = candidate / candidate.norm();
  }
  return PinchingBasis(std::move(basis));
}

std::vector<DensityOperator> steering_sequence(const PureState& phi1, const PureState& phi2,
                                               int k) {
  require_same_dim(phi1.dim(), phi2.dim(), "steering_sequence");
  if (k < 1) throw Error(ErrorKind::DomainError, "steering needs k >= 1");
  const Real overlap = std::abs(phi1.vector().dot(phi2.vector()));
  if (overlap > tol::kStrict) {
    throw Error(ErrorKind::NotOrthogonal, "steering endpoints overlap by " +
                                              std::to_string(overlap));
  }
  std::vector<DensityOperator> states;
  states.reserve(static_cast<std::size_t>(k));
  ComplexMatrix current = projector(phi1.vector());
  for (int n = 1; n <= k; ++n) {
    const Real angle = std::numbers::pi * n / (2.0 * k);
    const ComplexVector psi = std::cos(angle) * phi1.vector() + std::sin(angle) * phi2.vector();
    current = pinch(current, extend_to_basis(psi));
    states.push_back(validate_density(current));
    current = states.back().matrix();
  }
  return states;
}

Real fidelity(const DensityOperator& rho, const PureState& phi) {
  require_same_dim(rho.dim(), phi.dim(), "fidelity");
  return phi.vector().dot(rho.matrix() * phi.vector()).real();
}

}  // namespace qent
