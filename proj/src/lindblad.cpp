#include "qent/lindblad.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qent/entropy.hpp"
#include "qent/random.hpp"

namespace qent {

SectorSpace::SectorSpace(std::vector<Index> block_dims) : block_dims_(std::move(block_dims)) {
  if (block_dims_.empty()) throw Error(ErrorKind::BadDimension, "no sectors");
  for (Index b : block_dims_) {
    if (b < 1) throw Error(ErrorKind::BadDimension, "sector dimensions must be positive");
    dim_ += b;
  }
}

Index SectorSpace::sector_of(Index i) const {
  Index offset = 0;
  for (std::size_t b = 0; b < block_dims_.size(); ++b) {
    offset += block_dims_[b];
    if (i < offset) return static_cast<Index>(b);
  }
  throw Error(ErrorKind::DimensionMismatch, "index outside the sector space");
}

Real SectorSpace::cross_sector_norm(const ComplexMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "operator does not act on the sector space");
  }
  Real worst = 0;
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j)
      if (sector_of(i) != sector_of(j)) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

ComplexMatrix observed_entropy_matrix(const OperationalPartition& w, const DensityOperator& d) {
  if (w.dim() != d.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "partition and state differ in dimension");
  }
  const auto n = static_cast<Index>(w.size());
  ComplexMatrix m(n, n);
  std::vector<ComplexMatrix> right;
  for (const auto& v : w.kraus()) right.push_back(v * d.matrix());
  // Tr(D V_i^dagger V_j) = sum of conj(V_i) .* (V_j D)
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = w.kraus()[i].conjugate().cwiseProduct(right[j]).sum();
  return m;
}

Real observed_entropy(const OperationalPartition& w, const DensityOperator& d) {
  const ComplexMatrix m = observed_entropy_matrix(w, d);
  const Real defect = hermiticity_defect(m);
  if (defect > tol::kOperational) {
    throw Error(ErrorKind::MatrixNotPsd,
                "observed-entropy matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const auto eig = eig_hermitian((m + m.adjoint()) / 2);
  const Real smallest = eig.values.minCoeff();
  const Real trace = eig.values.sum();
  if (smallest < -tol::kOperational || std::abs(trace - 1) > tol::kOperational) {
    throw Error(ErrorKind::MatrixNotPsd, "observed-entropy matrix has eigenvalue " +
                                             std::to_string(smallest) + " and trace " +
                                             std::to_string(trace));
  }
  const RealVector values = eig.values.cwiseMax(Real(0));
  return shannon_unchecked(std::span<const Real>(values.data(), values.size()));
}

bool is_state_invariant(const OperationalPartition& w, const DensityOperator& d) {
  const DensityOperator image = apply_schrodinger(w, d);
  return max_abs(image.matrix() - d.matrix()) <= tol::kOperational;
}

namespace {

// Canonical elements sqrt(lambda_k)|psi_k><psi_l| over the support of the
// eigen data (vectors as columns of `basis`), plus the projector onto the
// rest of `span` when the support is smaller.
void append_canonical(const RealVector& values, const ComplexMatrix& basis,
                      const ComplexMatrix& span, std::vector<ComplexMatrix>& out) {
  std::vector<Index> support;
  for (Index i = 0; i < values.size(); ++i)
    if (values(i) > tol::kRangeCutoff) support.push_back(i);
  ComplexMatrix support_projection = ComplexMatrix::Zero(span.rows(), span.cols());
  for (Index k : support) {
    support_projection += projector(basis.col(k));
    for (Index l : support) {
      out.push_back(std::sqrt(values(k)) * basis.col(k) * basis.col(l).adjoint());
    }
  }
  const ComplexMatrix kernel = span - support_projection;
  if (max_abs(kernel) > tol::kOperational) out.push_back(kernel);
}

// Unitary commuting with d: independent Haar blocks on each eigenspace.
ComplexMatrix commuting_unitary(const EigenSystem<Real>& eig, Rng& rng) {
  const Index dim = eig.values.size();
  ComplexMatrix inner = ComplexMatrix::Zero(dim, dim);
  Index start = 0;
  while (start < dim) {
    Index stop = start + 1;
    while (stop < dim && eig.values(stop) - eig.values(start) <= tol::kRangeCutoff) ++stop;
    inner.block(start, start, stop - start, stop - start) = haar_unitary(stop - start, rng);
    start = stop;
  }
  return eig.vectors * inner * eig.vectors.adjoint();
}

}  // namespace

OperationalPartition canonical_partition(const DensityOperator& d) {
  const auto eig = d.eigensystem();
  std::vector<ComplexMatrix> kraus;
  append_canonical(eig.values, eig.vectors, ComplexMatrix::Identity(d.dim(), d.dim()), kraus);
  return OperationalPartition(std::move(kraus));
}

LindbladBound lindblad_lower_bound(const DensityOperator& d, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::DomainError, "lindblad_lower_bound needs trials >= 1");
  const auto eig = d.eigensystem();
  const OperationalPartition canonical = canonical_partition(d);
  const OperationalPartition pinching =
      OperationalPartition::from_basis(PinchingBasis(eig.vectors));

  LindbladBound bound{};
  bound.two_s = 2 * von_neumann(d);
  bound.canonical_value = observed_entropy(canonical, d);
  bound.pinching_value = observed_entropy(pinching, d);
  bound.lower_bound = std::max(bound.canonical_value, bound.pinching_value);

  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    // convex mixture of the canonical and pinching families ...
    const Real p = rng.uniform();
    std::vector<ComplexMatrix> family;
    for (const auto& v : canonical.kraus()) family.push_back(std::sqrt(p) * v);
    for (const auto& v : pinching.kraus()) family.push_back(std::sqrt(1 - p) * v);
    // ... conjugated by a unitary commuting with d ...
    const ComplexMatrix u = commuting_unitary(eig, rng);
    for (auto& v : family) v = u * v * u.adjoint();
    // ... and recombined by a Haar unitary on the element index.
    const auto count = static_cast<Index>(family.size());
    const ComplexMatrix mixing = haar_unitary(count, rng);
    std::vector<ComplexMatrix> kraus;
    for (Index a = 0; a < count; ++a) {
      ComplexMatrix v = ComplexMatrix::Zero(d.dim(), d.dim());
      for (Index i = 0; i < count; ++i) v += mixing(a, i) * family[static_cast<std::size_t>(i)];
      kraus.push_back(std::move(v));
    }
    if (partition_defect(kraus) > tol::kOperational) continue;
    const OperationalPartition sample(std::move(kraus));
    if (!is_state_invariant(sample, d)) continue;
    const Real value = observed_entropy(sample, d);
    bound.sampled_values.push_back(value);
    bound.lower_bound = std::max(bound.lower_bound, value);
  }
  return bound;
}

Real sector_example_formula(Real l1, Real l2, Real l3) {
  const Real sum = l1 + l2 + l3;
  if (l1 < 0 || l2 < 0 || l3 < 0 || std::abs(sum - 1) > 1e-12) {
    throw Error(ErrorKind::NotAProbabilityVector,
                "sector weights must be a probability triple, got sum " + std::to_string(sum));
  }
  return 2 * (eta(l1) + eta(l2) + eta(l3)) + eta(l1 + l2) + eta(sum);
}

Real sector_observed_entropy(const OperationalPartition& w, const DensityOperator& d,
                             const SectorSpace& sectors) {
  const Real state_leak = sectors.cross_sector_norm(d.matrix());
  if (state_leak > tol::kStrict) {
    throw Error(ErrorKind::SectorViolation,
                "state has cross-sector element " + std::to_string(state_leak));
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Real leak = sectors.cross_sector_norm(w.kraus()[i]);
    if (leak > tol::kStrict) {
      throw Error(ErrorKind::SectorViolation, "partition element " + std::to_string(i) +
                                                  " has cross-sector element " +
                                                  std::to_string(leak));
    }
  }
  return observed_entropy(w, d);
}

OperationalPartition sector_canonical_partition(const DensityOperator& d,
                                                const SectorSpace& sectors) {
  if (sectors.cross_sector_norm(d.matrix()) > tol::kStrict) {
    throw Error(ErrorKind::SectorViolation, "state is not block diagonal");
  }
  std::vector<ComplexMatrix> kraus;
  Index offset = 0;
  for (Index block : sectors.block_dims()) {
    ComplexMatrix span = ComplexMatrix::Zero(d.dim(), d.dim());
    span.block(offset, offset, block, block).setIdentity();
    const ComplexMatrix restricted = d.matrix().block(offset, offset, block, block);
    const Real weight = restricted.trace().real();
    if (weight <= tol::kRangeCutoff) {
      kraus.push_back(span);
    } else {
      const auto eig = eig_hermitian(restricted / weight);
      ComplexMatrix embedded = ComplexMatrix::Zero(d.dim(), block);
      embedded.middleRows(offset, block) = eig.vectors;
      append_canonical(eig.values.cwiseMax(Real(0)), embedded, span, kraus);
    }
    offset += block;
  }
  return OperationalPartition(std::move(kraus));
}

}  // namespace qent
