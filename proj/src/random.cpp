#include "qent/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qent {

Real Rng::uniform() {
  return static_cast<Real>(engine_() >> 11) * 0x1.0p-53;
}

Real Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  Real u1 = uniform();
  while (u1 == 0) u1 = uniform();
  const Real u2 = uniform();
  const Real radius = std::sqrt(-2 * std::log(u1));
  const Real angle = 2 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const Real re = normal();
  const Real im = normal();
  return {re * std::numbers::sqrt2 / 2, im * std::numbers::sqrt2 / 2};
}

std::uint64_t Rng::below(std::uint64_t n) {
  // rejection sampling keeps the result unbiased
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

ComplexMatrix ginibre(Index rows, Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix haar_isometry(Index rows, Index cols, Rng& rng) {
  const ComplexMatrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix& r = qr.matrixQR();
  for (Index j = 0; j < cols; ++j) {
    const Real magnitude = std::abs(r(j, j));
    if (magnitude > 0) q.col(j) *= r(j, j) / magnitude;
  }
  return q;
}

ComplexMatrix haar_unitary(Index dim, Rng& rng) {
  return haar_isometry(dim, dim, rng);
}

ComplexVector random_unit_vector(Index dim, Rng& rng) {
  ComplexVector v = ginibre(dim, 1, rng);
  return v / v.norm();
}

ComplexMatrix random_hermitian(Index dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  return (g + g.adjoint()) / 2;
}

}  // namespace qent
