// Seeded sampling of Gaussian matrices, Haar unitaries and pure states.
//
// Uniform variates are the top 53 bits of std::mt19937_64 scaled to [0,1);
// normal variates come from the Box-Muller transform of two uniforms. Both are
// written out here rather than taken from <random> distributions so streams
// are identical across standard library implementations.

#ifndef QENT_RANDOM_HPP
#define QENT_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qent/core.hpp"

namespace qent {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Real uniform();
  Real normal();
  /// Standard complex Gaussian: real and imaginary parts each N(0, 1/2).
  Complex complex_normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  Real spare_ = 0;
};

/// rows x cols matrix of i.i.d. standard complex Gaussians.
ComplexMatrix ginibre(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q.
ComplexMatrix haar_unitary(Index dim, Rng& rng);

/// rows x cols matrix with orthonormal columns (rows >= cols), Haar distributed.
ComplexMatrix haar_isometry(Index rows, Index cols, Rng& rng);

ComplexVector random_unit_vector(Index dim, Rng& rng);

/// Hermitian matrix (G + G^dagger)/2 with G Ginibre.
ComplexMatrix random_hermitian(Index dim, Rng& rng);

}  // namespace qent

#endif  // QENT_RANDOM_HPP
