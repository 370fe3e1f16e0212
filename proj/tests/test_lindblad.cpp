#include <doctest.h>

#include "support/oracles.hpp"

using namespace qent;
using namespace qent::testing;

namespace {
const Real kLn2 = std::log(2.0);
}

TEST_CASE("observed_entropy: trivial partition and eigenbasis pinching") {
  const DensityOperator d = random_density(3, 14);
  CHECK(std::abs(observed_entropy(OperationalPartition({ComplexMatrix::Identity(3, 3)}), d)) <
        1e-14);

  const auto eig = d.eigensystem();
  const auto pinching = OperationalPartition::from_basis(PinchingBasis(eig.vectors));
  CHECK(std::abs(observed_entropy(pinching, d) - von_neumann(d)) < 1e-10);
}

TEST_CASE("observed-entropy matrix is a unit-trace PSD matrix") {
  Rng rng(808);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = 2 + static_cast<Index>(rng.below(4));
    const auto w = random_partition(dim, 1 + static_cast<Index>(rng.below(4)), rng);
    const DensityOperator d = random_density(dim, 20000 + trial);
    const ComplexMatrix m = observed_entropy_matrix(w, d);
    CHECK(hermiticity_defect(m) <= 1e-8);
    CHECK(std::abs(m.trace().real() - 1) <= 1e-8);
    CHECK(eig_hermitian((m + m.adjoint()) / 2).values.minCoeff() >= -1e-8);
    CHECK_NOTHROW(observed_entropy(w, d));
  }
}

TEST_CASE("is_state_invariant") {
  const DensityOperator d = validate_density(mat2(0.6, 0.2, 0.2, 0.4));
  CHECK(is_state_invariant(OperationalPartition({ComplexMatrix::Identity(2, 2)}), d));
  CHECK(is_state_invariant(OperationalPartition::from_basis(PinchingBasis(d.eigensystem().vectors)),
                           d));
  CHECK_FALSE(is_state_invariant(
      OperationalPartition::from_basis(PinchingBasis::computational(2)), d));
}

TEST_CASE("canonical_partition") {
  SUBCASE("maximally mixed qubit") {
    const DensityOperator d = validate_density(ComplexMatrix::Identity(2, 2) / 2);
    const auto w = canonical_partition(d);
    CHECK(w.size() == 4);
    const ComplexMatrix m = observed_entropy_matrix(w, d);
    CHECK(max_abs(m - ComplexMatrix::Identity(4, 4) / 4) < 1e-14);
    CHECK(std::abs(observed_entropy(w, d) - 2 * kLn2) < 1e-12);
  }
  SUBCASE("diag(0.75, 0.25)") {
    const DensityOperator d = validate_density(diag({0.75, 0.25}));
    const Real value = observed_entropy(canonical_partition(d), d);
    CHECK(std::abs(value - 2 * binary_entropy(0.25)) < 1e-12);
    CHECK(std::abs(value - 1.1246702892376166) < 1e-12);
  }
  SUBCASE("pure state restricts to the support") {
    const DensityOperator d = PureState::normalized(ket({1, Complex(0, 1), 1})).density();
    const auto w = canonical_partition(d);
    CHECK(w.size() == 2);  // support element plus the kernel projector
    CHECK(std::abs(observed_entropy(w, d)) < 1e-12);
    CHECK(is_state_invariant(w, d));
  }
  SUBCASE("random full-rank states") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const DensityOperator d = random_density(2 + seed % 5, 40000 + seed);
      const auto w = canonical_partition(d);
      CHECK(partition_defect(w.kraus()) <= 1e-8);
      CHECK(is_state_invariant(w, d));
      CHECK(std::abs(observed_entropy(w, d) - 2 * von_neumann(d)) <= 1e-8);
    }
  }
}

TEST_CASE("lindblad_lower_bound") {
  const DensityOperator mixed = validate_density(ComplexMatrix::Identity(2, 2) / 2);
  const auto bound = lindblad_lower_bound(mixed, 10, 1);
  CHECK(bound.lower_bound >= 2 * kLn2 - 1e-8);
  CHECK(bound.samples_kept() == 10);

  const DensityOperator pure = PureState::normalized(ket({1, 1})).density();
  CHECK(std::abs(lindblad_lower_bound(pure, 5, 2).lower_bound) < 1e-10);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityOperator d = random_density(2 + seed % 4, 50 + seed);
    const auto b = lindblad_lower_bound(d, 8, seed);
    CHECK(b.lower_bound >= b.two_s - 1e-8);
    for (Real v : b.sampled_values) CHECK(v <= b.two_s + 1e-6);
  }
  CHECK_THROWS_AS(lindblad_lower_bound(mixed, 0, 1), Error);
}

TEST_CASE("lindblad_lower_bound is deterministic in the seed") {
  const DensityOperator d = random_density(3, 9);
  const auto a = lindblad_lower_bound(d, 6, 33);
  const auto b = lindblad_lower_bound(d, 6, 33);
  CHECK(a.sampled_values == b.sampled_values);
}

TEST_CASE("concavity probe for sector-respecting states") {
  const SectorSpace sectors({2, 3});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityOperator d1 = block_state({2, 3}, {0.3, 0.7}, 100 + seed);
    const DensityOperator d2 = block_state({2, 3}, {0.8, 0.2}, 200 + seed);
    const Real lam = 0.35;
    const DensityOperator mix = validate_density(lam * d1.matrix() + (1 - lam) * d2.matrix());
    const Real lhs = lindblad_lower_bound(mix, 4, seed).lower_bound;
    const Real rhs = lam * lindblad_lower_bound(d1, 4, seed).lower_bound +
                     (1 - lam) * lindblad_lower_bound(d2, 4, seed).lower_bound;
    CHECK(lhs >= rhs - 0.05);
  }
}

TEST_CASE("sector_example_formula") {
  // 3 ln 2 + (3/4) ln(4/3), evaluated term by term
  const Real expected = 3 * kLn2 + 0.75 * std::log(4.0 / 3.0);
  CHECK(std::abs(sector_example_formula(0.5, 0.25, 0.25) - expected) < 1e-14);
  CHECK(std::abs(sector_example_formula(0.5, 0.25, 0.25) - 2.2952030960186716) < 1e-12);
  CHECK(sector_example_formula(1, 0, 0) == 0);
  CHECK(sector_example_formula(0, 0, 1) == 0);
  CHECK_THROWS_AS(sector_example_formula(0.5, 0.5, 0.5), Error);
  CHECK_THROWS_AS(sector_example_formula(1.5, -0.5, 0), Error);
}

TEST_CASE("sector_observed_entropy") {
  const SectorSpace sectors({2, 3});
  // tau_0: psi_1, psi_2 in the first block, psi_3 in the second
  ComplexMatrix tau = ComplexMatrix::Zero(5, 5);
  tau(0, 0) = 0.5;
  tau(1, 1) = 0.25;
  tau(2, 2) = 0.25;
  const DensityOperator tau0 = validate_density(tau);

  const auto w = sector_canonical_partition(tau0, sectors);
  const Real value = sector_observed_entropy(w, tau0, sectors);
  // block-diagonal M: H(q) + sum_b q_b 2 S(rho_b), rho_1 = diag(2/3, 1/3), rho_2 pure
  const Real blockwise = binary_entropy(0.25) + 0.75 * 2 * binary_entropy(1.0 / 3.0);
  CHECK(std::abs(value - blockwise) < 1e-10);
  MESSAGE("block canonical observed entropy " << value << " vs printed sector formula "
                                              << sector_example_formula(0.5, 0.25, 0.25));

  const SectorSpace single({4});
  const DensityOperator d = random_density(4, 3);
  const auto cw = canonical_partition(d);
  CHECK(std::abs(sector_observed_entropy(cw, d, single) - observed_entropy(cw, d)) < 1e-15);

  const PinchingBasis crossing(
      kron(mat2(1, 1, 1, -1) / std::sqrt(2.0), ComplexMatrix::Identity(1, 1)).eval());
  ComplexMatrix rotation = ComplexMatrix::Identity(5, 5);
  rotation.block(1, 1, 2, 2) = crossing.vectors();
  const auto bad = OperationalPartition::from_basis(PinchingBasis(rotation));
  try {
    sector_observed_entropy(bad, tau0, sectors);
    FAIL("expected SectorViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SectorViolation);
  }
}
