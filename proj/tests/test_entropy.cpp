#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"

using namespace qent;
using namespace qent::testing;

namespace {
const Real kLn2 = std::log(2.0);
}

TEST_CASE("eta") {
  CHECK(eta(0) == 0);
  CHECK(eta(1) == 0);
  CHECK(eta(0.5) == doctest::Approx(kLn2 / 2).epsilon(1e-15));
  CHECK_THROWS_AS(eta(-1e-3), Error);
}

TEST_CASE("ProbabilityVector validation") {
  CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), Error);
  CHECK_THROWS_AS(ProbabilityVector({1.5, -0.5}), Error);
  CHECK_THROWS_AS(ProbabilityVector({}), Error);
}

TEST_CASE("shannon") {
  CHECK(shannon(ProbabilityVector({1, 0})) == 0);
  for (int n = 1; n <= 12; ++n) {
    CHECK(shannon(ProbabilityVector(std::vector<Real>(n, 1.0 / n))) ==
          doctest::Approx(std::log(n)).epsilon(1e-14));
  }
  CHECK(shannon(ProbabilityVector({0.5, 0.25, 0.25})) ==
        doctest::Approx(1.0397207708399179).epsilon(1e-14));
}

TEST_CASE("Shannon axioms") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    // (a) continuity of H(p, 1-p)
    const Real p = 0.01 + 0.98 * rng.uniform();
    const Real delta = 1e-3 * rng.uniform();
    CHECK(std::abs(binary_entropy(p) - binary_entropy(p + delta)) <=
          3 * std::abs(delta * std::log(delta)));

    // (b) symmetry
    std::vector<Real> q(5);
    Real total = 0;
    for (Real& x : q) total += (x = rng.uniform());
    for (Real& x : q) x /= total;
    std::vector<Real> shuffled = q;
    std::reverse(shuffled.begin(), shuffled.end());
    std::swap(shuffled[0], shuffled[2]);
    CHECK(std::abs(shannon_unchecked(q) - shannon_unchecked(shuffled)) <= 1e-12);

    // (c) grouping recursion on the last entry
    const Real lam = rng.uniform();
    std::vector<Real> split(q.begin(), q.end() - 1);
    split.push_back(lam * q.back());
    split.push_back((1 - lam) * q.back());
    CHECK(std::abs(shannon_unchecked(split) -
                   (shannon_unchecked(q) + q.back() * binary_entropy(lam))) <= 1e-12);
  }
}

TEST_CASE("von_neumann") {
  CHECK(von_neumann(PureState::normalized(ket({1, Complex(1, 2)})).density()) < 1e-12);
  for (Index n = 2; n <= 6; ++n) {
    CHECK(von_neumann(validate_density(ComplexMatrix::Identity(n, n) / Real(n))) ==
          doctest::Approx(std::log(Real(n))).epsilon(1e-13));
  }
  const Real expected = entropy_2x2(0.75, 0.25, 0.25);
  CHECK(std::abs(expected - 0.4164955306996875) < 1e-14);
  CHECK(std::abs(von_neumann(validate_density(mat2(0.75, 0.25, 0.25, 0.25))) - expected) < 1e-12);
}

TEST_CASE("von_neumann agrees with Shannon entropy of the Schatten weights and Tr eta(D)") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityOperator d = random_density(2 + seed % 7, seed);
    CHECK(std::abs(von_neumann(d) - mixing_entropy(schatten(d))) <= 1e-10);
    const ComplexMatrix eta_d = apply_function(d.matrix(), [](Real t) { return eta(t); });
    CHECK(std::abs(von_neumann(d) - eta_d.trace().real()) <= 1e-10);
  }
}

TEST_CASE("s_f") {
  const DensityOperator d = random_density(4, 8);
  CHECK(std::abs(s_f(d, [](Real t) { return eta(t); }) - von_neumann(d)) < 1e-14);
  CHECK(s_f(validate_density(ComplexMatrix::Identity(2, 2) / 2),
            [](Real t) { return t * (1 - t); }) == doctest::Approx(0.5));
  CHECK(s_f(d, [](Real t) { return t; }) == doctest::Approx(1).epsilon(1e-12));
  CHECK_THROWS_AS(s_f(d, [](Real t) { return std::log(t - 2); }), Error);
}

TEST_CASE("concavity of the von Neumann entropy") {
  Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = 2 + static_cast<Index>(rng.below(7));
    const int terms = 2 + static_cast<int>(rng.below(3));
    ComplexMatrix mix = ComplexMatrix::Zero(dim, dim);
    Real average = 0, total = 0;
    std::vector<Real> w(terms);
    for (Real& x : w) total += (x = rng.uniform());
    for (int i = 0; i < terms; ++i) {
      const DensityOperator di = random_density(dim, 30000 + 10 * trial + i);
      mix += w[i] / total * di.matrix();
      average += w[i] / total * von_neumann(di);
    }
    CHECK(von_neumann(validate_density(mix)) >= average - 1e-8);
  }
}

TEST_CASE("log_multinomial") {
  CHECK(log_multinomial({{7}}) == 0);
  CHECK(log_multinomial({{2, 1, 1}}) == doctest::Approx(std::log(12.0)).epsilon(1e-14));
  CHECK(log_multinomial({{1, 1, 1, 1, 1}}) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
  CHECK(std::isfinite(log_multinomial({{5000, 3000, 2000}})));
  CHECK_THROWS_AS(log_multinomial({{0, 0}}), Error);
  CHECK_THROWS_AS(log_multinomial({{3, -1}}), Error);
}

TEST_CASE("stirling_gap") {
  // (1/4) ln 12 vs 1.5 ln 2
  CHECK(stirling_gap({{2, 1, 1}}) ==
        doctest::Approx(std::abs(std::log(12.0) / 4 - 1.5 * kLn2)).epsilon(1e-13));
  CHECK(stirling_gap({{2, 1, 1}}) == doctest::Approx(0.418494).epsilon(1e-6));
  CHECK(stirling_gap({{200, 100, 100}}) <= 0.03);
  Real previous = std::numeric_limits<Real>::infinity();
  for (long n = 4; n <= 1024; n *= 4) {
    const Real gap = stirling_gap({{n / 2, n / 4, n / 4}});
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("maxwell_boltzmann") {
  const std::vector<Real> two{0, 1};
  auto symmetric = maxwell_boltzmann(two, 0.5);
  CHECK(symmetric.probs[0] == doctest::Approx(0.5));
  CHECK(std::abs(symmetric.lambda) < 1e-12);

  auto quarter = maxwell_boltzmann(two, 0.25);
  CHECK(std::abs(quarter.probs[0] - 0.75) < 1e-12);
  CHECK(std::abs(quarter.probs[1] - 0.25) < 1e-12);
  CHECK(std::abs(quarter.lambda - std::log(3.0)) < 1e-10);

  try {
    maxwell_boltzmann(two, 1.0);
    FAIL("expected ConstraintOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintOutOfRange);
  }
  CHECK_THROWS_AS(maxwell_boltzmann(std::vector<Real>{1, 0}, 0.5), Error);
}

TEST_CASE("maxwell_boltzmann: residual, overflow safety, argmax") {
  Rng rng(808);
  for (int instance = 0; instance < 20; ++instance) {
    std::vector<Real> levels(2 + rng.below(6));
    Real level = 0;
    for (Real& e : levels) e = (level += 0.1 + 3 * rng.uniform());
    const Real e = levels.front() + (levels.back() - levels.front()) * (0.02 + 0.96 * rng.uniform());
    const auto mb = maxwell_boltzmann(levels, e);
    Real mean = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) mean += mb.probs[i] * levels[i];
    CHECK(std::abs(mean - e) <= 1e-10);
    const Real best = shannon(mb.probs);
    for (int k = 0; k < 100; ++k) {
      const auto q = sample_feasible_distribution(levels, e, rng);
      CHECK(best >= shannon_unchecked(q) - 1e-12);
    }
  }
  // huge level spacing needs the shifted exponentials
  const std::vector<Real> wide{0, 1000, 5000};
  const auto mb = maxwell_boltzmann(wide, 1.0);
  CHECK(std::isfinite(mb.lambda));
  CHECK(std::abs(mb.probs[1] * 1000 + mb.probs[2] * 5000 - 1.0) <= 1e-10);
}

TEST_CASE("check_mixing_law") {
  const DensityOperator zero = validate_density(diag({1, 0}));
  const DensityOperator one = validate_density(diag({0, 1}));
  CHECK(check_mixing_law(zero, one, 0.5) < 1e-14);
  CHECK(von_neumann(validate_density(diag({0.5, 0.5}))) == doctest::Approx(kLn2));

  const DensityOperator a = block_state({2, 2}, {1, 0}, 1);
  const DensityOperator b = block_state({2, 2}, {0, 1}, 2);
  CHECK(check_mixing_law(a, b, 0.3) <= 1e-8);

  // continuity at the boundary: S(mix) -> S(b)
  const DensityOperator near = validate_density(1e-9 * a.matrix() + (1 - 1e-9) * b.matrix());
  CHECK(std::abs(von_neumann(near) - von_neumann(b)) < 1e-6);

  try {
    check_mixing_law(a, validate_density(ComplexMatrix::Identity(4, 4) / 4), 0.5);
    FAIL("expected SupportsNotOrthogonal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SupportsNotOrthogonal);
  }
  CHECK_THROWS_AS(check_mixing_law(a, b, 1.0), Error);
}

TEST_CASE("check_subadditivity") {
  const DensityOperator bell = PureState::normalized(ket({1, 0, 0, 1})).density();
  const auto report = check_subadditivity(bell, {2, 2});
  CHECK(std::abs(report.joint) < 1e-10);
  CHECK(std::abs(report.first - kLn2) < 1e-10);
  CHECK(std::abs(report.second - kLn2) < 1e-10);

  const DensityOperator rho = random_density(2, 1);
  const DensityOperator sigma = random_density(3, 2);
  const auto product = check_subadditivity(validate_density(kron(rho.matrix(), sigma.matrix())),
                                           {2, 3});
  CHECK(std::abs(product.joint - product.first - product.second) <= 1e-8);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(check_subadditivity(random_density(4, seed), {2, 2}).holds());
    CHECK(check_subadditivity(random_density(9, seed), {3, 3}).holds());
  }
  CHECK_THROWS_AS(check_subadditivity(random_density(4, 1), {3, 2}), Error);
}

TEST_CASE("check_ssa") {
  const DensityOperator product =
      PureState::normalized(ket({0, 0, 0, 0, 0, 1, 0, 0})).density();
  const auto pure = check_ssa(product, {2, 2, 2});
  CHECK(std::abs(pure.s123) < 1e-10);
  CHECK(std::abs(pure.s12) < 1e-10);
  CHECK(std::abs(pure.s23) < 1e-10);
  CHECK(std::abs(pure.s2) < 1e-10);

  // trivial middle factor reduces to subadditivity
  const DensityOperator d = random_density(6, 40);
  const auto reduced = check_ssa(d, {2, 1, 3});
  const auto sub = check_subadditivity(d, {2, 3});
  CHECK(std::abs(reduced.s2) < 1e-12);
  CHECK(std::abs(reduced.s12 - sub.first) < 1e-10);
  CHECK(std::abs(reduced.s23 - sub.second) < 1e-10);

  for (std::uint64_t seed = 0; seed < 100; ++seed)
    CHECK(check_ssa(random_density(8, 700 + seed), {2, 2, 2}).holds());
  CHECK_THROWS_AS(check_ssa(d, {2, 2, 2}), Error);
}
