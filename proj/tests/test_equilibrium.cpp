#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gamelab/equilibrium.hpp"
#include "gamelab/game.hpp"

using namespace gamelab;

namespace {

DenseGame make_dense(int ka, int kb, std::initializer_list<double> ua,
                     std::initializer_list<double> ub) {
  DenseGame g;
  g.params = {ka, kb, 0.0, 0};
  g.pay_a.resize(ka, kb);
  g.pay_b.resize(ka, kb);
  auto ia = ua.begin();
  auto ib = ub.begin();
  for (int a = 0; a < ka; ++a)
    for (int b = 0; b < kb; ++b) {
      g.pay_a(a, b) = *ia++;
      g.pay_b(a, b) = *ib++;
    }
  return g;
}

}  // namespace

TEST_CASE("is_pne on hand games") {
  const DenseGame pennies =
      make_dense(2, 2, {.9, .1, .2, .8}, {.1, .9, .8, .2});
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) CHECK(!is_pne(pennies, a, b));
  CHECK_THROWS_AS(is_pne(pennies, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(is_pne(pennies, 1, 3), std::invalid_argument);

  const DenseGame common =
      make_dense(2, 2, {.4, .9, .7, .1}, {.4, .9, .7, .1});
  CHECK(is_pne(common, 1, 2));  // global max of the common payoff
  CHECK(is_pne(common, 2, 1));
  CHECK(!is_pne(common, 1, 1));
  CHECK(!is_pne(common, 2, 2));
  const PneReport rep = enumerate_pne(common);
  CHECK(rep.count == 2);
  const std::vector<std::pair<int, int>> want{{1, 2}, {2, 1}};
  CHECK(rep.equilibria == want);
}

TEST_CASE("marker and exhaustive routes agree") {
  for (int ka = 1; ka <= 5; ++ka)
    for (int kb = 1; kb <= 5; ++kb)
      for (double p : {0.0, 0.3, 0.7, 1.0})
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
          const DenseGame g =
              generate_dense({ka, kb, p, derive_seed(31, seed, ka * 8 + kb)});
          const PneReport fast = enumerate_pne(g);
          const PneReport slow = enumerate_pne_exhaustive(g);
          REQUIRE(fast.equilibria == slow.equilibria);
          CHECK(fast.count == static_cast<long long>(fast.equilibria.size()));
          CHECK(count_pne(g) == fast.count);
          CHECK(fast.count <= std::min(ka, kb));
        }
}

TEST_CASE("expected_pne formula") {
  CHECK(expected_pne({3, 9, 0.0, 0}) == 1.0);
  CHECK(expected_pne({2, 2, 1.0, 0}) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(expected_pne({3, 4, 0.5, 0}) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(expected_pne_rational(2, 2, 1, 1) == Rational(4, 3));
  CHECK(expected_pne_rational(3, 4, 1, 2) == Rational(3, 2));
  CHECK(expected_pne_rational(5, 8, 1, 4) == Rational(1, 4) * Rational(40, 12) +
                                                 Rational(3, 4));
  CHECK_THROWS_AS(expected_pne({2, 2, 1.5, 0}), std::invalid_argument);
  CHECK_THROWS_AS(expected_pne_rational(2, 2, 3, 2), std::invalid_argument);
}

TEST_CASE("pne_probability_at_profile formula and consistency") {
  CHECK(pne_probability_at_profile({2, 2, 1.0, 0}) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(pne_probability_at_profile({2, 5, 0.0, 0}) ==
        doctest::Approx(0.1).epsilon(1e-15));
  CHECK(pne_probability_at_profile({2, 2, 0.5, 0}) ==
        doctest::Approx(7.0 / 24.0).epsilon(1e-15));
  for (double p : {0.0, 0.25, 1.0}) {
    const GameParams params{4, 6, p, 0};
    CHECK(expected_pne(params) ==
          doctest::Approx(24.0 * pne_probability_at_profile(params))
              .epsilon(1e-13));
  }
}

TEST_CASE("Monte Carlo mean of W matches the formula at (2,2,1)") {
  const long long trials = 200000;
  long long sum = 0, sum_sq = 0;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(trials); ++i) {
    const long long w = count_pne(generate_dense({2, 2, 1.0, derive_seed(37, 0, i)}));
    sum += w;
    sum_sq += w * w;
  }
  const double mean = static_cast<double>(sum) / trials;
  const double var = static_cast<double>(sum_sq) / trials - mean * mean;
  CHECK(std::abs(mean - 4.0 / 3.0) <= 3.0 * std::sqrt(var / trials));
}
