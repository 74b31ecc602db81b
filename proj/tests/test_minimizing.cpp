#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "kolchin/minimizing.hpp"

using namespace kolchin;
using kolchin::testing::random_matrix;

namespace {

NumericalPolynomial poly(std::vector<long> high_to_low) {
  std::vector<Int> c(high_to_low.begin(), high_to_low.end());
  return NumericalPolynomial::from_standard(std::move(c));
}

MinimizingCoefficients coeffs(std::vector<long> b) {
  return {{b.begin(), b.end()}};
}

NumericalPolynomial random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<Int> v(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : v) x = c(rng);
  return NumericalPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("constants map to themselves") {
  CHECK(minimizing_coefficients(poly({7})) == coeffs({7}));
  CHECK(minimizing_coefficients(poly({-3})) == coeffs({-3}));
  CHECK(minimizing_coefficients(NumericalPolynomial{}) == coeffs({0}));
}

TEST_CASE("the inductive step on small polynomials") {
  // s+1 = C(s+1,1): v(s) = (s+2) - C(s+3,2) + C(s+2,2) = 0
  CHECK(minimizing_coefficients(poly({1, 0})) == coeffs({1, 0}));
  // 2s has standard coefficients (2,-2); v = -1
  CHECK(minimizing_coefficients(poly({2, -2})) == coeffs({2, -1}));
  // 2s+1 = 2*C(s+1,1) - 1
  CHECK(minimizing_coefficients(poly({2, -1})) == coeffs({2, 0}));
  // C(s+2,2)
  CHECK(minimizing_coefficients(poly({1, 0, 0})) == coeffs({1, 0, 0}));
}

TEST_CASE("reconstruct inverts the definition") {
  CHECK(reconstruct(coeffs({5})) == poly({5}));
  CHECK(reconstruct(coeffs({0})).is_zero());
  CHECK(reconstruct(coeffs({2, 0})) == poly({2, -1}));
  CHECK(reconstruct(coeffs({1, 0, 0})) == poly({1, 0, 0}));
  // leading zeros denote lower degree
  CHECK(reconstruct(coeffs({0, 0, 4})) == poly({4}));
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    const NumericalPolynomial p = random_poly(rng, 5, 10);
    CHECK(reconstruct(minimizing_coefficients(p)) == p);
  }
}

TEST_CASE("bijectivity on valid coefficient vectors") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 200; ++round) {
    const NumericalPolynomial p = random_poly(rng, 5, 10);
    const MinimizingCoefficients b = minimizing_coefficients(p);
    CHECK(minimizing_coefficients(reconstruct(b)) == b);
  }
}

TEST_CASE("leading minimizing coefficient is the leading standard coefficient") {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 100; ++round) {
    const NumericalPolynomial p = random_poly(rng, 5, 10);
    if (p.is_zero()) continue;
    CHECK(minimizing_coefficients(p).b.front() == p.leading());
  }
}

TEST_CASE("membership in W with witness") {
  const WDecision yes = is_in_w(poly({2, -1}));
  CHECK(yes.in_w);
  const WDecision no = is_in_w(poly({2, -2}));  // 2s
  CHECK_FALSE(no.in_w);
  CHECK(no.witness_index == 0);
  CHECK(no.witness_value == -1);
  CHECK(is_in_w(NumericalPolynomial{}).in_w);  // zero polynomial
  CHECK_FALSE(is_in_w(poly({-1})).in_w);
}

TEST_CASE("dimension polynomials lie in W") {
  std::mt19937_64 rng(34);
  for (int round = 0; round < 100; ++round) {
    const ExponentMatrix e = random_matrix(rng, 4, 5, 4);
    CHECK(is_in_w(dimension_polynomial(e).polynomial).in_w);
  }
}

TEST_CASE("W is closed under addition, delta1 and positive shift") {
  std::mt19937_64 rng(35);
  for (int round = 0; round < 100; ++round) {
    const NumericalPolynomial w1 =
        dimension_polynomial(random_matrix(rng, 3, 4, 3)).polynomial;
    const NumericalPolynomial w2 =
        dimension_polynomial(random_matrix(rng, 3, 4, 3)).polynomial;
    CHECK(is_in_w(w1 + w2).in_w);
    CHECK(is_in_w(delta1(w1)).in_w);
    for (long j = 1; j <= 3; ++j) CHECK(is_in_w(shift(w1, j)).in_w);
  }
}

TEST_CASE("intermediate stages are recorded on request") {
  std::vector<NumericalPolynomial> stages;
  minimizing_coefficients(poly({1, 1, 1}), &stages);  // C(s+3,2), degree 2
  CHECK(stages.size() == 2);
  CHECK(stages.front().degree() < 2);
}
