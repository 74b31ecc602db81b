#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "kolchin/bounds.hpp"
#include "kolchin/errors.hpp"
#include "kolchin/exponent_matrix.hpp"

using namespace kolchin;
using kolchin::testing::random_matrix;
using kolchin::testing::random_row;

namespace {

ExponentMatrix matrix(int m, std::vector<ExponentRow> rows) {
  return ExponentMatrix{m, std::move(rows)};
}

NumericalPolynomial poly(std::vector<long> high_to_low) {
  std::vector<Int> c(high_to_low.begin(), high_to_low.end());
  return NumericalPolynomial::from_standard(std::move(c));
}

}  // namespace

TEST_CASE("canonicalize removes dominated rows and sorts") {
  CHECK(canonicalize(matrix(2, {{1, 1}, {2, 1}})).rows ==
        std::vector<ExponentRow>{{1, 1}});
  CHECK(canonicalize(matrix(2, {})).rows.empty());
  CHECK(canonicalize(matrix(2, {{2, 0}, {0, 2}, {1, 1}})).rows ==
        std::vector<ExponentRow>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(canonicalize(matrix(3, {{1, 2, 3}, {1, 2, 3}})).rows ==
        std::vector<ExponentRow>{{1, 2, 3}});
  CHECK_THROWS_AS(canonicalize(matrix(2, {{1}})), InvalidInput);
}

TEST_CASE("brute_count enumerates V_E(s)") {
  CHECK(brute_count(matrix(2, {{1, 1}}), 2) == 5);
  CHECK(brute_count(matrix(2, {}), 3) == 10);
  CHECK(brute_count(matrix(3, {{0, 0, 0}}), 7) == 0);
  CHECK(brute_count(matrix(1, {{4}}), 10) == 4);
  CHECK(brute_count(matrix(2, {{1, 1}}), 0) == 1);
}

TEST_CASE("dimension polynomial of the empty matrix is the full binomial") {
  const DimPolyResult r = dimension_polynomial(matrix(3, {}));
  CHECK(r.polynomial == NumericalPolynomial::basis(3));
  CHECK(r.stability_bound == 0);
}

TEST_CASE("dimension polynomial of a single row, with counting oracle") {
  const DimPolyResult r = dimension_polynomial(matrix(2, {{1, 1}}));
  CHECK(r.polynomial == poly({2, -1}));  // 2s+1
  CHECK(r.stability_bound == 2);
  for (std::int64_t s = r.stability_bound; s <= r.stability_bound + 6; ++s)
    CHECK(r.polynomial(s) == brute_count(matrix(2, {{1, 1}}), s));
}

TEST_CASE("witness family at k=1") {
  const ExponentMatrix e = codim3_witness_matrix(1);
  CHECK(e.rows == std::vector<ExponentRow>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
  const DimPolyResult r = dimension_polynomial(e);
  CHECK(r.polynomial == poly({2, -1}));
  CHECK(delta1(r.polynomial) == NumericalPolynomial::constant(2));
}

TEST_CASE("zero row forces the zero polynomial") {
  const DimPolyResult r = dimension_polynomial(matrix(3, {{0, 0, 0}, {1, 2, 0}}));
  CHECK(r.polynomial.is_zero());
}

TEST_CASE("decompose splits off a pivot") {
  const Decomposition d = decompose(matrix(2, {{2, 2}}), {0, 2});
  CHECK(d.extended.rows == std::vector<ExponentRow>{{2, 2}, {0, 2}});
  CHECK(d.remainder.rows == std::vector<ExponentRow>{{2, 0}});
  CHECK(d.order_shift == 2);
}

TEST_CASE("decomposition identity holds as exact polynomial equality") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 100; ++round) {
    const ExponentMatrix e = random_matrix(rng, 3, 4, 3);
    const ExponentRow pivot = random_row(rng, e.m, 3);
    const Decomposition d = decompose(e, pivot);
    const NumericalPolynomial lhs = dimension_polynomial(e).polynomial;
    const NumericalPolynomial rhs =
        dimension_polynomial(d.extended).polynomial +
        shift(dimension_polynomial(d.remainder).polynomial, Int(-d.order_shift));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("witness family reduction to three columns (k=2)") {
  // Splitting off (0,1,0,0) twice exhausts the x2 direction: each step
  // leaves the same extended matrix A, and the final remainder vanishes.
  const std::int64_t k = 2;
  const ExponentMatrix e = codim3_witness_matrix(k);
  ExponentMatrix current = e;
  ExponentRow pivot{0, 1, 0, 0};
  ExponentMatrix extended;
  for (std::int64_t t = 0; t < k; ++t) {
    const Decomposition d = decompose(current, pivot);
    if (t == 0)
      extended = canonicalize(d.extended);
    else
      CHECK(canonicalize(d.extended) == extended);
    current = d.remainder;
  }
  CHECK(dimension_polynomial(current).polynomial.is_zero());

  // the extended matrix pins x2 = 0, so it matches the column-deleted
  // three-variable matrix as a polynomial
  ExponentMatrix deleted;
  deleted.m = 3;
  for (const auto& row : e.rows)
    if (row[1] == 0) deleted.rows.push_back({row[0], row[2], row[3]});
  const NumericalPolynomial via_deleted = dimension_polynomial(deleted).polynomial;
  CHECK(dimension_polynomial(extended).polynomial == via_deleted);

  // and the two reductions together recover omega_E
  NumericalPolynomial rebuilt;
  const NumericalPolynomial omega_a = dimension_polynomial(extended).polynomial;
  for (std::int64_t t = 0; t < k; ++t) rebuilt = rebuilt + shift(omega_a, Int(-t));
  CHECK(rebuilt == dimension_polynomial(e).polynomial);
}

TEST_CASE("polynomial equals counting oracle on the stability window") {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 60; ++round) {
    const ExponentMatrix e = random_matrix(rng, 4, 5, 4);
    const DimPolyResult r = dimension_polynomial(e);
    for (std::int64_t s = r.stability_bound; s <= r.stability_bound + e.m + 2; ++s)
      CHECK(r.polynomial(s) == brute_count(e, s));
  }
}

TEST_CASE("degree drops below m exactly when a row exists") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 50; ++round) {
    const ExponentMatrix e = random_matrix(rng, 4, 5, 4);
    CHECK(dimension_polynomial(e).polynomial.degree() <= e.m - 1);
  }
  CHECK(dimension_polynomial(matrix(4, {})).polynomial.degree() == 4);
}

TEST_CASE("adding a row never increases the count") {
  std::mt19937_64 rng(24);
  for (int round = 0; round < 40; ++round) {
    ExponentMatrix e = random_matrix(rng, 3, 4, 3);
    const DimPolyResult before = dimension_polynomial(e);
    ExponentMatrix larger = e;
    larger.rows.push_back(random_row(rng, e.m, 3));
    const DimPolyResult after = dimension_polynomial(larger);
    const std::int64_t start = std::max(before.stability_bound, after.stability_bound);
    for (std::int64_t s = start; s <= start + 3; ++s)
      CHECK(after.polynomial(s) <= before.polynomial(s));
  }
}

TEST_CASE("canonicalize preserves the counting function") {
  std::mt19937_64 rng(25);
  for (int round = 0; round < 40; ++round) {
    const ExponentMatrix e = random_matrix(rng, 3, 5, 4);
    const ExponentMatrix canon = canonicalize(e);
    for (std::int64_t s = 0; s <= 8; ++s) CHECK(brute_count(e, s) == brute_count(canon, s));
  }
}

TEST_CASE("row order never affects the result") {
  std::mt19937_64 rng(26);
  for (int round = 0; round < 20; ++round) {
    ExponentMatrix e = random_matrix(rng, 3, 5, 4);
    const DimPolyResult base = dimension_polynomial(e);
    std::shuffle(e.rows.begin(), e.rows.end(), rng);
    const DimPolyResult shuffled = dimension_polynomial(e);
    CHECK(base.polynomial == shuffled.polynomial);
    CHECK(base.stability_bound == shuffled.stability_bound);
  }
}

TEST_CASE("interpolation fallback above the antichain guard") {
  // 21 pairwise incomparable rows in two columns
  ExponentMatrix e;
  e.m = 2;
  for (std::int64_t i = 0; i <= 20; ++i) e.rows.push_back({i, 20 - i});
  const DimPolyResult r = dimension_polynomial(e);
  for (std::int64_t s = r.stability_bound; s <= r.stability_bound + 4; ++s)
    CHECK(r.polynomial(s) == brute_count(e, s));
}
