#pragma once

#include <cstdint>
#include <vector>

#include "kolchin/numerical_polynomial.hpp"

namespace kolchin {

using ExponentRow = std::vector<std::int64_t>;

/// A finite subset E of N_0^m given as rows of nonnegative exponents.
/// V_E(s) is the set of points x in N_0^m with ord x <= s that dominate no
/// row of E; its eventual counting polynomial is the Kolchin dimension
/// polynomial of E.
struct ExponentMatrix {
  int m = 0;
  std::vector<ExponentRow> rows;

  bool operator==(const ExponentMatrix&) const = default;
};

std::int64_t order_of(const ExponentRow& row);

/// True when a <= b componentwise.
bool dominates(const ExponentRow& b, const ExponentRow& a);

/// Throws InvalidInput on negative entries or row-length mismatches.
void validate(const ExponentMatrix& e);

/// Antichain with the same V_E(s): duplicate and dominated rows removed,
/// rows sorted lexicographically.
ExponentMatrix canonicalize(const ExponentMatrix& e);

/// Card V_E(s) by exhaustive enumeration; the counting oracle.
Int brute_count(const ExponentMatrix& e, std::int64_t s);

struct DimPolyResult {
  NumericalPolynomial polynomial;
  /// The polynomial equals the counting function for all s >= this bound
  /// (ord of the componentwise max over all rows; conservative, not tight).
  std::int64_t stability_bound = 0;
};

/// The Kolchin dimension polynomial of E, by inclusion-exclusion over
/// subsets of the canonical antichain. Falls back to counting plus
/// interpolation above 20 antichain rows.
DimPolyResult dimension_polynomial(const ExponentMatrix& e);

/// The two-matrix split behind omega_E(s) = omega_{E u e}(s) + omega_H(s - ord e):
/// `extended` is E with the pivot row added, `remainder` is E with the pivot
/// subtracted from each row (clamped at zero).
struct Decomposition {
  ExponentMatrix extended;
  ExponentMatrix remainder;
  std::int64_t order_shift = 0;
};

Decomposition decompose(const ExponentMatrix& e, const ExponentRow& pivot);

}  // namespace kolchin
