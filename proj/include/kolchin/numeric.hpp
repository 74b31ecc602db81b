#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kolchin {

// All arithmetic in this library is exact: arbitrary-precision integers
// for polynomial coefficients and bounds, rationals for elimination.
using Int = mpz_class;
using Rat = mpq_class;

/// Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k!.
/// Total for any integer x and k >= 0; C(x, 0) = 1, and the value is
/// an integer even for negative x (e.g. C(-1, 3) = -1).
Int binom(const Int& x, long k);

/// Canonicalized rational num/den (den != 0).
Rat make_rat(const Int& num, const Int& den);

std::string to_decimal(const Int& v);

/// "p/q" when q != 1, otherwise "p".
std::string to_decimal(const Rat& v);

}  // namespace kolchin
