#include "kolchin/numeric.hpp"

#include <cassert>
#include <stdexcept>

namespace kolchin {

Int binom(const Int& x, long k) {
  assert(k >= 0 && "binom requires k >= 0");
  Int r = 1;
  // After step j, r = C(x-k+j, j); the stepwise division is exact.
  for (long j = 1; j <= k; ++j) {
    r *= x - k + j;
    r /= j;
  }
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_decimal(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace kolchin
