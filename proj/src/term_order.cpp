#include "kolchin/term_order.hpp"

namespace kolchin {

std::strong_ordering compare(const ModuleTerm& a, const ModuleTerm& b, const Ranking&) {
  if (auto c = order_of(a) <=> order_of(b); c != 0) return c;
  if (auto c = a.component <=> b.component; c != 0) return c;
  // lexicographic with x1 most significant
  for (std::size_t k = 0; k < a.exponent.size() && k < b.exponent.size(); ++k)
    if (auto c = a.exponent[k] <=> b.exponent[k]; c != 0) return c;
  return a.exponent.size() <=> b.exponent.size();
}

}  // namespace kolchin
