#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "kolchin/exponent_matrix.hpp"

namespace kolchin {

/// A term x^e f_j of the free module: monomial exponent vector plus the
/// index of the free generator (1-based).
struct ModuleTerm {
  ExponentRow exponent;
  int component = 1;

  bool operator==(const ModuleTerm&) const = default;
};

inline std::int64_t order_of(const ModuleTerm& t) { return order_of(t.exponent); }

/// Ranking on module terms. Only the standard ranking is supported: total
/// order first (orderly), then component index, then lexicographic on
/// exponents with x1 > x2 > ... > xm.
struct Ranking {
  enum class Kind { standard };
  Kind kind = Kind::standard;
  int m = 0;
  int n = 1;
};

std::strong_ordering compare(const ModuleTerm& a, const ModuleTerm& b, const Ranking& r);

/// strict-weak-order adapter for ordered containers
struct TermLess {
  bool operator()(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a, b, Ranking{}) == std::strong_ordering::less;
  }
};

}  // namespace kolchin
