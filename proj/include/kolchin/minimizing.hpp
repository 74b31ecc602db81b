#pragma once

#include <vector>

#include "kolchin/numerical_polynomial.hpp"

namespace kolchin {

/// The inductively defined integer vector (b_d, ..., b_0) attached to a
/// numerical polynomial; stored in that order. Nonnegativity of every entry
/// characterizes membership in W, the class of Kolchin dimension polynomials.
struct MinimizingCoefficients {
  std::vector<Int> b;

  bool operator==(const MinimizingCoefficients&) const = default;
};

/// Computes the minimizing coefficients by the inductive definition: for a
/// constant, (c); otherwise split off the leading standard coefficient a_d
/// via v(s) = p(s + a_d) - C(s+1+d+a_d, d+1) + C(s+d+1, d+1), whose degree
/// drops below d, and recurse on v. The zero polynomial maps to (0).
///
/// `stages`, when given, receives the intermediate polynomial at each
/// recursion step (the successive v's).
/// Throws DegreeNotDropped if a step fails to lower the degree, which would
/// signal an arithmetic bug.
MinimizingCoefficients minimizing_coefficients(
    const NumericalPolynomial& p,
    std::vector<NumericalPolynomial>* stages = nullptr);

/// Exact inverse of the step above: from the innermost constant outward,
/// p(s) = v(s - a_d) + C(s+1+d, d+1) - C(s+d+1-a_d, d+1). Leading zeros in
/// b denote a lower-degree polynomial and are skipped.
NumericalPolynomial reconstruct(const MinimizingCoefficients& b);

struct WDecision {
  bool in_w = false;
  /// On a negative decision, the subscript i and value of the first
  /// negative b_i, scanning from b_d downward.
  long witness_index = -1;
  Int witness_value = 0;
  MinimizingCoefficients coefficients;
};

WDecision is_in_w(const NumericalPolynomial& p);

}  // namespace kolchin
