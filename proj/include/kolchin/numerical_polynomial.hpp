#pragma once

#include <vector>

#include "kolchin/numeric.hpp"

namespace kolchin {

/// Integer-valued univariate polynomial stored by its standard coefficients
/// in the binomial basis:
///
///   p(s) = sum_i a_i * C(s+i, i),   a_i in Z.
///
/// Coefficients are kept low-to-high (index i multiplies C(s+i, i)) with the
/// leading entry nonzero; the zero polynomial is the empty list. This makes
/// equality structural and keeps every evaluation at an integer argument an
/// integer.
class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;

  /// From low-to-high coefficients; leading zeros are trimmed.
  explicit NumericalPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static NumericalPolynomial constant(Int c) {
    return NumericalPolynomial({std::move(c)});
  }

  /// Basis element C(s+i, i).
  static NumericalPolynomial basis(int i);

  /// From the serialization order (a_d, ..., a_0).
  static NumericalPolynomial from_standard(std::vector<Int> high_to_low);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Low-to-high coefficients (empty for zero).
  const std::vector<Int>& coeffs() const { return c_; }
  /// a_i, zero beyond the degree.
  Int coeff(int i) const;
  /// Serialization order (a_d, ..., a_0).
  std::vector<Int> standard() const;
  /// Leading standard coefficient a_d; requires a nonzero polynomial.
  const Int& leading() const;

  Int operator()(const Int& s) const;

  friend NumericalPolynomial operator+(const NumericalPolynomial& p,
                                       const NumericalPolynomial& q);
  friend NumericalPolynomial operator-(const NumericalPolynomial& p,
                                       const NumericalPolynomial& q);
  friend NumericalPolynomial operator-(const NumericalPolynomial& p);
  friend NumericalPolynomial operator*(const Int& k, const NumericalPolynomial& p);

  bool operator==(const NumericalPolynomial&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

inline Int eval(const NumericalPolynomial& p, const Int& s) { return p(s); }

/// Backward difference p(s) - p(s-1); truncates the constant coefficient,
/// so the degree drops by exactly one on nonconstant input.
NumericalPolynomial delta1(const NumericalPolynomial& p);

/// q with q(s) = p(s + j) for all s; j may be negative.
NumericalPolynomial shift(const NumericalPolynomial& p, const Int& j);

/// The unique polynomial of degree <= values.size()-1 taking the given
/// values at s = 0, 1, ..., d. Integer inputs always interpolate to integer
/// standard coefficients.
NumericalPolynomial from_values(const std::vector<Int>& values);

/// Rational-valued variant; throws NonIntegralCoefficients when the
/// interpolant is not integer-valued in the binomial basis.
NumericalPolynomial from_values(const std::vector<Rat>& values);

/// "a_d*C(s+d,d) + ... + a_0", or "0".
std::string to_binomial_string(const NumericalPolynomial& p);

/// Expanded ordinary-coefficient form with exact rationals, e.g.
/// "1/2*s^2 + 3/2*s + 1".
std::string to_expanded_string(const NumericalPolynomial& p);

}  // namespace kolchin
