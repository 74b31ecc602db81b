#include "kolchin/numerical_polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "kolchin/errors.hpp"

namespace kolchin {

NumericalPolynomial NumericalPolynomial::basis(int i) {
  assert(i >= 0);
  std::vector<Int> c(static_cast<std::size_t>(i) + 1, 0);
  c.back() = 1;
  return NumericalPolynomial(std::move(c));
}

NumericalPolynomial NumericalPolynomial::from_standard(std::vector<Int> high_to_low) {
  std::reverse(high_to_low.begin(), high_to_low.end());
  return NumericalPolynomial(std::move(high_to_low));
}

Int NumericalPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

std::vector<Int> NumericalPolynomial::standard() const {
  std::vector<Int> out(c_.rbegin(), c_.rend());
  return out;
}

const Int& NumericalPolynomial::leading() const {
  assert(!c_.empty() && "leading coefficient of the zero polynomial");
  return c_.back();
}

Int NumericalPolynomial::operator()(const Int& s) const {
  Int r = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    r += c_[i] * binom(s + static_cast<long>(i), static_cast<long>(i));
  return r;
}

NumericalPolynomial operator+(const NumericalPolynomial& p, const NumericalPolynomial& q) {
  std::vector<Int> c(std::max(p.c_.size(), q.c_.size()), 0);
  for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
  return NumericalPolynomial(std::move(c));
}

NumericalPolynomial operator-(const NumericalPolynomial& p, const NumericalPolynomial& q) {
  std::vector<Int> c(std::max(p.c_.size(), q.c_.size()), 0);
  for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] -= q.c_[i];
  return NumericalPolynomial(std::move(c));
}

NumericalPolynomial operator-(const NumericalPolynomial& p) {
  std::vector<Int> c = p.c_;
  for (auto& x : c) x = -x;
  return NumericalPolynomial(std::move(c));
}

NumericalPolynomial operator*(const Int& k, const NumericalPolynomial& p) {
  std::vector<Int> c = p.c_;
  for (auto& x : c) x *= k;
  return NumericalPolynomial(std::move(c));
}

NumericalPolynomial delta1(const NumericalPolynomial& p) {
  // Delta1 C(s+i, i) = C(s+i-1, i-1), so the coefficient list shifts down.
  if (p.is_zero()) return {};
  std::vector<Int> c(p.coeffs().begin() + 1, p.coeffs().end());
  return NumericalPolynomial(std::move(c));
}

NumericalPolynomial shift(const NumericalPolynomial& p, const Int& j) {
  if (p.is_zero() || j == 0) return p;
  // Basis recomputation: interpolate d+1 shifted values.
  const int d = p.degree();
  std::vector<Int> values(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) values[static_cast<std::size_t>(i)] = p(Int(i) + j);
  return from_values(values);
}

namespace {

// Newton forward-difference coefficients c_k = (Delta^k v)(0) in place,
// then a_i = sum_{k>=i} c_k (-1)^{k-i} C(k, i)  (basis change from C(s,k)
// to C(s+i, i)).
template <typename T>
std::vector<T> newton_coefficients(std::vector<T> v) {
  const std::size_t n = v.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) v[i] -= v[i - 1];
  return v;
}

}  // namespace

NumericalPolynomial from_values(const std::vector<Int>& values) {
  if (values.empty()) return {};
  const std::vector<Int> c = newton_coefficients(values);
  const std::size_t n = c.size();
  std::vector<Int> a(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      Int term = c[k] * binom(Int(static_cast<long>(k)), static_cast<long>(i));
      if ((k - i) % 2 == 1) term = -term;
      a[i] += term;
    }
  return NumericalPolynomial(std::move(a));
}

NumericalPolynomial from_values(const std::vector<Rat>& values) {
  if (values.empty()) return {};
  const std::vector<Rat> c = newton_coefficients(values);
  std::vector<Int> ints;
  ints.reserve(c.size());
  for (const Rat& q : c) {
    if (q.get_den() != 1)
      throw NonIntegralCoefficients(
          "interpolant is not integer-valued in the binomial basis (difference " +
          to_decimal(q) + ")");
    ints.push_back(q.get_num());
  }
  // Integer Newton coefficients give integer standard coefficients
  // (the basis change C(s,k) -> C(s+i,i) is unimodular triangular).
  const std::size_t n = ints.size();
  std::vector<Int> a(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      Int term = ints[k] * binom(Int(static_cast<long>(k)), static_cast<long>(i));
      if ((k - i) % 2 == 1) term = -term;
      a[i] += term;
    }
  return NumericalPolynomial(std::move(a));
}

std::string to_binomial_string(const NumericalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int a = p.coeff(i);
    if (a == 0) continue;
    Int mag = abs(a);
    if (first) {
      if (a < 0) out << "-";
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << to_decimal(mag);
    } else {
      if (mag != 1) out << to_decimal(mag) << "*";
      out << "C(s+" << i << "," << i << ")";
    }
  }
  return out.str();
}

std::string to_expanded_string(const NumericalPolynomial& p) {
  if (p.is_zero()) return "0";
  // Expand sum a_i * prod_{j=1..i} (s+j)/i! into ordinary powers of s.
  const int d = p.degree();
  std::vector<Rat> pow(static_cast<std::size_t>(d) + 1, Rat(0));
  for (int i = 0; i <= d; ++i) {
    const Int a = p.coeff(i);
    if (a == 0) continue;
    // prod_{j=1..i} (s+j) as integer power-basis coefficients
    std::vector<Int> f{1};
    for (int j = 1; j <= i; ++j) {
      std::vector<Int> g(f.size() + 1, 0);
      for (std::size_t t = 0; t < f.size(); ++t) {
        g[t] += f[t] * j;
        g[t + 1] += f[t];
      }
      f = std::move(g);
    }
    Int fact = 1;
    for (int j = 2; j <= i; ++j) fact *= j;
    for (std::size_t t = 0; t < f.size(); ++t) pow[t] += make_rat(a * f[t], fact);
  }
  std::ostringstream out;
  bool first = true;
  for (int t = d; t >= 0; --t) {
    const Rat& q = pow[static_cast<std::size_t>(t)];
    if (q == 0) continue;
    Rat mag = abs(q);
    if (first) {
      if (q < 0) out << "-";
      first = false;
    } else {
      out << (q < 0 ? " - " : " + ");
    }
    if (t == 0) {
      out << to_decimal(mag);
    } else {
      if (mag != 1) out << to_decimal(mag) << "*";
      out << "s";
      if (t > 1) out << "^" << t;
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace kolchin
