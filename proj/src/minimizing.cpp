#include "kolchin/minimizing.hpp"

#include <stdexcept>

#include "kolchin/errors.hpp"

namespace kolchin {

MinimizingCoefficients minimizing_coefficients(const NumericalPolynomial& p,
                                               std::vector<NumericalPolynomial>* stages) {
  const int d = p.degree();
  if (d <= 0) {
    // Constants, including the zero polynomial as (0).
    return {{p.coeff(0)}};
  }
  const Int a_d = p.leading();
  const NumericalPolynomial cap = NumericalPolynomial::basis(d + 1);
  const NumericalPolynomial v = shift(p, a_d) - shift(cap, a_d) + cap;
  if (v.degree() >= d)
    throw DegreeNotDropped("minimizing step kept degree " + std::to_string(v.degree()) +
                           " at level " + std::to_string(d));
  if (stages) stages->push_back(v);
  MinimizingCoefficients inner = minimizing_coefficients(v, stages);
  std::vector<Int> b;
  b.reserve(static_cast<std::size_t>(d) + 1);
  b.push_back(a_d);
  // pad with zeros when the degree dropped by more than one
  for (std::size_t k = inner.b.size(); k + 1 < static_cast<std::size_t>(d) + 1; ++k)
    b.push_back(0);
  b.insert(b.end(), inner.b.begin(), inner.b.end());
  return {std::move(b)};
}

NumericalPolynomial reconstruct(const MinimizingCoefficients& coeffs) {
  if (coeffs.b.empty())
    throw std::invalid_argument("reconstruct requires a nonempty coefficient vector");
  std::size_t lead = 0;
  while (lead + 1 < coeffs.b.size() && coeffs.b[lead] == 0) ++lead;
  const std::size_t len = coeffs.b.size() - lead;
  if (len == 1) {
    const Int& c = coeffs.b.back();
    return c == 0 ? NumericalPolynomial{} : NumericalPolynomial::constant(c);
  }
  const int d = static_cast<int>(len) - 1;
  const Int& a_d = coeffs.b[lead];
  MinimizingCoefficients inner{{coeffs.b.begin() + static_cast<std::ptrdiff_t>(lead) + 1,
                                coeffs.b.end()}};
  const NumericalPolynomial v = reconstruct(inner);
  const NumericalPolynomial cap = NumericalPolynomial::basis(d + 1);
  return shift(v, -a_d) + cap - shift(cap, -a_d);
}

WDecision is_in_w(const NumericalPolynomial& p) {
  WDecision out;
  out.coefficients = minimizing_coefficients(p);
  const long d = static_cast<long>(out.coefficients.b.size()) - 1;
  for (long k = 0; k <= d; ++k) {
    const Int& value = out.coefficients.b[static_cast<std::size_t>(k)];
    if (value < 0) {
      out.in_w = false;
      out.witness_index = d - k;  // subscript of b_i, counting from the right
      out.witness_value = value;
      return out;
    }
  }
  out.in_w = true;
  return out;
}

}  // namespace kolchin
