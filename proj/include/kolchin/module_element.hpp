#pragma once

#include <map>
#include <string>

#include "kolchin/numeric.hpp"
#include "kolchin/term_order.hpp"

namespace kolchin {

/// A finite rational combination of module terms. Zero coefficients are
/// never stored; the leader is the ranking-maximal term present.
class ModuleElement {
 public:
  using TermMap = std::map<ModuleTerm, Rat, TermLess>;

  ModuleElement() = default;

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * x^exp f_comp, erasing the term if the sum cancels.
  void add_term(const ModuleTerm& t, const Rat& c);

  /// The ranking-maximal term; throws ZeroElement on the zero element.
  const ModuleTerm& leader() const;
  const Rat& leading_coefficient() const;

  /// All terms share one order (true vacuously for zero).
  bool is_homogeneous() const;
  /// Order of the leader; requires a nonzero element.
  std::int64_t degree() const;

  /// *this += c * x^shift * g
  void add_scaled(const ModuleElement& g, const Rat& c, const ExponentRow& shift);

  /// Scales so the leading coefficient is 1.
  void make_monic();

  bool operator==(const ModuleElement&) const = default;

 private:
  TermMap terms_;
};

ModuleElement monomial_multiple(const ModuleElement& g, const ExponentRow& shift);

}  // namespace kolchin
