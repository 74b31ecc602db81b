#include "kolchin/module_element.hpp"


#include "kolchin/errors.hpp"

namespace kolchin {

void ModuleElement::add_term(const ModuleTerm& t, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const ModuleTerm& ModuleElement::leader() const {
  if (terms_.empty()) throw ZeroElement("the zero element has no leader");
  return terms_.rbegin()->first;
}

const Rat& ModuleElement::leading_coefficient() const {
  if (terms_.empty()) throw ZeroElement("the zero element has no leading coefficient");
  return terms_.rbegin()->second;
}

bool ModuleElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::int64_t d = order_of(terms_.begin()->first);
  for (const auto& [t, c] : terms_)
    if (order_of(t) != d) return false;
  return true;
}

std::int64_t ModuleElement::degree() const { return order_of(leader()); }

void ModuleElement::add_scaled(const ModuleElement& g, const Rat& c,
                               const ExponentRow& shift) {
  if (c == 0) return;
  for (const auto& [t, coef] : g.terms_) {
    ModuleTerm shifted = t;
    for (std::size_t k = 0; k < shift.size(); ++k) shifted.exponent[k] += shift[k];
    add_term(shifted, c * coef);
  }
}

void ModuleElement::make_monic() {
  if (terms_.empty()) return;
  const Rat lc = leading_coefficient();
  if (lc == 1) return;
  for (auto& [t, c] : terms_) c /= lc;
}

ModuleElement monomial_multiple(const ModuleElement& g, const ExponentRow& shift) {
  ModuleElement out;
  out.add_scaled(g, Rat(1), shift);
  return out;
}

}  // namespace kolchin
