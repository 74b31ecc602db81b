#include "kolchin/graded_system.hpp"

#include "kolchin/errors.hpp"

namespace kolchin {

void validate(const GradedSystem& sys) {
  if (sys.m < 1) throw InvalidInput("system needs m >= 1");
  if (sys.n < 1) throw InvalidInput("system needs n >= 1");
  if (!sys.vars.empty() && static_cast<int>(sys.vars.size()) != sys.m)
    throw InvalidInput("vars must list one name per indeterminate");
  if (sys.form == GradedSystem::Form::generators) {
    for (const auto& g : sys.generators)
      for (const auto& [t, c] : g.terms()) {
        if (static_cast<int>(t.exponent.size()) != sys.m)
          throw InvalidInput("term exponent length does not match m");
        if (t.component < 1 || t.component > sys.n)
          throw InvalidInput("term component out of range");
        for (auto v : t.exponent)
          if (v < 0) throw InvalidInput("term exponents must be nonnegative");
      }
  } else {
    if (static_cast<int>(sys.leader_matrices.size()) != sys.n)
      throw InvalidInput("leader_matrices must have one matrix per component");
    for (const auto& e : sys.leader_matrices) {
      if (e.m != sys.m)
        throw InvalidInput("leader matrix column count does not match m");
      validate(e);
    }
  }
  if (!sys.degrees.empty() && static_cast<int>(sys.degrees.size()) != sys.n)
    throw InvalidInput("degrees must have one entry per component");
  if (!sys.orders.empty() && static_cast<int>(sys.orders.size()) != sys.n)
    throw InvalidInput("orders must have one entry per component");
}

}  // namespace kolchin
