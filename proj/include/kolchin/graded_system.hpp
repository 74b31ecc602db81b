#pragma once

#include <string>
#include <vector>

#include "kolchin/module_element.hpp"

namespace kolchin {

/// A system of homogeneous generators of a graded submodule, in one of two
/// forms:
///  - generators: explicit homogeneous elements over a commutative
///    polynomial ring (the Groebner engine applies);
///  - leader matrices: one exponent matrix per free-module component,
///    supplied externally (e.g. read off a basis computed in a ring the
///    engine does not cover), plus per-component degree offsets.
struct GradedSystem {
  enum class Form { generators, leader_matrices };

  int m = 0;
  int n = 1;
  Form form = Form::generators;

  std::vector<std::string> vars;  // optional display names, size m

  std::vector<ModuleElement> generators;

  std::vector<ExponentMatrix> leader_matrices;  // size n
  std::vector<std::int64_t> degrees;            // alpha per component, size n
  std::vector<std::int64_t> orders;             // optional e_j per component, size n

  Ranking ranking() const { return Ranking{Ranking::Kind::standard, m, n}; }
};

/// Structural checks: matrix shapes, component ranges, vector sizes.
/// Throws InvalidInput.
void validate(const GradedSystem& sys);

}  // namespace kolchin
