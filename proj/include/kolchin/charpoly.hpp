#pragma once

#include <vector>

#include "kolchin/graded_system.hpp"
#include "kolchin/numerical_polynomial.hpp"

namespace kolchin {

/// Characteristic polynomial of the graded quotient presented by the
/// system: sum over components j of Delta1 omega_{E_j}(s - alpha_j), with
/// the E_j read from a reduced Groebner basis for generator-form systems
/// and taken as given for leader-matrix systems.
NumericalPolynomial charpoly(const GradedSystem& sys);

/// Ground-truth dimensions of the graded quotient for s = 0..s_max, by
/// exact rational rank computation degree by degree. Independent of the
/// Groebner path. Generator-form systems only.
std::vector<Int> hilbert_oracle(const GradedSystem& sys, int s_max);

/// Degree, codimension and leading standard coefficient of a
/// characteristic polynomial over m indeterminates. A zero polynomial has
/// no type; it is reported as the null module.
struct Invariants {
  bool null_module = false;
  int type = -1;             // d = deg omega
  int codim = -1;            // m - 1 - d
  Int typical_dimension = 0; // leading standard coefficient
};

Invariants invariants_of(const NumericalPolynomial& p, int m);

/// All monomial exponent vectors in m variables of order exactly s,
/// lexicographically sorted.
std::vector<ExponentRow> monomials_of_order(int m, std::int64_t s);

}  // namespace kolchin
