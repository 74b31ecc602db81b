#pragma once

#include <vector>

#include "kolchin/graded_system.hpp"

namespace kolchin {

/// Reduced homogeneous Groebner basis of the submodule generated by the
/// system, over a commutative polynomial ring with rational coefficients.
/// S-pairs are processed degree by degree; the returned basis is monic,
/// auto-reduced and sorted by leader, hence canonical for the ranking.
///
/// Throws NonHomogeneousInput for generators mixing orders and
/// UnsupportedRing for systems given as leader matrices.
std::vector<ModuleElement> buchberger(const GradedSystem& sys, const Ranking& r);

/// Full normal form of f modulo the basis: every term divisible by some
/// leader is eliminated.
ModuleElement normal_form(const ModuleElement& f, const std::vector<ModuleElement>& basis);

/// S-polynomial of two elements whose leaders share a component.
ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g);

/// E_j = canonicalized exponents of basis leaders with component j,
/// for j = 1..n.
std::vector<ExponentMatrix> leader_matrices(const std::vector<ModuleElement>& basis,
                                            int m, int n);

}  // namespace kolchin
