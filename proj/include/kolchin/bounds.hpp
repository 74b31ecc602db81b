#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kolchin/charpoly.hpp"
#include "kolchin/graded_system.hpp"
#include "kolchin/minimizing.hpp"

namespace kolchin {

/// Maximal transversal sum of a square matrix whose entries may be
/// undefined: max over permutations sigma of sum_i a[i][sigma(i)], where a
/// transversal through any undefined entry is disqualified. Undefined
/// result iff no fully defined transversal exists. Solved as a
/// maximum-weight assignment over column subsets.
std::optional<std::int64_t> jacobi_number(
    const std::vector<std::vector<std::optional<std::int64_t>>>& matrix);

/// Result of a typical-dimension bound computation.
struct BoundReport {
  int codim = 0;
  std::vector<Int> orders;
  Int bound = 0;
  std::string method;  // "closed" or "general"

  /// Trace of the symbolic derivation: the forced coefficients
  /// (b_{tau-1}, ..., b_1, 0), their suffix sums c_i = sum_{j>=i} b_j, and
  /// the intermediate polynomial after each forcing step.
  struct Derivation {
    std::vector<Int> b;
    std::vector<Int> c;
    std::vector<NumericalPolynomial> stages;
  };
  std::optional<Derivation> derivation;

  /// Notes recorded when a symbolic derivation disagrees with a closed
  /// form (or a closed form fails an integrality check); never an error.
  std::vector<std::string> discrepancy_flags;
};

/// Closed-form bounds for codimension 0..5. Codimensions 0..2 accept the
/// per-component order list e_1..e_n; codimensions 3..5 are stated for
/// ideals and require exactly one order.
/// Throws UnsupportedCodim above 5 and MultipleOrdersUnsupported for
/// several orders at codimension >= 3.
BoundReport bound_closed(int codim, const std::vector<Int>& orders);

/// Symbolic derivation of the maximal typical dimension for an ideal with
/// generator orders <= e in codimension tau >= 1: the coefficients of the
/// slack polynomial are forced one by one by degree drops (each is the
/// leading coefficient of the remaining expression), the free constant is
/// set to zero, and the resulting constant is the bound. Cross-compares
/// with bound_closed for tau <= 5 and records disagreements as flags.
BoundReport bound_general(int codim, const Int& e);

struct BoundVerdict {
  Invariants invariants;
  std::optional<BoundReport> report;
  bool holds = false;
};

/// Computes the characteristic polynomial and invariants of the system,
/// selects the applicable bound (closed for codim <= 5, else the general
/// derivation; both need per-component generator orders), and compares.
/// Leader-matrix systems must carry explicit orders.
BoundVerdict check_bound_against_system(const GradedSystem& sys);

/// The tightness witness family for the codimension-3 bound: a rank-one
/// leader-matrix system over four indeterminates whose characteristic
/// polynomial is the constant k^2 (k+1)^2 / 2.
ExponentMatrix codim3_witness_matrix(std::int64_t k);
GradedSystem codim3_witness_system(std::int64_t k);

}  // namespace kolchin
