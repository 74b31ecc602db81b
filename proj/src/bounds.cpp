#include "kolchin/bounds.hpp"

#include <algorithm>

#include "kolchin/errors.hpp"

namespace kolchin {

std::optional<std::int64_t> jacobi_number(
    const std::vector<std::vector<std::optional<std::int64_t>>>& matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n) throw InvalidInput("jacobi_number needs a square matrix");
  if (n == 0) return 0;
  if (n > 24) throw InvalidInput("jacobi_number matrix too large");

  // best[mask] = max transversal sum of the first popcount(mask) rows into
  // the column set mask
  const std::size_t full = (std::size_t(1) << n) - 1;
  std::vector<std::optional<std::int64_t>> best(full + 1);
  best[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const int row = __builtin_popcountll(mask) - 1;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (std::size_t(1) << col))) continue;
      const auto& prev = best[mask ^ (std::size_t(1) << col)];
      const auto& entry = matrix[static_cast<std::size_t>(row)][col];
      if (!prev || !entry) continue;
      const std::int64_t candidate = *prev + *entry;
      if (!best[mask] || candidate > *best[mask]) best[mask] = candidate;
    }
  }
  return best[full];
}

namespace {

void require_positive_orders(const std::vector<Int>& orders) {
  if (orders.empty()) throw InvalidInput("at least one order is required");
  for (const auto& e : orders)
    if (e < 1) throw InvalidInput("orders must be positive integers");
}

Int codim2_value(const std::vector<Int>& orders) {
  Int sum = 0, maxe = 0, pairs = 0;
  for (const auto& e : orders) {
    sum += e;
    maxe = std::max(maxe, e);
  }
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j) pairs += orders[i] * orders[j];
  return sum * maxe + pairs;
}

Int codim4_value(const Int& e, std::vector<std::string>& flags) {
  const Int poly = 3 * e * e * e * e + 6 * e * e * e + 11 * e * e + 8 * e + 8;
  const Int num = e * e * (e + 1) * (e + 1) * poly;
  if (num % 24 != 0)
    flags.push_back("codim-4 closed form is not divisible by 24 at e=" + to_decimal(e));
  return num / 24;
}

Int codim5_value(const Int& e, std::vector<std::string>& flags) {
  // Transcribed as printed, including the repeated (e+1)^2 factor; the
  // symbolic derivation of bound_general is the cross-check.
  Int poly = 0;
  const Int coeffs[] = {288, 480, 952, 1264, 1592, 1648, 1529, 1174, 775, 420, 183, 54, 9};
  Int power = 1;
  for (const Int& c : coeffs) {
    poly += c * power;
    power *= e;
  }
  const Int num = e * e * (e + 1) * (e + 1) * poly * (e + 1) * (e + 1);
  if (num % 1152 != 0)
    flags.push_back("codim-5 closed form is not divisible by 1152 at e=" + to_decimal(e));
  return num / 1152;
}

}  // namespace

BoundReport bound_closed(int codim, const std::vector<Int>& orders) {
  if (codim < 0) throw InvalidInput("codimension must be nonnegative");
  if (codim > 5)
    throw UnsupportedCodim("no closed form above codimension 5; use the general bound");
  require_positive_orders(orders);
  if (codim >= 3 && orders.size() != 1)
    throw MultipleOrdersUnsupported(
        "codimension >= 3 bounds are stated for ideals with a single order");

  BoundReport report;
  report.codim = codim;
  report.orders = orders;
  report.method = "closed";
  switch (codim) {
    case 0:
      report.bound = static_cast<long>(orders.size());
      break;
    case 1:
      for (const auto& e : orders) report.bound += e;
      break;
    case 2:
      report.bound = codim2_value(orders);
      break;
    case 3: {
      const Int& e = orders[0];
      report.bound = e * e * (e + 1) * (e + 1) / 2;
      break;
    }
    case 4:
      report.bound = codim4_value(orders[0], report.discrepancy_flags);
      break;
    case 5:
      report.bound = codim5_value(orders[0], report.discrepancy_flags);
      break;
  }
  return report;
}

BoundReport bound_general(int codim, const Int& e) {
  if (codim < 1) throw InvalidInput("the general bound needs codimension >= 1");
  if (e < 1) throw InvalidInput("the general bound needs a positive order");
  const int tau = codim;

  // Remaining expression after all degree reductions, in the shifted
  // variable where the slack polynomial lies in W:
  //   P(s) = C(s+tau+e, tau) - C(s+tau, tau).
  // Its minimizing coefficients are exactly the sequentially forced b_i
  // (each one the leading coefficient of the remaining polynomial), and
  // the final entry is the maximal constant once the free b_0 is set to 0.
  const NumericalPolynomial cap = NumericalPolynomial::basis(tau);
  const NumericalPolynomial p = shift(cap, e) - cap;

  BoundReport report;
  report.codim = codim;
  report.orders = {e};
  report.method = "general";
  BoundReport::Derivation trace;
  const MinimizingCoefficients mc = minimizing_coefficients(p, &trace.stages);
  report.bound = mc.b.back();

  // Rebuild the slack polynomial with the free constant zeroed and check
  // that the difference collapses to the bound; each b_i must be forced.
  MinimizingCoefficients slack = mc;
  slack.b.back() = 0;
  const NumericalPolynomial residual = p - reconstruct(slack);
  if (residual.degree() > 0)
    throw NonForcedCoefficient("slack reconstruction left a nonconstant residual");
  if (residual.coeff(0) != report.bound)
    throw NonForcedCoefficient("residual constant disagrees with the forced b_0");

  trace.b = slack.b;
  trace.c.assign(trace.b.size(), 0);
  Int suffix = 0;
  for (std::size_t k = 0; k < trace.b.size(); ++k) {
    suffix += trace.b[k];
    trace.c[k] = suffix;  // c_i = sum of b_j for j >= i, indexed like b
  }
  report.derivation = std::move(trace);

  if (tau >= 1 && tau <= 5) {
    const BoundReport closed = bound_closed(tau, {e});
    if (closed.bound != report.bound)
      report.discrepancy_flags.push_back(
          "closed-form codim-" + std::to_string(tau) + " bound " +
          to_decimal(closed.bound) + " differs from derived bound " +
          to_decimal(report.bound) + " at e=" + to_decimal(e));
  }
  return report;
}

namespace {

// e_j = max order of the f_j-part over all generators; components that
// never occur get the minimal admissible order 1.
std::vector<Int> component_orders(const GradedSystem& sys) {
  std::vector<Int> orders(static_cast<std::size_t>(sys.n), 0);
  for (const auto& g : sys.generators)
    for (const auto& [t, c] : g.terms()) {
      auto& e = orders[static_cast<std::size_t>(t.component - 1)];
      e = std::max(e, Int(order_of(t)));
    }
  for (auto& e : orders)
    if (e == 0) e = 1;
  return orders;
}

}  // namespace

BoundVerdict check_bound_against_system(const GradedSystem& sys) {
  validate(sys);
  BoundVerdict verdict;
  verdict.invariants = invariants_of(charpoly(sys), sys.m);
  if (verdict.invariants.null_module) {
    verdict.holds = true;  // nothing to bound
    return verdict;
  }

  std::vector<Int> orders;
  if (sys.form == GradedSystem::Form::generators) {
    orders = component_orders(sys);
  } else {
    if (sys.orders.empty())
      throw InvalidInput("leader-matrix systems need explicit generator orders");
    for (auto e : sys.orders) orders.emplace_back(e);
  }

  const int tau = verdict.invariants.codim;
  if (tau >= 3 && orders.size() > 1)
    throw MultipleOrdersUnsupported(
        "codimension >= 3 bounds apply to single-component systems");
  if (tau <= 5) {
    verdict.report = bound_closed(tau, orders);
  } else {
    verdict.report = bound_general(tau, orders[0]);
  }
  verdict.holds = verdict.invariants.typical_dimension <= verdict.report->bound;
  return verdict;
}

ExponentMatrix codim3_witness_matrix(std::int64_t k) {
  if (k < 1) throw InvalidInput("the witness family needs k >= 1");
  ExponentMatrix e;
  e.m = 4;
  e.rows.push_back({k, 0, 0, 0});
  e.rows.push_back({0, k, 0, 0});
  for (std::int64_t i = 1; i <= k - 1; ++i) e.rows.push_back({k - i, 0, i * k, i});
  e.rows.push_back({0, 0, k * k, k});
  return e;
}

GradedSystem codim3_witness_system(std::int64_t k) {
  GradedSystem sys;
  sys.m = 4;
  sys.n = 1;
  sys.form = GradedSystem::Form::leader_matrices;
  sys.leader_matrices = {codim3_witness_matrix(k)};
  sys.degrees = {0};
  sys.orders = {k};
  return sys;
}

}  // namespace kolchin
