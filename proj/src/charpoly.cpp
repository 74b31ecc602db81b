#include "kolchin/charpoly.hpp"

#include <algorithm>
#include <map>

#include "kolchin/errors.hpp"
#include "kolchin/groebner.hpp"

namespace kolchin {

NumericalPolynomial charpoly(const GradedSystem& sys) {
  validate(sys);
  std::vector<ExponentMatrix> matrices;
  if (sys.form == GradedSystem::Form::leader_matrices) {
    matrices = sys.leader_matrices;
  } else {
    matrices = leader_matrices(buchberger(sys, sys.ranking()), sys.m, sys.n);
  }
  NumericalPolynomial total;
  for (std::size_t j = 0; j < matrices.size(); ++j) {
    NumericalPolynomial w = delta1(dimension_polynomial(matrices[j]).polynomial);
    const std::int64_t alpha = j < sys.degrees.size() ? sys.degrees[j] : 0;
    if (alpha != 0) w = shift(w, Int(-alpha));
    total = total + w;
  }
  return total;
}

std::vector<ExponentRow> monomials_of_order(int m, std::int64_t s) {
  std::vector<ExponentRow> out;
  ExponentRow current(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
    if (pos == m - 1) {
      current[static_cast<std::size_t>(pos)] = left;
      out.push_back(current);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      current[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (m >= 1 && s >= 0) rec(rec, 0, s);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Incremental exact row reduction: feeds rows one by one, keeps echelon
// pivot rows, counts the rank.
class RationalRowEchelon {
 public:
  explicit RationalRowEchelon(std::size_t cols) : cols_(cols) {}

  void add_row(std::vector<Rat> row) {
    for (;;) {
      std::size_t lead = cols_;
      for (std::size_t k = 0; k < cols_; ++k)
        if (row[k] != 0) {
          lead = k;
          break;
        }
      if (lead == cols_) return;  // reduced to zero
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rat inv = row[lead];
        for (auto& x : row) x /= inv;
        pivots_.emplace(lead, std::move(row));
        ++rank_;
        return;
      }
      const Rat factor = row[lead];
      const std::vector<Rat>& pivot = it->second;
      for (std::size_t k = lead; k < cols_; ++k) row[k] -= factor * pivot[k];
    }
  }

  int rank() const { return rank_; }

 private:
  std::size_t cols_;
  std::map<std::size_t, std::vector<Rat>> pivots_;
  int rank_ = 0;
};

}  // namespace

std::vector<Int> hilbert_oracle(const GradedSystem& sys, int s_max) {
  validate(sys);
  if (sys.form != GradedSystem::Form::generators)
    throw UnsupportedRing("the rank oracle needs explicit generators");
  if (s_max < 0) throw InvalidInput("hilbert_oracle requires s_max >= 0");
  for (const auto& g : sys.generators)
    if (!g.is_homogeneous())
      throw NonHomogeneousInput("generator mixes terms of different order");

  std::vector<Int> dims;
  dims.reserve(static_cast<std::size_t>(s_max) + 1);
  for (std::int64_t s = 0; s <= s_max; ++s) {
    // columns: all terms of order s
    std::map<ModuleTerm, std::size_t, TermLess> column;
    const auto monos = monomials_of_order(sys.m, s);
    for (int j = 1; j <= sys.n; ++j)
      for (const auto& exp : monos)
        column.emplace(ModuleTerm{exp, j}, column.size());

    RationalRowEchelon echelon(column.size());
    for (const auto& g : sys.generators) {
      if (g.is_zero()) continue;
      const std::int64_t delta = s - g.degree();
      if (delta < 0) continue;
      for (const auto& mult : monomials_of_order(sys.m, delta)) {
        const ModuleElement h = monomial_multiple(g, mult);
        std::vector<Rat> row(column.size(), Rat(0));
        for (const auto& [t, c] : h.terms()) row[column.at(t)] = c;
        echelon.add_row(std::move(row));
      }
    }
    dims.push_back(Int(static_cast<long>(column.size())) - echelon.rank());
  }
  return dims;
}

Invariants invariants_of(const NumericalPolynomial& p, int m) {
  Invariants inv;
  if (p.is_zero()) {
    inv.null_module = true;
    return inv;
  }
  inv.type = p.degree();
  inv.codim = m - 1 - inv.type;
  inv.typical_dimension = p.leading();
  return inv;
}

}  // namespace kolchin
