#include "kolchin/exponent_matrix.hpp"

#include <algorithm>
#include <map>

#include "kolchin/errors.hpp"

namespace kolchin {

std::int64_t order_of(const ExponentRow& row) {
  std::int64_t s = 0;
  for (auto v : row) s += v;
  return s;
}

bool dominates(const ExponentRow& b, const ExponentRow& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

void validate(const ExponentMatrix& e) {
  if (e.m < 1) throw InvalidInput("exponent matrix needs m >= 1");
  for (const auto& row : e.rows) {
    if (static_cast<int>(row.size()) != e.m)
      throw InvalidInput("exponent row length does not match m");
    for (auto v : row)
      if (v < 0) throw InvalidInput("exponent entries must be nonnegative");
  }
}

ExponentMatrix canonicalize(const ExponentMatrix& e) {
  validate(e);
  ExponentMatrix out;
  out.m = e.m;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < e.rows.size() && keep; ++j) {
      if (i == j) continue;
      // drop row i if some other row is dominated by it; ties keep the
      // first occurrence
      if (dominates(e.rows[i], e.rows[j]) && (e.rows[j] != e.rows[i] || j < i))
        keep = false;
    }
    if (keep) out.rows.push_back(e.rows[i]);
  }
  std::sort(out.rows.begin(), out.rows.end());
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
  return out;
}

namespace {

// Count points of order <= budget extending the current prefix, given the
// rows whose prefix is already dominated. Once no row can dominate, all
// completions count at once.
Int count_rec(const std::vector<const ExponentRow*>& alive, int depth, int m,
              std::int64_t budget) {
  if (alive.empty())
    return binom(Int(budget + (m - depth)), m - depth);
  if (depth == m) return 0;  // some row fully dominated the point
  Int total = 0;
  for (std::int64_t v = 0; v <= budget; ++v) {
    std::vector<const ExponentRow*> next;
    for (const ExponentRow* row : alive)
      if ((*row)[static_cast<std::size_t>(depth)] <= v) next.push_back(row);
    total += count_rec(next, depth + 1, m, budget - v);
  }
  return total;
}

// The polynomial C(s + m - c, m), via interpolation at s = 0..m.
NumericalPolynomial shifted_full_binomial(int m, std::int64_t c) {
  std::vector<Int> values(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i)
    values[static_cast<std::size_t>(i)] = binom(Int(i + m - c), m);
  return from_values(values);
}

std::int64_t stability_bound_of(const ExponentMatrix& e) {
  if (e.rows.empty()) return 0;
  ExponentRow join(static_cast<std::size_t>(e.m), 0);
  for (const auto& row : e.rows)
    for (std::size_t k = 0; k < row.size(); ++k) join[k] = std::max(join[k], row[k]);
  return order_of(join);
}

}  // namespace

Int brute_count(const ExponentMatrix& e, std::int64_t s) {
  validate(e);
  if (s < 0) throw InvalidInput("brute_count requires s >= 0");
  std::vector<const ExponentRow*> alive;
  alive.reserve(e.rows.size());
  for (const auto& row : e.rows) alive.push_back(&row);
  return count_rec(alive, 0, e.m, s);
}

DimPolyResult dimension_polynomial(const ExponentMatrix& e) {
  const ExponentMatrix canon = canonicalize(e);
  const std::int64_t s0 = stability_bound_of(e);
  const int m = canon.m;
  const std::size_t n = canon.rows.size();

  if (n > 20) {
    // 2^n subsets is past desk scale; interpolate the counting function on
    // the stability window instead.
    std::vector<Int> values(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i)
      values[static_cast<std::size_t>(i)] = brute_count(canon, s0 + i);
    return {shift(from_values(values), Int(-s0)), s0};
  }

  // Inclusion-exclusion: sum over subsets J of (-1)^|J| C(s + m - ord(vJ), m),
  // with vJ the componentwise max. Joins extend one row at a time.
  std::vector<ExponentRow> join(std::size_t(1) << n);
  join[0] = ExponentRow(static_cast<std::size_t>(m), 0);
  std::map<std::int64_t, Int> weight_by_order;
  weight_by_order[0] += 1;
  for (std::size_t mask = 1; mask < join.size(); ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    join[mask] = join[mask & (mask - 1)];
    const ExponentRow& row = canon.rows[low];
    for (std::size_t k = 0; k < row.size(); ++k)
      join[mask][k] = std::max(join[mask][k], row[k]);
    const bool odd = __builtin_popcountll(mask) % 2 == 1;
    weight_by_order[order_of(join[mask])] += odd ? -1 : 1;
  }

  NumericalPolynomial poly;
  for (const auto& [c, w] : weight_by_order) {
    if (w == 0) continue;
    poly = poly + w * shifted_full_binomial(m, c);
  }
  return {poly, s0};
}

Decomposition decompose(const ExponentMatrix& e, const ExponentRow& pivot) {
  validate(e);
  if (static_cast<int>(pivot.size()) != e.m)
    throw InvalidInput("pivot length does not match m");
  for (auto v : pivot)
    if (v < 0) throw InvalidInput("pivot entries must be nonnegative");

  Decomposition d;
  d.extended = e;
  d.extended.rows.push_back(pivot);
  d.remainder.m = e.m;
  for (const auto& row : e.rows) {
    ExponentRow r(row.size());
    for (std::size_t k = 0; k < row.size(); ++k)
      r[k] = std::max<std::int64_t>(row[k] - pivot[k], 0);
    d.remainder.rows.push_back(std::move(r));
  }
  d.order_shift = order_of(pivot);
  return d;
}

}  // namespace kolchin
