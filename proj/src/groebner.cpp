#include "kolchin/groebner.hpp"

#include <algorithm>
#include <set>

#include "kolchin/errors.hpp"

namespace kolchin {

namespace {

bool divides(const ModuleTerm& u, const ModuleTerm& t) {
  if (u.component != t.component) return false;
  return dominates(t.exponent, u.exponent);
}

ModuleTerm lcm_of(const ModuleTerm& a, const ModuleTerm& b) {
  ModuleTerm out = a;
  for (std::size_t k = 0; k < out.exponent.size(); ++k)
    out.exponent[k] = std::max(out.exponent[k], b.exponent[k]);
  return out;
}

ExponentRow exponent_quotient(const ModuleTerm& t, const ModuleTerm& u) {
  ExponentRow q(t.exponent.size());
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = t.exponent[k] - u.exponent[k];
  return q;
}

struct Pair {
  std::size_t i, j;
  ModuleTerm lcm;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    // degree-by-degree processing, then a deterministic tiebreak
    if (auto c = compare(a.lcm, b.lcm, Ranking{}); c != 0)
      return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g) {
  const ModuleTerm& uf = f.leader();
  const ModuleTerm& ug = g.leader();
  const ModuleTerm lcm = lcm_of(uf, ug);
  ModuleElement s;
  s.add_scaled(f, 1 / f.leading_coefficient(), exponent_quotient(lcm, uf));
  s.add_scaled(g, -1 / g.leading_coefficient(), exponent_quotient(lcm, ug));
  return s;
}

ModuleElement normal_form(const ModuleElement& f, const std::vector<ModuleElement>& basis) {
  ModuleElement work = f;
  ModuleElement remainder;
  while (!work.is_zero()) {
    const ModuleTerm t = work.leader();
    const Rat c = work.leading_coefficient();
    const ModuleElement* reducer = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && divides(g.leader(), t)) {
        reducer = &g;
        break;
      }
    if (reducer) {
      work.add_scaled(*reducer, -c / reducer->leading_coefficient(),
                      exponent_quotient(t, reducer->leader()));
    } else {
      remainder.add_term(t, c);
      work.add_term(t, -c);
    }
  }
  return remainder;
}

std::vector<ModuleElement> buchberger(const GradedSystem& sys, const Ranking&) {
  validate(sys);
  if (sys.form != GradedSystem::Form::generators)
    throw UnsupportedRing(
        "Groebner computation needs explicit generators over a commutative "
        "polynomial ring; leader-matrix systems are already reduced data");

  std::vector<ModuleElement> basis;
  for (const auto& g : sys.generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw NonHomogeneousInput("generator mixes terms of different order");
    ModuleElement h = g;
    h.make_monic();
    basis.push_back(std::move(h));
  }

  std::set<Pair, PairLess> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      if (basis[i].leader().component == basis[j].leader().component)
        pending.insert({i, j, lcm_of(basis[i].leader(), basis[j].leader())});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto pair_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending.count({a, b, lcm_of(basis[a].leader(), basis[b].leader())}) > 0;
  };

  while (!pending.empty()) {
    const Pair p = *pending.begin();
    pending.erase(pending.begin());

    // product criterion (ideal case only: the classical proof multiplies
    // ring elements and does not carry over to modules of rank > 1)
    if (sys.n == 1) {
      bool coprime = true;
      const auto& a = basis[p.i].leader().exponent;
      const auto& b = basis[p.j].leader().exponent;
      for (std::size_t k = 0; k < a.size() && coprime; ++k)
        if (std::min(a[k], b[k]) > 0) coprime = false;
      if (coprime) continue;
    }
    // chain criterion
    {
      bool skip = false;
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (divides(basis[k].leader(), p.lcm) && !pair_pending(p.i, k) &&
            !pair_pending(p.j, k))
          skip = true;
      }
      if (skip) continue;
    }

    ModuleElement r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    r.make_monic();
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  // minimal basis: drop elements whose leader another leader divides
  std::vector<ModuleElement> minimal;
  std::sort(basis.begin(), basis.end(), [](const ModuleElement& a, const ModuleElement& b) {
    return compare(a.leader(), b.leader(), Ranking{}) == std::strong_ordering::less;
  });
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (divides(kept.leader(), g.leader())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // tail-reduce to the unique reduced basis
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<ModuleElement> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      ModuleElement reduced = normal_form(minimal[i], others);
      reduced.make_monic();
      if (reduced != minimal[i]) {
        minimal[i] = std::move(reduced);
        changed = true;
      }
    }
  }
  return minimal;
}

std::vector<ExponentMatrix> leader_matrices(const std::vector<ModuleElement>& basis,
                                            int m, int n) {
  std::vector<ExponentMatrix> out(static_cast<std::size_t>(n));
  for (auto& e : out) e.m = m;
  for (const auto& g : basis) {
    const ModuleTerm& u = g.leader();
    out[static_cast<std::size_t>(u.component - 1)].rows.push_back(u.exponent);
  }
  for (auto& e : out) e = canonicalize(e);
  return out;
}

}  // namespace kolchin
