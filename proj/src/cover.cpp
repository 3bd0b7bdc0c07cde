// SPDX-License-Identifier: Apache-2.0
#include "intmult/cover.hpp"
#include "intmult/errors.hpp"

#include <algorithm>
#include <limits>

namespace intmult {

namespace {

struct LiftSearch {
  const Poset& z;
  // Variables 0..cols-1 are columns, cols.. are rows.
  std::size_t cols;
  std::vector<std::vector<std::size_t>> neighbours;
  std::vector<ElementList> domains;
  std::vector<std::optional<Element>> value;

  bool compatible(std::size_t u, Element a, Element b) const {
    return u < cols ? z.leq(a, b) : z.leq(b, a);
  }

  bool run() {
    std::size_t best = value.size(), best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < value.size(); ++v)
      if (!value[v] && domains[v].size() < best_size) {
        best = v;
        best_size = domains[v].size();
      }
    if (best == value.size()) return true;
    const ElementList options = domains[best];
    for (Element a : options) {
      std::vector<std::pair<std::size_t, ElementList>> saved;
      bool dead = false;
      for (auto w : neighbours[best]) {
        if (value[w]) continue;
        ElementList kept;
        for (Element b : domains[w])
          if (compatible(best, a, b)) kept.push_back(b);
        saved.emplace_back(w, domains[w]);
        domains[w] = std::move(kept);
        if (domains[w].empty()) {
          dead = true;
          break;
        }
      }
      if (!dead) {
        value[best] = a;
        if (run()) return true;
        value[best].reset();
      }
      for (auto& [w, d] : saved) domains[w] = std::move(d);
    }
    return false;
  }
};

// Tries to write target = sum_i lambda_i * cand_i with integer lambda over Q.
bool integer_combination(const std::vector<std::vector<Rational>>& candidates, const std::vector<Rational>& target) {
  if (candidates.empty()) {
    return std::all_of(target.begin(), target.end(), [](const Rational& v) { return v == 0; });
  }
  const Field q = Field::rationals();
  DenseMatrix a(q, target.size(), candidates.size());
  DenseMatrix b(q, target.size(), 1);
  for (std::size_t r = 0; r < target.size(); ++r) {
    b.set(r, 0, Scalar(q, target[r]));
    for (std::size_t k = 0; k < candidates.size(); ++k) a.set(r, k, Scalar(q, candidates[k][r]));
  }
  auto x = solve(a, b);
  if (!x) return false;
  for (const auto& v : x->rationals())
    if (boost::multiprecision::denominator(v) != 1) return false;
  return true;
}

} // namespace

std::optional<CoverWitness> covers(const OrderMap& zeta, const FormalMorphism& g) {
  if (!zeta.codomain()->same_order(*g.poset())) throw PosetMismatch("formal morphism is not over the codomain of zeta");
  const std::size_t nc = g.col_count(), nr = g.row_count();
  LiftSearch s{*zeta.domain(), nc, std::vector<std::vector<std::size_t>>(nc + nr), {}, std::vector<std::optional<Element>>(nc + nr)};
  for (std::size_t i = 0; i < nc; ++i) s.domains.push_back(zeta.fiber(g.col_objects()[i]));
  for (std::size_t j = 0; j < nr; ++j) s.domains.push_back(zeta.fiber(g.row_objects()[j]));
  for (std::size_t j = 0; j < nr; ++j)
    for (std::size_t i = 0; i < nc; ++i)
      if (g.coeff(j, i) != 0) {
        s.neighbours[i].push_back(nc + j);
        s.neighbours[nc + j].push_back(i);
      }
  for (const auto& d : s.domains)
    if (d.empty()) return std::nullopt;
  if (!s.run()) return std::nullopt;

  CoverWitness w{FormalMorphism(zeta.domain(), {}, {}), {}, {}};
  for (std::size_t i = 0; i < nc; ++i) w.col_lift.push_back(*s.value[i]);
  for (std::size_t j = 0; j < nr; ++j) w.row_lift.push_back(*s.value[nc + j]);
  FormalMorphism lifted(zeta.domain(), w.row_lift, w.col_lift);
  for (std::size_t j = 0; j < nr; ++j)
    for (std::size_t i = 0; i < nc; ++i) lifted.set(j, i, g.coeff(j, i));
  w.lifted = std::move(lifted);
  return w;
}

SplitMorphism reduce_redundant(const SplitMorphism& sm) {
  const FormalMorphism& g = sm.g;
  const Poset& p = *g.poset();
  std::vector<bool> keep_col(g.col_count(), true), keep_row(g.row_count(), true);

  auto column = [&](std::size_t i) {
    std::vector<Rational> v;
    for (std::size_t r = 0; r < g.row_count(); ++r) v.push_back(g.coeff(r, i));
    return v;
  };
  auto row = [&](std::size_t j) {
    std::vector<Rational> v;
    for (std::size_t c = 0; c < g.col_count(); ++c) v.push_back(g.coeff(j, c));
    return v;
  };

  for (std::size_t j = g.col_count(); j-- > sm.left_cols;) {
    std::vector<std::vector<Rational>> cands;
    for (std::size_t i = sm.left_cols; i < g.col_count(); ++i)
      if (i != j && keep_col[i] && p.leq(g.col_objects()[j], g.col_objects()[i])) cands.push_back(column(i));
    if (integer_combination(cands, column(j))) keep_col[j] = false;
  }
  for (std::size_t j = sm.top_rows; j-- > 0;) {
    std::vector<std::vector<Rational>> cands;
    for (std::size_t i = 0; i < sm.top_rows; ++i)
      if (i != j && keep_row[i] && p.leq(g.row_objects()[i], g.row_objects()[j])) cands.push_back(row(i));
    if (integer_combination(cands, row(j))) keep_row[j] = false;
  }

  std::vector<std::size_t> rows, cols;
  std::size_t top = 0, left = 0;
  for (std::size_t j = 0; j < g.row_count(); ++j)
    if (keep_row[j]) {
      rows.push_back(j);
      top += j < sm.top_rows;
    }
  for (std::size_t i = 0; i < g.col_count(); ++i)
    if (keep_col[i]) {
      cols.push_back(i);
      left += i < sm.left_cols;
    }
  return SplitMorphism{g.select(rows, cols), top, left};
}

std::optional<EssentialCover> essentially_covers(const OrderMap& zeta, const Interval& i) {
  if (!zeta.codomain()->same_order(*i.poset())) throw PosetMismatch("interval is not in the codomain of zeta");
  std::optional<EssentialCover> found;
  for_each_choice(build_presentation(i), [&](const PresentationData& pd) {
    if (found) return;
    SplitMorphism g = assemble_g(pd);
    if (auto w = covers(zeta, g.g)) {
      found = EssentialCover{std::move(*w), pd, g, false};
      return;
    }
    SplitMorphism r = reduce_redundant(g);
    if (r.g == g.g) return;
    if (auto w = covers(zeta, r.g)) found = EssentialCover{std::move(*w), pd, r, true};
  });
  return found;
}

std::optional<CoverWitness> covers_supplied(const OrderMap& zeta, const Interval& i, const SplitMorphism& g,
                                            const PersistenceModule& m) {
  const std::size_t supplied = split_rank_formula(m, g);
  const std::size_t canonical = interval_multiplicity(m, i);
  if (supplied != canonical)
    throw NotEssentiallyCovering("supplied morphism gives " + std::to_string(supplied) + " but the canonical formula gives " +
                                 std::to_string(canonical));
  return covers(zeta, g.g);
}

std::vector<Interval> interval_components(const PersistenceModule& l) {
  const Poset& z = *l.poset();
  const std::size_t n = z.size();
  for (std::size_t x = 0; x < n; ++x)
    if (l.dim(x) > 1)
      throw NotIntervalDecomposableRestriction("dimension " + std::to_string(l.dim(x)) + " at " + z.label(x) +
                                               ": powers and non-thin modules are rejected");
  std::vector<std::size_t> comp(n, n);
  std::vector<Interval> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (l.dim(start) == 0 || comp[start] != n) continue;
    ElementList members, stack{start};
    comp[start] = out.size();
    while (!stack.empty()) {
      Element x = stack.back();
      stack.pop_back();
      members.push_back(x);
      auto visit = [&](Element a, Element b, Element other) {
        if (l.dim(other) == 1 && comp[other] == n && !l.arrow_map(a, b).is_zero()) {
          comp[other] = out.size();
          stack.push_back(other);
        }
      };
      for (auto y : z.upper_covers(x)) visit(x, y, y);
      for (auto y : z.lower_covers(x)) visit(y, x, y);
    }
    try {
      out.emplace_back(l.poset(), members);
    } catch (const InvalidInterval& e) {
      throw NotIntervalDecomposableRestriction(std::string("support component is not an interval: ") + e.what());
    }
  }
  for (auto [x, y] : z.hasse_arrows())
    if (l.dim(x) == 1 && l.dim(y) == 1 && comp[x] == comp[y] && l.arrow_map(x, y).is_zero())
      throw NotIntervalDecomposableRestriction("zero map inside a support component at " + z.label(x) + "->" + z.label(y));
  return out;
}

std::size_t bar_d(const PersistenceModule& n, const PersistenceModule& l) {
  auto parts = interval_components(l);
  if (parts.empty()) throw NotIntervalDecomposableRestriction("bar-d of the zero module is undefined");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& j : parts) best = std::min(best, interval_multiplicity(n, j));
  return best;
}

namespace {

std::size_t restricted_bar_d(const PersistenceModule& m, const Interval& i, const OrderMap& zeta) {
  PersistenceModule rm = restrict_module(zeta, m);
  PersistenceModule rv = restrict_module(zeta, interval_module(i, m.field()));
  return bar_d(rm, rv);
}

} // namespace

std::size_t multiplicity_via_cover(const PersistenceModule& m, const Interval& i, const OrderMap& zeta) {
  if (!essentially_covers(zeta, i)) throw NotEssentiallyCovering("zeta does not essentially cover " + i.to_string());
  return restricted_bar_d(m, i, zeta);
}

std::size_t multiplicity_via_cover(const PersistenceModule& m, const Interval& i, const OrderMap& zeta,
                                   const SplitMorphism& g) {
  if (!covers_supplied(zeta, i, g, m)) throw NotEssentiallyCovering("supplied morphism does not lift along zeta");
  return restricted_bar_d(m, i, zeta);
}

} // namespace intmult
