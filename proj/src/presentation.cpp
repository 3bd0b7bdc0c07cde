// SPDX-License-Identifier: Apache-2.0
#include "intmult/presentation.hpp"
#include "intmult/errors.hpp"

#include <limits>
#include <numeric>

namespace intmult {

namespace {

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

} // namespace

PresentationData build_presentation(const Interval& i) {
  const Poset& p = *i.poset();
  PresentationData pd{i, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  pd.sc = p.sources(i.members());
  pd.sk = p.sinks(i.members());
  pd.sc1 = sc1(i);
  pd.sk1 = sk1(i);
  pd.up_sources = p.sources(proper_up_set(i));
  pd.down_sinks = p.sinks(proper_down_set(i));
  for (const auto& opts : c_map_options(pd)) pd.c_map.push_back(opts.front());
  for (const auto& opts : d_map_options(pd)) pd.d_map.push_back(opts.front());
  pd.pivot = pivot_options(pd).front();
  return pd;
}

std::vector<ElementList> c_map_options(const PresentationData& pd) {
  const Poset& p = *pd.interval.poset();
  std::vector<ElementList> out;
  for (auto a : pd.up_sources) {
    ElementList opts;
    for (auto s : pd.sc)
      if (p.leq(s, a)) opts.push_back(s);
    if (opts.empty()) throw InvalidInterval("no source below " + p.label(a));
    out.push_back(std::move(opts));
  }
  return out;
}

std::vector<ElementList> d_map_options(const PresentationData& pd) {
  const Poset& p = *pd.interval.poset();
  std::vector<ElementList> out;
  for (auto b : pd.down_sinks) {
    ElementList opts;
    for (auto s : pd.sk)
      if (p.leq(b, s)) opts.push_back(s);
    if (opts.empty()) throw InvalidInterval("no sink above " + p.label(b));
    out.push_back(std::move(opts));
  }
  return out;
}

std::vector<Arrow> pivot_options(const PresentationData& pd) {
  const Poset& p = *pd.interval.poset();
  std::vector<Arrow> out;
  for (auto b : pd.sk)
    for (auto a : pd.sc)
      if (p.leq(a, b)) out.emplace_back(b, a);
  if (out.empty()) throw InvalidInterval("interval has no comparable source/sink pair");
  return out;
}

std::size_t choice_count(const PresentationData& pd) {
  const std::size_t cap = std::numeric_limits<std::size_t>::max();
  std::size_t total = pivot_options(pd).size();
  auto mul = [&](std::size_t k) { total = (k != 0 && total > cap / k) ? cap : total * k; };
  for (const auto& o : c_map_options(pd)) mul(o.size());
  for (const auto& o : d_map_options(pd)) mul(o.size());
  return total;
}

void for_each_choice(const PresentationData& pd, const std::function<void(const PresentationData&)>& visit) {
  auto copts = c_map_options(pd);
  auto dopts = d_map_options(pd);
  auto pivots = pivot_options(pd);
  PresentationData cur = pd;
  std::vector<std::size_t> cidx(copts.size(), 0), didx(dopts.size(), 0);
  // Odometer over the mixed-radix digits (c_map, d_map, pivot).
  while (true) {
    for (std::size_t k = 0; k < copts.size(); ++k) cur.c_map[k] = copts[k][cidx[k]];
    for (std::size_t k = 0; k < dopts.size(); ++k) cur.d_map[k] = dopts[k][didx[k]];
    for (const auto& pv : pivots) {
      cur.pivot = pv;
      visit(cur);
    }
    std::size_t k = 0;
    for (; k < copts.size(); ++k) {
      if (++cidx[k] < copts[k].size()) break;
      cidx[k] = 0;
    }
    if (k < copts.size()) continue;
    std::size_t l = 0;
    for (; l < dopts.size(); ++l) {
      if (++didx[l] < dopts[l].size()) break;
      didx[l] = 0;
    }
    if (l == dopts.size()) break;
  }
}

FormalMorphism epsilon1(const PresentationData& pd) {
  const PosetPtr& p = pd.interval.poset();
  ElementList rows;
  for (const auto& j : pd.sc1) rows.push_back(j.witness);
  rows.insert(rows.end(), pd.up_sources.begin(), pd.up_sources.end());
  FormalMorphism g(p, rows, pd.sc);
  auto col_of = [&](Element a) {
    for (std::size_t i = 0; i < pd.sc.size(); ++i)
      if (pd.sc[i] == a) return i;
    throw InvalidInterval("element is not a source of the interval");
  };
  for (std::size_t r = 0; r < pd.sc1.size(); ++r) {
    g.set(r, col_of(pd.sc1[r].lo), 1);
    g.set(r, col_of(pd.sc1[r].hi), -1);
  }
  for (std::size_t k = 0; k < pd.up_sources.size(); ++k) g.set(pd.sc1.size() + k, col_of(pd.c_map[k]), 1);
  return g;
}

FormalMorphism pi1(const PresentationData& pd) {
  const PosetPtr& p = pd.interval.poset();
  ElementList cols = pd.down_sinks;
  for (const auto& j : pd.sk1) cols.push_back(j.witness);
  FormalMorphism g(p, pd.sk, cols);
  auto row_of = [&](Element b) {
    for (std::size_t i = 0; i < pd.sk.size(); ++i)
      if (pd.sk[i] == b) return i;
    throw InvalidInterval("element is not a sink of the interval");
  };
  for (std::size_t k = 0; k < pd.down_sinks.size(); ++k) g.set(row_of(pd.d_map[k]), k, 1);
  for (std::size_t c = 0; c < pd.sk1.size(); ++c) {
    g.set(row_of(pd.sk1[c].lo), pd.down_sinks.size() + c, 1);
    g.set(row_of(pd.sk1[c].hi), pd.down_sinks.size() + c, -1);
  }
  return g;
}

FormalMorphism lambda(const PresentationData& pd) {
  FormalMorphism g(pd.interval.poset(), pd.sk, pd.sc);
  for (std::size_t j = 0; j < pd.sk.size(); ++j)
    for (std::size_t i = 0; i < pd.sc.size(); ++i)
      if (pd.sk[j] == pd.pivot.first && pd.sc[i] == pd.pivot.second) g.set(j, i, 1);
  return g;
}

SplitMorphism assemble_g(const PresentationData& pd) {
  FormalMorphism e = epsilon1(pd), q = pi1(pd), l = lambda(pd);
  ElementList rows = e.row_objects(), cols = e.col_objects();
  rows.insert(rows.end(), q.row_objects().begin(), q.row_objects().end());
  cols.insert(cols.end(), q.col_objects().begin(), q.col_objects().end());
  FormalMorphism g(pd.interval.poset(), rows, cols);
  const std::size_t tr = e.row_count(), lc = e.col_count();
  for (std::size_t j = 0; j < e.row_count(); ++j)
    for (std::size_t i = 0; i < e.col_count(); ++i) g.set(j, i, e.coeff(j, i));
  for (std::size_t j = 0; j < l.row_count(); ++j)
    for (std::size_t i = 0; i < l.col_count(); ++i) g.set(tr + j, i, l.coeff(j, i));
  for (std::size_t j = 0; j < q.row_count(); ++j)
    for (std::size_t i = 0; i < q.col_count(); ++i) g.set(tr + j, lc + i, q.coeff(j, i));
  return SplitMorphism{g, tr, lc};
}

FormalMorphism SplitMorphism::g1() const { return g.select(iota(0, top_rows), iota(0, left_cols)); }

FormalMorphism SplitMorphism::g2() const {
  return g.select(iota(top_rows, g.row_count()), iota(left_cols, g.col_count()));
}

FormalMorphism epsilon1_injective_extension(const PresentationData& pd) {
  const Poset& p = *pd.interval.poset();
  if (pd.sk.size() != 1) throw NotInjectiveInterval("interval " + pd.interval.to_string() + " has no maximum");
  const Element b = pd.sk.front();
  if (!p.is_down_set(pd.interval.members()))
    throw NotInjectiveInterval("interval " + pd.interval.to_string() + " is not the down-set of " + p.label(b));
  FormalMorphism e = epsilon1(pd);
  ElementList rows = e.row_objects();
  rows.push_back(b);
  FormalMorphism out(pd.interval.poset(), rows, e.col_objects());
  for (std::size_t j = 0; j < e.row_count(); ++j)
    for (std::size_t i = 0; i < e.col_count(); ++i) out.set(j, i, e.coeff(j, i));
  out.set(e.row_count(), 0, 1);
  return out;
}

} // namespace intmult
