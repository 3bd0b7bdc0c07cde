// SPDX-License-Identifier: Apache-2.0
#include "intmult/grid.hpp"
#include "intmult/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace intmult {

std::optional<GridShape> grid_shape(const Poset& p) {
  const std::size_t total = p.size();
  for (std::size_t m = 1; m <= total; ++m) {
    if (total % m) continue;
    if (p.same_order(*make_grid(m, total / m))) return GridShape{m, total / m};
  }
  return std::nullopt;
}

namespace {

GridShape require_grid(const Poset& p) {
  auto shape = grid_shape(p);
  if (!shape) throw NotAGrid("poset is not a 2D grid in canonical numbering");
  return *shape;
}

} // namespace

GridInterval grid_interval(const Interval& i) {
  const Poset& p = *i.poset();
  GridInterval gi;
  gi.shape = require_grid(p);
  const GridShape& s = gi.shape;
  auto by_y = [&](Element a, Element b) { return s.y(a) < s.y(b); };
  gi.sources = p.sources(i.members());
  gi.sinks = p.sinks(i.members());
  std::sort(gi.sources.begin(), gi.sources.end(), by_y);
  std::sort(gi.sinks.begin(), gi.sinks.end(), by_y);
  for (std::size_t k = 0; k + 1 < gi.sources.size(); ++k) {
    Element a = gi.sources[k], b = gi.sources[k + 1];
    if (!(s.y(a) < s.y(b) && s.x(a) > s.x(b))) throw std::logic_error("grid sources do not form a staircase");
    gi.source_joins.push_back(s.at(std::max(s.x(a), s.x(b)), std::max(s.y(a), s.y(b))));
  }
  for (std::size_t k = 0; k + 1 < gi.sinks.size(); ++k) {
    Element a = gi.sinks[k], b = gi.sinks[k + 1];
    if (!(s.y(a) < s.y(b) && s.x(a) > s.x(b))) throw std::logic_error("grid sinks do not form a staircase");
    gi.sink_meets.push_back(s.at(std::min(s.x(a), s.x(b)), std::min(s.y(a), s.y(b))));
  }
  return gi;
}

SplitMorphism grid_morphism(const Interval& i) {
  const Poset& p = *i.poset();
  GridInterval gi = grid_interval(i);
  ElementList up = p.sources(proper_up_set(i));
  ElementList down = p.sinks(proper_down_set(i));

  ElementList rows = gi.source_joins;
  rows.insert(rows.end(), up.begin(), up.end());
  const std::size_t top = rows.size();
  rows.insert(rows.end(), gi.sinks.begin(), gi.sinks.end());
  ElementList cols = gi.sources;
  const std::size_t left = cols.size();
  cols.insert(cols.end(), down.begin(), down.end());
  cols.insert(cols.end(), gi.sink_meets.begin(), gi.sink_meets.end());
  FormalMorphism g(i.poset(), rows, cols);

  for (std::size_t k = 0; k < gi.source_joins.size(); ++k) {
    g.set(k, k, 1);
    g.set(k, k + 1, -1);
  }
  // Sources are y-sorted, so the first comparable one has minimal y.
  for (std::size_t k = 0; k < up.size(); ++k) {
    std::size_t col = 0;
    while (!p.leq(gi.sources[col], up[k])) ++col;
    g.set(gi.source_joins.size() + k, col, 1);
  }
  for (std::size_t k = 0; k < down.size(); ++k) {
    std::size_t r = 0;
    while (!p.leq(down[k], gi.sinks[r])) ++r;
    g.set(top + r, left + k, 1);
  }
  for (std::size_t k = 0; k < gi.sink_meets.size(); ++k) {
    g.set(top + k, left + down.size() + k, 1);
    g.set(top + k + 1, left + down.size() + k, -1);
  }
  std::size_t j = 0;
  while (j < gi.sinks.size() && !p.leq(gi.sources.front(), gi.sinks[j])) ++j;
  if (j == gi.sinks.size()) throw std::logic_error("no sink above the first grid source");
  g.set(top + j, 0, 1);
  return SplitMorphism{g, top, left};
}

std::size_t grid_multiplicity(const PersistenceModule& m, const Interval& i) {
  return split_rank_formula(m, grid_morphism(i));
}

std::size_t reduced_rank_multiplicity(const PersistenceModule& m, const Interval& i) {
  SplitMorphism sm = grid_morphism(i);
  DenseMatrix full = evaluate(m, sm.g);
  DenseMatrix a = evaluate(m, sm.g1());
  DenseMatrix b = evaluate(m, sm.g2());
  std::vector<std::size_t> lower_rows, left_cols;
  for (std::size_t r = a.rows(); r < full.rows(); ++r) lower_rows.push_back(r);
  for (std::size_t c = 0; c < a.cols(); ++c) left_cols.push_back(c);
  DenseMatrix c = full.select_rows(lower_rows).select_cols(left_cols);
  DenseMatrix reduced = left_nullspace(b) * c * nullspace(a);
  return rank(reduced);
}

} // namespace intmult
