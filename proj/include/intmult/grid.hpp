// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "intmult/multiplicity.hpp"

#include <optional>

namespace intmult {

struct GridShape {
  std::size_t m = 0; ///< length of each row (x coordinate range)
  std::size_t n = 0; ///< number of rows (y coordinate range)

  std::size_t x(Element e) const { return e % m + 1; }
  std::size_t y(Element e) const { return e / m + 1; }
  Element at(std::size_t x, std::size_t y) const { return (y - 1) * m + (x - 1); }
};

/// Shape of a poset that coincides with make_grid(m, n), if any.
std::optional<GridShape> grid_shape(const Poset& p);

/// Staircase description of a grid interval.
struct GridInterval {
  GridShape shape;
  ElementList sources;           ///< a_1..a_k, y strictly increasing
  ElementList sinks;             ///< b_1..b_l, y strictly increasing
  ElementList source_joins;      ///< a_{i,i+1} = a_i v a_{i+1}
  ElementList sink_meets;        ///< b_{i,i+1} = b_i ^ b_{i+1}
};

GridInterval grid_interval(const Interval& i);

/// The minimal grid presentation morphism with the y-minimal choice maps and
/// the pivot (b_j, a_1) for the first sink b_j above a_1.
SplitMorphism grid_morphism(const Interval& i);

std::size_t grid_multiplicity(const PersistenceModule& m, const Interval& i);

/// Rank of the block that survives after clearing g1 and g2: C restricted to
/// ker M(g1) and projected to the cokernel of M(g2).
std::size_t reduced_rank_multiplicity(const PersistenceModule& m, const Interval& i);

} // namespace intmult
