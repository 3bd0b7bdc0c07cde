// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "intmult/module.hpp"

#include <functional>

namespace intmult {

/// Index sets and choice data for one interval I.
struct PresentationData {
  Interval interval;
  ElementList sc;                  ///< sources of I
  ElementList sk;                  ///< sinks of I
  std::vector<LabeledJoin> sc1;    ///< labelled pre-joins of source pairs
  std::vector<LabeledJoin> sk1;    ///< labelled pre-meets of sink pairs
  ElementList up_sources;          ///< sources of the proper up-set
  ElementList down_sinks;          ///< sinks of the proper down-set
  ElementList c_map;               ///< c_map[k] is a source of I below up_sources[k]
  ElementList d_map;               ///< d_map[k] is a sink of I above down_sinks[k]
  Arrow pivot{0, 0};               ///< (b, a): sink b, source a with a <= b
};

/// Fills every index set and applies the smallest-index default choices.
PresentationData build_presentation(const Interval& i);

/// Admissible values for each choice slot of `pd`.
std::vector<ElementList> c_map_options(const PresentationData& pd);
std::vector<ElementList> d_map_options(const PresentationData& pd);
std::vector<Arrow> pivot_options(const PresentationData& pd);

/// Calls `visit` once for every admissible (c_map, d_map, pivot) triple.
void for_each_choice(const PresentationData& pd, const std::function<void(const PresentationData&)>& visit);
/// Number of admissible triples (saturating at SIZE_MAX).
std::size_t choice_count(const PresentationData& pd);

FormalMorphism epsilon1(const PresentationData& pd);
FormalMorphism pi1(const PresentationData& pd);
FormalMorphism lambda(const PresentationData& pd);

/// g = [[g1, 0], [g3, g2]] with g1 occupying the first `top_rows` rows and
/// `left_cols` columns.
struct SplitMorphism {
  FormalMorphism g;
  std::size_t top_rows = 0;
  std::size_t left_cols = 0;

  FormalMorphism g1() const;
  FormalMorphism g2() const;
};

SplitMorphism assemble_g(const PresentationData& pd);

/// epsilon1 with one extra row p_{b, c'(b)} for b = max(I); throws
/// NotInjectiveInterval unless I is the down-set of its maximum.
FormalMorphism epsilon1_injective_extension(const PresentationData& pd);

} // namespace intmult
