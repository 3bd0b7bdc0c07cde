// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "intmult/multiplicity.hpp"

#include <optional>

namespace intmult {

/// Entrywise lift of a formal morphism along zeta: column i of g is lifted to
/// col_lift[i] and row j to row_lift[j], both in the respective fibers.
struct CoverWitness {
  FormalMorphism lifted;
  std::vector<Element> col_lift;
  std::vector<Element> row_lift;
};

/// Exact backtracking search for a lift of every nonzero entry.
std::optional<CoverWitness> covers(const OrderMap& zeta, const FormalMorphism& g);

/// Drops g2 columns that are integer combinations of other g2 columns
/// precomposed with a single p_{x_i,x_j}, and dually g1 rows. All three ranks
/// of the formula are preserved.
SplitMorphism reduce_redundant(const SplitMorphism& g);

struct EssentialCover {
  CoverWitness witness;
  PresentationData presentation;
  SplitMorphism g;
  bool reduced = false; ///< true when the covered g came from reduce_redundant
};

/// Tries every admissible choice triple, first as-is and then reduced.
std::optional<EssentialCover> essentially_covers(const OrderMap& zeta, const Interval& i);

/// Accepts a caller-supplied g after checking on `m` that its rank formula
/// agrees with the canonical one; throws NotEssentiallyCovering otherwise.
std::optional<CoverWitness> covers_supplied(const OrderMap& zeta, const Interval& i, const SplitMorphism& g,
                                            const PersistenceModule& m);

/// Supports of the interval summands of `l`, in element order. Throws
/// NotIntervalDecomposableRestriction unless l is a multiplicity-free direct
/// sum of interval modules.
std::vector<Interval> interval_components(const PersistenceModule& l);

/// Minimum over the interval components J of l of d_N(V_J).
std::size_t bar_d(const PersistenceModule& n, const PersistenceModule& l);

/// bar-d of R(V_I) in R(M); throws NotEssentiallyCovering if no cover exists.
std::size_t multiplicity_via_cover(const PersistenceModule& m, const Interval& i, const OrderMap& zeta);
/// Same, using a supplied g that has already been checked by covers_supplied.
std::size_t multiplicity_via_cover(const PersistenceModule& m, const Interval& i, const OrderMap& zeta,
                                   const SplitMorphism& g);

} // namespace intmult
