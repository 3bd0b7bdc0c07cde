// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "intmult/presentation.hpp"

namespace intmult {

/// d_M(V_I) = rank M(g) - rank M(g1) - rank M(g2) with default choices.
std::size_t interval_multiplicity(const PersistenceModule& m, const Interval& i);
/// Same formula with the choice maps and pivot carried by `pd`.
std::size_t interval_multiplicity(const PersistenceModule& m, const PresentationData& pd);
/// Rank formula for an arbitrary split morphism.
std::size_t split_rank_formula(const PersistenceModule& m, const SplitMorphism& g);

/// Cross-check path for I = down-set of max(I).
std::size_t interval_multiplicity_injective(const PersistenceModule& m, const Interval& i);

/// dim Hom(C, M) for C presented by `mu` (rows are relations, columns are
/// generators): sum of dim M(x_i) minus rank M(mu).
std::size_t dim_hom(const FormalMorphism& mu, const PersistenceModule& m);

/// Persistent-Betti-number style formula on a chain; s and t are elements.
std::size_t one_parameter_multiplicity(const PersistenceModule& m, Element s, Element t);

struct DiagramEntry {
  Interval interval;
  std::size_t multiplicity;
};

struct Diagram {
  std::vector<DiagramEntry> entries;        ///< sorted by (size, members)
  std::vector<std::size_t> accounted;       ///< per element: sum of mult * dim V_I
  bool decomposable = false;
};

/// Runs interval_multiplicity on every interval; `jobs` worker threads.
Diagram maximal_interval_summand(const PersistenceModule& m, std::size_t jobs = 1);

struct DecomposabilityReport {
  bool decomposable = false;            ///< total dimension criterion
  bool dimension_vectors_match = false; ///< per-element criterion
  std::size_t total_dim = 0;
  std::size_t total_accounted = 0;
  Diagram diagram;
};

/// Throws std::logic_error if the two criteria ever disagree.
DecomposabilityReport is_interval_decomposable(const PersistenceModule& m, std::size_t jobs = 1);

/// Basis of Hom(N, M) as natural transformations; each entry holds one matrix
/// per element of the poset.
std::vector<std::vector<DenseMatrix>> hom_basis(const PersistenceModule& n, const PersistenceModule& m);

/// Rank of the composition pairing Hom(V_I, M) x Hom(M, V_I) -> End(V_I).
std::size_t oracle_multiplicity(const PersistenceModule& m, const Interval& i);

} // namespace intmult
