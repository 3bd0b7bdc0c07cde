// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "intmult/cover.hpp"

#include <optional>

namespace intmult {

using Simplex = std::vector<std::size_t>;

/// Poset-indexed filtration of finite simplicial complexes by inclusion. Each
/// simplex is present on an up-set of the poset.
class SimplicialFiltration {
public:
  SimplicialFiltration(PosetPtr poset, std::vector<Simplex> simplices, std::vector<ElementList> present_at);

  const PosetPtr& poset() const { return poset_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  bool present(std::size_t simplex, Element x) const { return mask_[simplex][x]; }
  /// Indices of the q-simplices present at x, in a fixed order.
  std::vector<std::size_t> simplices_at(Element x, std::size_t q) const;
  std::size_t max_dimension() const;

  /// F composed with zeta: the same simplices, present where their image is.
  SimplicialFiltration pullback(const OrderMap& zeta) const;

private:
  PosetPtr poset_;
  std::vector<Simplex> simplices_;
  std::vector<std::vector<bool>> mask_;
};

/// H_q of the filtration with coefficients in `field`.
PersistenceModule persistent_homology(const SimplicialFiltration& f, std::size_t q, Field field);

/// d_{H_q F}(V_I); with zeta, computed through the restricted filtration.
std::size_t multiplicity_from_filtration(const SimplicialFiltration& f, std::size_t q, Field field, const Interval& i,
                                         const std::optional<OrderMap>& zeta = std::nullopt);

} // namespace intmult
