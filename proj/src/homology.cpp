// SPDX-License-Identifier: Apache-2.0
#include "intmult/homology.hpp"
#include "intmult/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace intmult {

SimplicialFiltration::SimplicialFiltration(PosetPtr poset, std::vector<Simplex> simplices,
                                           std::vector<ElementList> present_at)
    : poset_(std::move(poset)), simplices_(std::move(simplices)) {
  if (simplices_.size() != present_at.size()) throw FiltrationError("one presence list per simplex is required");
  std::map<Simplex, std::size_t> index;
  for (std::size_t k = 0; k < simplices_.size(); ++k) {
    Simplex& s = simplices_[k];
    if (s.empty()) throw FiltrationError("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw FiltrationError("simplex with repeated vertex");
    if (!index.emplace(s, k).second) throw FiltrationError("simplex listed twice");
    std::vector<bool> m(poset_->size(), false);
    for (auto x : present_at[k]) {
      if (x >= poset_->size()) throw FiltrationError("presence element out of range");
      m[x] = true;
    }
    if (!poset_->is_up_set(present_at[k]))
      throw FiltrationError("presence set of simplex " + std::to_string(k) + " is not an up-set");
    mask_.push_back(std::move(m));
  }
  for (std::size_t k = 0; k < simplices_.size(); ++k) {
    const Simplex& s = simplices_[k];
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      auto it = index.find(face);
      if (it == index.end()) throw FiltrationError("a face of simplex " + std::to_string(k) + " is missing");
      for (std::size_t x = 0; x < poset_->size(); ++x)
        if (mask_[k][x] && !mask_[it->second][x])
          throw FiltrationError("simplex " + std::to_string(k) + " appears before one of its faces at " + poset_->label(x));
    }
  }
}

std::vector<std::size_t> SimplicialFiltration::simplices_at(Element x, std::size_t q) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < simplices_.size(); ++k)
    if (simplices_[k].size() == q + 1 && mask_[k][x]) out.push_back(k);
  return out;
}

std::size_t SimplicialFiltration::max_dimension() const {
  std::size_t d = 0;
  for (const auto& s : simplices_) d = std::max(d, s.size() - 1);
  return d;
}

SimplicialFiltration SimplicialFiltration::pullback(const OrderMap& zeta) const {
  if (!zeta.codomain()->same_order(*poset_)) throw PosetMismatch("order map codomain differs from filtration poset");
  std::vector<ElementList> present;
  for (std::size_t k = 0; k < simplices_.size(); ++k) {
    ElementList at;
    for (Element z = 0; z < zeta.domain()->size(); ++z)
      if (mask_[k][zeta(z)]) at.push_back(z);
    present.push_back(std::move(at));
  }
  return SimplicialFiltration(zeta.domain(), simplices_, present);
}

namespace {

DenseMatrix boundary(const SimplicialFiltration& f, Field field, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  std::map<Simplex, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[f.simplices()[rows[r]]] = r;
  DenseMatrix d(field, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Simplex& s = f.simplices()[cols[c]];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      d.set(row_of.at(face), c, drop % 2 ? -1 : 1);
    }
  }
  return d;
}

struct LocalHomology {
  std::vector<std::size_t> chains; ///< q-simplex indices
  DenseMatrix boundaries;          ///< image of the (q+1)-boundary, chain coordinates
  DenseMatrix representatives;     ///< cycles whose classes form a basis
};

LocalHomology local_homology(const SimplicialFiltration& f, Element x, std::size_t q, Field field) {
  LocalHomology h;
  h.chains = f.simplices_at(x, q);
  DenseMatrix cycles = q == 0 ? DenseMatrix::identity(field, h.chains.size())
                              : nullspace(boundary(f, field, f.simplices_at(x, q - 1), h.chains));
  h.boundaries = boundary(f, field, h.chains, f.simplices_at(x, q + 1));
  DenseMatrix both = hstack({h.boundaries, cycles});
  std::vector<std::size_t> picked;
  for (auto c : row_reduce(both).pivots)
    if (c >= h.boundaries.cols()) picked.push_back(c);
  h.representatives = both.select_cols(picked);
  if (h.chains.empty()) h.representatives = DenseMatrix(field, 0, 0);
  return h;
}

} // namespace

PersistenceModule persistent_homology(const SimplicialFiltration& f, std::size_t q, Field field) {
  const Poset& p = *f.poset();
  std::vector<LocalHomology> local;
  std::vector<std::size_t> dims;
  for (Element x = 0; x < p.size(); ++x) {
    local.push_back(local_homology(f, x, q, field));
    dims.push_back(local.back().representatives.cols());
  }
  std::map<Arrow, DenseMatrix> maps;
  for (auto [x, y] : p.hasse_arrows()) {
    const LocalHomology& hx = local[x];
    const LocalHomology& hy = local[y];
    if (dims[x] == 0 || dims[y] == 0) continue;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t r = 0; r < hy.chains.size(); ++r) pos[hy.chains[r]] = r;
    DenseMatrix pushed(field, hy.chains.size(), dims[x]);
    for (std::size_t r = 0; r < hx.chains.size(); ++r)
      for (std::size_t c = 0; c < dims[x]; ++c) pushed.set(pos.at(hx.chains[r]), c, hx.representatives.at(r, c));
    auto coords = solve(hstack({hy.boundaries, hy.representatives}), pushed);
    if (!coords) throw std::logic_error("pushed cycle is not a cycle");
    std::vector<std::size_t> tail;
    for (std::size_t r = hy.boundaries.cols(); r < coords->rows(); ++r) tail.push_back(r);
    maps.emplace(Arrow{x, y}, coords->select_rows(tail));
  }
  return PersistenceModule(f.poset(), field, dims, maps);
}

std::size_t multiplicity_from_filtration(const SimplicialFiltration& f, std::size_t q, Field field, const Interval& i,
                                         const std::optional<OrderMap>& zeta) {
  if (!zeta) return interval_multiplicity(persistent_homology(f, q, field), i);
  if (!essentially_covers(*zeta, i)) throw NotEssentiallyCovering("zeta does not essentially cover " + i.to_string());
  PersistenceModule rm = persistent_homology(f.pullback(*zeta), q, field);
  return bar_d(rm, restrict_module(*zeta, interval_module(i, field)));
}

} // namespace intmult
