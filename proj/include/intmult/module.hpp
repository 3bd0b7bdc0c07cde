// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "intmult/matrix.hpp"
#include "intmult/poset.hpp"

#include <map>
#include <string>
#include <vector>

namespace intmult {

/// Persistence module over a finite poset: a vector space dimension per
/// element and one matrix per Hasse arrow (x, y) of shape dim(y) x dim(x).
/// Construction validates commutativity and caches every structure map.
class PersistenceModule {
public:
  PersistenceModule(PosetPtr poset, Field field, std::vector<std::size_t> dims,
                    std::map<Arrow, DenseMatrix> arrow_maps);

  static PersistenceModule zero(PosetPtr poset, Field field);

  const PosetPtr& poset() const { return poset_; }
  Field field() const { return field_; }
  std::size_t dim(Element x) const { return dims_[x]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;

  const DenseMatrix& arrow_map(Element x, Element y) const;
  const std::map<Arrow, DenseMatrix>& arrow_maps() const { return arrows_; }
  /// M_{y,x} for x <= y.
  const DenseMatrix& structure_map(Element x, Element y) const;

  /// Structural equality: same order, dims and matrices.
  bool operator==(const PersistenceModule& o) const;

private:
  void validate();

  PosetPtr poset_;
  Field field_;
  std::vector<std::size_t> dims_;
  std::map<Arrow, DenseMatrix> arrows_;
  std::vector<DenseMatrix> maps_;
  std::vector<bool> has_map_;
};

PersistenceModule interval_module(const Interval& i, Field field);
PersistenceModule direct_sum(const PersistenceModule& m, const PersistenceModule& n);
PersistenceModule direct_sum(const std::vector<PersistenceModule>& parts);

/// Matrix over the formal additive hull: row objects y_j, column objects x_i
/// and entries c * p_{y_j, x_i} with x_i <= y_j. Coefficients are exact
/// rationals so a morphism can be evaluated over any field.
class FormalMorphism {
public:
  FormalMorphism(PosetPtr poset, ElementList row_objects, ElementList col_objects);

  const PosetPtr& poset() const { return poset_; }
  const ElementList& row_objects() const { return rows_; }
  const ElementList& col_objects() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

  const Rational& coeff(std::size_t j, std::size_t i) const { return coeffs_[j * cols_.size() + i]; }
  /// Sets entry (j, i) to c * p_{y_j, x_i}; throws MatrixConditionError unless
  /// x_i <= y_j or c == 0.
  void set(std::size_t j, std::size_t i, const Rational& c);

  FormalMorphism select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Text grid of "+p_{y,x}" / "-p_{y,x}" / "0" entries, one row per line.
  std::string dump() const;

  bool operator==(const FormalMorphism& o) const;

private:
  PosetPtr poset_;
  ElementList rows_, cols_;
  std::vector<Rational> coeffs_;
};

/// Block matrix whose (j, i) block is coeff * M_{y_j, x_i}.
DenseMatrix evaluate(const PersistenceModule& m, const FormalMorphism& g);

/// Order-preserving map zeta: Z -> P.
class OrderMap {
public:
  OrderMap(PosetPtr domain, PosetPtr codomain, std::vector<Element> image);
  static OrderMap identity(PosetPtr p);

  const PosetPtr& domain() const { return z_; }
  const PosetPtr& codomain() const { return p_; }
  Element operator()(Element z) const { return image_[z]; }
  const std::vector<Element>& image() const { return image_; }
  ElementList fiber(Element x) const;

private:
  PosetPtr z_, p_;
  std::vector<Element> image_;
};

/// R(M) = M composed with zeta.
PersistenceModule restrict_module(const OrderMap& zeta, const PersistenceModule& m);

} // namespace intmult
