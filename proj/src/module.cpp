// SPDX-License-Identifier: Apache-2.0
#include "intmult/module.hpp"
#include "intmult/errors.hpp"

#include <algorithm>
#include <sstream>

namespace intmult {

namespace {

std::string arrow_name(const Poset& p, Element x, Element y) { return p.label(x) + "->" + p.label(y); }

} // namespace

PersistenceModule::PersistenceModule(PosetPtr poset, Field field, std::vector<std::size_t> dims,
                                     std::map<Arrow, DenseMatrix> arrow_maps)
    : poset_(std::move(poset)), field_(field), dims_(std::move(dims)), arrows_(std::move(arrow_maps)) {
  validate();
}

PersistenceModule PersistenceModule::zero(PosetPtr poset, Field field) {
  std::vector<std::size_t> dims(poset->size(), 0);
  return PersistenceModule(std::move(poset), field, std::move(dims), {});
}

std::size_t PersistenceModule::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

void PersistenceModule::validate() {
  const Poset& p = *poset_;
  const std::size_t n = p.size();
  if (dims_.size() != n)
    throw ShapeError("module has " + std::to_string(dims_.size()) + " dimensions for " + std::to_string(n) + " elements");
  for (const auto& [arrow, mat] : arrows_) {
    auto [x, y] = arrow;
    if (x >= n || y >= n || !p.is_cover(x, y))
      throw ShapeError("map given for a pair that is not a Hasse arrow: " + std::to_string(x) + "->" + std::to_string(y));
    if (!(mat.field() == field_)) throw FieldError("map " + arrow_name(p, x, y) + " is over the wrong field");
    if (mat.rows() != dims_[y] || mat.cols() != dims_[x])
      throw ShapeError("map " + arrow_name(p, x, y) + " has shape " + std::to_string(mat.rows()) + "x" +
                       std::to_string(mat.cols()) + ", expected " + std::to_string(dims_[y]) + "x" +
                       std::to_string(dims_[x]));
  }
  for (auto [x, y] : p.hasse_arrows()) {
    if (arrows_.count({x, y})) continue;
    if (dims_[x] != 0 && dims_[y] != 0) throw ShapeError("missing map for Hasse arrow " + arrow_name(p, x, y));
    arrows_.emplace(Arrow{x, y}, DenseMatrix(field_, dims_[y], dims_[x]));
  }

  maps_.assign(n * n, DenseMatrix());
  has_map_.assign(n * n, false);
  for (auto x : p.linear_extension()) {
    maps_[x * n + x] = DenseMatrix::identity(field_, dims_[x]);
    has_map_[x * n + x] = true;
    for (auto y : p.linear_extension()) {
      if (!p.less(x, y)) continue;
      // Every lower cover z of y with x <= z gives a candidate; the smallest
      // index defines the map and all others must agree with it.
      bool set = false;
      for (auto z : p.lower_covers(y)) {
        if (!p.leq(x, z)) continue;
        DenseMatrix candidate = arrows_.at({z, y}) * maps_[x * n + z];
        if (!set) {
          maps_[x * n + y] = std::move(candidate);
          set = true;
        } else if (!(candidate == maps_[x * n + y])) {
          throw CommutativityError("paths from " + p.label(x) + " to " + p.label(y) + " disagree: " +
                                   maps_[x * n + y].to_string() + " vs " + candidate.to_string() + " (via " +
                                   p.label(z) + ")");
        }
      }
      has_map_[x * n + y] = true;
    }
  }
}

const DenseMatrix& PersistenceModule::arrow_map(Element x, Element y) const {
  auto it = arrows_.find({x, y});
  if (it == arrows_.end()) throw ShapeError("no Hasse arrow " + arrow_name(*poset_, x, y));
  return it->second;
}

const DenseMatrix& PersistenceModule::structure_map(Element x, Element y) const {
  const std::size_t n = poset_->size();
  if (x >= n || y >= n || !has_map_[x * n + y])
    throw MatrixConditionError("no structure map for incomparable pair " + std::to_string(x) + " -> " + std::to_string(y));
  return maps_[x * n + y];
}

bool PersistenceModule::operator==(const PersistenceModule& o) const {
  return poset_->same_order(*o.poset_) && field_ == o.field_ && dims_ == o.dims_ && arrows_ == o.arrows_;
}

PersistenceModule interval_module(const Interval& i, Field field) {
  const Poset& p = *i.poset();
  std::vector<std::size_t> dims(p.size(), 0);
  for (auto x : i.members()) dims[x] = 1;
  std::map<Arrow, DenseMatrix> maps;
  for (auto [x, y] : p.hasse_arrows())
    if (i.contains(x) && i.contains(y)) maps.emplace(Arrow{x, y}, DenseMatrix::identity(field, 1));
  return PersistenceModule(i.poset(), field, std::move(dims), std::move(maps));
}

PersistenceModule direct_sum(const PersistenceModule& m, const PersistenceModule& n) {
  if (!m.poset()->same_order(*n.poset())) throw PosetMismatch("direct sum of modules over different posets");
  if (!(m.field() == n.field())) throw FieldError("direct sum of modules over different fields");
  const Poset& p = *m.poset();
  std::vector<std::size_t> dims(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) dims[x] = m.dim(x) + n.dim(x);
  std::map<Arrow, DenseMatrix> maps;
  for (auto [x, y] : p.hasse_arrows())
    maps.emplace(Arrow{x, y}, block_diag(m.arrow_map(x, y), n.arrow_map(x, y)));
  return PersistenceModule(m.poset(), m.field(), std::move(dims), std::move(maps));
}

PersistenceModule direct_sum(const std::vector<PersistenceModule>& parts) {
  if (parts.empty()) throw ShapeError("direct sum of an empty family");
  PersistenceModule acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) acc = direct_sum(acc, parts[k]);
  return acc;
}

FormalMorphism::FormalMorphism(PosetPtr poset, ElementList row_objects, ElementList col_objects)
    : poset_(std::move(poset)), rows_(std::move(row_objects)), cols_(std::move(col_objects)),
      coeffs_(rows_.size() * cols_.size(), Rational(0)) {
  for (auto x : rows_)
    if (x >= poset_->size()) throw ShapeError("row object out of range");
  for (auto x : cols_)
    if (x >= poset_->size()) throw ShapeError("column object out of range");
}

void FormalMorphism::set(std::size_t j, std::size_t i, const Rational& c) {
  if (j >= rows_.size() || i >= cols_.size()) throw ShapeError("formal entry out of range");
  if (c != 0 && !poset_->leq(cols_[i], rows_[j]))
    throw MatrixConditionError("entry p_{" + poset_->label(rows_[j]) + "," + poset_->label(cols_[i]) +
                               "} needs " + poset_->label(cols_[i]) + " <= " + poset_->label(rows_[j]));
  coeffs_[j * cols_.size() + i] = c;
}

FormalMorphism FormalMorphism::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  ElementList r, c;
  for (auto j : rows) r.push_back(rows_[j]);
  for (auto i : cols) c.push_back(cols_[i]);
  FormalMorphism out(poset_, r, c);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) out.coeffs_[a * cols.size() + b] = coeff(rows[a], cols[b]);
  return out;
}

std::string FormalMorphism::dump() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    for (std::size_t i = 0; i < cols_.size(); ++i) {
      if (i) os << "  ";
      const Rational& c = coeff(j, i);
      if (c == 0) {
        os << "0";
        continue;
      }
      if (c == 1)
        os << "+";
      else if (c == -1)
        os << "-";
      else
        os << c.str() << "*";
      os << "p_{" << poset_->label(rows_[j]) << "," << poset_->label(cols_[i]) << "}";
    }
    os << "\n";
  }
  return os.str();
}

bool FormalMorphism::operator==(const FormalMorphism& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && coeffs_ == o.coeffs_;
}

DenseMatrix evaluate(const PersistenceModule& m, const FormalMorphism& g) {
  if (!m.poset()->same_order(*g.poset())) throw PosetMismatch("formal morphism and module live on different posets");
  std::vector<std::size_t> rsz, csz, roff{0}, coff{0};
  for (auto y : g.row_objects()) {
    rsz.push_back(m.dim(y));
    roff.push_back(roff.back() + m.dim(y));
  }
  for (auto x : g.col_objects()) {
    csz.push_back(m.dim(x));
    coff.push_back(coff.back() + m.dim(x));
  }
  DenseMatrix out(m.field(), roff.back(), coff.back());
  for (std::size_t j = 0; j < g.row_count(); ++j)
    for (std::size_t i = 0; i < g.col_count(); ++i) {
      const Rational& c = g.coeff(j, i);
      if (c == 0 || rsz[j] == 0 || csz[i] == 0) continue;
      const DenseMatrix& s = m.structure_map(g.col_objects()[i], g.row_objects()[j]);
      out.paste(roff[j], coff[i], c == 1 ? s : s.scaled(Scalar(m.field(), c)));
    }
  return out;
}

OrderMap::OrderMap(PosetPtr domain, PosetPtr codomain, std::vector<Element> image)
    : z_(std::move(domain)), p_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != z_->size()) throw ShapeError("order map image has the wrong length");
  for (auto x : image_)
    if (x >= p_->size()) throw ShapeError("order map image out of range");
  for (auto [a, b] : z_->hasse_arrows())
    if (!p_->leq(image_[a], image_[b]))
      throw NotOrderPreserving("arrow " + z_->label(a) + "->" + z_->label(b) + " maps to " + p_->label(image_[a]) +
                               ", " + p_->label(image_[b]) + " which are not ordered");
}

OrderMap OrderMap::identity(PosetPtr p) {
  std::vector<Element> img(p->size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = i;
  return OrderMap(p, p, img);
}

ElementList OrderMap::fiber(Element x) const {
  ElementList out;
  for (std::size_t z = 0; z < image_.size(); ++z)
    if (image_[z] == x) out.push_back(z);
  return out;
}

PersistenceModule restrict_module(const OrderMap& zeta, const PersistenceModule& m) {
  if (!zeta.codomain()->same_order(*m.poset())) throw PosetMismatch("order map codomain differs from module poset");
  const Poset& z = *zeta.domain();
  std::vector<std::size_t> dims(z.size());
  for (std::size_t a = 0; a < z.size(); ++a) dims[a] = m.dim(zeta(a));
  std::map<Arrow, DenseMatrix> maps;
  for (auto [a, b] : z.hasse_arrows()) maps.emplace(Arrow{a, b}, m.structure_map(zeta(a), zeta(b)));
  return PersistenceModule(zeta.domain(), m.field(), std::move(dims), std::move(maps));
}

} // namespace intmult
