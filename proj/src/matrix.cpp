// SPDX-License-Identifier: Apache-2.0
#include "intmult/matrix.hpp"
#include "intmult/errors.hpp"

#include <sstream>
#include <utility>

namespace intmult {

namespace {

struct ModOps {
  std::uint32_t p;
  using T = std::uint32_t;
  bool zero(T a) const { return a == 0; }
  T sub(T a, T b) const { return modp::sub(a, b, p); }
  T mul(T a, T b) const { return modp::mul(a, b, p); }
  T inv(T a) const { return modp::inv(a, p); }
};

struct RatOps {
  using T = Rational;
  bool zero(const T& a) const { return a == 0; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
};

// In-place Gauss-Jordan elimination with first-nonzero pivoting. Returns the
// pivot columns; pivot rows are normalised to 1. When `full` is false the
// rows above a pivot are left untouched (enough for ranks).
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, std::vector<typename Ops::T>& a,
                                   std::size_t rows, std::size_t cols, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.zero(a[i * cols + c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    auto iv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], iv);
    for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
      if (i == r || ops.zero(a[i * cols + c])) continue;
      auto f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j)
        if (!ops.zero(a[r * cols + j])) a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(f, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> eliminate_matrix(DenseMatrix& m, bool full) {
  if (m.field().is_prime())
    return eliminate(ModOps{m.field().characteristic()}, m.residues(), m.rows(), m.cols(), full);
  return eliminate(RatOps{}, m.rationals(), m.rows(), m.cols(), full);
}

} // namespace

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime())
    mod_.assign(rows * cols, 0);
  else
    rat_.assign(rows * cols, Rational(0));
}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

DenseMatrix DenseMatrix::from_rows(Field field, const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

DenseMatrix DenseMatrix::from_values(Field field, std::size_t rows, std::size_t cols,
                                     const std::vector<long long>& values) {
  if (values.size() != rows * cols) throw ShapeError("value count does not match shape");
  DenseMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, values[i * cols + j]);
  return m;
}

Scalar DenseMatrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return Scalar(field_, static_cast<long long>(mod_[r * cols_ + c]));
  return Scalar(field_, rat_[r * cols_ + c]);
}

void DenseMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (!(v.field() == field_))
    throw FieldError("scalar over " + v.field().name() + " stored into matrix over " + field_.name());
  if (field_.is_prime())
    mod_[r * cols_ + c] = v.residue();
  else
    rat_[r * cols_ + c] = v.rational();
}

void DenseMatrix::set(std::size_t r, std::size_t c, long long v) {
  if (field_.is_prime())
    mod_[r * cols_ + c] = modp::reduce(v, field_.characteristic());
  else
    rat_[r * cols_ + c] = v;
}

bool DenseMatrix::is_zero() const {
  if (field_.is_prime()) {
    for (auto v : mod_)
      if (v) return false;
    return true;
  }
  for (const auto& v : rat_)
    if (v != 0) return false;
  return true;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        t.mod_[j * rows_ + i] = mod_[i * cols_ + j];
      else
        t.rat_[j * rows_ + i] = rat_[i * cols_ + j];
    }
  return t;
}

DenseMatrix DenseMatrix::scaled(const Scalar& s) const {
  if (!(s.field() == field_)) throw FieldError("scaling by a scalar of another field");
  DenseMatrix r = *this;
  if (field_.is_prime())
    for (auto& v : r.mod_) v = modp::mul(v, s.residue(), field_.characteristic());
  else
    for (auto& v : r.rat_) v *= s.rational();
  return r;
}

DenseMatrix DenseMatrix::operator-() const { return scaled(Scalar(field_, -1)); }

void DenseMatrix::require_compatible(const DenseMatrix& o, const char* what) const {
  if (!(field_ == o.field_)) throw FieldError(std::string(what) + ": field mismatch");
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  require_compatible(o, "matrix sum");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: shape mismatch");
  DenseMatrix r = *this;
  if (field_.is_prime())
    for (std::size_t i = 0; i < mod_.size(); ++i)
      r.mod_[i] = modp::add(mod_[i], o.mod_[i], field_.characteristic());
  else
    for (std::size_t i = 0; i < rat_.size(); ++i) r.rat_[i] += o.rat_[i];
  return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const { return *this + (-o); }

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  require_compatible(o, "matrix product");
  if (cols_ != o.rows_)
    throw ShapeError("matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " times " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  DenseMatrix r(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = mod_[i * cols_ + k];
        if (!a) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.mod_[i * o.cols_ + j] =
              static_cast<std::uint32_t>((r.mod_[i * o.cols_ + j] + a * o.mod_[k * o.cols_ + j]) % p);
      }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = rat_[i * cols_ + k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.rat_[i * o.cols_ + j] += a * o.rat_[k * o.cols_ + j];
      }
  }
  return r;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && mod_ == o.mod_ && rat_ == o.rat_;
}

DenseMatrix DenseMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  DenseMatrix r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_prime())
        r.mod_[i * cols_ + j] = mod_[idx[i] * cols_ + j];
      else
        r.rat_[i * cols_ + j] = rat_[idx[i] * cols_ + j];
    }
  return r;
}

DenseMatrix DenseMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  return transpose().select_rows(idx).transpose();
}

void DenseMatrix::paste(std::size_t r0, std::size_t c0, const DenseMatrix& src) {
  require_compatible(src, "paste");
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw ShapeError("paste: block out of range");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) {
      if (field_.is_prime())
        mod_[(r0 + i) * cols_ + c0 + j] = src.mod_[i * src.cols_ + j];
      else
        rat_[(r0 + i) * cols_ + c0 + j] = src.rat_[i * src.cols_ + j];
    }
}

std::string DenseMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "] (" << rows_ << "x" << cols_ << " over " << field_.name() << ")";
  return os.str();
}

std::size_t rank(const DenseMatrix& a) {
  if (a.empty()) return 0;
  DenseMatrix m = a;
  return eliminate_matrix(m, false).size();
}

EchelonForm row_reduce(const DenseMatrix& a) {
  EchelonForm e{a, {}};
  e.pivots = eliminate_matrix(e.reduced, true);
  return e;
}

DenseMatrix nullspace(const DenseMatrix& a) {
  EchelonForm e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMatrix basis(a.field(), a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis.set(free_cols[k], k, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis.set(e.pivots[r], k, -e.reduced.at(r, free_cols[k]));
  }
  return basis;
}

DenseMatrix left_nullspace(const DenseMatrix& a) { return nullspace(a.transpose()).transpose(); }

std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row count mismatch");
  DenseMatrix aug = hstack({a, b});
  EchelonForm e = row_reduce(aug);
  DenseMatrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(e.pivots[r], j, e.reduced.at(r, a.cols() + j));
  }
  return x;
}

DenseMatrix hstack(const std::vector<DenseMatrix>& blocks) {
  return vstack([&] {
           std::vector<DenseMatrix> t;
           t.reserve(blocks.size());
           for (const auto& b : blocks) t.push_back(b.transpose());
           return t;
         }())
      .transpose();
}

DenseMatrix vstack(const std::vector<DenseMatrix>& blocks) {
  std::optional<Field> field;
  std::optional<std::size_t> cols;
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (field && !(*field == b.field())) throw FieldError("stacking matrices over different fields");
    field = b.field();
    if (b.rows() == 0 && b.cols() == 0) continue;
    if (cols && *cols != b.cols())
      throw ShapeError("vstack: column counts " + std::to_string(*cols) + " and " + std::to_string(b.cols()));
    cols = b.cols();
    rows += b.rows();
  }
  DenseMatrix out(field.value_or(Field()), rows, cols.value_or(0));
  std::size_t r = 0;
  for (const auto& b : blocks) {
    if (b.rows() == 0 && b.cols() == 0) continue;
    out.paste(r, 0, b);
    r += b.rows();
  }
  return out;
}

DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b) {
  return block(a.field(), {a.rows(), b.rows()}, {a.cols(), b.cols()}, {{a, std::nullopt}, {std::nullopt, b}});
}

DenseMatrix block(Field field, const std::vector<std::size_t>& row_sizes,
                  const std::vector<std::size_t>& col_sizes,
                  const std::vector<std::vector<std::optional<DenseMatrix>>>& blocks) {
  if (blocks.size() != row_sizes.size()) throw ShapeError("block: row partition mismatch");
  std::size_t total_rows = 0, total_cols = 0;
  for (auto s : row_sizes) total_rows += s;
  for (auto s : col_sizes) total_cols += s;
  DenseMatrix out(field, total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    if (blocks[bi].size() != col_sizes.size()) throw ShapeError("block: column partition mismatch");
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < col_sizes.size(); ++bj) {
      const auto& blk = blocks[bi][bj];
      if (blk) {
        if (blk->rows() != row_sizes[bi] || blk->cols() != col_sizes[bj])
          throw ShapeError("block (" + std::to_string(bi) + "," + std::to_string(bj) + ") is " +
                           std::to_string(blk->rows()) + "x" + std::to_string(blk->cols()) + ", expected " +
                           std::to_string(row_sizes[bi]) + "x" + std::to_string(col_sizes[bj]));
        out.paste(r0, c0, *blk);
      }
      c0 += col_sizes[bj];
    }
    r0 += row_sizes[bi];
  }
  return out;
}

} // namespace intmult
