// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "intmult/field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace intmult {

/// Dense row-major matrix over a Field. Zero-row and zero-column matrices are
/// legal and behave as empty blocks.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);

  static DenseMatrix identity(Field field, std::size_t n);
  static DenseMatrix from_rows(Field field, const std::vector<std::vector<long long>>& rows);
  /// Builds a rows x cols matrix from row-major integer data.
  static DenseMatrix from_values(Field field, std::size_t rows, std::size_t cols,
                                 const std::vector<long long>& values);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void set(std::size_t r, std::size_t c, long long v);

  bool is_zero() const;
  DenseMatrix transpose() const;
  DenseMatrix scaled(const Scalar& s) const;
  DenseMatrix operator-() const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  bool operator==(const DenseMatrix& o) const;

  DenseMatrix select_rows(const std::vector<std::size_t>& idx) const;
  DenseMatrix select_cols(const std::vector<std::size_t>& idx) const;
  /// Copies `src` into this matrix with its top-left corner at (r0, c0).
  void paste(std::size_t r0, std::size_t c0, const DenseMatrix& src);

  std::string to_string() const;

  // Raw storage; exactly one of the two is in use depending on the field.
  const std::vector<std::uint32_t>& residues() const { return mod_; }
  const std::vector<Rational>& rationals() const { return rat_; }
  std::vector<std::uint32_t>& residues() { return mod_; }
  std::vector<Rational>& rationals() { return rat_; }

private:
  void require_compatible(const DenseMatrix& o, const char* what) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> mod_;
  std::vector<Rational> rat_;
};

std::size_t rank(const DenseMatrix& a);

/// Reduced row echelon form together with the pivot column list.
struct EchelonForm {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;
};
EchelonForm row_reduce(const DenseMatrix& a);

/// Kernel basis, returned as the columns of a cols(a) x k matrix.
DenseMatrix nullspace(const DenseMatrix& a);
/// Left kernel basis, returned as the rows of a k x rows(a) matrix.
DenseMatrix left_nullspace(const DenseMatrix& a);

/// Some X with a * X == b, or nothing when the system is inconsistent.
std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix hstack(const std::vector<DenseMatrix>& blocks);
DenseMatrix vstack(const std::vector<DenseMatrix>& blocks);
DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b);

/// Assembles a block matrix from declared partitions. Missing blocks are zero;
/// present blocks must match the partition sizes exactly.
DenseMatrix block(Field field, const std::vector<std::size_t>& row_sizes,
                  const std::vector<std::size_t>& col_sizes,
                  const std::vector<std::vector<std::optional<DenseMatrix>>>& blocks);

} // namespace intmult
