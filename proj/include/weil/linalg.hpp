#pragma once

// Exact linear algebra over Q. Everything dimension-like in this project
// (cohomology, kernels, invariant counts) is decided here, so there is no
// floating point anywhere in this file.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weil/rational.hpp"

namespace weil {

enum class Exec { serial, parallel };

/// Parallel when the build has OpenMP, serial otherwise.
Exec default_exec();
int max_threads();

/// Sparse row: strictly increasing column indices, no stored zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// row <- row - factor * src
void axpy(SparseRow& row, const Rational& factor, const SparseRow& src);

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  Matrix transpose() const;
  std::vector<Rational> apply(std::span<const Rational> v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix from_dense(const Matrix& m);
  /// Builds the matrix whose j-th column is columns[j] (entries indexed by row).
  static SparseMatrix from_columns(std::size_t rows, std::span<const SparseRow> columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  const SparseRow& row(std::size_t i) const { return rows_[i]; }
  void set_row(std::size_t i, SparseRow r);
  void append_row(SparseRow r);
  /// Appends every row of other (column counts must agree).
  void stack(const SparseMatrix& other);

  Matrix to_dense() const;
  SparseMatrix transpose() const;
  /// y = M x with x given sparsely.
  SparseRow apply(const SparseRow& x) const;

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

/// Reduced row echelon form: rows[i] has leading entry 1 at pivots[i], and
/// every pivot column is zero in all other rows. Unique for a given row space.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  /// Remainder of v after reduction by the echelon rows; empty iff v is in the span.
  SparseRow reduce(SparseRow v) const;
  bool contains(const SparseRow& v) const { return reduce(v).empty(); }
};

Echelon rref(const SparseMatrix& m, Exec exec = default_exec());
std::size_t rank(const SparseMatrix& m, Exec exec = default_exec());

/// Basis of {x : Mx = 0}, returned as the rows of its own reduced echelon
/// form, so the basis is canonical for the subspace.
std::vector<SparseRow> kernel_basis(const SparseMatrix& m, Exec exec = default_exec());

/// Canonical (RREF) basis of the span of the given vectors in Q^cols.
std::vector<SparseRow> canonical_basis(std::span<const SparseRow> vectors, std::size_t cols,
                                       Exec exec = default_exec());

/// Rank by Bareiss fraction-free elimination over Z after clearing
/// denominators row by row. Independent of rref().
std::size_t rank_fraction_free(const SparseMatrix& m);

/// Unique solution of A x = b, or nullopt if singular/inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b);

std::vector<Rational> to_dense(const SparseRow& v, std::size_t n);
SparseRow to_sparse(std::span<const Rational> v);

namespace reference {

/// Textbook dense Gauss-Jordan, kept as the oracle for the sparse kernels.
Echelon rref_dense(const SparseMatrix& m);

}  // namespace reference

}  // namespace weil
