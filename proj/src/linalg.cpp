#include "weil/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "weil/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weil {

Exec default_exec() {
#ifdef _OPENMP
  return Exec::parallel;
#else
  return Exec::serial;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void axpy(SparseRow& row, const Rational& factor, const SparseRow& src) {
  if (is_zero(factor) || src.empty()) return;
  SparseRow out;
  out.reserve(row.size() + src.size());
  auto a = row.begin();
  auto b = src.begin();
  while (a != row.end() || b != src.end()) {
    if (b == src.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return weil::is_zero(r); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!weil::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) s.rows_[i].emplace_back(j, m(i, j));
  return s;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::span<const SparseRow> columns) {
  SparseMatrix s(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [i, v] : columns[j]) {
      if (i >= rows) throw DimensionMismatch("column entry out of range");
      s.rows_[i].emplace_back(j, v);
    }
  return s;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseMatrix::set_row(std::size_t i, SparseRow r) {
  if (!r.empty() && r.back().first >= cols_) throw DimensionMismatch("row entry out of range");
  rows_[i] = std::move(r);
}

void SparseMatrix::append_row(SparseRow r) {
  if (!r.empty() && r.back().first >= cols_) throw DimensionMismatch("row entry out of range");
  rows_.push_back(std::move(r));
}

void SparseMatrix::stack(const SparseMatrix& other) {
  if (other.cols_ != cols_) throw DimensionMismatch("stacking matrices with different column counts");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) m(i, j) = v;
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace_back(i, v);
  return t;
}

SparseRow SparseMatrix::apply(const SparseRow& x) const {
  SparseRow y;
  for (std::size_t i = 0; i < rows(); ++i) {
    Rational acc;
    auto a = rows_[i].begin();
    auto b = x.begin();
    while (a != rows_[i].end() && b != x.end()) {
      if (a->first < b->first) {
        ++a;
      } else if (b->first < a->first) {
        ++b;
      } else {
        acc += a->second * b->second;
        ++a;
        ++b;
      }
    }
    if (!is_zero(acc)) y.emplace_back(i, std::move(acc));
  }
  return y;
}

// ------------------------------------------------------------ elimination

SparseRow Echelon::reduce(SparseRow v) const {
  // Pivot rows are sorted by pivot column, and reducing by row k only
  // touches columns >= pivots[k], so one forward pass suffices.
  std::size_t k = 0;
  std::size_t pos = 0;
  while (pos < v.size() && k < rows.size()) {
    const std::size_t col = v[pos].first;
    while (k < rows.size() && pivots[k] < col) ++k;
    if (k == rows.size()) break;
    if (pivots[k] == col) {
      const Rational f = v[pos].second;
      axpy(v, f, rows[k]);
      // entries before pos are untouched; column col is now gone
    } else {
      ++pos;
    }
  }
  return v;
}

namespace {

void normalize_leading(SparseRow& r) {
  const Rational lead = r.front().second;
  if (lead == 1) return;
  for (auto& [j, v] : r) v /= lead;
}

// Clears the pivot columns above each pivot, turning a row echelon form
// (pivot rows sorted by column, leading 1s) into the reduced form.
void back_substitute(std::vector<SparseRow>& rows, const std::vector<std::size_t>& pivots, Exec exec) {
  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::size_t col = pivots[i];
    const SparseRow& src = rows[i];
    const auto n = static_cast<std::ptrdiff_t>(i);
#pragma omp parallel for schedule(dynamic, 8) if (exec == Exec::parallel && n > 32)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      SparseRow& r = rows[static_cast<std::size_t>(j)];
      auto it = std::lower_bound(r.begin(), r.end(), col,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it == r.end() || it->first != col) continue;
      const Rational f = it->second;
      axpy(r, f, src);
    }
  }
}

}  // namespace

Echelon rref(const SparseMatrix& m, Exec exec) {
  // Rows are bucketed by leading column. Each step takes the smallest
  // populated column, picks the sparsest row there as pivot and eliminates
  // that column from the rest of the bucket; the eliminations are
  // independent and run in parallel.
  std::map<std::size_t, std::vector<SparseRow>> buckets;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) buckets[m.row(i).front().first].push_back(m.row(i));

  Echelon e;
  e.cols = m.cols();
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const std::size_t col = node.key();
    std::vector<SparseRow>& bucket = node.mapped();

    auto best = std::min_element(bucket.begin(), bucket.end(),
                                 [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    SparseRow pivot = std::move(*best);
    bucket.erase(best);
    normalize_leading(pivot);

    const auto n = static_cast<std::ptrdiff_t>(bucket.size());
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::parallel && n > 16)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      SparseRow& r = bucket[static_cast<std::size_t>(k)];
      const Rational f = r.front().second;
      axpy(r, f, pivot);
    }
    for (auto& r : bucket)
      if (!r.empty()) buckets[r.front().first].push_back(std::move(r));

    e.rows.push_back(std::move(pivot));
    e.pivots.push_back(col);
  }
  back_substitute(e.rows, e.pivots, exec);
  return e;
}

std::size_t rank(const SparseMatrix& m, Exec exec) { return rref(m, exec).rank(); }

std::vector<SparseRow> kernel_basis(const SparseMatrix& m, Exec exec) {
  const Echelon e = rref(m, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  // column f of the echelon rows, gathered once
  std::vector<SparseRow> by_column(m.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    for (const auto& [j, v] : e.rows[i])
      if (!is_pivot[j]) by_column[j].emplace_back(e.pivots[i], -v);

  std::vector<SparseRow> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseRow v = by_column[f];
    v.emplace_back(f, Rational(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  return canonical_basis(kernel, m.cols(), exec);
}

std::vector<SparseRow> canonical_basis(std::span<const SparseRow> vectors, std::size_t cols, Exec exec) {
  SparseMatrix s(0, cols);
  for (const auto& v : vectors) s.append_row(v);
  return rref(s, exec).rows;
}

std::size_t rank_fraction_free(const SparseMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (const auto& [j, v] : m.row(i)) l = lcm(l, v.get_den());
    for (const auto& [j, v] : m.row(i)) a[i][j] = v.get_num() * (l / v.get_den());
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side size mismatch");
  const std::size_t n = a.cols();
  SparseMatrix aug(0, n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow r;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(a(i, j))) r.emplace_back(j, a(i, j));
    if (!is_zero(b[i])) r.emplace_back(n, b[i]);
    aug.append_row(std::move(r));
  }
  const Echelon e = rref(aug, Exec::serial);
  if (e.rank() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (e.pivots[i] != i) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!e.rows[i].empty() && e.rows[i].back().first == n) x[i] = e.rows[i].back().second;
  return x;
}

std::vector<Rational> to_dense(const SparseRow& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& [j, x] : v) {
    if (j >= n) throw DimensionMismatch("sparse vector index out of range");
    out[j] = x;
  }
  return out;
}

SparseRow to_sparse(std::span<const Rational> v) {
  SparseRow out;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!is_zero(v[j])) out.emplace_back(j, v[j]);
  return out;
}

namespace reference {

Echelon rref_dense(const SparseMatrix& m) {
  Matrix a = m.to_dense();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Echelon e;
  e.cols = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational lead = a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_zero(a(i, j))) row.emplace_back(j, a(i, j));
    e.rows.push_back(std::move(row));
  }
  return e;
}

}  // namespace reference

}  // namespace weil
