#include "weil/functor.hpp"

#include <algorithm>

#include "weil/error.hpp"

namespace weil {

std::string FunctorSpec::to_string() const {
  const char* name = kind == FunctorKind::sym ? "Sym" : kind == FunctorKind::ext ? "Lambda" : "Tensor";
  return std::string(name) + "^" + std::to_string(degree);
}

FunctorSpec parse_functor_spec(const std::string& text) {
  const auto caret = text.find('^');
  if (caret == std::string::npos) throw ParseError("functor spec must look like Sym^d: '" + text + "'");
  const std::string name = text.substr(0, caret);
  const std::string deg = text.substr(caret + 1);
  FunctorSpec spec;
  if (name == "Sym")
    spec.kind = FunctorKind::sym;
  else if (name == "Lambda" || name == "Ext")
    spec.kind = FunctorKind::ext;
  else if (name == "Tensor")
    spec.kind = FunctorKind::tensor;
  else
    throw ParseError("unknown functor '" + name + "'");
  if (deg.empty() || deg.size() > 3 || !std::all_of(deg.begin(), deg.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("bad functor degree '" + deg + "'");
  spec.degree = std::stoi(deg);
  if (spec.degree < 1) throw ParseError("functor degree must be at least 1");
  return spec;
}

namespace {

void enumerate(FunctorKind kind, int degree, int n, int start, Tuple& cur, std::vector<Tuple>& out) {
  if (static_cast<int>(cur.size()) == degree) {
    out.push_back(cur);
    return;
  }
  const int from = kind == FunctorKind::tensor ? 0 : start;
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    enumerate(kind, degree, n, kind == FunctorKind::ext ? i + 1 : i, cur, out);
    cur.pop_back();
  }
}

std::map<Tuple, std::size_t> index_of(const std::vector<Tuple>& basis) {
  std::map<Tuple, std::size_t> m;
  for (std::size_t i = 0; i < basis.size(); ++i) m.emplace(basis[i], i);
  return m;
}

void add_entry(SparseRow& col, std::size_t row, const Rational& v) {
  auto it = std::lower_bound(col.begin(), col.end(), row, [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != col.end() && it->first == row) {
    it->second += v;
    if (is_zero(it->second)) col.erase(it);
  } else if (!is_zero(v)) {
    col.insert(it, {row, v});
  }
}

}  // namespace

std::vector<Tuple> power_basis(FunctorKind kind, int degree, int n) {
  if (degree < 0 || n < 0) throw DomainError("power_basis: negative size");
  std::vector<Tuple> out;
  Tuple cur;
  enumerate(kind, degree, n, 0, cur, out);
  return out;
}

std::size_t power_dim(FunctorKind kind, int degree, int n) { return power_basis(kind, degree, n).size(); }

std::pair<int, Tuple> canonicalize(FunctorKind kind, Tuple t) {
  if (kind == FunctorKind::tensor) return {1, std::move(t)};
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  if (kind == FunctorKind::sym) return {1, std::move(t)};
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return {0, {}};
  return {sign, std::move(t)};
}

LinearMap LinearMap::from_matrix(const Matrix& m) {
  LinearMap out{m.rows(), {}};
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseRow col;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) col.emplace_back(i, m(i, j));
    out.columns.push_back(std::move(col));
  }
  return out;
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap out{n, {}};
  for (std::size_t j = 0; j < n; ++j) out.columns.push_back({{j, Rational(1)}});
  return out;
}

Matrix LinearMap::to_dense() const {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [i, v] : columns[j]) m(i, j) = v;
  return m;
}

SparseMatrix LinearMap::to_sparse() const { return SparseMatrix::from_columns(rows, columns); }

LinearMap power_apply(FunctorKind kind, int degree, const LinearMap& g) {
  const int n = static_cast<int>(g.columns.size());
  const int m = static_cast<int>(g.rows);
  const auto source = power_basis(kind, degree, n);
  const auto target_basis = power_basis(kind, degree, m);
  const auto target = index_of(target_basis);
  LinearMap out{target_basis.size(), std::vector<SparseRow>(source.size())};
  const auto cols = static_cast<std::ptrdiff_t>(source.size());
#pragma omp parallel for schedule(dynamic) if (cols > 64)
  for (std::ptrdiff_t s = 0; s < cols; ++s) {
    const Tuple& in = source[static_cast<std::size_t>(s)];
    SparseRow col;
    // expand prod_t g(e_{in_t}) over the sparse columns of g
    Tuple cur;
    std::vector<Rational> partial_products{Rational(1)};
    auto recurse = [&](auto&& self, std::size_t t) -> void {
      if (t == in.size()) {
        auto [sign, canon] = canonicalize(kind, cur);
        if (sign == 0) return;
        const Rational v = sign > 0 ? partial_products.back() : Rational(-partial_products.back());
        add_entry(col, target.at(canon), v);
        return;
      }
      for (const auto& [j, c] : g.columns[static_cast<std::size_t>(in[t])]) {
        cur.push_back(static_cast<int>(j));
        partial_products.push_back(partial_products.back() * c);
        self(self, t + 1);
        partial_products.pop_back();
        cur.pop_back();
      }
    };
    recurse(recurse, 0);
    out.columns[static_cast<std::size_t>(s)] = std::move(col);
  }
  return out;
}

LinearMap power_derivation(FunctorKind kind, int degree, const LinearMap& x) {
  const int n = static_cast<int>(x.columns.size());
  if (static_cast<int>(x.rows) != n) throw DimensionMismatch("derivation needs a square matrix");
  const auto basis = power_basis(kind, degree, n);
  const auto index = index_of(basis);
  LinearMap out{basis.size(), std::vector<SparseRow>(basis.size())};
  for (std::size_t s = 0; s < basis.size(); ++s) {
    SparseRow col;
    for (std::size_t t = 0; t < basis[s].size(); ++t)
      for (const auto& [j, c] : x.columns[static_cast<std::size_t>(basis[s][t])]) {
        Tuple changed = basis[s];
        changed[t] = static_cast<int>(j);
        auto [sign, canon] = canonicalize(kind, std::move(changed));
        if (sign == 0) continue;
        add_entry(col, index.at(canon), sign > 0 ? c : Rational(-c));
      }
    out.columns[s] = std::move(col);
  }
  return out;
}

LinearMap tensor_apply(const LinearMap& g, const LinearMap& h) {
  LinearMap out{g.rows * h.rows, {}};
  for (const auto& cg : g.columns)
    for (const auto& ch : h.columns) {
      SparseRow col;
      for (const auto& [i, a] : cg)
        for (const auto& [j, b] : ch) col.emplace_back(i * h.rows + j, a * b);
      out.columns.push_back(std::move(col));
    }
  return out;
}

LinearMap tensor_derivation(const LinearMap& x, const LinearMap& y) {
  const std::size_t nx = x.columns.size();
  const std::size_t ny = y.columns.size();
  LinearMap out{nx * ny, {}};
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b) {
      SparseRow col;
      for (const auto& [i, c] : x.columns[a]) add_entry(col, i * ny + b, c);
      for (const auto& [j, c] : y.columns[b]) add_entry(col, a * ny + j, c);
      out.columns.push_back(std::move(col));
    }
  return out;
}

LinearMap functor_apply(const FunctorSpec& spec, const Matrix& g) {
  return power_apply(spec.kind, spec.degree, LinearMap::from_matrix(g));
}

}  // namespace weil
