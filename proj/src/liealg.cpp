#include "weil/liealg.hpp"

#include <charconv>

#include "weil/error.hpp"

namespace weil {

AlgebraVector AlgebraVector::basis(int n, int i) {
  AlgebraVector v{std::vector<Rational>(static_cast<std::size_t>(n))};
  v.coords.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

bool AlgebraVector::is_zero() const {
  for (const auto& c : coords)
    if (!weil::is_zero(c)) return false;
  return true;
}

AlgebraVector operator+(const AlgebraVector& a, const AlgebraVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("algebra vectors of different dimension");
  AlgebraVector r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

AlgebraVector operator*(const Rational& s, const AlgebraVector& a) {
  AlgebraVector r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

LieAlgebra::LieAlgebra(int dim, std::string name) : dim_(dim), name_(std::move(name)) {
  if (dim < 0) throw DomainError("negative Lie algebra dimension");
  const auto n = static_cast<std::size_t>(dim);
  table_.resize(n * n * n);
}

std::size_t LieAlgebra::index(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw DomainError("structure constant index out of range");
  const auto n = static_cast<std::size_t>(dim_);
  return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n + static_cast<std::size_t>(k);
}

void LieAlgebra::set_bracket(int i, int j, int k, const Rational& c) {
  table_[index(i, j, k)] = c;
  table_[index(j, i, k)] = -c;
}

AlgebraVector LieAlgebra::bracket(const AlgebraVector& x, const AlgebraVector& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) throw DimensionMismatch("bracket argument has wrong dimension");
  AlgebraVector r{std::vector<Rational>(static_cast<std::size_t>(dim_))};
  for (int i = 0; i < dim_; ++i) {
    if (weil::is_zero(x.coords[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (weil::is_zero(y.coords[j])) continue;
      const Rational xy = x.coords[i] * y.coords[j];
      for (int k = 0; k < dim_; ++k)
        if (!weil::is_zero(f(i, j, k))) r.coords[k] += xy * f(i, j, k);
    }
  }
  return r;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& c : table_)
    if (!weil::is_zero(c)) return false;
  return true;
}

std::optional<Violation> validate(const LieAlgebra& l) {
  const int n = l.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (l.f(i, j, k) != -l.f(j, i, k)) {
          return Violation{Violation::Kind::antisymmetry,
                           {i + 1, j + 1, k + 1},
                           "f^" + std::to_string(k + 1) + "_{" + std::to_string(i + 1) + std::to_string(j + 1) +
                               "} != -f^" + std::to_string(k + 1) + "_{" + std::to_string(j + 1) +
                               std::to_string(i + 1) + "}"};
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t) {
          Rational s;
          for (int m = 0; m < n; ++m)
            s += l.f(i, j, m) * l.f(m, k, t) + l.f(j, k, m) * l.f(m, i, t) + l.f(k, i, m) * l.f(m, j, t);
          if (!is_zero(s))
            return Violation{Violation::Kind::jacobi,
                             {i + 1, j + 1, k + 1, t + 1},
                             "Jacobi identity fails for (i,j,k,l) = (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," + std::to_string(k + 1) + "," + std::to_string(t + 1) +
                                 ")"};
        }
  return std::nullopt;
}

Matrix adjoint(const LieAlgebra& l, const AlgebraVector& xi) {
  const int n = l.dim();
  if (xi.dim() != n) throw DimensionMismatch("adjoint: vector has wrong dimension");
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const AlgebraVector col = l.bracket(xi, AlgebraVector::basis(n, j));
    for (int k = 0; k < n; ++k) m(k, j) = col.coords[k];
  }
  return m;
}

Matrix coadjoint(const LieAlgebra& l, const AlgebraVector& xi) {
  // (ad*_xi lambda^j)(e_k) = -lambda^j([xi, e_k]) = -ad(xi)(j, k)
  Matrix m = adjoint(l, xi).transpose();
  m *= Rational(-1);
  return m;
}

namespace {

LieAlgebra levi_civita(const std::string& name) {
  LieAlgebra l(3, name);
  l.set_bracket(0, 1, 2, 1);
  l.set_bracket(1, 2, 0, 1);
  l.set_bracket(2, 0, 1, 1);
  return l;
}

std::optional<int> parse_abelian_dim(std::string_view name) {
  if (!name.starts_with("abelian")) return std::nullopt;
  name.remove_prefix(7);
  if (name.starts_with("(") && name.ends_with(")")) name = name.substr(1, name.size() - 2);
  int n = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size() || n < 1) return std::nullopt;
  return n;
}

}  // namespace

LieAlgebra builtin_algebra(std::string_view name) {
  if (auto n = parse_abelian_dim(name)) return LieAlgebra(*n, "abelian(" + std::to_string(*n) + ")");
  if (name == "su2") return levi_civita("su2");
  if (name == "so3") return levi_civita("so3");
  if (name == "sl2") {
    // basis (h, e, f)
    LieAlgebra l(3, "sl2");
    l.set_bracket(0, 1, 1, 2);
    l.set_bracket(0, 2, 2, -2);
    l.set_bracket(1, 2, 0, 1);
    return l;
  }
  if (name == "heisenberg3") {
    LieAlgebra l(3, "heisenberg3");
    l.set_bracket(0, 1, 2, 1);
    return l;
  }
  throw DomainError("unknown algebra '" + std::string(name) + "'");
}

std::vector<std::string> builtin_algebra_names() {
  return {"abelian(1)", "abelian(2)", "abelian(3)", "su2", "so3", "sl2", "heisenberg3"};
}

bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (a.f(i, j, k) != b.f(i, j, k)) return false;
  return true;
}

}  // namespace weil
