#include "weil/chern_weil.hpp"

#include <algorithm>
#include <bit>

#include "weil/error.hpp"
#include "weil/invariants.hpp"

namespace weil {

namespace {

template <class K>
K lift_scalar(const Rational& r) {
  return K(r);
}

// Gauss-Jordan inverse of a small dense matrix over K; nullopt if singular.
template <class K>
std::optional<std::vector<K>> dense_inverse(std::vector<K> a, int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<K> inv(un * un, K(0));
  for (std::size_t i = 0; i < un; ++i) inv[i * un + i] = K(1);
  for (std::size_t col = 0; col < un; ++col) {
    std::size_t piv = col;
    while (piv < un && is_zero(a[piv * un + col])) ++piv;
    if (piv == un) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < un; ++j) {
        std::swap(a[piv * un + j], a[col * un + j]);
        std::swap(inv[piv * un + j], inv[col * un + j]);
      }
    const K scale = K(1) / a[col * un + col];
    for (std::size_t j = 0; j < un; ++j) {
      a[col * un + j] *= scale;
      inv[col * un + j] *= scale;
    }
    for (std::size_t r = 0; r < un; ++r) {
      if (r == col || is_zero(a[r * un + col])) continue;
      const K f = a[r * un + col];
      for (std::size_t j = 0; j < un; ++j) {
        a[r * un + j] -= f * a[col * un + j];
        inv[r * un + j] -= f * inv[col * un + j];
      }
    }
  }
  return inv;
}

template <class K>
std::size_t dense_rank(std::vector<std::vector<K>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (is_zero(rows[r][col])) continue;
      const K f = rows[r][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

template <class K>
std::vector<K> scalar_product(const std::vector<K>& a, const std::vector<K>& b, int r) {
  const auto ur = static_cast<std::size_t>(r);
  std::vector<K> out(ur * ur, K(0));
  for (std::size_t i = 0; i < ur; ++i)
    for (std::size_t k = 0; k < ur; ++k) {
      if (is_zero(a[i * ur + k])) continue;
      for (std::size_t j = 0; j < ur; ++j) out[i * ur + j] += a[i * ur + k] * b[k * ur + j];
    }
  return out;
}

// Sign-free check that a 0-form is a constant; returns it.
template <class K>
std::optional<K> constant_value(const ChartForm<K>& f) {
  if (f.is_zero()) return K(0);
  if (f.terms().size() != 1) return std::nullopt;
  const auto& [k, c] = *f.terms().begin();
  if (k.dx != 0 || k.poly_degree() != 0) return std::nullopt;
  return c;
}

template <class K>
void check_same_size(const FormMatrix<K>& m, int r) {
  if (m.size() != static_cast<std::size_t>(r) * static_cast<std::size_t>(r))
    throw DimensionMismatch("matrix has the wrong number of entries");
}

}  // namespace

// ----------------------------------------------------------- LieValuedForm

template <class K>
LieValuedForm<K> LieValuedForm<K>::zero(const LieAlgebra& l, int m) {
  LieValuedForm a{l, m, {}};
  a.components.assign(static_cast<std::size_t>(l.dim()), ChartForm<K>(m));
  return a;
}

template <class K>
void LieValuedForm<K>::validate() const {
  if (static_cast<int>(components.size()) != algebra.dim())
    throw DimensionMismatch("connection: component count differs from the algebra dimension");
  for (const auto& c : components)
    if (c.chart_dim() != chart_dim) throw DimensionMismatch("connection: component on the wrong chart");
}

template <class K>
LieValuedForm<K> curvature(const LieValuedForm<K>& a) {
  a.validate();
  for (const auto& c : a.components)
    if (auto deg = c.degree(); !c.is_zero() && deg != 1) throw DomainError("curvature: connection must be a 1-form");
  const LieAlgebra& l = a.algebra;
  const int n = l.dim();
  LieValuedForm<K> f = LieValuedForm<K>::zero(l, a.chart_dim);
  const K half = lift_scalar<K>(Rational(1, 2));
  for (int k = 0; k < n; ++k) {
    auto& fk = f.components[static_cast<std::size_t>(k)];
    fk = d(a.components[static_cast<std::size_t>(k)]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational& c = l.f(i, j, k);
        if (is_zero(c)) continue;
        fk += (half * lift_scalar<K>(c)) *
              wedge(a.components[static_cast<std::size_t>(i)], a.components[static_cast<std::size_t>(j)]);
      }
  }
  return f;
}

template <class K>
ChartForm<K> cw_form(const WeilElement& p, const LieValuedForm<K>& a) {
  a.validate();
  if (p.dim() != a.algebra.dim()) throw DimensionMismatch("cw_form: polynomial and connection algebras differ");
  if (!is_symmetric(p)) throw DomainError("cw_form: polynomial must have no exterior part");
  const auto bd = p.bidegree();
  if (!p.is_zero() && !bd) throw DomainError("cw_form: polynomial must be homogeneous");
  const LieValuedForm<K> f = curvature(a);
  ChartForm<K> out(a.chart_dim);
  for (const auto& [idx, c] : p.terms()) {
    // index multiset of the monomial, e.g. (~l1)^2 ~l3 -> (0, 0, 2)
    std::vector<int> seq;
    for (int i = 0; i < p.dim(); ++i)
      for (int e = 0; e < idx.sym[static_cast<std::size_t>(i)]; ++e) seq.push_back(i);
    std::vector<std::vector<int>> arrangements;
    do arrangements.push_back(seq);
    while (std::next_permutation(seq.begin(), seq.end()));
    const K weight = lift_scalar<K>(c / Rational(static_cast<long>(arrangements.size())));
    for (const auto& s : arrangements) {
      ChartForm<K> prod = ChartForm<K>::constant(a.chart_dim, weight);
      for (int i : s) prod = wedge(prod, f.components[static_cast<std::size_t>(i)]);
      out += prod;
    }
  }
  return out;
}

template <class K>
ChartForm<K> weil_to_chart(const WeilElement& w, const LieValuedForm<K>& a) {
  a.validate();
  if (w.dim() != a.algebra.dim()) throw DimensionMismatch("weil_to_chart: algebra dimensions differ");
  std::vector<ChartForm<K>> da;
  for (const auto& c : a.components) da.push_back(d(c));
  ChartForm<K> out(a.chart_dim);
  for (const auto& [idx, c] : w.terms()) {
    ChartForm<K> t = ChartForm<K>::constant(a.chart_dim, lift_scalar<K>(c));
    for (std::uint32_t rest = idx.ext; rest != 0; rest &= rest - 1)
      t = wedge(t, a.components[static_cast<std::size_t>(std::countr_zero(rest))]);
    for (int i = 0; i < w.dim(); ++i)
      for (int e = 0; e < idx.sym[static_cast<std::size_t>(i)]; ++e) t = wedge(t, da[static_cast<std::size_t>(i)]);
    out += t;
  }
  return out;
}

WeilElement casimir(const LieAlgebra& l) {
  const int n = l.dim();
  WeilElement p(n);
  for (int i = 0; i < n; ++i) p += WeilElement::sym_generator(n, i) * WeilElement::sym_generator(n, i);
  for (int i = 0; i < n; ++i)
    if (!lie_derivative(l, AlgebraVector::basis(n, i), p).is_zero())
      throw DomainError("sum of squares is not invariant for this algebra");
  return p;
}

// ------------------------------------------------------- representations

template <class K>
void MatrixRepresentation<K>::validate() const {
  const int n = algebra.dim();
  const auto r2 = static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
  if (static_cast<int>(generators.size()) != n) throw DomainError("representation: one generator per basis vector");
  for (const auto& t : generators)
    if (t.size() != r2) throw DomainError("representation: generator has the wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto lhs = scalar_product(generators[static_cast<std::size_t>(i)], generators[static_cast<std::size_t>(j)], size);
      const auto ba = scalar_product(generators[static_cast<std::size_t>(j)], generators[static_cast<std::size_t>(i)], size);
      for (std::size_t e = 0; e < r2; ++e) lhs[e] -= ba[e];
      for (int k = 0; k < n; ++k) {
        const K c = lift_scalar<K>(algebra.f(i, j, k));
        for (std::size_t e = 0; e < r2; ++e) lhs[e] -= c * generators[static_cast<std::size_t>(k)][e];
      }
      for (const auto& v : lhs)
        if (!is_zero(v)) throw DomainError("representation: brackets disagree with the structure constants");
    }
  if (dense_rank(generators) != static_cast<std::size_t>(n)) throw DomainError("representation is not faithful");
}

namespace {

std::vector<Rational> unit(int r, int i, int j) {
  std::vector<Rational> m(static_cast<std::size_t>(r * r));
  m[static_cast<std::size_t>(i * r + j)] = 1;
  return m;
}

}  // namespace

MatrixRepresentation<Rational> builtin_representation(const LieAlgebra& l) {
  const int n = l.dim();
  MatrixRepresentation<Rational> rep{l, 0, {}};
  const LieAlgebra so3 = builtin_algebra("so3");
  if (l.is_abelian()) {
    rep.size = n + 1;
    for (int i = 0; i < n; ++i) rep.generators.push_back(unit(n + 1, 0, i + 1));
  } else if (same_structure(l, builtin_algebra("heisenberg3"))) {
    rep.size = 3;
    rep.generators = {unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)};
  } else if (same_structure(l, so3)) {
    rep.size = 3;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rational> m(9);
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) m[static_cast<std::size_t>(j * 3 + k)] = -so3.f(i, j, k);
      rep.generators.push_back(std::move(m));
    }
  } else if (same_structure(l, builtin_algebra("sl2"))) {
    rep.size = 2;
    std::vector<Rational> h(4);
    h[0] = 1;
    h[3] = -1;
    rep.generators = {h, unit(2, 0, 1), unit(2, 1, 0)};
  } else {
    throw DomainError("no rational matrix representation for algebra '" + l.name() + "'");
  }
  rep.validate();
  return rep;
}

MatrixRepresentation<GaussianRational> builtin_complex_representation(const LieAlgebra& l) {
  MatrixRepresentation<GaussianRational> rep{l, 0, {}};
  // so3 keeps its real rotation generators
  if (same_structure(l, builtin_algebra("su2")) && l.name() != "so3") {
    // T_k = -(i/2) sigma_k
    using G = GaussianRational;
    const Rational h(1, 2);
    rep.size = 2;
    rep.generators = {
        {G(0), G(0, -h), G(0, -h), G(0)},
        {G(0), G(-h), G(h), G(0)},
        {G(0, -h), G(0), G(0), G(0, h)},
    };
  } else {
    const auto real = builtin_representation(l);
    rep.size = real.size;
    for (const auto& t : real.generators) {
      std::vector<GaussianRational> m;
      for (const auto& v : t) m.emplace_back(v);
      rep.generators.push_back(std::move(m));
    }
  }
  rep.validate();
  return rep;
}

// ------------------------------------------------------------------ gauge

template <class K>
void GaugeTransform<K>::validate() const {
  check_same_size(entries, size);
  for (const auto& e : entries) {
    if (e.chart_dim() != chart_dim) throw DimensionMismatch("gauge: entry on the wrong chart");
    if (!e.is_zero() && e.degree() != 0) throw DomainError("gauge: entries must be functions");
  }
  const auto r = static_cast<std::size_t>(size);
  if (kind == GaugeKind::constant) {
    std::vector<K> m;
    for (const auto& e : entries) {
      auto v = constant_value(e);
      if (!v) throw DomainError("constant gauge has a non-constant entry");
      m.push_back(*v);
    }
    if (!dense_inverse(m, size)) throw DomainError("constant gauge matrix is singular");
  } else {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const auto v = constant_value(entries[i * r + j]);
        const K want = i == j ? K(1) : K(0);
        if (!v || !(*v == want)) throw DomainError("unipotent gauge must be unit upper triangular");
      }
  }
}

template <class K>
FormMatrix<K> matrix_product(const FormMatrix<K>& a, const FormMatrix<K>& b, int r) {
  check_same_size(a, r);
  check_same_size(b, r);
  const auto ur = static_cast<std::size_t>(r);
  const int m = a.empty() ? 0 : a.front().chart_dim();
  FormMatrix<K> out(ur * ur, ChartForm<K>(m));
  for (std::size_t i = 0; i < ur; ++i)
    for (std::size_t k = 0; k < ur; ++k) {
      if (a[i * ur + k].is_zero()) continue;
      for (std::size_t j = 0; j < ur; ++j) out[i * ur + j] += wedge(a[i * ur + k], b[k * ur + j]);
    }
  return out;
}

template <class K>
FormMatrix<K> matrix_inverse(const GaugeTransform<K>& g) {
  g.validate();
  const int r = g.size;
  const auto ur = static_cast<std::size_t>(r);
  if (g.kind == GaugeKind::constant) {
    std::vector<K> m;
    for (const auto& e : g.entries) m.push_back(*constant_value(e));
    const auto inv = *dense_inverse(m, r);
    FormMatrix<K> out;
    for (const auto& v : inv) out.push_back(ChartForm<K>::constant(g.chart_dim, v));
    return out;
  }
  // (1 + N)^{-1} = sum_{k < r} (-N)^k, N strictly upper triangular
  FormMatrix<K> neg_n = g.entries;
  for (std::size_t i = 0; i < ur; ++i) neg_n[i * ur + i] = ChartForm<K>(g.chart_dim);
  for (auto& e : neg_n) e = -e;
  FormMatrix<K> id(ur * ur, ChartForm<K>(g.chart_dim));
  for (std::size_t i = 0; i < ur; ++i) id[i * ur + i] = ChartForm<K>::constant(g.chart_dim, K(1));
  FormMatrix<K> sum = id;
  FormMatrix<K> power = id;
  for (int k = 1; k < r; ++k) {
    power = matrix_product(power, neg_n, r);
    for (std::size_t e = 0; e < sum.size(); ++e) sum[e] += power[e];
  }
  return sum;
}

template <class K>
FormMatrix<K> maurer_cartan(const GaugeTransform<K>& g) {
  FormMatrix<K> dg;
  for (const auto& e : g.entries) dg.push_back(d(e));
  return matrix_product(matrix_inverse(g), dg, g.size);
}

template <class K>
FormMatrix<K> gauge_transform_matrix(const FormMatrix<K>& a, const GaugeTransform<K>& g) {
  const FormMatrix<K> inv = matrix_inverse(g);
  FormMatrix<K> out = matrix_product(matrix_product(inv, a, g.size), g.entries, g.size);
  const FormMatrix<K> mc = maurer_cartan(g);
  for (std::size_t e = 0; e < out.size(); ++e) out[e] += mc[e];
  return out;
}

template <class K>
FormMatrix<K> to_matrix(const LieValuedForm<K>& a, const MatrixRepresentation<K>& rep) {
  a.validate();
  if (a.algebra.dim() != rep.algebra.dim()) throw DimensionMismatch("representation and connection algebras differ");
  const auto r2 = static_cast<std::size_t>(rep.size * rep.size);
  FormMatrix<K> out(r2, ChartForm<K>(a.chart_dim));
  for (std::size_t i = 0; i < a.components.size(); ++i)
    for (std::size_t e = 0; e < r2; ++e)
      if (!is_zero(rep.generators[i][e])) out[e] += rep.generators[i][e] * a.components[i];
  return out;
}

template <class K>
LieValuedForm<K> from_matrix(const FormMatrix<K>& m, const MatrixRepresentation<K>& rep, int chart_dim) {
  check_same_size(m, rep.size);
  const int n = rep.algebra.dim();
  const auto un = static_cast<std::size_t>(n);
  const std::size_t r2 = m.size();
  // pick n entries on which the generators are independent
  std::vector<std::size_t> positions;
  std::vector<std::vector<K>> chosen;
  for (std::size_t e = 0; e < r2 && positions.size() < un; ++e) {
    std::vector<K> row;
    for (std::size_t i = 0; i < un; ++i) row.push_back(rep.generators[i][e]);
    chosen.push_back(row);
    if (dense_rank(chosen) == chosen.size())
      positions.push_back(e);
    else
      chosen.pop_back();
  }
  if (positions.size() != un) throw DomainError("representation is not faithful");
  std::vector<K> s;
  for (const auto& row : chosen) s.insert(s.end(), row.begin(), row.end());
  const auto s_inv = *dense_inverse(s, n);
  LieValuedForm<K> out = LieValuedForm<K>::zero(rep.algebra, chart_dim);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t a = 0; a < un; ++a)
      if (!is_zero(s_inv[i * un + a])) out.components[i] += s_inv[i * un + a] * m[positions[a]];
  if (to_matrix(out, rep) != m) throw DomainError("matrix of forms does not take values in the Lie algebra");
  return out;
}

template <class K>
LieValuedForm<K> gauge_transform(const LieValuedForm<K>& a, const GaugeTransform<K>& g,
                                 const MatrixRepresentation<K>& rep) {
  if (g.size != rep.size) throw DimensionMismatch("gauge matrix and representation sizes differ");
  if (g.chart_dim != a.chart_dim) throw DimensionMismatch("gauge and connection charts differ");
  return from_matrix(gauge_transform_matrix(to_matrix(a, rep), g), rep, a.chart_dim);
}

template <class K>
LieValuedForm<K> adjoint_action(const LieValuedForm<K>& f, const GaugeTransform<K>& g,
                                const MatrixRepresentation<K>& rep) {
  if (g.size != rep.size) throw DimensionMismatch("gauge matrix and representation sizes differ");
  const FormMatrix<K> inv = matrix_inverse(g);
  return from_matrix(matrix_product(matrix_product(inv, to_matrix(f, rep), g.size), g.entries, g.size), rep,
                     f.chart_dim);
}

template <class K>
LieValuedForm<K> pullback(const PolyMap& phi, const LieValuedForm<K>& a) {
  a.validate();
  LieValuedForm<K> out{a.algebra, phi.source_dim, {}};
  for (const auto& c : a.components) out.components.push_back(pullback(phi, c));
  return out;
}

LieValuedForm<GaussianRational> complexify(const Connection& a) {
  LieValuedForm<GaussianRational> out{a.algebra, a.chart_dim, {}};
  for (const auto& c : a.components) out.components.push_back(complexify(c));
  return out;
}

#define WEIL_INSTANTIATE(K)                                                                                  \
  template struct LieValuedForm<K>;                                                                          \
  template struct MatrixRepresentation<K>;                                                                   \
  template struct GaugeTransform<K>;                                                                         \
  template LieValuedForm<K> curvature(const LieValuedForm<K>&);                                              \
  template ChartForm<K> cw_form(const WeilElement&, const LieValuedForm<K>&);                                \
  template ChartForm<K> weil_to_chart(const WeilElement&, const LieValuedForm<K>&);                          \
  template FormMatrix<K> matrix_inverse(const GaugeTransform<K>&);                                           \
  template FormMatrix<K> matrix_product(const FormMatrix<K>&, const FormMatrix<K>&, int);                    \
  template FormMatrix<K> maurer_cartan(const GaugeTransform<K>&);                                            \
  template FormMatrix<K> gauge_transform_matrix(const FormMatrix<K>&, const GaugeTransform<K>&);             \
  template FormMatrix<K> to_matrix(const LieValuedForm<K>&, const MatrixRepresentation<K>&);                 \
  template LieValuedForm<K> from_matrix(const FormMatrix<K>&, const MatrixRepresentation<K>&, int);          \
  template LieValuedForm<K> gauge_transform(const LieValuedForm<K>&, const GaugeTransform<K>&,               \
                                            const MatrixRepresentation<K>&);                                 \
  template LieValuedForm<K> adjoint_action(const LieValuedForm<K>&, const GaugeTransform<K>&,                \
                                           const MatrixRepresentation<K>&);                                  \
  template LieValuedForm<K> pullback(const PolyMap&, const LieValuedForm<K>&);

WEIL_INSTANTIATE(Rational)
WEIL_INSTANTIATE(GaussianRational)

#undef WEIL_INSTANTIATE

}  // namespace weil
