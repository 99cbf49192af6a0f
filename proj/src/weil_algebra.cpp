#include "weil/weil_algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "weil/error.hpp"

namespace weil {

namespace {

constexpr int kMaxGenerators = 31;

// Sign of lambda^A ^ lambda^B rewritten in ascending order: (-1)^{#{(a,b): a > b}}.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const std::uint32_t above = j + 1 >= 32 ? 0u : ~((1u << (j + 1)) - 1u);
    inversions += std::popcount(a & above);
  }
  return (inversions & 1) ? -1 : 1;
}

void sym_compositions(int n, int q, int pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == n - 1) {
    cur[static_cast<std::size_t>(pos)] = q;
    out.push_back(cur);
    return;
  }
  for (int k = q; k >= 0; --k) {
    cur[static_cast<std::size_t>(pos)] = k;
    sym_compositions(n, q - k, pos + 1, cur, out);
  }
}

}  // namespace

int WeilIndex::ext_degree() const { return std::popcount(ext); }

int WeilIndex::sym_degree() const { return std::accumulate(sym.begin(), sym.end(), 0); }

std::strong_ordering operator<=>(const WeilIndex& a, const WeilIndex& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.ext <=> b.ext; c != 0) return c;
  return a.sym <=> b.sym;
}

// ------------------------------------------------------------ WeilElement

WeilElement::WeilElement(int n) : n_(n) {
  if (n < 0 || n > kMaxGenerators) throw DomainError("Weil algebra dimension must be in [0, 31]");
}

WeilElement WeilElement::scalar(int n, const Rational& c) {
  WeilElement e(n);
  e.add(WeilIndex{0, std::vector<int>(static_cast<std::size_t>(n))}, c);
  return e;
}

WeilElement WeilElement::ext_generator(int n, int i) {
  if (i < 0 || i >= n) throw DomainError("generator index out of range");
  return monomial(n, WeilIndex{1u << i, std::vector<int>(static_cast<std::size_t>(n))});
}

WeilElement WeilElement::sym_generator(int n, int i) {
  if (i < 0 || i >= n) throw DomainError("generator index out of range");
  WeilIndex idx{0, std::vector<int>(static_cast<std::size_t>(n))};
  idx.sym[static_cast<std::size_t>(i)] = 1;
  return monomial(n, std::move(idx));
}

WeilElement WeilElement::monomial(int n, WeilIndex idx, const Rational& c) {
  WeilElement e(n);
  e.add(idx, c);
  return e;
}

void WeilElement::check_index(const WeilIndex& idx) const {
  if (static_cast<int>(idx.sym.size()) != n_) throw DimensionMismatch("Weil index has wrong length");
  if (n_ < 32 && (idx.ext >> n_) != 0) throw DimensionMismatch("Weil index exterior part out of range");
  for (int s : idx.sym)
    if (s < 0) throw DomainError("negative symmetric exponent");
}

Rational WeilElement::coefficient(const WeilIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeilElement::add(const WeilIndex& idx, const Rational& c) {
  if (weil::is_zero(c)) return;
  check_index(idx);
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (weil::is_zero(it->second)) terms_.erase(it);
  }
}

std::optional<int> WeilElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [k, v] : terms_)
    if (k.degree() != d) return std::nullopt;
  return d;
}

std::optional<std::pair<int, int>> WeilElement::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  const auto& first = terms_.begin()->first;
  const std::pair<int, int> bd{first.ext_degree(), first.sym_degree()};
  for (const auto& [k, v] : terms_)
    if (std::pair{k.ext_degree(), k.sym_degree()} != bd) return std::nullopt;
  return bd;
}

WeilElement& WeilElement::operator+=(const WeilElement& o) {
  if (o.n_ != n_) throw DimensionMismatch("Weil elements over different dimensions");
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

WeilElement& WeilElement::operator-=(const WeilElement& o) {
  if (o.n_ != n_) throw DimensionMismatch("Weil elements over different dimensions");
  for (const auto& [k, v] : o.terms_) add(k, -v);
  return *this;
}

WeilElement& WeilElement::operator*=(const Rational& s) {
  if (weil::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

WeilElement multiply(const WeilElement& a, const WeilElement& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("multiply: Weil elements over different dimensions");
  const int n = a.dim();
  WeilElement out(n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.ext & kb.ext) continue;
      WeilIndex k{ka.ext | kb.ext, ka.sym};
      for (int i = 0; i < n; ++i) k.sym[static_cast<std::size_t>(i)] += kb.sym[static_cast<std::size_t>(i)];
      Rational c = ca * cb;
      if (merge_sign(ka.ext, kb.ext) < 0) c = -c;
      out.add(k, c);
    }
  }
  return out;
}

WeilElement apply_derivation(const WeilElement& a, int parity, std::span<const WeilElement> ext_images,
                             std::span<const WeilElement> sym_images) {
  const int n = a.dim();
  if (static_cast<int>(ext_images.size()) != n || static_cast<int>(sym_images.size()) != n)
    throw DimensionMismatch("derivation: need one image per generator");
  WeilElement out(n);
  const std::vector<int> no_sym(static_cast<std::size_t>(n));
  for (const auto& [idx, c] : a.terms()) {
    // exterior factors, left to right
    int position = 0;
    for (std::uint32_t rest = idx.ext; rest != 0; rest &= rest - 1, ++position) {
      const int i = std::countr_zero(rest);
      const std::uint32_t bit = 1u << i;
      const std::uint32_t below = idx.ext & (bit - 1u);
      const std::uint32_t above = idx.ext & ~(below | bit);
      const auto& img = ext_images[static_cast<std::size_t>(i)];
      if (img.is_zero()) continue;
      Rational coeff = c;
      if (parity == 1 && (position & 1)) coeff = -coeff;
      WeilElement term = WeilElement::monomial(n, WeilIndex{below, no_sym}, coeff) * img *
                         WeilElement::monomial(n, WeilIndex{above, idx.sym});
      out += term;
    }
    // symmetric factors are even, so each copy sees the same sign
    const int p = idx.ext_degree();
    for (int i = 0; i < n; ++i) {
      const int e = idx.sym[static_cast<std::size_t>(i)];
      const auto& img = sym_images[static_cast<std::size_t>(i)];
      if (e == 0 || img.is_zero()) continue;
      Rational coeff = c * e;
      if (parity == 1 && (p & 1)) coeff = -coeff;
      WeilIndex rest{0, idx.sym};
      rest.sym[static_cast<std::size_t>(i)] -= 1;
      out += WeilElement::monomial(n, WeilIndex{idx.ext, no_sym}, coeff) * img * WeilElement::monomial(n, rest);
    }
  }
  return out;
}

WeilElement substitute(const WeilElement& a, std::span<const WeilElement> ext_images,
                       std::span<const WeilElement> sym_images) {
  const int n = a.dim();
  if (static_cast<int>(ext_images.size()) != n || static_cast<int>(sym_images.size()) != n)
    throw DimensionMismatch("substitute: need one image per generator");
  const int target = n == 0 ? 0 : ext_images.front().dim();
  WeilElement out(target);
  for (const auto& [idx, c] : a.terms()) {
    WeilElement term = WeilElement::scalar(target, c);
    for (std::uint32_t rest = idx.ext; rest != 0; rest &= rest - 1)
      term = term * ext_images[static_cast<std::size_t>(std::countr_zero(rest))];
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < idx.sym[static_cast<std::size_t>(i)]; ++e) term = term * sym_images[static_cast<std::size_t>(i)];
    out += term;
  }
  return out;
}

WeilElement koszul_d(const WeilElement& a) {
  const int n = a.dim();
  std::vector<WeilElement> ext_images;
  std::vector<WeilElement> sym_images(static_cast<std::size_t>(n), WeilElement(n));
  for (int i = 0; i < n; ++i) ext_images.push_back(WeilElement::sym_generator(n, i));
  return apply_derivation(a, 1, ext_images, sym_images);
}

WeilElement contract(const LieAlgebra& l, const AlgebraVector& xi, const WeilElement& a) {
  const int n = l.dim();
  if (xi.dim() != n) throw DimensionMismatch("contract: vector has wrong dimension");
  if (a.dim() != n) throw DimensionMismatch("contract: element and algebra dimensions differ");
  const Matrix co = coadjoint(l, xi);
  std::vector<WeilElement> ext_images;
  std::vector<WeilElement> sym_images;
  for (int i = 0; i < n; ++i) {
    ext_images.push_back(WeilElement::scalar(n, xi.coords[static_cast<std::size_t>(i)]));
    WeilElement img(n);
    for (int j = 0; j < n; ++j) {
      const Rational& c = co(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
      if (!is_zero(c)) img += c * WeilElement::ext_generator(n, j);
    }
    sym_images.push_back(std::move(img));
  }
  return apply_derivation(a, 1, ext_images, sym_images);
}

WeilElement lie_derivative(const LieAlgebra& l, const AlgebraVector& xi, const WeilElement& a) {
  return koszul_d(contract(l, xi, a)) + contract(l, xi, koszul_d(a));
}

WeilElement curvature_generator(const LieAlgebra& l, int i) {
  const int n = l.dim();
  if (i < 0 || i >= n) throw DomainError("curvature generator index out of range");
  WeilElement omega = WeilElement::sym_generator(n, i);
  const Rational half(1, 2);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (!is_zero(l.f(j, k, i)))
        omega += (half * l.f(j, k, i)) * (WeilElement::ext_generator(n, j) * WeilElement::ext_generator(n, k));
  return omega;
}

WeilElement horizontal_project(const LieAlgebra& l, const WeilElement& a) {
  const int n = l.dim();
  WeilElement out = a;
  for (int i = 0; i < n; ++i)
    out -= WeilElement::ext_generator(n, i) * contract(l, AlgebraVector::basis(n, i), out);
  return out;
}

WeilElement curvature_substitution(const LieAlgebra& l, const WeilElement& a) {
  const int n = l.dim();
  std::vector<WeilElement> ext_images;
  std::vector<WeilElement> sym_images;
  for (int i = 0; i < n; ++i) {
    ext_images.push_back(WeilElement::ext_generator(n, i));
    sym_images.push_back(curvature_generator(l, i));
  }
  return substitute(a, ext_images, sym_images);
}

WeilElement inverse_curvature_substitution(const LieAlgebra& l, const WeilElement& a) {
  const int n = l.dim();
  std::vector<WeilElement> ext_images;
  std::vector<WeilElement> sym_images;
  for (int i = 0; i < n; ++i) {
    ext_images.push_back(WeilElement::ext_generator(n, i));
    const WeilElement sym = WeilElement::sym_generator(n, i);
    sym_images.push_back(sym + sym - curvature_generator(l, i));
  }
  return substitute(a, ext_images, sym_images);
}

// ------------------------------------------------------------------ bases

std::vector<WeilIndex> weil_basis_bidegree(int n, int p, int q) {
  std::vector<WeilIndex> out;
  if (p < 0 || q < 0 || p > n) return out;
  if (n == 0) {
    if (p == 0 && q == 0) out.push_back(WeilIndex{0, {}});
    return out;
  }
  std::vector<std::vector<int>> syms;
  std::vector<int> cur(static_cast<std::size_t>(n));
  sym_compositions(n, q, 0, cur, syms);
  std::sort(syms.begin(), syms.end());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != p) continue;
    for (const auto& s : syms) out.push_back(WeilIndex{mask, s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeilIndex> weil_basis(int n, int degree) {
  std::vector<WeilIndex> out;
  for (int q = 0; 2 * q <= degree; ++q) {
    auto block = weil_basis_bidegree(n, degree - 2 * q, q);
    out.insert(out.end(), block.begin(), block.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

BasisMap index_basis(std::span<const WeilIndex> basis) {
  BasisMap m;
  for (std::size_t i = 0; i < basis.size(); ++i) m.emplace(basis[i], i);
  return m;
}

SparseRow coordinates(const WeilElement& a, const BasisMap& basis) {
  SparseRow row;
  for (const auto& [k, v] : a.terms()) {
    auto it = basis.find(k);
    if (it == basis.end()) throw DomainError("element is not in the span of the given basis");
    row.emplace_back(it->second, v);
  }
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

WeilElement from_coordinates(int n, std::span<const WeilIndex> basis, const SparseRow& coords) {
  WeilElement e(n);
  for (const auto& [j, v] : coords) e.add(basis[j], v);
  return e;
}

SparseMatrix operator_matrix(int n, std::span<const WeilIndex> domain, std::span<const WeilIndex> codomain,
                             const WeilOperator& op, Exec exec) {
  const BasisMap target = index_basis(codomain);
  std::vector<SparseRow> columns(domain.size());
  const auto cols = static_cast<std::ptrdiff_t>(domain.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel && cols > 8)
  for (std::ptrdiff_t j = 0; j < cols; ++j)
    columns[static_cast<std::size_t>(j)] =
        coordinates(op(WeilElement::monomial(n, domain[static_cast<std::size_t>(j)])), target);
  return SparseMatrix::from_columns(codomain.size(), columns);
}

std::vector<WeilElement> common_kernel(int n, std::span<const WeilIndex> domain, std::span<const WeilOperator> ops,
                                       Exec exec) {
  // Images are computed column by column (in parallel); rows are keyed by
  // (operator, output monomial), so no codomain basis is needed up front.
  const std::size_t cols = domain.size();
  std::vector<std::vector<WeilElement>> images(ops.size());
  for (std::size_t o = 0; o < ops.size(); ++o) {
    images[o].assign(cols, WeilElement(n));
    const auto ncols = static_cast<std::ptrdiff_t>(cols);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel && ncols > 8)
    for (std::ptrdiff_t j = 0; j < ncols; ++j)
      images[o][static_cast<std::size_t>(j)] = ops[o](WeilElement::monomial(n, domain[static_cast<std::size_t>(j)]));
  }

  std::map<std::pair<std::size_t, WeilIndex>, std::size_t> row_of;
  std::vector<SparseRow> rows;
  for (std::size_t o = 0; o < ops.size(); ++o)
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [k, v] : images[o][j].terms()) {
        auto [it, inserted] = row_of.try_emplace({o, k}, rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second].emplace_back(j, v);
      }

  SparseMatrix m(0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  std::vector<WeilElement> out;
  for (const auto& v : kernel_basis(m, exec)) out.push_back(from_coordinates(n, domain, v));
  return out;
}

std::vector<WeilElement> basic_subspace(const LieAlgebra& l, int degree, Exec exec) {
  if (degree < 0) return {};
  const int n = l.dim();
  const auto domain = weil_basis(n, degree);
  std::vector<WeilOperator> ops;
  for (int i = 0; i < n; ++i) {
    const AlgebraVector e = AlgebraVector::basis(n, i);
    ops.emplace_back([&l, e](const WeilElement& a) { return contract(l, e, a); });
    ops.emplace_back([&l, e](const WeilElement& a) { return lie_derivative(l, e, a); });
  }
  return common_kernel(n, domain, ops, exec);
}

std::vector<std::size_t> koszul_cohomology_dims(int n, int max_degree) {
  if (n < 1) throw DomainError("Koszul complex needs n >= 1");
  if (max_degree < 0) return {};
  // rank of d_K : W^d -> W^{d+1}, summed over the bidegree blocks
  // (p, q) -> (p-1, q+1), which have disjoint targets.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(max_degree) + 1);
  const auto degrees = static_cast<std::ptrdiff_t>(max_degree) + 1;
  const auto koszul = WeilOperator([](const WeilElement& a) { return koszul_d(a); });
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t d = 0; d < degrees; ++d) {
    std::size_t r = 0;
    for (int q = 0; 2 * q <= d; ++q) {
      const int p = static_cast<int>(d) - 2 * q;
      if (p == 0 || p > n) continue;  // d_K vanishes on W^{0,q}
      const auto domain = weil_basis_bidegree(n, p, q);
      const auto codomain = weil_basis_bidegree(n, p - 1, q + 1);
      r += rank_fraction_free(operator_matrix(n, domain, codomain, koszul, Exec::serial));
    }
    ranks[static_cast<std::size_t>(d)] = r;
  }
  const auto dims = graded_dims(n, max_degree);
  std::vector<std::size_t> h(dims.size());
  for (std::size_t d = 0; d < dims.size(); ++d) h[d] = dims[d] - ranks[d] - (d > 0 ? ranks[d - 1] : 0);
  return h;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::size_t> graded_dims(int n, int max_degree) {
  if (n < 1) throw DomainError("graded_dims needs n >= 1");
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t total = 0;
    for (int q = 0; 2 * q <= d; ++q) {
      const auto p = static_cast<std::size_t>(d - 2 * q);
      total += binomial(static_cast<std::size_t>(n), p) *
               binomial(static_cast<std::size_t>(n + q - 1), static_cast<std::size_t>(q));
    }
    out.push_back(total);
  }
  return out;
}

}  // namespace weil
