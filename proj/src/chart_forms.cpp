#include "weil/chart_forms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "weil/error.hpp"

namespace weil {

namespace {

constexpr int kMaxChartDim = 31;

// (-1)^{#{(i in a, j in b) : i > j}}
int merge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const std::uint32_t above = j + 1 >= 32 ? 0u : ~((1u << (j + 1)) - 1u);
    inversions += std::popcount(a & above);
  }
  return (inversions & 1) ? -1 : 1;
}

template <class K>
ChartForm<K> lift(const RationalForm& a);

template <>
ChartForm<Rational> lift<Rational>(const RationalForm& a) {
  return a;
}

template <>
ChartForm<GaussianRational> lift<GaussianRational>(const RationalForm& a) {
  return complexify(a);
}

void monomials_upto(int m, int degree, int pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == m) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    cur[static_cast<std::size_t>(pos)] = e;
    monomials_upto(m, degree - e, pos + 1, cur, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

int FormKey::form_degree() const { return std::popcount(dx); }

int FormKey::poly_degree() const { return std::accumulate(mono.begin(), mono.end(), 0); }

std::strong_ordering operator<=>(const FormKey& a, const FormKey& b) {
  if (auto c = a.form_degree() <=> b.form_degree(); c != 0) return c;
  if (auto c = a.dx <=> b.dx; c != 0) return c;
  if (auto c = a.poly_degree() <=> b.poly_degree(); c != 0) return c;
  // graded lex: x1^2 before x1 x2 before x2^2
  return b.mono <=> a.mono;
}

// -------------------------------------------------------------- ChartForm

template <class K>
ChartForm<K>::ChartForm(int m) : m_(m) {
  if (m < 0 || m > kMaxChartDim) throw DomainError("chart dimension must be in [0, 31]");
}

template <class K>
ChartForm<K> ChartForm<K>::constant(int m, const K& c) {
  return term(m, FormKey{0, std::vector<int>(static_cast<std::size_t>(m))}, c);
}

template <class K>
ChartForm<K> ChartForm<K>::coordinate(int m, int i) {
  if (i < 0 || i >= m) throw DomainError("coordinate index out of range");
  FormKey key{0, std::vector<int>(static_cast<std::size_t>(m))};
  key.mono[static_cast<std::size_t>(i)] = 1;
  return term(m, std::move(key));
}

template <class K>
ChartForm<K> ChartForm<K>::differential(int m, int i) {
  if (i < 0 || i >= m) throw DomainError("coordinate index out of range");
  return term(m, FormKey{1u << i, std::vector<int>(static_cast<std::size_t>(m))});
}

template <class K>
ChartForm<K> ChartForm<K>::term(int m, FormKey key, const K& c) {
  ChartForm f(m);
  f.add(key, c);
  return f;
}

template <class K>
K ChartForm<K>::coefficient(const FormKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? K(0) : it->second;
}

template <class K>
void ChartForm<K>::add(const FormKey& key, const K& c) {
  if (weil::is_zero(c)) return;
  if (static_cast<int>(key.mono.size()) != m_) throw DimensionMismatch("form term has wrong monomial length");
  if (m_ < 32 && (key.dx >> m_) != 0) throw DimensionMismatch("form term differential out of range");
  for (int e : key.mono)
    if (e < 0) throw DomainError("negative exponent");
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (weil::is_zero(it->second)) terms_.erase(it);
  }
}

template <class K>
std::optional<int> ChartForm<K>::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int p = terms_.begin()->first.form_degree();
  for (const auto& [k, v] : terms_)
    if (k.form_degree() != p) return std::nullopt;
  return p;
}

template <class K>
int ChartForm<K>::max_poly_degree() const {
  int best = 0;
  for (const auto& [k, v] : terms_) best = std::max(best, k.poly_degree());
  return best;
}

template <class K>
ChartForm<K>& ChartForm<K>::operator+=(const ChartForm& o) {
  if (o.m_ != m_) throw DimensionMismatch("forms on different charts");
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

template <class K>
ChartForm<K>& ChartForm<K>::operator-=(const ChartForm& o) {
  if (o.m_ != m_) throw DimensionMismatch("forms on different charts");
  for (const auto& [k, v] : o.terms_) add(k, -v);
  return *this;
}

template <class K>
ChartForm<K>& ChartForm<K>::operator*=(const K& s) {
  if (weil::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

// -------------------------------------------------------------- operations

template <class K>
ChartForm<K> wedge(const ChartForm<K>& a, const ChartForm<K>& b) {
  if (a.chart_dim() != b.chart_dim()) throw DimensionMismatch("wedge: forms on different charts");
  const int m = a.chart_dim();
  ChartForm<K> out(m);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.dx & kb.dx) continue;
      FormKey k{ka.dx | kb.dx, ka.mono};
      for (int i = 0; i < m; ++i) k.mono[static_cast<std::size_t>(i)] += kb.mono[static_cast<std::size_t>(i)];
      K c = ca * cb;
      if (merge_sign(ka.dx, kb.dx) < 0) c = -c;
      out.add(k, c);
    }
  }
  return out;
}

template <class K>
ChartForm<K> partial(const ChartForm<K>& a, int i) {
  const int m = a.chart_dim();
  if (i < 0 || i >= m) throw DomainError("partial: coordinate index out of range");
  ChartForm<K> out(m);
  for (const auto& [k, c] : a.terms()) {
    const int e = k.mono[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    FormKey nk = k;
    nk.mono[static_cast<std::size_t>(i)] -= 1;
    out.add(nk, c * K(e));
  }
  return out;
}

template <class K>
ChartForm<K> d(const ChartForm<K>& a) {
  const int m = a.chart_dim();
  ChartForm<K> out(m);
  for (const auto& [k, c] : a.terms()) {
    for (int i = 0; i < m; ++i) {
      const int e = k.mono[static_cast<std::size_t>(i)];
      if (e == 0 || (k.dx >> i) & 1u) continue;
      // dx_i moves to the front of dx_I: sign counts indices below i
      FormKey nk{k.dx | (1u << i), k.mono};
      nk.mono[static_cast<std::size_t>(i)] -= 1;
      K coeff = c * K(e);
      if (std::popcount(k.dx & ((1u << i) - 1u)) & 1) coeff = -coeff;
      out.add(nk, coeff);
    }
  }
  return out;
}

ChartForm<GaussianRational> complexify(const RationalForm& a) {
  ChartForm<GaussianRational> out(a.chart_dim());
  for (const auto& [k, c] : a.terms()) out.add(k, GaussianRational(c));
  return out;
}

RationalForm real_part_exact(const ChartForm<GaussianRational>& a) {
  RationalForm out(a.chart_dim());
  for (const auto& [k, c] : a.terms()) {
    if (!is_zero(c.im)) throw DomainError("form has a nonzero imaginary part");
    out.add(k, c.re);
  }
  return out;
}

PolyMap PolyMap::identity(int m) {
  PolyMap p{m, m, {}};
  for (int i = 0; i < m; ++i) p.components.push_back(RationalForm::coordinate(m, i));
  return p;
}

void PolyMap::validate() const {
  if (static_cast<int>(components.size()) != target_dim)
    throw DimensionMismatch("polynomial map: component count differs from target dimension");
  for (const auto& c : components) {
    if (c.chart_dim() != source_dim) throw DimensionMismatch("polynomial map: component on the wrong chart");
    if (auto deg = c.degree(); deg && *deg != 0) throw DomainError("polynomial map components must be functions");
    if (!c.degree() && !c.is_zero()) throw DomainError("polynomial map components must be functions");
  }
}

template <class K>
ChartForm<K> pullback(const PolyMap& phi, const ChartForm<K>& a) {
  phi.validate();
  if (a.chart_dim() != phi.target_dim) throw DimensionMismatch("pullback: form and map target differ");
  const int src = phi.source_dim;
  std::vector<ChartForm<K>> comp;
  std::vector<ChartForm<K>> dcomp;
  for (const auto& c : phi.components) {
    comp.push_back(lift<K>(c));
    dcomp.push_back(d(comp.back()));
  }
  // powers of each component, grown on demand
  std::vector<std::vector<ChartForm<K>>> powers(comp.size(), {ChartForm<K>::constant(src, K(1))});
  auto power = [&](std::size_t j, int e) -> const ChartForm<K>& {
    auto& p = powers[j];
    while (static_cast<int>(p.size()) <= e) p.push_back(wedge(p.back(), comp[j]));
    return p[static_cast<std::size_t>(e)];
  };
  ChartForm<K> out(src);
  for (const auto& [k, c] : a.terms()) {
    ChartForm<K> t = ChartForm<K>::constant(src, c);
    for (std::size_t j = 0; j < comp.size(); ++j)
      if (k.mono[j] > 0) t = wedge(t, power(j, k.mono[j]));
    for (std::uint32_t rest = k.dx; rest != 0 && !t.is_zero(); rest &= rest - 1)
      t = wedge(t, dcomp[static_cast<std::size_t>(std::countr_zero(rest))]);
    out += t;
  }
  return out;
}

PolyMap compose(const PolyMap& phi, const PolyMap& psi) {
  if (phi.source_dim != psi.target_dim) throw DimensionMismatch("compose: dimensions do not chain");
  PolyMap out{psi.source_dim, phi.target_dim, {}};
  for (const auto& c : phi.components) out.components.push_back(pullback(psi, c));
  return out;
}

namespace {

void check_field(const Matrix& rho, int m) {
  if (rho.rows() != static_cast<std::size_t>(m) || rho.cols() != static_cast<std::size_t>(m))
    throw DimensionMismatch("vector field matrix does not match the chart");
}

// X^i = sum_k rho(i,k) x_k as a 0-form
RationalForm field_component(const Matrix& rho, int m, int i) {
  RationalForm f(m);
  for (int k = 0; k < m; ++k) {
    const Rational& c = rho(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
    if (!is_zero(c)) f += c * RationalForm::coordinate(m, k);
  }
  return f;
}

RationalForm field_differential(const Matrix& rho, int m, int i) {
  RationalForm f(m);
  for (int k = 0; k < m; ++k) {
    const Rational& c = rho(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
    if (!is_zero(c)) f += c * RationalForm::differential(m, k);
  }
  return f;
}

}  // namespace

RationalForm contract_linear(const Matrix& rho, const RationalForm& a) {
  const int m = a.chart_dim();
  check_field(rho, m);
  RationalForm out(m);
  const std::vector<int> flat(static_cast<std::size_t>(m));
  for (const auto& [k, c] : a.terms()) {
    int position = 0;
    for (std::uint32_t rest = k.dx; rest != 0; rest &= rest - 1, ++position) {
      const int i = std::countr_zero(rest);
      const std::uint32_t remaining = k.dx & ~(1u << i);
      RationalForm t = field_component(rho, m, i);
      if (t.is_zero()) continue;
      const Rational sign = (position & 1) ? Rational(-1) : Rational(1);
      out += wedge(RationalForm::term(m, FormKey{0, k.mono}, sign * c), wedge(t, RationalForm::term(m, FormKey{remaining, flat})));
    }
  }
  return out;
}

RationalForm lie_derivative_linear(const Matrix& rho, const RationalForm& a) {
  const int m = a.chart_dim();
  check_field(rho, m);
  RationalForm out(m);
  const std::vector<int> flat(static_cast<std::size_t>(m));
  for (const auto& [k, c] : a.terms()) {
    const RationalForm coeff = RationalForm::term(m, FormKey{0, k.mono}, c);
    // X(f) dx_I
    RationalForm xf(m);
    for (int i = 0; i < m; ++i) xf += wedge(field_component(rho, m, i), partial(coeff, i));
    out += wedge(xf, RationalForm::term(m, FormKey{k.dx, flat}));
    // f dx_{i_1} ^ .. ^ d(X^{i_t}) ^ .. ^ dx_{i_p}
    for (std::uint32_t rest = k.dx; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const std::uint32_t bit = 1u << i;
      const std::uint32_t below = k.dx & (bit - 1u);
      const std::uint32_t above = k.dx & ~(below | bit);
      out += wedge(wedge(wedge(coeff, RationalForm::term(m, FormKey{below, flat})), field_differential(rho, m, i)),
                   RationalForm::term(m, FormKey{above, flat}));
    }
  }
  return out;
}

Rational evaluate(const RationalForm& f, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != f.chart_dim()) throw DimensionMismatch("evaluate: point has wrong dimension");
  Rational total;
  for (const auto& [k, c] : f.terms()) {
    if (k.dx != 0) throw DomainError("evaluate: only functions can be evaluated");
    Rational t = c;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int e = 0; e < k.mono[i]; ++e) t *= x[i];
    total += t;
  }
  return total;
}

RationalForm homogeneous_part(const RationalForm& f, int i) {
  RationalForm out(f.chart_dim());
  for (const auto& [k, c] : f.terms())
    if (k.poly_degree() == i) out.add(k, c);
  return out;
}

std::vector<FormKey> form_basis(int m, int p, int max_poly) {
  std::vector<FormKey> out;
  if (p < 0 || p > m || max_poly < 0) return out;
  std::vector<std::vector<int>> monos;
  std::vector<int> cur(static_cast<std::size_t>(m));
  monomials_upto(m, max_poly, 0, cur, monos);
  const std::uint32_t limit = m == 0 ? 1u : (1u << m);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != p) continue;
    for (const auto& mono : monos) out.push_back(FormKey{mask, mono});
  }
  std::sort(out.begin(), out.end());
  return out;
}

template class ChartForm<Rational>;
template class ChartForm<GaussianRational>;
template ChartForm<Rational> wedge(const ChartForm<Rational>&, const ChartForm<Rational>&);
template ChartForm<GaussianRational> wedge(const ChartForm<GaussianRational>&, const ChartForm<GaussianRational>&);
template ChartForm<Rational> d(const ChartForm<Rational>&);
template ChartForm<GaussianRational> d(const ChartForm<GaussianRational>&);
template ChartForm<Rational> partial(const ChartForm<Rational>&, int);
template ChartForm<GaussianRational> partial(const ChartForm<GaussianRational>&, int);
template ChartForm<Rational> pullback(const PolyMap&, const ChartForm<Rational>&);
template ChartForm<GaussianRational> pullback(const PolyMap&, const ChartForm<GaussianRational>&);

}  // namespace weil
