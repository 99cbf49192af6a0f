#include "weil/equivariant.hpp"

#include <algorithm>

#include "weil/error.hpp"

namespace weil {

Matrix LinearAction::at(const AlgebraVector& xi) const {
  if (xi.dim() != algebra.dim()) throw DimensionMismatch("action: vector has wrong dimension");
  Matrix out(static_cast<std::size_t>(chart_dim), static_cast<std::size_t>(chart_dim));
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!is_zero(xi.coords[i])) out += xi.coords[i] * rho[i];
  return out;
}

void LinearAction::validate() const {
  const int n = algebra.dim();
  const auto m = static_cast<std::size_t>(chart_dim);
  if (static_cast<int>(rho.size()) != n) throw DomainError("action: need one matrix per basis vector");
  for (const auto& r : rho)
    if (r.rows() != m || r.cols() != m) throw DomainError("action: matrix size differs from chart dimension");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix lhs = commutator(rho[static_cast<std::size_t>(i)], rho[static_cast<std::size_t>(j)]);
      for (int k = 0; k < n; ++k)
        if (!is_zero(algebra.f(i, j, k))) lhs += algebra.f(i, j, k) * rho[static_cast<std::size_t>(k)];
      if (!lhs.is_zero())
        throw DomainError("action: [rho(e" + std::to_string(i + 1) + "), rho(e" + std::to_string(j + 1) +
                          ")] is not -rho([e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + "])");
    }
}

LinearAction builtin_action(std::string_view name, const LieAlgebra& l, int chart_dim) {
  LinearAction act{l, chart_dim, {}};
  if (name == "trivial") {
    if (chart_dim < 0) throw DomainError("chart dimension must be nonnegative");
    const auto m = static_cast<std::size_t>(chart_dim);
    act.rho.assign(static_cast<std::size_t>(l.dim()), Matrix(m, m));
  } else if (name == "rot2") {
    if (l.dim() != 1) throw DomainError("rot2 is an action of a one-dimensional algebra");
    act.chart_dim = 2;
    Matrix r(2, 2);
    r(0, 1) = -1;
    r(1, 0) = 1;
    act.rho = {r};
  } else if (name == "rot3") {
    if (!same_structure(l, builtin_algebra("su2"))) throw DomainError("rot3 is an action of su2/so3");
    act.chart_dim = 3;
    for (int i = 0; i < 3; ++i) {
      Matrix r(3, 3);
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = l.f(i, j, k);
      act.rho.push_back(r);
    }
  } else {
    throw DomainError("unknown action '" + std::string(name) + "'");
  }
  act.validate();
  return act;
}

// ------------------------------------------------------- WeilModelElement

WeilModelElement::WeilModelElement(int chart_dim, int algebra_dim) : m_(chart_dim), n_(algebra_dim) {
  if (chart_dim < 0 || algebra_dim < 0) throw DomainError("negative dimension");
}

WeilModelElement WeilModelElement::tensor(const RationalForm& omega, const WeilElement& a) {
  WeilModelElement out(omega.chart_dim(), a.dim());
  for (const auto& [fk, fc] : omega.terms())
    for (const auto& [wk, wc] : a.terms()) out.add({fk, wk}, fc * wc);
  return out;
}

void WeilModelElement::add(const ModelKey& key, const Rational& c) {
  if (weil::is_zero(c)) return;
  if (static_cast<int>(key.first.mono.size()) != m_ || static_cast<int>(key.second.sym.size()) != n_)
    throw DimensionMismatch("model term has the wrong shape");
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (weil::is_zero(it->second)) terms_.erase(it);
  }
}

std::optional<int> WeilModelElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  auto deg = [](const ModelKey& k) { return k.first.form_degree() + k.second.degree(); };
  const int d = deg(terms_.begin()->first);
  for (const auto& [k, v] : terms_)
    if (deg(k) != d) return std::nullopt;
  return d;
}

WeilModelElement& WeilModelElement::operator+=(const WeilModelElement& o) {
  if (o.m_ != m_ || o.n_ != n_) throw DimensionMismatch("model elements of different shape");
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

WeilModelElement& WeilModelElement::operator-=(const WeilModelElement& o) {
  if (o.m_ != m_ || o.n_ != n_) throw DimensionMismatch("model elements of different shape");
  for (const auto& [k, v] : o.terms_) add(k, -v);
  return *this;
}

WeilModelElement& WeilModelElement::operator*=(const Rational& s) {
  if (weil::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= s;
  return *this;
}

// ------------------------------------------------------------- operators

namespace {

// Applies chart_op (x) 1 + sign(deg omega) * 1 (x) weil_op term by term.
template <class ChartOp, class WeilOp>
WeilModelElement split_apply(const WeilModelElement& w, ChartOp chart_op, WeilOp weil_op, bool odd) {
  const int m = w.chart_dim();
  const int n = w.algebra_dim();
  WeilModelElement out(m, n);
  for (const auto& [key, c] : w.terms()) {
    const RationalForm omega = RationalForm::term(m, key.first, c);
    const WeilElement a = WeilElement::monomial(n, key.second);
    out += WeilModelElement::tensor(chart_op(omega), a);
    WeilModelElement right = WeilModelElement::tensor(omega, weil_op(a));
    if (odd && (key.first.form_degree() & 1)) right *= Rational(-1);
    out += right;
  }
  return out;
}

}  // namespace

WeilModelElement total_d(const WeilModelElement& w) {
  return split_apply(
      w, [](const RationalForm& f) { return d(f); }, [](const WeilElement& a) { return koszul_d(a); }, true);
}

WeilModelElement total_contract(const LinearAction& act, const AlgebraVector& xi, const WeilModelElement& w) {
  if (w.chart_dim() != act.chart_dim || w.algebra_dim() != act.algebra.dim())
    throw DimensionMismatch("element and action shapes differ");
  const Matrix field = act.at(xi);
  return split_apply(
      w, [&](const RationalForm& f) { return contract_linear(field, f); },
      [&](const WeilElement& a) { return contract(act.algebra, xi, a); }, true);
}

WeilModelElement total_lie_derivative(const LinearAction& act, const AlgebraVector& xi, const WeilModelElement& w) {
  if (w.chart_dim() != act.chart_dim || w.algebra_dim() != act.algebra.dim())
    throw DimensionMismatch("element and action shapes differ");
  const Matrix field = act.at(xi);
  return split_apply(
      w, [&](const RationalForm& f) { return lie_derivative_linear(field, f); },
      [&](const WeilElement& a) { return lie_derivative(act.algebra, xi, a); }, false);
}

std::vector<ModelKey> model_basis(int m, int n, int degree, int poly_cap) {
  std::vector<ModelKey> out;
  if (degree < 0) return out;
  for (int p = 0; p <= std::min(m, degree); ++p) {
    const auto forms = form_basis(m, p, poly_cap);
    const auto weil = weil_basis(n, degree - p);
    for (const auto& f : forms)
      for (const auto& w : weil) out.emplace_back(f, w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SparseRow model_coordinates(const WeilModelElement& w, const std::map<ModelKey, std::size_t>& basis) {
  SparseRow row;
  for (const auto& [k, v] : w.terms()) {
    auto it = basis.find(k);
    if (it == basis.end()) throw DomainError("model element is outside the given basis");
    row.emplace_back(it->second, v);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::vector<WeilModelElement> basic_basis(const LinearAction& act, int degree, int poly_cap, Exec exec) {
  act.validate();
  const int m = act.chart_dim;
  const int n = act.algebra.dim();
  const auto domain = model_basis(m, n, degree, poly_cap);
  const std::size_t cols = domain.size();

  // one equation per (operator, output term)
  const std::size_t nops = 2 * static_cast<std::size_t>(n);
  std::vector<std::vector<WeilModelElement>> images(nops, std::vector<WeilModelElement>(cols, WeilModelElement(m, n)));
  const auto total = static_cast<std::ptrdiff_t>(nops * cols);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel && total > 8)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const std::size_t o = static_cast<std::size_t>(t) / std::max<std::size_t>(cols, 1);
    const std::size_t j = static_cast<std::size_t>(t) % std::max<std::size_t>(cols, 1);
    WeilModelElement w(m, n);
    w.add(domain[j], 1);
    const AlgebraVector e = AlgebraVector::basis(n, static_cast<int>(o / 2));
    images[o][j] = (o % 2 == 0) ? total_contract(act, e, w) : total_lie_derivative(act, e, w);
  }

  std::map<std::pair<std::size_t, ModelKey>, std::size_t> row_of;
  std::vector<SparseRow> rows;
  for (std::size_t o = 0; o < nops; ++o)
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [k, v] : images[o][j].terms()) {
        auto [it, inserted] = row_of.try_emplace({o, k}, rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second].emplace_back(j, v);
      }
  SparseMatrix eqs(0, cols);
  for (auto& r : rows) eqs.append_row(std::move(r));

  std::vector<WeilModelElement> out;
  for (const auto& v : kernel_basis(eqs, exec)) {
    WeilModelElement w(m, n);
    for (const auto& [j, c] : v) w.add(domain[j], c);
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t basic_dims(const LinearAction& act, int degree, int poly_cap, Exec exec) {
  return basic_basis(act, degree, poly_cap, exec).size();
}

}  // namespace weil
