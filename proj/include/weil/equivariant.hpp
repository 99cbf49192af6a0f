#pragma once

// Weil model Omega(X) (x) W(g) for a linear infinitesimal action on a chart X.
// xi acts on X through the vector field x -> rho(xi) x. Vector fields of
// linear maps bracket with a sign flip, [X_A, X_B] = -X_{[A,B]}, so rho has to
// be an anti-homomorphism for xi -> L_{xi^} to respect brackets.

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "weil/chart_forms.hpp"
#include "weil/liealg.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

struct LinearAction {
  LieAlgebra algebra{1};
  int chart_dim = 0;
  std::vector<Matrix> rho;  // rho(e_i), m x m

  /// rho(xi) = sum_i xi_i rho(e_i)
  Matrix at(const AlgebraVector& xi) const;
  /// Sizes, then [rho_i, rho_j] = -sum_k f^k_{ij} rho_k. Throws DomainError.
  void validate() const;
};

/// "trivial" (any algebra, chart_dim m), "rot2" (abelian(1) on R^2),
/// "rot3" (su2 or so3 on R^3, rho(e_i)_{jk} = eps_{ijk}).
LinearAction builtin_action(std::string_view name, const LieAlgebra& l, int chart_dim = 0);

using ModelKey = std::pair<FormKey, WeilIndex>;

class WeilModelElement {
 public:
  using Terms = std::map<ModelKey, Rational>;

  WeilModelElement(int chart_dim, int algebra_dim);

  /// omega (x) a
  static WeilModelElement tensor(const RationalForm& omega, const WeilElement& a);

  int chart_dim() const { return m_; }
  int algebra_dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const ModelKey& key, const Rational& c);

  /// Set only when all terms share it; form degree + Weil degree.
  std::optional<int> degree() const;

  WeilModelElement& operator+=(const WeilModelElement& o);
  WeilModelElement& operator-=(const WeilModelElement& o);
  WeilModelElement& operator*=(const Rational& s);
  friend WeilModelElement operator+(WeilModelElement a, const WeilModelElement& b) { return a += b; }
  friend WeilModelElement operator-(WeilModelElement a, const WeilModelElement& b) { return a -= b; }
  friend WeilModelElement operator*(const Rational& s, WeilModelElement a) { return a *= s; }
  friend bool operator==(const WeilModelElement&, const WeilModelElement&) = default;

 private:
  int m_;
  int n_;
  Terms terms_;
};

/// D(omega (x) a) = d omega (x) a + (-1)^{deg omega} omega (x) d_K a
WeilModelElement total_d(const WeilModelElement& w);

/// iota(omega (x) a) = iota_{xi^} omega (x) a + (-1)^{deg omega} omega (x) iota_xi a
WeilModelElement total_contract(const LinearAction& act, const AlgebraVector& xi, const WeilModelElement& w);

/// L_{xi^} omega (x) a + omega (x) L_xi a, with the chart part computed
/// directly rather than through Cartan's formula.
WeilModelElement total_lie_derivative(const LinearAction& act, const AlgebraVector& xi, const WeilModelElement& w);

/// Truncated basis: form part of coefficient degree <= poly_cap, total degree d.
std::vector<ModelKey> model_basis(int m, int n, int degree, int poly_cap);

/// Basis of the basic elements inside the truncation (echelon form).
std::vector<WeilModelElement> basic_basis(const LinearAction& act, int degree, int poly_cap,
                                          Exec exec = default_exec());
std::size_t basic_dims(const LinearAction& act, int degree, int poly_cap, Exec exec = default_exec());

/// Coordinates against a basis; throws DomainError outside its span.
SparseRow model_coordinates(const WeilModelElement& w, const std::map<ModelKey, std::size_t>& basis);

}  // namespace weil
