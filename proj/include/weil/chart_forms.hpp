#pragma once

// Differential forms with polynomial coefficients on an affine chart R^m.
// A term is coefficient * x^mono dx_{i_1} ^ ... ^ dx_{i_p}, indices ascending.
// Coefficients live in K (Rational, or GaussianRational for complexified
// gauge computations).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "weil/linalg.hpp"
#include "weil/rational.hpp"

namespace weil {

struct FormKey {
  std::uint32_t dx = 0;   // bit i <-> dx_{i+1}
  std::vector<int> mono;  // exponent of x_{i+1}

  int form_degree() const;
  int poly_degree() const;

  friend bool operator==(const FormKey&, const FormKey&) = default;
  /// Form degree, then dx mask, then graded-lex on the monomial.
  friend std::strong_ordering operator<=>(const FormKey& a, const FormKey& b);
};

template <class K>
class ChartForm {
 public:
  using Terms = std::map<FormKey, K>;

  explicit ChartForm(int m);

  static ChartForm constant(int m, const K& c);
  /// x_{i+1}
  static ChartForm coordinate(int m, int i);
  /// dx_{i+1}
  static ChartForm differential(int m, int i);
  static ChartForm term(int m, FormKey key, const K& c = K(1));

  int chart_dim() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  K coefficient(const FormKey& key) const;
  void add(const FormKey& key, const K& c);

  std::optional<int> degree() const;
  /// Largest coefficient degree (0 for the zero form).
  int max_poly_degree() const;

  ChartForm& operator+=(const ChartForm& o);
  ChartForm& operator-=(const ChartForm& o);
  ChartForm& operator*=(const K& s);
  friend ChartForm operator+(ChartForm a, const ChartForm& b) { return a += b; }
  friend ChartForm operator-(ChartForm a, const ChartForm& b) { return a -= b; }
  friend ChartForm operator-(ChartForm a) { return a *= K(-1); }
  friend ChartForm operator*(const K& s, ChartForm a) { return a *= s; }
  friend bool operator==(const ChartForm&, const ChartForm&) = default;

 private:
  int m_;
  Terms terms_;
};

using RationalForm = ChartForm<Rational>;

template <class K>
ChartForm<K> wedge(const ChartForm<K>& a, const ChartForm<K>& b);

/// Exterior derivative.
template <class K>
ChartForm<K> d(const ChartForm<K>& a);

/// d/dx_{i+1} applied to the coefficients.
template <class K>
ChartForm<K> partial(const ChartForm<K>& a, int i);

/// Same form with coefficients mapped into a larger field.
ChartForm<GaussianRational> complexify(const RationalForm& a);
/// Inverse of complexify; throws DomainError on a nonzero imaginary part.
RationalForm real_part_exact(const ChartForm<GaussianRational>& a);

/// Polynomial map R^source -> R^target; components are 0-forms on R^source.
struct PolyMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<RationalForm> components;

  static PolyMap identity(int m);
  /// Checks component count, chart dims and that components are 0-forms.
  void validate() const;
};

/// phi^* a; a lives on R^{phi.target_dim}.
template <class K>
ChartForm<K> pullback(const PolyMap& phi, const ChartForm<K>& a);

/// (phi o psi)(x) = phi(psi(x)).
PolyMap compose(const PolyMap& phi, const PolyMap& psi);

/// Linear vector field X(x) = rho x. Contraction iota_X and the Lie
/// derivative, the latter computed directly from
/// L_X(f dx_I) = X(f) dx_I + f sum_t dx_{i_1} ^ .. ^ d(X^{i_t}) ^ .. ^ dx_{i_p}.
ChartForm<Rational> contract_linear(const Matrix& rho, const RationalForm& a);
ChartForm<Rational> lie_derivative_linear(const Matrix& rho, const RationalForm& a);

/// Value of a 0-form at a point. Throws DomainError for positive-degree terms.
Rational evaluate(const RationalForm& f, std::span<const Rational> x);

/// Degree-i homogeneous part of the coefficients.
RationalForm homogeneous_part(const RationalForm& f, int i);

/// Monomial bases of the truncated complex: all keys of form degree p with
/// coefficient degree <= max_poly.
std::vector<FormKey> form_basis(int m, int p, int max_poly);

}  // namespace weil
