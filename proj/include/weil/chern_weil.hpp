#pragma once

// Connections on trivial bundles over a chart: g-valued 1-forms, their
// curvature, Chern-Weil forms and gauge transformations.

#include <string_view>
#include <vector>

#include "weil/chart_forms.hpp"
#include "weil/liealg.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

/// sum_i components[i] (x) e_i
template <class K>
struct LieValuedForm {
  LieAlgebra algebra{1};
  int chart_dim = 0;
  std::vector<ChartForm<K>> components;

  static LieValuedForm zero(const LieAlgebra& l, int m);
  void validate() const;
  friend bool operator==(const LieValuedForm&, const LieValuedForm&) = default;
};

using Connection = LieValuedForm<Rational>;

/// F = dA + 1/2 [A, A], [A, A]^k = sum_{ij} f^k_{ij} A^i ^ A^j.
template <class K>
LieValuedForm<K> curvature(const LieValuedForm<K>& a);

/// Symmetric k-linear form of a degree-k polynomial on g, evaluated on the
/// curvature: sum over distinct index sequences of (c / multinomial) F^{i_1} ^ .. ^ F^{i_k}.
/// p must have no exterior part and a single symmetric degree.
template <class K>
ChartForm<K> cw_form(const WeilElement& p, const LieValuedForm<K>& a);

/// Homomorphism W(g) -> forms: lambda^i -> A^i, ~lambda^i -> dA^i.
template <class K>
ChartForm<K> weil_to_chart(const WeilElement& w, const LieValuedForm<K>& a);

/// Quadratic Casimir sum_i (~lambda^i)^2 for algebras with an orthonormal
/// invariant form (abelian, su2, so3); throws DomainError otherwise.
WeilElement casimir(const LieAlgebra& l);

// ------------------------------------------------------------------ gauge

/// r x r matrix of forms, row-major.
template <class K>
using FormMatrix = std::vector<ChartForm<K>>;

/// Faithful matrix representation e_i -> T_i with [T_i, T_j] = sum_k f^k_{ij} T_k.
template <class K>
struct MatrixRepresentation {
  LieAlgebra algebra{1};
  int size = 0;
  std::vector<std::vector<K>> generators;  // each r*r, row-major

  /// Throws DomainError if the brackets disagree with the algebra or the
  /// generators are linearly dependent.
  void validate() const;
};

/// abelian(n) as unipotent (n+1)x(n+1) matrices 1 + sum_i phi_i E_{1,i+1};
/// heisenberg3 via E12, E23, E13; so3 via (L_i)_{jk} = -eps_{ijk}; sl2 via
/// (h, e, f). su2 needs complex entries: T_k = -(i/2) sigma_k.
MatrixRepresentation<Rational> builtin_representation(const LieAlgebra& l);
MatrixRepresentation<GaussianRational> builtin_complex_representation(const LieAlgebra& l);

enum class GaugeKind { constant, unipotent };

template <class K>
struct GaugeTransform {
  GaugeKind kind = GaugeKind::constant;
  int size = 0;
  int chart_dim = 0;
  FormMatrix<K> entries;  // 0-forms

  /// constant: scalar entries with nonzero determinant; unipotent: unit
  /// diagonal and zero below it. Throws DomainError otherwise.
  void validate() const;
};

template <class K>
FormMatrix<K> matrix_inverse(const GaugeTransform<K>& g);

template <class K>
FormMatrix<K> matrix_product(const FormMatrix<K>& a, const FormMatrix<K>& b, int r);

/// g^{-1} dg
template <class K>
FormMatrix<K> maurer_cartan(const GaugeTransform<K>& g);

/// g^{-1} dg + g^{-1} A g on plain matrices of forms (gl(r)).
template <class K>
FormMatrix<K> gauge_transform_matrix(const FormMatrix<K>& a, const GaugeTransform<K>& g);

template <class K>
FormMatrix<K> to_matrix(const LieValuedForm<K>& a, const MatrixRepresentation<K>& rep);

/// Inverse of to_matrix. Throws DomainError if m is not in the image.
template <class K>
LieValuedForm<K> from_matrix(const FormMatrix<K>& m, const MatrixRepresentation<K>& rep, int chart_dim);

/// A . g = g^* theta + Ad_{g^{-1}} A, computed as g^{-1} dg + g^{-1} A g.
template <class K>
LieValuedForm<K> gauge_transform(const LieValuedForm<K>& a, const GaugeTransform<K>& g,
                                 const MatrixRepresentation<K>& rep);

/// Ad_{g^{-1}} F, pointwise.
template <class K>
LieValuedForm<K> adjoint_action(const LieValuedForm<K>& f, const GaugeTransform<K>& g,
                                const MatrixRepresentation<K>& rep);

template <class K>
LieValuedForm<K> pullback(const PolyMap& phi, const LieValuedForm<K>& a);

LieValuedForm<GaussianRational> complexify(const Connection& a);

}  // namespace weil
