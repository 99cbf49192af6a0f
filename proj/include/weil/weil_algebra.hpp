#pragma once

// The Weil algebra W(g) = Lambda(g*) (x) Sym(g*): exterior generators
// lambda^i in degree 1, symmetric generators ~lambda^i in degree 2, with the
// Koszul differential, contractions, Lie derivatives and the basic
// subcomplex. With a zero bracket this is the plain Koszul complex.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weil/liealg.hpp"
#include "weil/linalg.hpp"

namespace weil {

/// Basis monomial lambda^{i_1} ^ ... ^ lambda^{i_p} * prod (~lambda^i)^{sym[i]},
/// exterior indices ascending. ext is a bitmask (bit i <-> lambda^{i+1}).
struct WeilIndex {
  std::uint32_t ext = 0;
  std::vector<int> sym;

  int ext_degree() const;
  int sym_degree() const;
  int degree() const { return ext_degree() + 2 * sym_degree(); }

  friend bool operator==(const WeilIndex&, const WeilIndex&) = default;
  /// Canonical term order: total degree, then ext mask, then sym vector.
  friend std::strong_ordering operator<=>(const WeilIndex& a, const WeilIndex& b);
};

class WeilElement {
 public:
  using Terms = std::map<WeilIndex, Rational>;

  explicit WeilElement(int n);

  static WeilElement scalar(int n, const Rational& c);
  static WeilElement one(int n) { return scalar(n, 1); }
  /// lambda^{i+1}
  static WeilElement ext_generator(int n, int i);
  /// ~lambda^{i+1}
  static WeilElement sym_generator(int n, int i);
  static WeilElement monomial(int n, WeilIndex idx, const Rational& c = 1);

  int dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const WeilIndex& idx) const;

  /// Adds c * idx, dropping the entry if it cancels.
  void add(const WeilIndex& idx, const Rational& c);

  /// Set only when every term has the same (total / bi-) degree.
  std::optional<int> degree() const;
  std::optional<std::pair<int, int>> bidegree() const;

  WeilElement& operator+=(const WeilElement& o);
  WeilElement& operator-=(const WeilElement& o);
  WeilElement& operator*=(const Rational& s);
  friend WeilElement operator+(WeilElement a, const WeilElement& b) { return a += b; }
  friend WeilElement operator-(WeilElement a, const WeilElement& b) { return a -= b; }
  friend WeilElement operator-(WeilElement a) { return a *= Rational(-1); }
  friend WeilElement operator*(const Rational& s, WeilElement a) { return a *= s; }
  friend bool operator==(const WeilElement&, const WeilElement&) = default;

 private:
  void check_index(const WeilIndex& idx) const;

  int n_;
  Terms terms_;
};

/// Graded-commutative product; only exterior generators anticommute.
WeilElement multiply(const WeilElement& a, const WeilElement& b);
inline WeilElement operator*(const WeilElement& a, const WeilElement& b) { return multiply(a, b); }

/// Extends generator images to a derivation of the given parity
/// (0 even, 1 odd): D(xy) = D(x)y + (-1)^{parity*deg x} x D(y).
WeilElement apply_derivation(const WeilElement& a, int parity, std::span<const WeilElement> ext_images,
                             std::span<const WeilElement> sym_images);

/// Extends generator images to an algebra homomorphism. Images of ext
/// generators must be odd and images of sym generators even for the result
/// to be well defined; this is the caller's responsibility.
WeilElement substitute(const WeilElement& a, std::span<const WeilElement> ext_images,
                       std::span<const WeilElement> sym_images);

/// Koszul differential: lambda -> ~lambda, ~lambda -> 0, odd derivation.
WeilElement koszul_d(const WeilElement& a);

/// iota_xi: lambda -> <xi, lambda>, ~lambda -> ad*_xi lambda, odd derivation
/// of degree -1. The sign on ~lambda is the one compatible with
/// iota_l Omega^i = 0 and [L_xi, iota_eta] = iota_[xi,eta] under the
/// coadjoint() convention.
WeilElement contract(const LieAlgebra& l, const AlgebraVector& xi, const WeilElement& a);

/// L_xi = d iota_xi + iota_xi d.
WeilElement lie_derivative(const LieAlgebra& l, const AlgebraVector& xi, const WeilElement& a);

/// Omega^i = ~lambda^i + 1/2 f^i_{jk} lambda^j lambda^k (i is 0-based).
WeilElement curvature_generator(const LieAlgebra& l, int i);

/// prod_i (1 - lambda^i iota_{e_i}); image is the horizontal subspace.
WeilElement horizontal_project(const LieAlgebra& l, const WeilElement& a);

/// Homomorphism fixing lambda^i and sending ~lambda^i to Omega^i.
WeilElement curvature_substitution(const LieAlgebra& l, const WeilElement& a);
/// Its inverse: ~lambda^i -> ~lambda^i - 1/2 f^i_{jk} lambda^j lambda^k.
WeilElement inverse_curvature_substitution(const LieAlgebra& l, const WeilElement& a);

/// Canonically ordered basis of W^{p,q} and of total degree d.
std::vector<WeilIndex> weil_basis_bidegree(int n, int p, int q);
std::vector<WeilIndex> weil_basis(int n, int degree);

using BasisMap = std::map<WeilIndex, std::size_t>;
BasisMap index_basis(std::span<const WeilIndex> basis);
SparseRow coordinates(const WeilElement& a, const BasisMap& basis);
WeilElement from_coordinates(int n, std::span<const WeilIndex> basis, const SparseRow& coords);

using WeilOperator = std::function<WeilElement(const WeilElement&)>;

/// Matrix of op on span(domain) with rows indexed by the codomain basis.
/// Throws DomainError if an image leaves span(codomain).
SparseMatrix operator_matrix(int n, std::span<const WeilIndex> domain, std::span<const WeilIndex> codomain,
                             const WeilOperator& op, Exec exec = default_exec());

/// Canonical basis of the common kernel of ops restricted to span(domain).
std::vector<WeilElement> common_kernel(int n, std::span<const WeilIndex> domain, std::span<const WeilOperator> ops,
                                       Exec exec = default_exec());

/// Basic elements of total degree d: iota_{e_i} a = 0 and L_{e_i} a = 0 for
/// all i. Basis in reduced echelon form over the canonical term order.
std::vector<WeilElement> basic_subspace(const LieAlgebra& l, int degree, Exec exec = default_exec());

/// dim H^d(W(R^n), d_K) for d = 0..max_degree, from exact ranks computed
/// per bidegree block.
std::vector<std::size_t> koszul_cohomology_dims(int n, int max_degree);

/// dim W^d(R^n) = sum_{p+2q=d} C(n,p) C(n+q-1,q) for d = 0..max_degree.
std::vector<std::size_t> graded_dims(int n, int max_degree);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace weil
