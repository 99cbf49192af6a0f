#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weil/linalg.hpp"
#include "weil/rational.hpp"

namespace weil {

/// Coordinates of an element of g in the basis {e_i}.
struct AlgebraVector {
  std::vector<Rational> coords;

  static AlgebraVector basis(int n, int i);
  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;
};

AlgebraVector operator+(const AlgebraVector& a, const AlgebraVector& b);
AlgebraVector operator*(const Rational& s, const AlgebraVector& a);

/// Outcome of validate(): empty when all axioms hold.
struct Violation {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  std::vector<int> indices;  // 1-based, as printed to users
  std::string message;
};

/// Finite-dimensional real Lie algebra given by structure constants
/// [e_i, e_j] = sum_k f(i, j, k) e_k. Indices are 0-based in the API and
/// 1-based in JSON and on the command line.
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim, std::string name = {});

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }

  const Rational& f(int i, int j, int k) const { return table_[index(i, j, k)]; }
  /// Sets f(i,j,k) = c and f(j,i,k) = -c.
  void set_bracket(int i, int j, int k, const Rational& c);
  /// Raw write of one entry; lets callers build (and validate) malformed tables.
  void set_entry(int i, int j, int k, const Rational& c) { table_[index(i, j, k)] = c; }

  AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t index(int i, int j, int k) const;

  int dim_;
  std::string name_;
  std::vector<Rational> table_;
};

/// Equal dimension and structure constants; names are ignored.
bool same_structure(const LieAlgebra& a, const LieAlgebra& b);

/// First violated axiom (antisymmetry checked before Jacobi), or nullopt.
std::optional<Violation> validate(const LieAlgebra& l);

/// Matrix of ad*_xi on g* in the dual basis, with the convention
/// (ad*_xi lambda)(eta) = -lambda([xi, eta]). Column j is ad*_xi lambda^j.
Matrix coadjoint(const LieAlgebra& l, const AlgebraVector& xi);

/// Matrix of ad_xi on g in the basis {e_i}.
Matrix adjoint(const LieAlgebra& l, const AlgebraVector& xi);

/// "abelian(n)" (also "abelianN"), "su2", "so3", "sl2", "heisenberg3".
/// Throws DomainError for unknown names.
LieAlgebra builtin_algebra(std::string_view name);
std::vector<std::string> builtin_algebra_names();

}  // namespace weil
