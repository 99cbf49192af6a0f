#pragma once

// Tensor, symmetric and exterior powers on monomial bases: tuples, sorted
// multisets and sorted sets. Linear maps act by multilinear expansion,
// endomorphisms of Lie algebras by the derivation rule.

#include <map>
#include <string>
#include <vector>

#include "weil/linalg.hpp"

namespace weil {

enum class FunctorKind { tensor, sym, ext };

struct FunctorSpec {
  FunctorKind kind = FunctorKind::tensor;
  int degree = 1;

  std::string to_string() const;  // "Sym^2", "Lambda^3", "Tensor^1"
};

/// Parses "Sym^d", "Lambda^d"/"Ext^d" or "Tensor^d". Throws ParseError.
FunctorSpec parse_functor_spec(const std::string& text);

using Tuple = std::vector<int>;

/// Canonical basis of F(R^n), sorted.
std::vector<Tuple> power_basis(FunctorKind kind, int degree, int n);
std::size_t power_dim(FunctorKind kind, int degree, int n);

/// Sign and canonical form of an index tuple in F; sign 0 if it vanishes.
std::pair<int, Tuple> canonicalize(FunctorKind kind, Tuple t);

/// Linear map stored by columns: column j is the image of basis vector j.
struct LinearMap {
  std::size_t rows = 0;
  std::vector<SparseRow> columns;

  static LinearMap from_matrix(const Matrix& m);
  static LinearMap identity(std::size_t n);
  Matrix to_dense() const;
  SparseMatrix to_sparse() const;
};

/// F(g) for g : R^n -> R^m.
LinearMap power_apply(FunctorKind kind, int degree, const LinearMap& g);
/// Derivation extension of x : R^n -> R^n.
LinearMap power_derivation(FunctorKind kind, int degree, const LinearMap& x);

/// g (x) h and x (x) 1 + 1 (x) y; basis order (i, j) -> i * dim2 + j.
LinearMap tensor_apply(const LinearMap& g, const LinearMap& h);
LinearMap tensor_derivation(const LinearMap& x, const LinearMap& y);

LinearMap functor_apply(const FunctorSpec& spec, const Matrix& g);

}  // namespace weil
