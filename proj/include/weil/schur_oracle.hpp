#pragma once

// Dimensions of GL(W)-equivariant linear maps between composite functors of
// W* and a trivial space V, by brute-force kernel computation. GL(W)
// invariance is imposed as gl(W)-equivariance plus the reflection
// diag(-1, 1, ..., 1), which reaches the second component.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "weil/functor.hpp"

namespace weil {

class FunctorExpr {
 public:
  static FunctorExpr dual_w();  // W*
  static FunctorExpr v();       // V, trivial action
  static FunctorExpr tensor(const FunctorExpr& a, const FunctorExpr& b);
  static FunctorExpr power(FunctorKind kind, int degree, const FunctorExpr& a);

  /// Number of W* factors; every basis vector has this total weight.
  int w_degree() const;
  std::size_t dim(int dim_w, int dim_v) const;
  std::string to_string() const;

  struct Node;
  const Node& node() const { return *node_; }

 private:
  explicit FunctorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct EquivHomProblem {
  int dim_w = 0;
  int dim_v = 0;
  FunctorExpr domain = FunctorExpr::dual_w();
  FunctorExpr codomain = FunctorExpr::dual_w();

  std::string to_string() const;
};

/// Largest dim(domain) * dim(codomain) accepted before ResourceCapExceeded.
inline constexpr std::size_t kHomSpaceCap = 10000;

/// dim Hom_{GL(W)}(domain, codomain). Unknowns are restricted to pairs of
/// basis vectors of equal torus weight, which is what the diagonal part of
/// gl(W) imposes; the remaining equations come from E_ab (a != b) and the
/// reflection.
std::size_t equivariant_hom_dim(const EquivHomProblem& p, Exec exec = default_exec());

namespace reference {

/// Same dimension with every matrix entry an unknown and every E_ab imposed.
std::size_t equivariant_hom_dim(const EquivHomProblem& p);

}  // namespace reference

/// Sym^p(W* (x) V) (x) Sym^q(Lambda^2 W* (x) V) -> Lambda^{p+2q} W*, with
/// dim W = p + 2q.
EquivHomProblem bidegree_problem(int p, int q, int dim_v);
/// Tensor^n W* -> Lambda^q W*.
EquivHomProblem antisymmetrization_problem(int n, int q, int dim_w);

struct BidegreeReport {
  int p = 0;
  int q = 0;
  int dim_v = 0;
  int dim_w = 0;
  std::size_t expected = 0;  // dim Lambda^p V* (x) Sym^q V*
  std::size_t computed = 0;
  bool match() const { return expected == computed; }
};

BidegreeReport verify_bidegree(int p, int q, int dim_v, Exec exec = default_exec());

}  // namespace weil
