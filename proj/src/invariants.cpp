#include "weil/invariants.hpp"

#include "weil/error.hpp"

namespace weil {

std::vector<WeilElement> invariant_basis(const LieAlgebra& l, int k, Exec exec) {
  if (k < 0) return {};
  const int n = l.dim();
  const auto domain = weil_basis_bidegree(n, 0, k);
  // L_xi restricted to bidegree (0, k) is the derivation extension of ad*_xi.
  std::vector<WeilOperator> ops;
  for (int i = 0; i < n; ++i) {
    const AlgebraVector e = AlgebraVector::basis(n, i);
    ops.emplace_back([&l, e](const WeilElement& a) { return lie_derivative(l, e, a); });
  }
  return common_kernel(n, domain, ops, exec);
}

std::vector<std::size_t> invariant_dims(const LieAlgebra& l, int max_k, Exec exec) {
  std::vector<std::size_t> out(max_k < 0 ? 0 : static_cast<std::size_t>(max_k) + 1);
  const auto count = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::ptrdiff_t k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] = invariant_basis(l, static_cast<int>(k), Exec::serial).size();
  return out;
}

bool is_symmetric(const WeilElement& a) {
  for (const auto& [idx, c] : a.terms())
    if (idx.ext != 0) return false;
  return true;
}

WeilElement invariant_to_basic(const LieAlgebra& l, const WeilElement& p) {
  if (!is_symmetric(p)) throw DomainError("invariant polynomial must have no exterior part");
  return curvature_substitution(l, p);
}

WeilElement basic_to_invariant(const LieAlgebra& l, const WeilElement& a) {
  WeilElement p = inverse_curvature_substitution(l, a);
  if (!is_symmetric(p)) throw DomainError("element is not a polynomial in the curvature generators");
  return p;
}

}  // namespace weil
