#include "weil/sampling.hpp"

namespace weil {

namespace {

template <class Basis>
const auto& pick(Rng& rng, const Basis& basis) {
  return basis[static_cast<std::size_t>(rng.int_in(0, static_cast<long>(basis.size()) - 1))];
}

}  // namespace

AlgebraVector random_vector(Rng& rng, int n) {
  AlgebraVector v{std::vector<Rational>(static_cast<std::size_t>(n))};
  for (auto& c : v.coords) c = rng.small_rational();
  return v;
}

WeilElement random_weil_element(Rng& rng, int n, int degree, int terms) {
  WeilElement a(n);
  const auto basis = weil_basis(n, degree);
  if (basis.empty()) return a;
  for (int t = 0; t < terms; ++t) a.add(pick(rng, basis), rng.nonzero_rational());
  return a;
}

RationalForm random_polynomial(Rng& rng, int m, int max_degree, int terms) {
  return random_form(rng, m, 0, max_degree, terms);
}

RationalForm random_form(Rng& rng, int m, int p, int max_degree, int terms) {
  RationalForm f(m);
  const auto basis = form_basis(m, p, max_degree);
  if (basis.empty()) return f;
  for (int t = 0; t < terms; ++t) f.add(pick(rng, basis), rng.nonzero_rational());
  return f;
}

Connection random_connection(Rng& rng, const LieAlgebra& l, int m, int max_degree, int terms_per_component) {
  Connection a = Connection::zero(l, m);
  for (auto& c : a.components) c = random_form(rng, m, 1, max_degree, terms_per_component);
  return a;
}

PolyMap random_polymap(Rng& rng, int source_dim, int target_dim, int max_degree, int terms) {
  PolyMap phi{source_dim, target_dim, {}};
  for (int i = 0; i < target_dim; ++i) phi.components.push_back(random_polynomial(rng, source_dim, max_degree, terms));
  return phi;
}

WeilModelElement random_model_element(Rng& rng, int m, int n, int degree, int poly_cap, int terms) {
  WeilModelElement w(m, n);
  const auto basis = model_basis(m, n, degree, poly_cap);
  if (basis.empty()) return w;
  for (int t = 0; t < terms; ++t) w.add(pick(rng, basis), rng.nonzero_rational());
  return w;
}

}  // namespace weil
