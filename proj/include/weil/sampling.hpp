#pragma once

// Random instances for the randomized suites. Everything is driven by a
// seeded Rng so runs are reproducible.

#include "weil/chart_forms.hpp"
#include "weil/chern_weil.hpp"
#include "weil/equivariant.hpp"
#include "weil/random.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

AlgebraVector random_vector(Rng& rng, int n);

/// Homogeneous of total degree d with up to `terms` terms (zero if W^d = 0).
WeilElement random_weil_element(Rng& rng, int n, int degree, int terms);

/// Polynomial in m variables of degree <= max_degree.
RationalForm random_polynomial(Rng& rng, int m, int max_degree, int terms);

/// Homogeneous p-form with coefficient degree <= max_degree.
RationalForm random_form(Rng& rng, int m, int p, int max_degree, int terms);

/// A^i = random 1-form with coefficient degree <= max_degree.
Connection random_connection(Rng& rng, const LieAlgebra& l, int m, int max_degree, int terms_per_component);

PolyMap random_polymap(Rng& rng, int source_dim, int target_dim, int max_degree, int terms);

/// Element of the truncated Weil model of total degree d.
WeilModelElement random_model_element(Rng& rng, int m, int n, int degree, int poly_cap, int terms);

}  // namespace weil
