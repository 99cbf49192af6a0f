#pragma once

// Homogeneous decomposition of polynomial maps via F(lambda id), a sampling
// polynomiality falsifier, and the restriction-injectivity check for
// tensor/symmetric/exterior powers.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weil/functor.hpp"
#include "weil/linalg.hpp"

namespace weil {

using Vec = std::vector<Rational>;

/// Deterministic map Q^source -> Q^target. The evaluator may be called from
/// several threads at once.
struct BlackBoxMap {
  int source_dim = 0;
  int target_dim = 0;
  std::function<Vec(std::span<const Rational>)> evaluator;

  /// Checks argument and result sizes.
  Vec operator()(std::span<const Rational> x) const;
};

/// f_0(v), ..., f_d(v) from f(lambda v), lambda = 1..d+1.
std::vector<Vec> homogeneous_components(const BlackBoxMap& f, int d, std::span<const Rational> v);

struct Decomposition {
  int degree = 0;
  std::vector<Vec> probes;
  std::vector<std::vector<Vec>> components;  // [i][probe] = f_i(probe)
  bool reconstructs = false;                 // sum_i f_i(v) = f(v) at every probe
  bool homogeneous = false;                  // f_i(mu v) = mu^i f_i(v), mu in {2, 3}
};

Decomposition homogeneous_decompose(const BlackBoxMap& f, int d, const std::vector<Vec>& probes);

/// v -> f_i(v) as a black box.
BlackBoxMap component_map(const BlackBoxMap& f, int d, int i);

struct PolynomialVerdict {
  struct Witness {
    std::size_t trial_set = 0;
    Vec point;     // lambda; empty for a degree excess
    Vec expected;  // interpolant value
    Vec actual;    // f value
    std::string reason;
  };
  bool consistent = true;
  std::optional<Witness> witness;
  std::size_t evaluations = 0;
};

/// For each trial set {v_1..v_n}: interpolate lambda -> f(sum lambda_t v_t)
/// on {0..d}^n, require total degree <= d, and compare with f at off-grid
/// points including negative ones. A sampler: "consistent" is not a proof.
PolynomialVerdict is_polynomial(const BlackBoxMap& f, int d, const std::vector<std::vector<Vec>>& trial_sets);

struct InjectivityReport {
  FunctorSpec spec;
  int copies = 0;
  int base_dim = 0;
  std::size_t domain_dim = 0;    // dim F(V^n)
  std::size_t restrictions = 0;  // number of subsets I with |I| = d
  std::size_t stacked_rows = 0;
  std::size_t rank = 0;
  bool injective() const { return rank == domain_dim; }
};

/// Stacks F(eps_I) over all |I| = d, eps_I the projector of V^n onto V^I,
/// and computes its rank. Requires n > d.
InjectivityReport restriction_injectivity(const FunctorSpec& spec, int copies, int base_dim,
                                          Exec exec = default_exec());

}  // namespace weil
