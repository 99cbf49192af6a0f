#include "weil/polyfunctor.hpp"

#include <algorithm>

#include "weil/error.hpp"

namespace weil {

Vec BlackBoxMap::operator()(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != source_dim) throw DimensionMismatch("black box: argument has wrong dimension");
  Vec y = evaluator(x);
  if (static_cast<int>(y.size()) != target_dim) throw DimensionMismatch("black box: result has wrong dimension");
  return y;
}

namespace {

// Inverse of V[a][i] = nodes[a]^i.
Matrix vandermonde_inverse(const std::vector<Rational>& nodes) {
  const std::size_t n = nodes.size();
  Matrix v(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    Rational p(1);
    for (std::size_t i = 0; i < n; ++i) {
      v(a, i) = p;
      p *= nodes[a];
    }
  }
  Matrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n);
    e[c] = 1;
    auto x = solve(v, e);
    if (!x) throw std::logic_error("Vandermonde matrix with distinct nodes is singular");
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = (*x)[r];
  }
  return inv;
}

Vec scaled(std::span<const Rational> v, const Rational& s) {
  Vec out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

Rational power(const Rational& x, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

std::vector<Vec> homogeneous_components(const BlackBoxMap& f, int d, std::span<const Rational> v) {
  if (d < 0) throw DomainError("degree bound must be nonnegative");
  std::vector<Rational> nodes;
  for (int a = 1; a <= d + 1; ++a) nodes.emplace_back(a);
  const Matrix inv = vandermonde_inverse(nodes);
  std::vector<Vec> samples;
  for (const auto& lambda : nodes) samples.push_back(f(scaled(v, lambda)));
  const auto k = static_cast<std::size_t>(f.target_dim);
  std::vector<Vec> comps(static_cast<std::size_t>(d) + 1, Vec(k));
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t a = 0; a < nodes.size(); ++a)
      if (!is_zero(inv(i, a)))
        for (std::size_t c = 0; c < k; ++c) comps[i][c] += inv(i, a) * samples[a][c];
  return comps;
}

Decomposition homogeneous_decompose(const BlackBoxMap& f, int d, const std::vector<Vec>& probes) {
  Decomposition out;
  out.degree = d;
  out.probes = probes;
  out.components.assign(static_cast<std::size_t>(d) + 1, {});
  out.reconstructs = true;
  out.homogeneous = true;
  for (const auto& v : probes) {
    const auto comps = homogeneous_components(f, d, v);
    for (std::size_t i = 0; i < comps.size(); ++i) out.components[i].push_back(comps[i]);
    Vec sum(static_cast<std::size_t>(f.target_dim));
    for (const auto& c : comps)
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += c[j];
    if (sum != f(v)) out.reconstructs = false;
    for (int mu : {2, 3}) {
      const auto at_mu = homogeneous_components(f, d, scaled(v, mu));
      for (std::size_t i = 0; i < comps.size(); ++i)
        if (at_mu[i] != scaled(comps[i], power(Rational(mu), static_cast<int>(i)))) out.homogeneous = false;
    }
  }
  return out;
}

BlackBoxMap component_map(const BlackBoxMap& f, int d, int i) {
  if (i < 0 || i > d) throw DomainError("component index out of range");
  return BlackBoxMap{f.source_dim, f.target_dim, [f, d, i](std::span<const Rational> v) {
                       return homogeneous_components(f, d, v)[static_cast<std::size_t>(i)];
                     }};
}

PolynomialVerdict is_polynomial(const BlackBoxMap& f, int d, const std::vector<std::vector<Vec>>& trial_sets) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  PolynomialVerdict verdict;
  std::vector<Rational> nodes;
  for (int a = 0; a <= d; ++a) nodes.emplace_back(a);
  const Matrix inv = vandermonde_inverse(nodes);
  const auto k = static_cast<std::size_t>(f.target_dim);
  const auto base = static_cast<std::size_t>(d) + 1;

  for (std::size_t s = 0; s < trial_sets.size(); ++s) {
    const auto& vs = trial_sets[s];
    const std::size_t n = vs.size();
    if (n == 0) continue;
    if (n > 4) throw DomainError("trial sets are limited to 4 vectors");
    auto combine = [&](const Vec& lambda) {
      Vec x(static_cast<std::size_t>(f.source_dim));
      for (std::size_t t = 0; t < n; ++t) {
        if (static_cast<int>(vs[t].size()) != f.source_dim) throw DimensionMismatch("trial vector has wrong dimension");
        for (std::size_t c = 0; c < x.size(); ++c) x[c] += lambda[t] * vs[t][c];
      }
      ++verdict.evaluations;
      return f(x);
    };
    // grid samples, multi-index a in {0..d}^n encoded in base d+1
    std::size_t grid = 1;
    for (std::size_t t = 0; t < n; ++t) grid *= base;
    auto digits = [&](std::size_t code) {
      std::vector<std::size_t> out(n);
      for (std::size_t t = 0; t < n; ++t, code /= base) out[t] = code % base;
      return out;
    };
    std::vector<Vec> samples(grid);
    for (std::size_t g = 0; g < grid; ++g) {
      Vec lambda;
      for (auto a : digits(g)) lambda.push_back(nodes[a]);
      samples[g] = combine(lambda);
    }
    // monomial coefficients: apply the inverse Vandermonde along every axis
    std::vector<Vec> coeff(grid, Vec(k));
    for (std::size_t alpha = 0; alpha < grid; ++alpha) {
      const auto ad = digits(alpha);
      for (std::size_t g = 0; g < grid; ++g) {
        const auto gd = digits(g);
        Rational w(1);
        for (std::size_t t = 0; t < n && !is_zero(w); ++t) w *= inv(ad[t], gd[t]);
        if (is_zero(w)) continue;
        for (std::size_t c = 0; c < k; ++c) coeff[alpha][c] += w * samples[g][c];
      }
    }
    // off-grid checks, negative and fractional coordinates included
    const std::vector<Rational> offgrid{Rational(-1), Rational(1, 2), Rational(d + 1), Rational(-5, 3)};
    std::size_t points = 1;
    for (std::size_t t = 0; t < n; ++t) points *= offgrid.size();
    for (std::size_t code = 0; code < points; ++code) {
      Vec lambda;
      for (std::size_t t = 0, c = code; t < n; ++t, c /= offgrid.size()) lambda.push_back(offgrid[c % offgrid.size()]);
      Vec expected(k);
      for (std::size_t alpha = 0; alpha < grid; ++alpha) {
        const auto ad = digits(alpha);
        Rational mono(1);
        for (std::size_t t = 0; t < n; ++t) mono *= power(lambda[t], static_cast<int>(ad[t]));
        for (std::size_t c = 0; c < k; ++c) expected[c] += mono * coeff[alpha][c];
      }
      Vec actual = combine(lambda);
      if (actual != expected) {
        verdict.consistent = false;
        verdict.witness = PolynomialVerdict::Witness{s, lambda, expected, actual, "interpolant disagrees off the grid"};
        return verdict;
      }
    }
    for (std::size_t alpha = 0; alpha < grid; ++alpha) {
      const auto ad = digits(alpha);
      std::size_t total = 0;
      for (auto a : ad) total += a;
      if (total <= static_cast<std::size_t>(d)) continue;
      if (std::any_of(coeff[alpha].begin(), coeff[alpha].end(), [](const Rational& r) { return !is_zero(r); })) {
        verdict.consistent = false;
        verdict.witness = PolynomialVerdict::Witness{s, {}, {}, {}, "interpolant has total degree above " + std::to_string(d)};
        return verdict;
      }
    }
  }
  return verdict;
}

InjectivityReport restriction_injectivity(const FunctorSpec& spec, int copies, int base_dim, Exec exec) {
  if (spec.degree < 1) throw DomainError("functor degree must be at least 1");
  if (base_dim < 1) throw DomainError("dim V must be at least 1");
  if (copies <= spec.degree) throw DomainError("restriction injectivity needs n > d");
  InjectivityReport r;
  r.spec = spec;
  r.copies = copies;
  r.base_dim = base_dim;
  const int total = copies * base_dim;
  r.domain_dim = power_dim(spec.kind, spec.degree, total);

  SparseMatrix stacked(0, r.domain_dim);
  std::vector<int> choose(static_cast<std::size_t>(copies));
  std::fill(choose.end() - spec.degree, choose.end(), 1);
  do {
    Matrix eps(static_cast<std::size_t>(total), static_cast<std::size_t>(total));
    for (int c = 0; c < copies; ++c)
      if (choose[static_cast<std::size_t>(c)])
        for (int j = 0; j < base_dim; ++j) eps(static_cast<std::size_t>(c * base_dim + j), static_cast<std::size_t>(c * base_dim + j)) = 1;
    stacked.stack(functor_apply(spec, eps).to_sparse());
    ++r.restrictions;
  } while (std::next_permutation(choose.begin(), choose.end()));
  r.stacked_rows = stacked.rows();
  r.rank = rank(stacked, exec);
  return r;
}

}  // namespace weil
