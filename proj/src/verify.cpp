#include "weil/verify.hpp"

#include <functional>

#include "weil/chart_forms.hpp"
#include "weil/chern_weil.hpp"
#include "weil/equivariant.hpp"
#include "weil/error.hpp"
#include "weil/invariants.hpp"
#include "weil/polyfunctor.hpp"
#include "weil/sampling.hpp"
#include "weil/schur_oracle.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list{
      {1, "Koszul complex is acyclic, n = 1..3, degrees 0..8", 10},
      {2, "one-dimensional Koszul complex: graded dims and cohomology", 1},
      {3, "basic subcomplex of W(su2) matches invariant polynomials, d = 0..8", 60},
      {4, "curvature generators are horizontal; (theta, Omega) change of basis is invertible", 30},
      {5, "Cartan calculus on random su2 Weil elements", 60},
      {6, "Chern-Weil forms: closedness, naturality, gauge invariance", 300},
      {7, "equivariant Hom dimensions: antisymmetrization and bidegree classification", 300},
      {8, "polynomial maps: homogeneous decomposition, detection, restriction injectivity", 60},
      {9, "equivariant Weil model: D^2 = 0, Cartan formula, basic kernels", 60},
      {10, "verify-all is byte-for-byte deterministic", 600},
  };
  return list;
}

Json CriterionResult::to_json() const {
  return Json{{"id", id}, {"title", title}, {"passed", passed}, {"checks", checks}, {"failures", failures},
              {"details", details}};
}

namespace {

class Checker {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failed_;
      if (failures_.size() < 10) failures_.push_back(what);
    }
  }

  CriterionResult finish(int id, Json details) const {
    CriterionResult r;
    r.id = id;
    r.title = criteria()[static_cast<std::size_t>(id - 1)].title;
    r.passed = failed_ == 0 && checks_ > 0;
    r.checks = checks_;
    r.failures = failures_;
    r.details = std::move(details);
    return r;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<std::size_t> acyclic(int max_degree) {
  std::vector<std::size_t> v(static_cast<std::size_t>(max_degree) + 1, 0);
  v[0] = 1;
  return v;
}

// ----------------------------------------------------------------- 1, 2

CriterionResult koszul_acyclicity() {
  Checker c;
  Json dims = Json::object();
  for (int n = 1; n <= 3; ++n) {
    const auto h = koszul_cohomology_dims(n, 8);
    c.check(h == acyclic(8), "H(Koszul, n=" + std::to_string(n) + ") is not acyclic");
    dims[std::to_string(n)] = h;
  }
  return c.finish(1, Json{{"cohomology", dims}});
}

CriterionResult one_dimensional_complex() {
  Checker c;
  const auto g = graded_dims(1, 8);
  c.check(g == std::vector<std::size_t>(9, 1), "graded_dims(1, 8) is not all ones");
  const auto h = koszul_cohomology_dims(1, 8);
  c.check(h == acyclic(8), "H(Koszul, n=1) is not R in degree 0 only");
  return c.finish(2, Json{{"graded_dims", g}, {"cohomology", h}});
}

// -------------------------------------------------------------------- 3

bool spans_equal(int n, const std::vector<WeilElement>& a, const std::vector<WeilElement>& b, int degree) {
  const auto basis = weil_basis(n, degree);
  const auto index = index_basis(basis);
  std::vector<SparseRow> ra, rb;
  for (const auto& x : a) ra.push_back(coordinates(x, index));
  for (const auto& x : b) rb.push_back(coordinates(x, index));
  const auto ca = canonical_basis(ra, basis.size());
  const auto cb = canonical_basis(rb, basis.size());
  return ca == cb;
}

CriterionResult su2_basic_subcomplex() {
  Checker c;
  const LieAlgebra su2 = builtin_algebra("su2");
  const std::vector<std::size_t> want{1, 0, 0, 0, 1, 0, 0, 0, 1};
  const auto inv = invariant_dims(su2, 4);
  std::vector<std::size_t> dims;
  std::size_t closed = 0;
  for (int d = 0; d <= 8; ++d) {
    const auto basis = basic_subspace(su2, d);
    dims.push_back(basis.size());
    const std::string tag = " (d=" + std::to_string(d) + ")";
    if (d % 2 == 0)
      c.check(basis.size() == inv[static_cast<std::size_t>(d / 2)], "basic dim differs from invariant dim" + tag);
    else
      c.check(basis.empty(), "odd-degree basic elements" + tag);
    for (const auto& b : basis) {
      const bool ok = koszul_d(b).is_zero();
      closed += ok ? 1 : 0;
      c.check(ok, "d_K of a basic element is nonzero" + tag);
    }
    if (d % 2 == 0) {
      std::vector<WeilElement> images;
      for (const auto& p : invariant_basis(su2, d / 2)) images.push_back(invariant_to_basic(su2, p));
      c.check(spans_equal(3, basis, images, d), "basic span differs from P(Omega) span" + tag);
    }
  }
  c.check(dims == want, "basic dims differ from [1,0,0,0,1,0,0,0,1]");
  return c.finish(3, Json{{"basic_dims", dims}, {"invariant_dims", inv}, {"closed_basis_vectors", closed}});
}

// -------------------------------------------------------------------- 4

CriterionResult curvature_package() {
  Checker c;
  Json ranks = Json::object();
  for (const std::string name : {"su2", "so3", "heisenberg3", "abelian(3)"}) {
    const LieAlgebra l = builtin_algebra(name);
    const int n = l.dim();
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < n; ++e)
        c.check(contract(l, AlgebraVector::basis(n, e), curvature_generator(l, i)).is_zero(),
                name + ": iota_" + std::to_string(e + 1) + " Omega^" + std::to_string(i + 1) + " != 0");
    Json per_degree = Json::array();
    for (int d = 0; d <= 6; ++d) {
      const auto basis = weil_basis(n, d);
      const auto m = operator_matrix(n, basis, basis,
                                     [&l](const WeilElement& a) { return curvature_substitution(l, a); });
      const std::size_t r = rank(m);
      per_degree.push_back({{"degree", d}, {"dim", basis.size()}, {"rank", r}});
      c.check(r == basis.size(), name + ": change of basis singular in degree " + std::to_string(d));
      bool inverse = true;
      for (const auto& idx : basis) {
        const WeilElement x = WeilElement::monomial(n, idx);
        inverse = inverse && inverse_curvature_substitution(l, curvature_substitution(l, x)) == x;
      }
      c.check(inverse, name + ": inverse substitution fails in degree " + std::to_string(d));
    }
    ranks[name] = per_degree;
  }
  return c.finish(4, Json{{"change_of_basis", ranks}});
}

// -------------------------------------------------------------------- 5

// L_xi as the even derivation extending ad*_xi on both generator sets;
// independent of Cartan's formula.
WeilElement coadjoint_derivation(const LieAlgebra& l, const AlgebraVector& xi, const WeilElement& a) {
  const int n = l.dim();
  const Matrix co = coadjoint(l, xi);
  std::vector<WeilElement> ext, sym;
  for (int i = 0; i < n; ++i) {
    WeilElement e(n), s(n);
    for (int j = 0; j < n; ++j) {
      const Rational& v = co(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
      if (is_zero(v)) continue;
      e += v * WeilElement::ext_generator(n, j);
      s += v * WeilElement::sym_generator(n, j);
    }
    ext.push_back(std::move(e));
    sym.push_back(std::move(s));
  }
  return apply_derivation(a, 0, ext, sym);
}


CriterionResult cartan_suite(std::uint64_t seed) {
  Checker c;
  Rng rng(seed + 5);
  const LieAlgebra l = builtin_algebra("su2");
  const int n = 3;
  const int samples = 120;
  for (int s = 0; s < samples; ++s) {
    const int deg = static_cast<int>(rng.int_in(0, 6));
    const WeilElement a = random_weil_element(rng, n, deg, static_cast<int>(rng.int_in(1, 4)));
    const int deg_b = static_cast<int>(rng.int_in(0, 6 - std::min(deg, 6)));
    const WeilElement b = random_weil_element(rng, n, deg_b, static_cast<int>(rng.int_in(1, 3)));
    const AlgebraVector xi = random_vector(rng, n);
    const AlgebraVector eta = random_vector(rng, n);
    const AlgebraVector br = l.bracket(xi, eta);
    const std::string tag = " (sample " + std::to_string(s) + ")";
    auto iota = [&](const AlgebraVector& v, const WeilElement& x) { return contract(l, v, x); };
    auto lie = [&](const AlgebraVector& v, const WeilElement& x) { return lie_derivative(l, v, x); };
    const Rational sign = (deg % 2) ? Rational(-1) : Rational(1);

    c.check(koszul_d(koszul_d(a)).is_zero(), "d_K^2 != 0" + tag);
    c.check(koszul_d(a * b) == koszul_d(a) * b + sign * (a * koszul_d(b)), "d_K Leibniz" + tag);
    c.check(iota(xi, a * b) == iota(xi, a) * b + sign * (a * iota(xi, b)), "iota Leibniz" + tag);
    c.check(iota(xi, iota(xi, a)).is_zero(), "iota^2 != 0" + tag);
    c.check((iota(xi, iota(eta, a)) + iota(eta, iota(xi, a))).is_zero(), "iota anticommutator" + tag);
    c.check(lie(xi, a) == coadjoint_derivation(l, xi, a), "L != d iota + iota d" + tag);
    c.check((koszul_d(lie(xi, a)) - lie(xi, koszul_d(a))).is_zero(), "[d, L] != 0" + tag);
    c.check(lie(xi, iota(eta, a)) - iota(eta, lie(xi, a)) == iota(br, a), "[L_xi, iota_eta] != iota_[xi,eta]" + tag);
    c.check(lie(xi, lie(eta, a)) - lie(eta, lie(xi, a)) == lie(br, a), "[L_xi, L_eta] != L_[xi,eta]" + tag);
  }
  return c.finish(5, Json{{"algebra", "su2"}, {"samples", samples}, {"max_degree", 6}});
}

// -------------------------------------------------------------------- 6

using CForm = ChartForm<GaussianRational>;
using CConnection = LieValuedForm<GaussianRational>;
using CGauge = GaugeTransform<GaussianRational>;

GaussianRational random_gaussian(Rng& rng) { return {rng.small_rational(), rng.small_rational()}; }

CGauge random_gauge(Rng& rng, GaugeKind kind, int size, int m, bool general_constant) {
  CGauge g{kind, size, m, {}};
  for (;;) {
    g.entries.clear();
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (kind == GaugeKind::constant && general_constant) {
          g.entries.push_back(CForm::constant(m, random_gaussian(rng)));
        } else if (i == j) {
          g.entries.push_back(CForm::constant(m, GaussianRational(1)));
        } else if (i > j) {
          g.entries.emplace_back(m);
        } else if (kind == GaugeKind::constant) {
          g.entries.push_back(CForm::constant(m, GaussianRational(rng.small_rational())));
        } else {
          g.entries.push_back(random_gaussian(rng) * complexify(random_polynomial(rng, m, 2, 2)));
        }
      }
    try {
      g.validate();
      return g;
    } catch (const DomainError&) {
      // singular constant matrix, draw again
    }
  }
}

CriterionResult chern_weil_suite(std::uint64_t seed) {
  Checker c;
  Rng rng(seed + 6);
  Json summary = Json::object();
  for (const std::string name : {"abelian(1)", "su2", "heisenberg3"}) {
    const LieAlgebra l = builtin_algebra(name);
    const auto rep = builtin_complex_representation(l);
    std::vector<WeilElement> invariants;
    for (int k = 1; k <= 2; ++k)
      for (auto& p : invariant_basis(l, k)) invariants.push_back(std::move(p));
    const bool general_constant = name == "su2";
    std::size_t connections = 0, maps = 0, constant_gauges = 0, unipotent_gauges = 0;
    for (int t = 0; t < 20; ++t, ++connections) {
      const int m = static_cast<int>(rng.int_in(3, 5));
      const Connection a = random_connection(rng, l, m, 2, 3);
      const std::string tag = " (" + name + ", connection " + std::to_string(t) + ")";
      const auto f = curvature(a);
      for (int i = 0; i < l.dim(); ++i)
        c.check(weil_to_chart(curvature_generator(l, i), a) == f.components[static_cast<std::size_t>(i)],
                "curvature generator image differs from F" + tag);
      std::vector<RationalForm> cw;
      for (const auto& p : invariants) {
        cw.push_back(cw_form(p, a));
        c.check(d(cw.back()).is_zero(), "d P(F) != 0" + tag);
        c.check(cw.back() == weil_to_chart(invariant_to_basic(l, p), a), "P(F) differs from P(Omega) on A" + tag);
      }
      for (int s = 0; s < 5; ++s, ++maps) {
        const PolyMap phi = random_polymap(rng, static_cast<int>(rng.int_in(2, 5)), m, 2, 2);
        const Connection pulled = pullback(phi, a);
        for (std::size_t k = 0; k < invariants.size(); ++k)
          c.check(pullback(phi, cw[k]) == cw_form(invariants[k], pulled), "naturality" + tag);
      }
      const CConnection ac = complexify(a);
      const auto fc = curvature(ac);
      for (GaugeKind kind : {GaugeKind::constant, GaugeKind::unipotent}) {
        const CGauge g = random_gauge(rng, kind, rep.size, m, general_constant);
        const CConnection moved = gauge_transform(ac, g, rep);
        for (std::size_t k = 0; k < invariants.size(); ++k)
          c.check(cw_form(invariants[k], moved) == complexify(cw[k]), "gauge invariance" + tag);
        c.check(curvature(moved) == adjoint_action(fc, g, rep), "curvature covariance" + tag);
        (kind == GaugeKind::constant ? constant_gauges : unipotent_gauges) += 1;
      }
    }
    summary[name] = Json{{"connections", connections},
                         {"invariants", invariants.size()},
                         {"pullback_maps", maps},
                         {"constant_gauges", constant_gauges},
                         {"unipotent_gauges", unipotent_gauges}};
  }
  return c.finish(6, summary);
}

// -------------------------------------------------------------------- 7

CriterionResult classification_oracle() {
  Checker c;
  Json antisym = Json::array();
  for (int n = 0; n <= 3; ++n)
    for (int q = 0; q <= 3; ++q) {
      const std::size_t got = equivariant_hom_dim(antisymmetrization_problem(n, q, 3));
      const std::size_t want = n == q ? 1 : 0;
      c.check(got == want, "Hom(Tensor^" + std::to_string(n) + " W*, Lambda^" + std::to_string(q) + " W*) = " +
                               std::to_string(got));
      antisym.push_back({{"N", n}, {"q", q}, {"dim", got}});
    }
  Json bidegrees = Json::array();
  for (int dim_v = 1; dim_v <= 2; ++dim_v)
    for (int q = 0; 2 * q <= 4; ++q)
      for (int p = 0; p + 2 * q <= 4; ++p) {
        const auto r = verify_bidegree(p, q, dim_v);
        c.check(r.match(), "bidegree (" + std::to_string(p) + "," + std::to_string(q) + "), dim V " +
                               std::to_string(dim_v) + ": " + std::to_string(r.computed) + " != " +
                               std::to_string(r.expected));
        bidegrees.push_back({{"p", p}, {"q", q}, {"dimV", dim_v}, {"dimW", r.dim_w}, {"expected", r.expected},
                             {"computed", r.computed}, {"match", r.match()}});
      }
  return c.finish(7, Json{{"antisymmetrization", antisym}, {"bidegrees", bidegrees}});
}

// -------------------------------------------------------------------- 8

BlackBoxMap polynomial_map(const std::vector<RationalForm>& comps, int source_dim) {
  return BlackBoxMap{source_dim, static_cast<int>(comps.size()), [comps](std::span<const Rational> x) {
                       Vec out;
                       for (const auto& p : comps) out.push_back(evaluate(p, x));
                       return out;
                     }};
}

Vec random_point(Rng& rng, int n) {
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(rng.small_rational(4, 3));
  return v;
}

// x -> x.x for x in Sym^2 R^v, written in monomial coordinates.
BlackBoxMap sym_square(int v) {
  const auto src = weil_basis_bidegree(v, 0, 2);
  const auto dst = weil_basis_bidegree(v, 0, 4);
  return BlackBoxMap{static_cast<int>(src.size()), static_cast<int>(dst.size()), [v, src, dst](std::span<const Rational> x) {
                       WeilElement e(v);
                       for (std::size_t i = 0; i < src.size(); ++i) e.add(src[i], x[i]);
                       const WeilElement sq = e * e;
                       Vec out;
                       for (const auto& k : dst) out.push_back(sq.coefficient(k));
                       return out;
                     }};
}

CriterionResult appendix_suite(std::uint64_t seed) {
  Checker c;
  Rng rng(seed + 8);
  const int maps = 24;
  for (int t = 0; t < maps; ++t) {
    const int src = static_cast<int>(rng.int_in(1, 3));
    const int tgt = static_cast<int>(rng.int_in(1, 3));
    const int deg = static_cast<int>(rng.int_in(0, 3));
    std::vector<RationalForm> comps;
    for (int i = 0; i < tgt; ++i) comps.push_back(random_polynomial(rng, src, deg, 4));
    const BlackBoxMap f = polynomial_map(comps, src);
    std::vector<Vec> probes;
    for (int s = 0; s < 3; ++s) probes.push_back(random_point(rng, src));
    const auto dec = homogeneous_decompose(f, 3, probes);
    const std::string tag = " (map " + std::to_string(t) + ")";
    c.check(dec.reconstructs, "sum of components differs from f" + tag);
    c.check(dec.homogeneous, "component not homogeneous at mu = 2, 3" + tag);
    for (int i = 0; i <= 3; ++i) {
      bool ok = true;
      for (std::size_t s = 0; s < probes.size(); ++s)
        for (int k = 0; k < tgt; ++k)
          ok = ok && dec.components[static_cast<std::size_t>(i)][s][static_cast<std::size_t>(k)] ==
                         evaluate(homogeneous_part(comps[static_cast<std::size_t>(k)], i), probes[s]);
      c.check(ok, "component " + std::to_string(i) + " differs from the degree-" + std::to_string(i) + " part" + tag);
      // e_j e_i = delta_ij e_i
      const auto again = homogeneous_decompose(component_map(f, 3, i), 3, {probes.front()});
      for (int j = 0; j <= 3; ++j)
        c.check(again.components[static_cast<std::size_t>(j)][0] ==
                    (i == j ? dec.components[static_cast<std::size_t>(i)][0] : Vec(static_cast<std::size_t>(tgt))),
                "idempotents not orthogonal" + tag);
    }
  }
  // |x| with mixed-sign trial sets
  const BlackBoxMap absolute{1, 1, [](std::span<const Rational> x) { return Vec{abs(x[0])}; }};
  const auto abs_verdict = is_polynomial(absolute, 2, {{Vec{Rational(1)}, Vec{Rational(-1)}}});
  c.check(!abs_verdict.consistent && abs_verdict.witness && !abs_verdict.witness->point.empty(),
          "|x| not flagged with an off-grid witness");
  const BlackBoxMap cube{1, 1, [](std::span<const Rational> x) { return Vec{x[0] * x[0] * x[0]}; }};
  c.check(is_polynomial(cube, 3, {{Vec{Rational(1)}, Vec{Rational(-2)}}, {Vec{Rational(1, 2)}}}).consistent,
          "x^3 flagged as non-polynomial");
  const BlackBoxMap x2y{2, 1, [](std::span<const Rational> x) { return Vec{x[0] * x[0] * x[1]}; }};
  c.check(is_polynomial(x2y, 3, {{Vec{Rational(1), Rational(0)}, Vec{Rational(0), Rational(1)}, Vec{Rational(-1), Rational(2)}}})
              .consistent,
          "x^2 y flagged as non-polynomial");
  // x -> x.x on Sym^2, dim V = 1, 2
  for (int v = 1; v <= 2; ++v) {
    const BlackBoxMap sq = sym_square(v);
    std::vector<Vec> trial;
    for (int s = 0; s < 2; ++s) trial.push_back(random_point(rng, sq.source_dim));
    trial.push_back(Vec(trial.front()));
    for (auto& x : trial.back()) x = -x;
    c.check(is_polynomial(sq, 2, {trial}).consistent, "Sym^2 -> Sym^4 squaring not polynomial, dim V " + std::to_string(v));
  }
  Json injectivity = Json::array();
  for (FunctorKind kind : {FunctorKind::sym, FunctorKind::ext})
    for (int n : {3, 4}) {
      const auto r = restriction_injectivity(FunctorSpec{kind, 2}, n, 1);
      c.check(r.injective(), r.spec.to_string() + ", n=" + std::to_string(n) + " not injective");
      injectivity.push_back({{"functor", r.spec.to_string()}, {"n", n}, {"dimV", 1}, {"domain_dim", r.domain_dim},
                             {"rank", r.rank}, {"injective", r.injective()}});
    }
  return c.finish(8, Json{{"random_maps", maps}, {"restriction", injectivity}});
}

// -------------------------------------------------------------------- 9

CriterionResult equivariant_suite(std::uint64_t seed) {
  Checker c;
  Rng rng(seed + 9);
  struct Setup {
    std::string algebra, action;
    int chart_dim;
  };
  const std::vector<Setup> setups{{"abelian(1)", "rot2", 2}, {"su2", "rot3", 3}, {"su2", "trivial", 2}};
  std::size_t samples = 0;
  for (const auto& s : setups) {
    const LieAlgebra l = builtin_algebra(s.algebra);
    const LinearAction act = builtin_action(s.action, l, s.chart_dim);
    const int n = l.dim();
    for (int t = 0; t < 12; ++t, ++samples) {
      const int deg = static_cast<int>(rng.int_in(0, 4));
      const WeilModelElement w = random_model_element(rng, act.chart_dim, n, deg, 2, 4);
      const AlgebraVector xi = random_vector(rng, n);
      const AlgebraVector eta = random_vector(rng, n);
      const std::string tag = " (" + s.action + ", sample " + std::to_string(t) + ")";
      c.check(total_d(total_d(w)).is_zero(), "D^2 != 0" + tag);
      const auto lie = total_lie_derivative(act, xi, w);
      c.check(lie == total_d(total_contract(act, xi, w)) + total_contract(act, xi, total_d(w)), "L != D iota + iota D" + tag);
      c.check(total_contract(act, xi, total_contract(act, xi, w)).is_zero(), "iota^2 != 0" + tag);
      c.check(total_lie_derivative(act, xi, total_contract(act, eta, w)) -
                      total_contract(act, eta, total_lie_derivative(act, xi, w)) ==
                  total_contract(act, l.bracket(xi, eta), w),
              "[L_xi, iota_eta] != iota_[xi,eta]" + tag);
    }
  }
  // m = 0 reproduces the su2 basic dimensions
  const LieAlgebra su2 = builtin_algebra("su2");
  const LinearAction point = builtin_action("trivial", su2, 0);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= 8; ++d) dims.push_back(basic_dims(point, d, 0));
  c.check(dims == std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 0, 0, 1}, "m = 0 basic dims differ from su2 basic dims");
  // rotation invariants
  const LinearAction rot = builtin_action("rot2", builtin_algebra("abelian(1)"));
  const auto basic = basic_basis(rot, 0, 2);
  const auto domain = model_basis(2, 1, 0, 2);
  std::map<ModelKey, std::size_t> index;
  for (std::size_t i = 0; i < domain.size(); ++i) index.emplace(domain[i], i);
  std::vector<SparseRow> rows;
  for (const auto& b : basic) rows.push_back(model_coordinates(b, index));
  const SparseMatrix basic_matrix = [&] {
    SparseMatrix m(0, domain.size());
    for (auto r : rows) m.append_row(std::move(r));
    return m;
  }();
  const RationalForm x = RationalForm::coordinate(2, 0);
  const RationalForm y = RationalForm::coordinate(2, 1);
  const auto r2 = WeilModelElement::tensor(wedge(x, x) + wedge(y, y), WeilElement::one(1));
  c.check(rref(basic_matrix).contains(model_coordinates(r2, index)), "x^2 + y^2 not in the rot2 basic kernel");
  // D maps basic elements to basic elements
  for (int d = 0; d <= 2; ++d)
    for (const auto& b : basic_basis(rot, d, 2)) {
      const auto db = total_d(b);
      bool ok = total_contract(rot, AlgebraVector::basis(1, 0), db).is_zero() &&
                total_lie_derivative(rot, AlgebraVector::basis(1, 0), db).is_zero();
      c.check(ok, "D of a basic element is not basic (d=" + std::to_string(d) + ")");
    }
  return c.finish(9, Json{{"random_samples", samples},
                          {"point_chart_basic_dims", dims},
                          {"rot2_basic_dims_c2", {basic_dims(rot, 0, 2), basic_dims(rot, 1, 2), basic_dims(rot, 2, 2)}}});
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return koszul_acyclicity();
    case 2: return one_dimensional_complex();
    case 3: return su2_basic_subcomplex();
    case 4: return curvature_package();
    case 5: return cartan_suite(seed);
    case 6: return chern_weil_suite(seed);
    case 7: return classification_oracle();
    case 8: return appendix_suite(seed);
    case 9: return equivariant_suite(seed);
    default: throw DomainError("no in-process criterion with id " + std::to_string(id));
  }
}

}  // namespace weil
