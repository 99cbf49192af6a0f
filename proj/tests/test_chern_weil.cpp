#include <gtest/gtest.h>

#include "weil/chern_weil.hpp"
#include "weil/error.hpp"
#include "weil/invariants.hpp"
#include "weil/random.hpp"
#include "weil/sampling.hpp"

using namespace weil;

namespace {

using F = RationalForm;
using CF = ChartForm<GaussianRational>;

F x(int m, int i) { return F::coordinate(m, i); }
F dx(int m, int i) { return F::differential(m, i); }
F c(int m, const Rational& v) { return F::constant(m, v); }

}  // namespace

TEST(ChartForms, Wedge) {
  EXPECT_TRUE(wedge(dx(3, 0), dx(3, 0)).is_zero());
  EXPECT_EQ(wedge(wedge(x(3, 0), dx(3, 1)), dx(3, 2)), wedge(x(3, 0), wedge(dx(3, 1), dx(3, 2))));
  EXPECT_EQ(wedge(dx(3, 1), dx(3, 0)), -wedge(dx(3, 0), dx(3, 1)));
}

TEST(ChartForms, ExteriorDerivative) {
  EXPECT_EQ(d(wedge(x(3, 0), dx(3, 1))), wedge(dx(3, 0), dx(3, 1)));
  EXPECT_TRUE(d(dx(3, 0)).is_zero());
  const auto x2y = wedge(wedge(x(3, 0), x(3, 0)), x(3, 1));
  const auto expect = Rational(2) * wedge(wedge(wedge(x(3, 0), x(3, 1)), dx(3, 0)), dx(3, 2)) +
                      wedge(wedge(wedge(x(3, 0), x(3, 0)), dx(3, 1)), dx(3, 2));
  EXPECT_EQ(d(wedge(x2y, dx(3, 2))), expect);
}

TEST(ChartForms, DSquaredAndLeibnizOnRandomForms) {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const int p = static_cast<int>(rng.int_in(0, 2)), q = static_cast<int>(rng.int_in(0, 2));
    const auto a = random_form(rng, 4, p, 3, 3);
    const auto b = random_form(rng, 4, q, 3, 3);
    EXPECT_TRUE(d(d(a)).is_zero());
    auto rhs = wedge(d(a), b);
    rhs += (p % 2 ? Rational(-1) : Rational(1)) * wedge(a, d(b));
    EXPECT_EQ(d(wedge(a, b)), rhs);
  }
}

TEST(ChartForms, Pullback) {
  // phi(t) = (t, t^2)
  PolyMap phi{1, 2, {x(1, 0), wedge(x(1, 0), x(1, 0))}};
  EXPECT_EQ(pullback(phi, wedge(x(2, 0), dx(2, 1))), Rational(2) * wedge(wedge(x(1, 0), x(1, 0)), dx(1, 0)));
  Rng rng(6);
  const auto a = random_form(rng, 3, 1, 2, 4);
  EXPECT_EQ(pullback(PolyMap::identity(3), a), a);
  PolyMap constant{2, 3, {c(2, 1), c(2, Rational(-1, 2)), c(2, 3)}};
  EXPECT_TRUE(pullback(constant, a).is_zero());
  for (int t = 0; t < 10; ++t) {
    const auto psi = random_polymap(rng, 2, 3, 2, 2);
    const auto f = random_form(rng, 3, static_cast<int>(rng.int_in(0, 2)), 2, 3);
    EXPECT_EQ(pullback(psi, d(f)), d(pullback(psi, f)));
  }
}

TEST(ChernWeil, CurvatureExamples) {
  auto a1 = Connection::zero(builtin_algebra("abelian(1)"), 2);
  a1.components[0] = wedge(x(2, 0), dx(2, 1));
  EXPECT_EQ(curvature(a1).components[0], wedge(dx(2, 0), dx(2, 1)));

  const auto su2 = builtin_algebra("su2");
  auto a = Connection::zero(su2, 3);
  a.components[0] = wedge(x(3, 0), dx(3, 1));
  a.components[1] = wedge(x(3, 1), dx(3, 2));
  const auto f = curvature(a);
  EXPECT_EQ(f.components[0], wedge(dx(3, 0), dx(3, 1)));
  EXPECT_EQ(f.components[1], wedge(dx(3, 1), dx(3, 2)));
  EXPECT_EQ(f.components[2], wedge(wedge(x(3, 0), x(3, 1)), wedge(dx(3, 1), dx(3, 2))));
  EXPECT_TRUE(curvature(Connection::zero(su2, 3)).components[2].is_zero());
}

TEST(ChernWeil, CwFormExamples) {
  const auto ab = builtin_algebra("abelian(1)");
  const auto t = WeilElement::sym_generator(1, 0);
  auto a = Connection::zero(ab, 4);
  a.components[0] = wedge(x(4, 0), dx(4, 1));
  EXPECT_EQ(cw_form(t, a), wedge(dx(4, 0), dx(4, 1)));
  a.components[0] += wedge(x(4, 2), dx(4, 3));
  const auto vol = wedge(wedge(dx(4, 0), dx(4, 1)), wedge(dx(4, 2), dx(4, 3)));
  EXPECT_EQ(cw_form(t * t, a), Rational(2) * vol);

  const auto su2 = builtin_algebra("su2");
  auto b = Connection::zero(su2, 4);
  b.components[0] = wedge(x(4, 0), dx(4, 1)) + wedge(x(4, 2), dx(4, 3));
  b.components[1] = wedge(x(4, 1), dx(4, 2));
  WeilElement p(3);
  for (int i = 0; i < 3; ++i) p += WeilElement::sym_generator(3, i) * WeilElement::sym_generator(3, i);
  EXPECT_EQ(cw_form(p, b), Rational(2) * vol);
}

// Independent check of the polarization: for P = product of distinct
// generators, P(F,...,F) is the wedge of the matching components.
TEST(ChernWeil, PolarizationOfMonomials) {
  Rng rng(9);
  const auto su2 = builtin_algebra("su2");
  for (int t = 0; t < 6; ++t) {
    const auto a = random_connection(rng, su2, 4, 2, 2);
    const auto f = curvature(a);
    const auto g = [](int i) { return WeilElement::sym_generator(3, i); };
    EXPECT_EQ(cw_form(g(0) * g(1), a), wedge(f.components[0], f.components[1]));
    EXPECT_EQ(cw_form(g(2) * g(2), a), wedge(f.components[2], f.components[2]));
  }
}

TEST(ChernWeil, InvariantFormsClosed) {
  Rng rng(12);
  for (const char* name : {"su2", "heisenberg3"}) {
    const auto l = builtin_algebra(name);
    for (int t = 0; t < 4; ++t) {
      const auto a = random_connection(rng, l, 4, 2, 2);
      for (int k = 1; k <= 2; ++k)
        for (const auto& p : invariant_basis(l, k)) EXPECT_TRUE(d(cw_form(p, a)).is_zero()) << name;
    }
  }
}

TEST(ChernWeil, RepresentationsValidate) {
  for (const auto& name : builtin_algebra_names()) {
    EXPECT_NO_THROW(builtin_representation(builtin_algebra(name)).validate()) << name;
    EXPECT_NO_THROW(builtin_complex_representation(builtin_algebra(name)).validate()) << name;
  }
}

TEST(ChernWeil, AbelianAdditiveGauge) {
  const auto ab = builtin_algebra("abelian(1)");
  auto a = Connection::zero(ab, 2);
  a.components[0] = wedge(x(2, 1), dx(2, 0));
  GaugeTransform<GaussianRational> g{GaugeKind::unipotent, 2, 2,
                                     {CF::constant(2, 1), complexify(wedge(x(2, 0), x(2, 1))), CF(2), CF::constant(2, 1)}};
  const auto moved = gauge_transform(complexify(a), g, builtin_complex_representation(ab));
  EXPECT_EQ(real_part_exact(moved.components[0]), a.components[0] + wedge(x(2, 1), dx(2, 0)) + wedge(x(2, 0), dx(2, 1)));
}

TEST(ChernWeil, UnipotentMaurerCartan) {
  GaugeTransform<GaussianRational> g{GaugeKind::unipotent, 2, 1,
                                     {CF::constant(1, 1), CF::coordinate(1, 0), CF(1), CF::constant(1, 1)}};
  const auto mc = maurer_cartan(g);
  ASSERT_EQ(mc.size(), 4u);
  EXPECT_TRUE(mc[0].is_zero());
  EXPECT_EQ(mc[1], CF::differential(1, 0));
  EXPECT_TRUE(mc[2].is_zero());
  EXPECT_TRUE(mc[3].is_zero());
}

TEST(ChernWeil, ConstantGaugeIsConjugation) {
  Rng rng(30);
  const auto su2 = builtin_algebra("su2");
  const auto rep = builtin_complex_representation(su2);
  const GaussianRational i{Rational(0), Rational(1)};
  GaugeTransform<GaussianRational> g{GaugeKind::constant, 2, 3,
                                     {CF::constant(3, GaussianRational{Rational(1), Rational(1)}), CF::constant(3, i),
                                      CF::constant(3, GaussianRational{Rational(2), Rational(0)}),
                                      CF::constant(3, GaussianRational{Rational(0), Rational(-1)})}};
  for (int t = 0; t < 4; ++t) {
    const auto a = complexify(random_connection(rng, su2, 3, 2, 2));
    const auto moved = gauge_transform(a, g, rep);
    const auto lhs = to_matrix(moved, rep);
    const auto rhs = matrix_product(matrix_product(matrix_inverse(g), to_matrix(a, rep), 2), g.entries, 2);
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(curvature(moved), adjoint_action(curvature(a), g, rep));
  }
}

TEST(ChernWeil, SingularConstantGaugeRejected) {
  GaugeTransform<GaussianRational> g{GaugeKind::constant, 2, 1,
                                     {CF::constant(1, GaussianRational{Rational(1), Rational(0)}),
                                      CF::constant(1, GaussianRational{Rational(2), Rational(0)}),
                                      CF::constant(1, GaussianRational{Rational(2), Rational(0)}),
                                      CF::constant(1, GaussianRational{Rational(4), Rational(0)})}};
  EXPECT_THROW(g.validate(), DomainError);
}
