#include <gtest/gtest.h>

#include "weil/error.hpp"
#include "weil/expression.hpp"
#include "weil/functor.hpp"
#include "weil/polyfunctor.hpp"
#include "weil/random.hpp"
#include "weil/sampling.hpp"

using namespace weil;

namespace {

BlackBoxMap from_exprs(std::vector<std::string> texts, int dim) {
  std::vector<Expression> es;
  for (const auto& t : texts) es.push_back(Expression::parse(t));
  return BlackBoxMap{dim, static_cast<int>(es.size()), [es](std::span<const Rational> x) {
                       Vec out;
                       for (const auto& e : es) out.push_back(e.evaluate(x));
                       return out;
                     }};
}

Vec v(std::initializer_list<Rational> xs) { return Vec(xs); }

}  // namespace

TEST(Expression, Parse) {
  const auto e = Expression::parse("x + x*y - 3/2*y^2");
  const Vec p{Rational(2), Rational(-1)};
  EXPECT_EQ(e.evaluate(p), Rational(2 - 2) - Rational(3, 2));
  EXPECT_EQ(e.arity(), 2);
  EXPECT_EQ(Expression::parse("abs(x1 - x2)").evaluate(v({Rational(1), Rational(4)})), Rational(3));
  EXPECT_THROW(Expression::parse("x +"), ParseError);
  EXPECT_THROW(Expression::parse("(x"), ParseError);
}

TEST(PolyFunctor, DecomposeMixedDegree) {
  const auto f = from_exprs({"x + x*y"}, 2);
  const std::vector<Vec> probes{v({Rational(1), Rational(2)}), v({Rational(-3), Rational(1, 2)})};
  const auto dec = homogeneous_decompose(f, 2, probes);
  EXPECT_TRUE(dec.reconstructs);
  EXPECT_TRUE(dec.homogeneous);
  for (std::size_t s = 0; s < probes.size(); ++s) {
    const auto& p = probes[s];
    EXPECT_EQ(dec.components[0][s], v({Rational(0)}));
    EXPECT_EQ(dec.components[1][s], v({p[0]}));
    EXPECT_EQ(dec.components[2][s], v({p[0] * p[1]}));
  }
}

TEST(PolyFunctor, MatrixSquareIsHomogeneous) {
  // M -> M*M on 2x2 matrices, entries (a b; c d)
  const auto f = from_exprs({"x1*x1 + x2*x3", "x1*x2 + x2*x4", "x3*x1 + x4*x3", "x3*x2 + x4*x4"}, 4);
  Rng rng(3);
  std::vector<Vec> probes;
  for (int t = 0; t < 4; ++t) {
    Vec p;
    for (int i = 0; i < 4; ++i) p.push_back(rng.small_rational());
    probes.push_back(p);
  }
  const auto dec = homogeneous_decompose(f, 2, probes);
  for (std::size_t s = 0; s < probes.size(); ++s) {
    EXPECT_EQ(dec.components[0][s], Vec(4));
    EXPECT_EQ(dec.components[1][s], Vec(4));
    EXPECT_EQ(dec.components[2][s], f(probes[s]));
  }
  const auto zero = from_exprs({"0"}, 2);
  const auto z = homogeneous_decompose(zero, 3, {v({Rational(1), Rational(1)})});
  for (const auto& c : z.components) EXPECT_EQ(c[0], v({Rational(0)}));
}

TEST(PolyFunctor, ComponentsOfRandomPolynomials) {
  Rng rng(40);
  for (int t = 0; t < 10; ++t) {
    const auto poly = random_polynomial(rng, 2, 3, 5);
    BlackBoxMap f{2, 1, [poly](std::span<const Rational> x) { return Vec{evaluate(poly, x)}; }};
    const Vec p{rng.small_rational(), rng.small_rational()};
    const auto comps = homogeneous_components(f, 3, p);
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(comps[static_cast<std::size_t>(i)][0], evaluate(homogeneous_part(poly, i), p));
  }
}

TEST(PolyFunctor, Detection) {
  const std::vector<std::vector<Vec>> axis{{v({Rational(1)})}, {v({Rational(1)}), v({Rational(-1)})}};
  EXPECT_TRUE(is_polynomial(from_exprs({"x^3"}, 1), 3, axis).consistent);
  const auto bad = is_polynomial(from_exprs({"abs(x)"}, 1), 2, {{v({Rational(1)}), v({Rational(-1)})}});
  EXPECT_FALSE(bad.consistent);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_FALSE(bad.witness->point.empty());
  EXPECT_NE(bad.witness->expected, bad.witness->actual);
  const std::vector<std::vector<Vec>> plane{{v({Rational(1), Rational(0)}), v({Rational(0), Rational(1)})},
                                            {v({Rational(1), Rational(1)}), v({Rational(-1), Rational(2)})}};
  EXPECT_TRUE(is_polynomial(from_exprs({"x^2*y"}, 2), 3, plane).consistent);
  // degree too small is caught even though the map is polynomial
  EXPECT_FALSE(is_polynomial(from_exprs({"x^2*y"}, 2), 2, plane).consistent);
}

TEST(Functor, PowerDims) {
  EXPECT_EQ(power_dim(FunctorKind::sym, 2, 3), 6u);
  EXPECT_EQ(power_dim(FunctorKind::ext, 2, 3), 3u);
  EXPECT_EQ(power_dim(FunctorKind::tensor, 3, 2), 8u);
  EXPECT_EQ(power_dim(FunctorKind::ext, 4, 3), 0u);
  for (auto kind : {FunctorKind::sym, FunctorKind::ext, FunctorKind::tensor})
    EXPECT_EQ(power_basis(kind, 3, 3).size(), power_dim(kind, 3, 3));
  EXPECT_EQ(canonicalize(FunctorKind::ext, {1, 0}).first, -1);
  EXPECT_EQ(canonicalize(FunctorKind::ext, {1, 1}).first, 0);
  EXPECT_EQ(parse_functor_spec("Lambda^2").kind, FunctorKind::ext);
  EXPECT_THROW(parse_functor_spec("Foo^2"), ParseError);
}

TEST(Functor, PowersAreFunctorial) {
  Rng rng(5);
  for (auto kind : {FunctorKind::sym, FunctorKind::ext, FunctorKind::tensor}) {
    Matrix a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = rng.small_rational();
        b(i, j) = rng.small_rational();
      }
    const FunctorSpec spec{kind, 2};
    EXPECT_EQ(functor_apply(spec, a * b).to_dense(), functor_apply(spec, a).to_dense() * functor_apply(spec, b).to_dense());
    EXPECT_EQ(functor_apply(spec, Matrix::identity(3)).to_dense(), Matrix::identity(power_dim(kind, 2, 3)));
  }
}

TEST(PolyFunctor, RestrictionInjectivity) {
  const auto s = restriction_injectivity(parse_functor_spec("Sym^2"), 3, 1);
  EXPECT_EQ(s.domain_dim, 6u);
  EXPECT_EQ(s.rank, 6u);
  EXPECT_TRUE(s.injective());
  EXPECT_TRUE(restriction_injectivity(parse_functor_spec("Lambda^2"), 3, 1).injective());
  EXPECT_TRUE(restriction_injectivity(parse_functor_spec("Tensor^1"), 2, 2).injective());
  for (int n = 3; n <= 4; ++n)
    for (const char* f : {"Sym^2", "Lambda^2", "Tensor^2"})
      EXPECT_EQ(restriction_injectivity(parse_functor_spec(f), n, 2, Exec::serial).rank,
                restriction_injectivity(parse_functor_spec(f), n, 2, Exec::parallel).rank);
  EXPECT_THROW(restriction_injectivity(parse_functor_spec("Sym^2"), 2, 1), DomainError);
}
