#include <gtest/gtest.h>

#include "weil/error.hpp"
#include "weil/liealg.hpp"
#include "weil/random.hpp"
#include "weil/sampling.hpp"

using namespace weil;

TEST(LieAlg, BuiltinsValidate) {
  for (const auto& name : builtin_algebra_names()) EXPECT_FALSE(validate(builtin_algebra(name)).has_value()) << name;
  EXPECT_FALSE(validate(builtin_algebra("abelian(2)")).has_value());
  EXPECT_EQ(builtin_algebra("abelian(1)").dim(), 1);
  EXPECT_TRUE(builtin_algebra("abelian(4)").is_abelian());
  EXPECT_THROW(builtin_algebra("e8"), DomainError);
}

TEST(LieAlg, AntisymmetryViolationReported) {
  LieAlgebra l(2);
  l.set_entry(0, 1, 0, 1);
  l.set_entry(1, 0, 0, 1);
  const auto v = validate(l);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, Violation::Kind::antisymmetry);
  EXPECT_EQ(v->indices, (std::vector<int>{1, 2, 1}));
}

TEST(LieAlg, HeisenbergBracket) {
  const auto h = builtin_algebra("heisenberg3");
  const auto e = [](int i) { return AlgebraVector::basis(3, i); };
  EXPECT_EQ(h.bracket(e(0), e(1)).coords, e(2).coords);
  EXPECT_TRUE(h.bracket(e(0), e(2)).is_zero());
  EXPECT_TRUE(h.bracket(e(1), e(2)).is_zero());
}

// Column j of coadjoint(xi) is ad*_xi lambda^j, (ad*_xi lambda)(e_k) = -lambda([xi, e_k]).
TEST(LieAlg, CoadjointFromDefinition) {
  for (const auto& name : builtin_algebra_names()) {
    const auto l = builtin_algebra(name);
    const int n = l.dim();
    for (int i = 0; i < n; ++i) {
      const auto m = coadjoint(l, AlgebraVector::basis(n, i));
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const auto br = l.bracket(AlgebraVector::basis(n, i), AlgebraVector::basis(n, k));
          EXPECT_EQ(m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)), -br.coords[static_cast<std::size_t>(j)]);
        }
    }
  }
}

TEST(LieAlg, Su2CoadjointE1) {
  const auto m = coadjoint(builtin_algebra("su2"), AlgebraVector::basis(3, 0));
  Matrix expect(3, 3);
  expect(2, 1) = 1;   // lambda^2 -> lambda^3
  expect(1, 2) = -1;  // lambda^3 -> -lambda^2
  EXPECT_EQ(m, expect);
  EXPECT_TRUE(coadjoint(builtin_algebra("abelian(3)"), AlgebraVector::basis(3, 1)).is_zero());
  EXPECT_TRUE(coadjoint(builtin_algebra("sl2"), AlgebraVector{std::vector<Rational>(3)}).is_zero());
}

TEST(LieAlg, CoadjointIsRepresentation) {
  Rng rng(3);
  for (const auto& name : builtin_algebra_names()) {
    const auto l = builtin_algebra(name);
    for (int t = 0; t < 5; ++t) {
      const auto x = random_vector(rng, l.dim());
      const auto y = random_vector(rng, l.dim());
      EXPECT_EQ(commutator(coadjoint(l, x), coadjoint(l, y)), coadjoint(l, l.bracket(x, y))) << name;
      EXPECT_EQ(commutator(adjoint(l, x), adjoint(l, y)), adjoint(l, l.bracket(x, y))) << name;
    }
  }
}

TEST(LieAlg, DimensionMismatchThrows) {
  EXPECT_THROW(coadjoint(builtin_algebra("su2"), AlgebraVector::basis(2, 0)), DimensionMismatch);
}
