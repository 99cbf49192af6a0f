#include <gtest/gtest.h>

#include "weil/error.hpp"
#include "weil/schur_oracle.hpp"

using namespace weil;

TEST(SchurOracle, AntisymmetrizationIsUnique) {
  EXPECT_EQ(equivariant_hom_dim(antisymmetrization_problem(2, 2, 3)), 1u);
  EXPECT_EQ(equivariant_hom_dim(antisymmetrization_problem(1, 2, 3)), 0u);
  for (int n = 0; n <= 3; ++n)
    for (int q = 0; q <= 3; ++q)
      EXPECT_EQ(equivariant_hom_dim(antisymmetrization_problem(n, q, 3)), n == q ? 1u : 0u) << n << " " << q;
}

TEST(SchurOracle, BidegreeExamples) {
  for (auto [p, q, v, e] : std::vector<std::array<int, 4>>{{1, 0, 1, 1}, {0, 1, 1, 1}, {2, 0, 2, 1}, {1, 1, 2, 4}}) {
    const auto r = verify_bidegree(p, q, v);
    EXPECT_EQ(r.expected, static_cast<std::size_t>(e));
    EXPECT_EQ(r.computed, static_cast<std::size_t>(e));
    EXPECT_EQ(r.dim_w, p + 2 * q);
  }
}

TEST(SchurOracle, RestrictedMatchesReference) {
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 1; ++q)
      for (int v = 1; v <= 2; ++v) {
        if (p + 2 * q > 3) continue;
        const auto prob = bidegree_problem(p, q, v);
        EXPECT_EQ(equivariant_hom_dim(prob, Exec::serial), reference::equivariant_hom_dim(prob)) << prob.to_string();
        EXPECT_EQ(equivariant_hom_dim(prob, Exec::parallel), reference::equivariant_hom_dim(prob));
      }
  for (int n = 0; n <= 3; ++n)
    EXPECT_EQ(equivariant_hom_dim(antisymmetrization_problem(n, 2, 2)),
              reference::equivariant_hom_dim(antisymmetrization_problem(n, 2, 2)));
}

// Scalar matrices act on a degree-k functor of W* by t^{-k}; maps between
// different degrees are forced to zero.
TEST(SchurOracle, DegreeMismatchGivesZero) {
  EquivHomProblem prob{3, 1, FunctorExpr::power(FunctorKind::sym, 2, FunctorExpr::dual_w()),
                       FunctorExpr::power(FunctorKind::ext, 3, FunctorExpr::dual_w())};
  EXPECT_EQ(equivariant_hom_dim(prob), 0u);
}

// Adding V-free directions (dim W beyond p+2q) should not change the answer.
TEST(SchurOracle, StableInDimW) {
  auto prob = bidegree_problem(1, 0, 2);
  const auto base = equivariant_hom_dim(prob);
  prob.dim_w = 2;
  EXPECT_EQ(equivariant_hom_dim(prob), base);
}

TEST(SchurOracle, ResourceCap) {
  EXPECT_THROW(equivariant_hom_dim(bidegree_problem(4, 2, 3)), ResourceCapExceeded);
}
