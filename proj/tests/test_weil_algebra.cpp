#include <gtest/gtest.h>

#include "weil/invariants.hpp"
#include "weil/random.hpp"
#include "weil/sampling.hpp"
#include "weil/weil_algebra.hpp"

using namespace weil;

namespace {

WeilElement lam(int n, int i) { return WeilElement::ext_generator(n, i); }
WeilElement tl(int n, int i) { return WeilElement::sym_generator(n, i); }

// Coadjoint derivation: the even derivation extending ad*_xi on lambda and
// on lambda-tilde alike. Serves as an independent model of L_xi.
WeilElement coadjoint_derivation(const LieAlgebra& l, const AlgebraVector& xi, const WeilElement& a) {
  const int n = l.dim();
  const auto m = coadjoint(l, xi);
  WeilElement out(n);
  for (const auto& [idx, c] : a.terms()) {
    for (int i = 0; i < n; ++i) {
      if (!((idx.ext >> i) & 1u)) continue;
      // replace lambda^i by sum_k m(k,i) lambda^k in place
      WeilIndex rest = idx;
      rest.ext &= ~(1u << i);
      for (int k = 0; k < n; ++k) {
        const auto& mk = m(static_cast<std::size_t>(k), static_cast<std::size_t>(i));
        if (mk == 0) continue;
        // move lambda^i to the front, swap in lambda^k, move back
        int before = 0;
        for (int b = 0; b < i; ++b) before += (idx.ext >> b) & 1u;
        auto piece = lam(n, k) * WeilElement::monomial(n, rest, c * mk);
        if (before % 2) piece *= -1;
        out += piece;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (idx.sym[static_cast<std::size_t>(i)] == 0) continue;
      WeilIndex rest = idx;
      rest.sym[static_cast<std::size_t>(i)] -= 1;
      for (int k = 0; k < n; ++k) {
        const auto& mk = m(static_cast<std::size_t>(k), static_cast<std::size_t>(i));
        if (mk == 0) continue;
        out += tl(n, k) * WeilElement::monomial(n, rest, c * mk * idx.sym[static_cast<std::size_t>(i)]);
      }
    }
  }
  return out;
}

}  // namespace

TEST(WeilAlgebra, ProductSigns) {
  EXPECT_TRUE((lam(3, 0) * lam(3, 0)).is_zero());
  const auto a = lam(3, 0) * lam(3, 1);
  EXPECT_EQ(lam(3, 1) * lam(3, 0), -a);
  EXPECT_EQ(a.bidegree(), (std::pair<int, int>{2, 0}));
  const auto sq = tl(3, 0) * tl(3, 0);
  EXPECT_EQ(sq.bidegree(), (std::pair<int, int>{0, 2}));
  EXPECT_FALSE(sq.is_zero());
}

TEST(WeilAlgebra, ProductAssociativeGradedCommutative) {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const int da = static_cast<int>(rng.int_in(0, 4)), db = static_cast<int>(rng.int_in(0, 4));
    const auto a = random_weil_element(rng, 3, da, 3);
    const auto b = random_weil_element(rng, 3, db, 3);
    const auto c = random_weil_element(rng, 3, static_cast<int>(rng.int_in(0, 3)), 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    auto ba = b * a;
    if ((da * db) % 2) ba *= -1;
    EXPECT_EQ(a * b, ba);
  }
}

TEST(WeilAlgebra, KoszulDifferential) {
  EXPECT_EQ(koszul_d(lam(2, 0)), tl(2, 0));
  EXPECT_TRUE(koszul_d(tl(2, 0)).is_zero());
  EXPECT_EQ(koszul_d(lam(2, 0) * lam(2, 1)), tl(2, 0) * lam(2, 1) - lam(2, 0) * tl(2, 1));
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_weil_element(rng, 3, static_cast<int>(rng.int_in(0, 6)), 4);
    EXPECT_TRUE(koszul_d(koszul_d(a)).is_zero());
  }
}

TEST(WeilAlgebra, ContractionOnGenerators) {
  const auto su2 = builtin_algebra("su2");
  const auto e1 = AlgebraVector::basis(3, 0);
  EXPECT_EQ(contract(su2, e1, lam(3, 0)), WeilElement::one(3));
  EXPECT_TRUE(contract(su2, e1, lam(3, 1)).is_zero());
  // iota_xi lambda-tilde = ad*_xi lambda; ad*_{e1} lambda^2 = lambda^3
  EXPECT_EQ(contract(su2, e1, tl(3, 1)), lam(3, 2));
  const auto ab = builtin_algebra("abelian(3)");
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(contract(ab, AlgebraVector::basis(3, 1), tl(3, i)).is_zero());
}

TEST(WeilAlgebra, LieDerivativeMatchesCoadjointDerivation) {
  Rng rng(8);
  for (const char* name : {"su2", "sl2", "heisenberg3", "abelian(2)"}) {
    const auto l = builtin_algebra(name);
    for (int t = 0; t < 15; ++t) {
      const auto xi = random_vector(rng, l.dim());
      const auto a = random_weil_element(rng, l.dim(), static_cast<int>(rng.int_in(0, 5)), 4);
      EXPECT_EQ(lie_derivative(l, xi, a), coadjoint_derivation(l, xi, a)) << name;
      if (l.is_abelian()) EXPECT_TRUE(lie_derivative(l, xi, a).is_zero());
    }
  }
  const auto su2 = builtin_algebra("su2");
  EXPECT_EQ(lie_derivative(su2, AlgebraVector::basis(3, 0), lam(3, 1)), lam(3, 2));
  EXPECT_TRUE(lie_derivative(su2, AlgebraVector::basis(3, 0), lam(3, 0)).is_zero());
}

TEST(WeilAlgebra, CurvatureGenerators) {
  EXPECT_EQ(curvature_generator(builtin_algebra("abelian(2)"), 1), tl(2, 1));
  EXPECT_EQ(curvature_generator(builtin_algebra("su2"), 0), tl(3, 0) + lam(3, 1) * lam(3, 2));
  EXPECT_EQ(curvature_generator(builtin_algebra("heisenberg3"), 2), tl(3, 2) + lam(3, 0) * lam(3, 1));
}

TEST(WeilAlgebra, HorizontalProjection) {
  const auto su2 = builtin_algebra("su2");
  EXPECT_TRUE(horizontal_project(su2, lam(3, 0)).is_zero());
  EXPECT_EQ(horizontal_project(su2, WeilElement::one(3)), WeilElement::one(3));
  EXPECT_EQ(horizontal_project(builtin_algebra("abelian(2)"), tl(2, 1)), tl(2, 1));
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_weil_element(rng, 3, static_cast<int>(rng.int_in(0, 5)), 4);
    const auto h = horizontal_project(su2, a);
    EXPECT_EQ(horizontal_project(su2, h), h);
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(contract(su2, AlgebraVector::basis(3, i), h).is_zero());
  }
}

TEST(WeilAlgebra, BasicSubspaceDims) {
  EXPECT_EQ(basic_subspace(builtin_algebra("abelian(2)"), 2).size(), 2u);
  EXPECT_EQ(basic_subspace(builtin_algebra("su2"), 2).size(), 0u);
  const auto su2 = builtin_algebra("su2");
  const auto b4 = basic_subspace(su2, 4);
  ASSERT_EQ(b4.size(), 1u);
  WeilElement cas(3);
  for (int i = 0; i < 3; ++i) cas += curvature_generator(su2, i) * curvature_generator(su2, i);
  const auto basis = weil_basis(3, 4);
  const auto map = index_basis(basis);
  SparseMatrix m(0, basis.size());
  m.append_row(coordinates(b4[0], map));
  EXPECT_TRUE(rref(m).contains(coordinates(cas, map)));
}

TEST(WeilAlgebra, BasicSubspaceSerialEqualsParallel) {
  for (const char* name : {"su2", "heisenberg3", "sl2"})
    for (int d = 0; d <= 6; ++d) {
      const auto l = builtin_algebra(name);
      EXPECT_EQ(basic_subspace(l, d, Exec::serial), basic_subspace(l, d, Exec::parallel)) << name << " " << d;
    }
}

TEST(WeilAlgebra, KoszulAcyclic) {
  EXPECT_EQ(koszul_cohomology_dims(1, 6), (std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(koszul_cohomology_dims(2, 6), (std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0}));
  auto h3 = koszul_cohomology_dims(3, 8);
  EXPECT_EQ(h3, (std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(WeilAlgebra, GradedDims) {
  EXPECT_EQ(graded_dims(1, 5), (std::vector<std::size_t>{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(graded_dims(2, 2), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(graded_dims(7, 0), (std::vector<std::size_t>{1}));
  // brute force against the enumerated basis
  for (int n = 1; n <= 3; ++n) {
    const auto g = graded_dims(n, 6);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(g[static_cast<std::size_t>(d)], weil_basis(n, d).size());
  }
}

TEST(Invariants, Dims) {
  EXPECT_EQ(invariant_dims(builtin_algebra("su2"), 4), (std::vector<std::size_t>{1, 0, 1, 0, 1}));
  EXPECT_EQ(invariant_basis(builtin_algebra("abelian(2)"), 3).size(), 4u);
  const auto a1 = invariant_basis(builtin_algebra("abelian(1)"), 5);
  ASSERT_EQ(a1.size(), 1u);
  const auto t = tl(1, 0);
  EXPECT_EQ(a1[0], t * t * t * t * t);
  EXPECT_TRUE(invariant_basis(builtin_algebra("su2"), 1).empty());
  // lambda-tilde^1 and lambda-tilde^2 are both invariant here (see README)
  const auto h1 = invariant_basis(builtin_algebra("heisenberg3"), 1);
  EXPECT_EQ(h1.size(), 2u);
}

TEST(Invariants, Su2QuadraticCasimir) {
  const auto b = invariant_basis(builtin_algebra("su2"), 2);
  ASSERT_EQ(b.size(), 1u);
  const auto q = tl(3, 0) * tl(3, 0) + tl(3, 1) * tl(3, 1) + tl(3, 2) * tl(3, 2);
  const Rational c = b[0].terms().begin()->second / q.terms().begin()->second;
  EXPECT_EQ(b[0], c * q);
  EXPECT_TRUE(is_symmetric(b[0]));
}

TEST(Invariants, TransgressionRoundTrip) {
  for (const char* name : {"su2", "heisenberg3", "abelian(2)"}) {
    const auto l = builtin_algebra(name);
    for (int k = 0; k <= 2; ++k)
      for (const auto& p : invariant_basis(l, k)) {
        const auto b = invariant_to_basic(l, p);
        for (int i = 0; i < l.dim(); ++i) {
          EXPECT_TRUE(contract(l, AlgebraVector::basis(l.dim(), i), b).is_zero());
          EXPECT_TRUE(lie_derivative(l, AlgebraVector::basis(l.dim(), i), b).is_zero());
        }
        EXPECT_EQ(basic_to_invariant(l, b), p);
      }
  }
}
