#include <gtest/gtest.h>

#include "weil/linalg.hpp"
#include "weil/random.hpp"

using namespace weil;

namespace {

SparseMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, int density_pct) {
  SparseMatrix m(0, c);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> row(c);
    for (auto& x : row)
      if (rng.int_in(0, 99) < density_pct) x = rng.nonzero_rational(4, 3);
    m.append_row(to_sparse(row));
  }
  return m;
}

}  // namespace

TEST(Linalg, SparseRrefMatchesDenseReference) {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto m = random_matrix(rng, static_cast<std::size_t>(rng.int_in(1, 14)), static_cast<std::size_t>(rng.int_in(1, 14)),
                                 static_cast<int>(rng.int_in(10, 60)));
    const auto ref = reference::rref_dense(m);
    const auto ser = rref(m, Exec::serial);
    const auto par = rref(m, Exec::parallel);
    EXPECT_EQ(ser.pivots, ref.pivots);
    EXPECT_EQ(ser.rows, ref.rows);
    EXPECT_EQ(par.rows, ref.rows);
    EXPECT_EQ(rank_fraction_free(m), ref.rank());
  }
}

TEST(Linalg, KernelVectorsAreAnnihilated) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto m = random_matrix(rng, 6, 9, 40);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + rank(m), m.cols());
    for (const auto& v : ker) EXPECT_TRUE(m.apply(v).empty());
  }
}

TEST(Linalg, RankDeficientByConstruction) {
  // third row = first + 2 * second
  Matrix a(3, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = Rational(1, 2); a(1, 1) = -1; a(1, 2) = 0;
  a(2, 0) = 2; a(2, 1) = 0; a(2, 2) = 3;
  EXPECT_EQ(rank(SparseMatrix::from_dense(a)), 2u);
  EXPECT_EQ(rank_fraction_free(SparseMatrix::from_dense(a)), 2u);
}

TEST(Linalg, SolveRoundTrip) {
  Matrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 3;
  const std::vector<Rational> b{Rational(3), Rational(4)};
  const auto x = solve(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a.apply(*x), b);
  Matrix s(2, 2);
  s(0, 0) = 1; s(0, 1) = 1; s(1, 0) = 1; s(1, 1) = 1;
  EXPECT_FALSE(solve(s, std::vector<Rational>{Rational(1), Rational(2)}).has_value());
}

TEST(Linalg, EchelonMembership) {
  SparseMatrix m(0, 3);
  m.append_row({{0, Rational(1)}, {1, Rational(1)}});
  const auto e = rref(m);
  EXPECT_TRUE(e.contains({{0, Rational(2)}, {1, Rational(2)}}));
  EXPECT_FALSE(e.contains({{2, Rational(1)}}));
}
