#include <gtest/gtest.h>

#include "weil/equivariant.hpp"
#include "weil/error.hpp"
#include "weil/random.hpp"
#include "weil/sampling.hpp"

using namespace weil;

namespace {

using F = RationalForm;

WeilModelElement form_part(const F& f, int n) { return WeilModelElement::tensor(f, WeilElement::one(n)); }
WeilModelElement weil_part(int m, const WeilElement& a) { return WeilModelElement::tensor(F::constant(m, 1), a); }

}  // namespace

TEST(Equivariant, TotalDifferential) {
  EXPECT_EQ(total_d(weil_part(2, WeilElement::ext_generator(1, 0))), weil_part(2, WeilElement::sym_generator(1, 0)));
  EXPECT_EQ(total_d(form_part(F::coordinate(2, 0), 1)), form_part(F::differential(2, 0), 1));
  const auto w = WeilModelElement::tensor(F::differential(2, 0), WeilElement::ext_generator(1, 0));
  EXPECT_EQ(total_d(w), Rational(-1) * WeilModelElement::tensor(F::differential(2, 0), WeilElement::sym_generator(1, 0)));
}

TEST(Equivariant, RotationContraction) {
  const auto act = builtin_action("rot2", builtin_algebra("abelian(1)"));
  const auto xi = AlgebraVector::basis(1, 0);
  EXPECT_EQ(total_contract(act, xi, form_part(F::differential(2, 0), 1)),
            Rational(-1) * form_part(F::coordinate(2, 1), 1));
  EXPECT_EQ(total_contract(act, xi, weil_part(2, WeilElement::ext_generator(1, 0))), weil_part(2, WeilElement::one(1)));
}

TEST(Equivariant, TrivialActionReducesToAlgebra) {
  const auto su2 = builtin_algebra("su2");
  const auto act = builtin_action("trivial", su2, 2);
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_weil_element(rng, 3, static_cast<int>(rng.int_in(0, 4)), 3);
    const auto xi = random_vector(rng, 3);
    EXPECT_EQ(total_contract(act, xi, weil_part(2, a)), weil_part(2, contract(su2, xi, a)));
  }
}

TEST(Equivariant, CartanAndNilpotence) {
  Rng rng(14);
  for (const char* action : {"rot2", "rot3"}) {
    const auto l = builtin_algebra(std::string(action) == "rot2" ? "abelian(1)" : "su2");
    LinearAction act;
    ASSERT_NO_THROW(act = builtin_action(action, l));
    for (int t = 0; t < 10; ++t) {
      const auto w = random_model_element(rng, act.chart_dim, l.dim(), static_cast<int>(rng.int_in(0, 3)), 2, 3);
      const auto xi = random_vector(rng, l.dim());
      EXPECT_TRUE(total_d(total_d(w)).is_zero());
      EXPECT_EQ(total_lie_derivative(act, xi, w), total_d(total_contract(act, xi, w)) + total_contract(act, xi, total_d(w)));
      EXPECT_TRUE(total_contract(act, xi, total_contract(act, xi, w)).is_zero());
    }
  }
}

TEST(Equivariant, BasicDims) {
  const auto su2 = builtin_algebra("su2");
  EXPECT_EQ(basic_dims(builtin_action("trivial", su2, 2), 4, 0), basic_subspace(su2, 4).size());
  EXPECT_EQ(basic_dims(builtin_action("trivial", su2, 2), 0, 0), 1u);
  const auto rot = builtin_action("rot2", builtin_algebra("abelian(1)"));
  EXPECT_EQ(basic_dims(rot, 0, 0), 1u);
  const auto b = basic_basis(rot, 0, 2);
  const auto r2 = form_part(wedge(F::coordinate(2, 0), F::coordinate(2, 0)) + wedge(F::coordinate(2, 1), F::coordinate(2, 1)), 1);
  const auto keys = model_basis(2, 1, 0, 2);
  std::map<ModelKey, std::size_t> idx;
  for (std::size_t i = 0; i < keys.size(); ++i) idx[keys[i]] = i;
  SparseMatrix m(0, keys.size());
  for (const auto& e : b) m.append_row(model_coordinates(e, idx));
  EXPECT_TRUE(rref(m).contains(model_coordinates(r2, idx)));
  std::size_t prev = 0;
  for (int cap = 0; cap <= 3; ++cap) {
    const auto dim = basic_dims(rot, 2, cap);
    EXPECT_GE(dim, prev);
    prev = dim;
  }
}

TEST(Equivariant, SerialEqualsParallel) {
  const auto act = builtin_action("rot3", builtin_algebra("su2"));
  for (int deg = 0; deg <= 2; ++deg)
    EXPECT_EQ(basic_basis(act, deg, 2, Exec::serial), basic_basis(act, deg, 2, Exec::parallel));
}

TEST(Equivariant, IncompatibleActionRejected) {
  LinearAction act{builtin_algebra("su2"), 2, {Matrix(2, 2), Matrix(2, 2), Matrix::identity(2)}};
  EXPECT_THROW(act.validate(), DomainError);
}
