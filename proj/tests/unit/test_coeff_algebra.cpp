#include <gtest/gtest.h>

#include <random>

#include "iara/coeff_algebra.hpp"

using namespace iara;

namespace {

CoeffAlgebraPtr laurent(int r) { return GradedCoefficientAlgebra::twisted_group(BaseAlgebra::field(), r); }

CoeffAlgebraPtr quantum_plane() {
  return GradedCoefficientAlgebra::q_algebra(BaseAlgebra::field(), {{1, -1}, {-1, 1}});
}

// Reorders a word in z_j^{±1} into z_1^a z_2^b ... by adjacent swaps and returns the sign picked up.
int reorder_sign(std::vector<int> word, const std::vector<std::vector<int>>& q) {
  int s = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass)
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      const int a = std::abs(word[i]) - 1, b = std::abs(word[i + 1]) - 1;
      if (a > b) {
        std::swap(word[i], word[i + 1]);
        s *= q[a][b];
      }
    }
  return s;
}

std::vector<int> word_of(const Degree& d) {
  std::vector<int> w;
  for (int j = 0; j < d.rank(); ++j)
    for (int k = 0; k < std::abs(d[j]); ++k) w.push_back(d[j] > 0 ? j + 1 : -(j + 1));
  return w;
}

}  // namespace

TEST(TwistedGroup, TrivialCocycleIsLaurent) {
  auto a = laurent(1);
  EXPECT_EQ(a->mul(a->monomial(Degree{1}), a->monomial(Degree{-1})), a->unit());
  EXPECT_TRUE(a->commutative());
  EXPECT_TRUE(a->cocycle_valid());
}

TEST(TwistedGroup, SignCocycleSquares) {
  auto a = GradedCoefficientAlgebra::twisted_group(BaseAlgebra::field(), 1, {{{Scalar(-1)}}});
  const CoeffElement u = a->monomial(Degree{1});
  EXPECT_EQ(a->mul(u, u), a->monomial(Degree{2}).scaled(Scalar(-1)));
  // associativity on (u, u, u) by direct expansion
  EXPECT_EQ(a->mul(a->mul(u, u), u), a->mul(u, a->mul(u, u)));
}

TEST(TwistedGroup, AssociativityOnRandomTriples) {
  auto a = GradedCoefficientAlgebra::twisted_group(BaseAlgebra::product_normalized(2), 2,
                                                    {{{Scalar(1), Scalar(1)}, {Scalar(-1), Scalar(2)}},
                                                     {{Scalar(-1), Scalar(2)}, {Scalar(1), Scalar(-1)}}});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-2, 2), c(-3, 3);
  auto rnd = [&] {
    CoeffElement x;
    for (int t = 0; t < 3; ++t) x.add(Degree{d(rng), d(rng)}, {Scalar(c(rng)), Scalar(c(rng))});
    return x;
  };
  for (int it = 0; it < 100; ++it) {
    CoeffElement x = rnd(), y = rnd(), z = rnd();
    EXPECT_EQ(a->mul(a->mul(x, y), z), a->mul(x, a->mul(y, z)));
    EXPECT_EQ(a->form_eps(x, y), a->form_eps(y, x));
    EXPECT_EQ(a->form_eps(a->mul(x, y), z), a->form_eps(x, a->mul(y, z)));
  }
}

TEST(TwistedGroup, RejectsBadCocycles) {
  EXPECT_THROW(GradedCoefficientAlgebra::twisted_group(BaseAlgebra::field(), 1, {{{Scalar(0)}}}), Error);
  EXPECT_THROW(GradedCoefficientAlgebra::twisted_group(BaseAlgebra::field(), 2,
                                                       {{{Scalar(1)}, {Scalar(2)}}, {{Scalar(3)}, {Scalar(1)}}}),
               Error);
}

TEST(TwistedGroup, FormVanishesOffAntidiagonal) {
  auto a = laurent(2);
  const Window w = Window::box(2, 2);
  for (const auto& l : w.degrees())
    for (const auto& m : w.degrees()) {
      const Scalar e = a->form_eps(a->monomial(l), a->monomial(m));
      if (!(l + m).is_zero()) EXPECT_TRUE(e.is_zero());
      else EXPECT_EQ(e, Scalar(1));
    }
}

TEST(QAlgebra, CommutingGeneratorsGiveLaurent) {
  auto a = GradedCoefficientAlgebra::q_algebra(BaseAlgebra::field(), {{1, 1}, {1, 1}});
  EXPECT_TRUE(a->commutative());
}

TEST(QAlgebra, NormalFormSigns) {
  auto a = quantum_plane();
  const CoeffElement z1 = a->monomial(Degree{1, 0}), z2 = a->monomial(Degree{0, 1});
  EXPECT_EQ(a->mul(z2, z1), a->mul(z1, z2).scaled(Scalar(-1)));
  const CoeffElement z12 = a->mul(z1, z2);
  EXPECT_EQ(a->mul(z12, z12), a->monomial(Degree{2, 2}).scaled(Scalar(-1)));
  EXPECT_FALSE(a->commutative());
}

TEST(QAlgebra, ProductSignsMatchReorderingOracle) {
  const std::vector<std::vector<int>> q = {{1, -1, 1}, {-1, 1, -1}, {1, -1, 1}};
  auto a = GradedCoefficientAlgebra::q_algebra(BaseAlgebra::field(), q);
  const Window w = Window::box(3, 1);
  for (const auto& l : w.degrees())
    for (const auto& m : w.degrees()) {
      std::vector<int> word = word_of(l), wm = word_of(m);
      word.insert(word.end(), wm.begin(), wm.end());
      const int s = reorder_sign(word, q);
      EXPECT_EQ(a->mul(a->monomial(l), a->monomial(m)), a->monomial(l + m).scaled(Scalar(s)))
          << l.to_string() << " " << m.to_string();
    }
}

TEST(Inverses, MonomialsAndScaledMonomials) {
  auto a = laurent(2);
  const Degree l{2, -1};
  EXPECT_EQ(a->invert_homogeneous(a->monomial(l)), a->monomial(-l));
  const CoeffElement two = a->monomial(l).scaled(Scalar(2));
  const CoeffElement inv = a->invert_homogeneous(two);
  EXPECT_EQ(inv, a->monomial(-l).scaled(Scalar(Rational(1, 2))));
  EXPECT_EQ(a->mul(two, inv), a->unit());
  auto qa = quantum_plane();
  const Window w = Window::box(2, 2);
  for (const auto& d : w.degrees()) {
    const CoeffElement u = qa->monomial(d);
    const CoeffElement v = qa->invert_homogeneous(u);
    EXPECT_FALSE(qa->form_eps(u, v).is_zero());
  }
  EXPECT_THROW(a->invert_homogeneous(a->monomial(Degree{1, 0}) + a->unit()), Error);
}

TEST(Predicates, TorusPredivisionDivision) {
  const Window w = Window::box(1, 2);
  auto a = laurent(1);
  EXPECT_TRUE(a->is_torus(w).holds);
  EXPECT_TRUE(a->is_division(w).holds);
  auto p = GradedCoefficientAlgebra::twisted_group(BaseAlgebra::product(2), 1);
  EXPECT_TRUE(p->is_predivision(w).holds);
  EXPECT_FALSE(p->is_division(w).holds);
  EXPECT_FALSE(p->is_torus(w).holds);
  // division graded exactly when B is a field, on these bases
  for (int k = 1; k <= 3; ++k) {
    auto b = GradedCoefficientAlgebra::twisted_group(BaseAlgebra::product(k), 1);
    EXPECT_EQ(b->is_division(w).holds, k == 1);
  }
}

TEST(Predicates, ZeroDivisorWitness) {
  EXPECT_FALSE(BaseAlgebra::field().basis_zero_divisors());
  auto z = BaseAlgebra::product_normalized(2).basis_zero_divisors();
  ASSERT_TRUE(z);
  EXPECT_NE(z->first, z->second);
}

TEST(CommutatorCenter, CommutativeCase) {
  auto rep = laurent(2)->commutator_center_split(Window::box(2, 2));
  EXPECT_TRUE(rep.ok);
  for (const auto& e : rep.entries) {
    EXPECT_FALSE(e.in_commutator);
    EXPECT_TRUE(e.in_center);
  }
}

TEST(CommutatorCenter, QuantumPlane) {
  auto a = quantum_plane();
  const CoeffElement z1 = a->monomial(Degree{1, 0}), z2 = a->monomial(Degree{0, 1});
  // z1 z2 = (1/2)[z1, z2]
  EXPECT_EQ(a->mul(z1, z2), (a->mul(z1, z2) - a->mul(z2, z1)).scaled(Scalar(Rational(1, 2))));
  const CoeffElement z1sq = a->monomial(Degree{2, 0});
  EXPECT_EQ(a->mul(z1sq, z2), a->mul(z2, z1sq));
  EXPECT_EQ(a->mul(z1sq, z1), a->mul(z1, z1sq));
  auto rep = a->commutator_center_split(Window(2, {Degree{1, 1}, Degree{2, 0}}));
  ASSERT_EQ(rep.entries.size(), 2u);
  for (const auto& e : rep.entries) {
    if (e.degree == Degree{1, 1}) { EXPECT_TRUE(e.in_commutator && !e.in_center); }
    if (e.degree == Degree{2, 0}) { EXPECT_TRUE(e.in_center && !e.in_commutator); }
  }
  EXPECT_TRUE(a->commutator_center_split(Window::box(2, 2)).ok);
}

TEST(Bar, AntiInvolutionOnQuantumPlane) {
  auto a = quantum_plane();
  const Window w = Window::box(2, 1);
  for (const auto& l : w.degrees())
    for (const auto& m : w.degrees()) {
      const CoeffElement x = a->monomial(l), y = a->monomial(m);
      EXPECT_EQ(a->bar(a->mul(x, y)), a->mul(a->bar(y), a->bar(x)));
      EXPECT_EQ(a->bar(a->bar(x)), x);
      EXPECT_EQ(a->form_eps(a->bar(x), a->bar(y)), a->form_eps(x, y));
    }
}
