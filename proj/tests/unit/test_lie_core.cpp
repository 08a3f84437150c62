#include <gtest/gtest.h>

#include "iara/axioms.hpp"
#include "iara/lie_builders.hpp"

using namespace iara;

namespace {

// Value of ε_i - ε_j on h_k = e_kk - e_{k+1,k+1}.
Root oracle_root(int n, int i, int j) {
  Root r;
  auto eps = [](int a, int k) { return (a == k ? 1 : 0) - (a == k + 1 ? 1 : 0); };
  for (int k = 0; k + 1 < n; ++k) r.c.push_back(Scalar(eps(i, k) - eps(j, k)));
  return r;
}

const MatrixAlgebra& mat(const PairPtr& p) { return *underlying_matrix_algebra(p->algebra()); }

}  // namespace

TEST(MatrixAlgebra, SlnDimensions) {
  for (int n = 2; n <= 4; ++n) {
    auto p = make_sl(n);
    EXPECT_EQ(p->algebra().dim(Degree(0)), static_cast<std::size_t>(n * n - 1));
    EXPECT_EQ(p->toral_rank(), static_cast<std::size_t>(n - 1));
  }
}

TEST(MatrixAlgebra, BracketMatchesMatrixCommutator) {
  auto p = make_sl(3);
  const auto& m = mat(p);
  const Degree z(0);
  // [e_01, e_12] = e_02, [e_01, e_10] = e_00 - e_11
  EXPECT_EQ(m.bracket(basis_element(m.off_diagonal_key(z, 0, 1)), basis_element(m.off_diagonal_key(z, 1, 2))),
            basis_element(m.off_diagonal_key(z, 0, 2)));
  EXPECT_EQ(m.bracket(basis_element(m.off_diagonal_key(z, 0, 1)), basis_element(m.off_diagonal_key(z, 1, 0))),
            basis_element(m.diagonal_key(z, 0)));
  EXPECT_TRUE(m.bracket(basis_element(m.off_diagonal_key(z, 0, 1)), basis_element(m.off_diagonal_key(z, 0, 2))).empty());
}

TEST(MatrixAlgebra, TraceForm) {
  auto p = make_sl(3);
  const auto& m = mat(p);
  const Degree z(0);
  const Element h1 = basis_element(m.diagonal_key(z, 0)), h2 = basis_element(m.diagonal_key(z, 1));
  EXPECT_EQ(m.form(h1, h1), Scalar(2));
  EXPECT_EQ(m.form(h1, h2), Scalar(-1));
  EXPECT_EQ(m.form(basis_element(m.off_diagonal_key(z, 0, 2)), basis_element(m.off_diagonal_key(z, 2, 0))), Scalar(1));
  EXPECT_TRUE(m.form(basis_element(m.off_diagonal_key(z, 0, 2)), basis_element(m.off_diagonal_key(z, 0, 2))).is_zero());
}

TEST(ToralPair, RootsOfSlnMatchEigenvalueOracle) {
  for (int n = 2; n <= 4; ++n) {
    auto p = make_sl(n);
    const auto& m = mat(p);
    const auto spaces = p->root_spaces();
    EXPECT_EQ(spaces.size(), static_cast<std::size_t>(n * (n - 1) + 1));
    EXPECT_EQ(spaces.at(p->zero_root()).size(), static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Root a = oracle_root(n, i, j);
        ASSERT_TRUE(spaces.count(a)) << a.to_string();
        ASSERT_EQ(spaces.at(a).size(), 1u);
        EXPECT_EQ(p->root_of(basis_element(m.off_diagonal_key(Degree(0), i, j))), a);
      }
  }
}

TEST(ToralPair, CorootsAndPairing) {
  auto p = make_sl(3);
  const auto& m = mat(p);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const Root a = oracle_root(3, i, j);
      EXPECT_EQ(p->pair(a, a), Scalar(2));
      // t_α = e_ii - e_jj for the trace form
      MatrixAlgebra::Mat d;
      d[{i, i}] = {Scalar(1)};
      d[{j, j}] = {Scalar(-1)};
      const Element want = m.from_matrix(Degree(0), d);
      EXPECT_EQ(p->representative(a), want);
      for (const auto& t : p->toral()) EXPECT_EQ(p->evaluate(a, t), p->algebra().form(want, t));
    }
}

TEST(ToralPair, RootOfRejectsNonEigenvector) {
  auto p = make_sl(3);
  const auto& m = mat(p);
  const Element x = basis_element(m.off_diagonal_key(Degree(0), 0, 1)) + basis_element(m.off_diagonal_key(Degree(0), 1, 2));
  EXPECT_THROW(p->root_of(x), Error);
  EXPECT_THROW(p->root_of(Element{}), Error);
}

TEST(ToralPair, RejectsNonToralInput) {
  auto p = make_sl(2);
  const auto& m = mat(p);
  std::vector<Element> t = {basis_element(m.off_diagonal_key(Degree(0), 0, 1)), basis_element(m.diagonal_key(Degree(0), 0))};
  EXPECT_THROW(ToralPair(p->algebra_ptr(), t, Window()), Error);
  std::vector<Element> dup = {basis_element(m.diagonal_key(Degree(0), 0)), scaled(basis_element(m.diagonal_key(Degree(0), 0)), Scalar(2))};
  EXPECT_THROW(ToralPair(p->algebra_ptr(), dup, Window()), Error);
}

TEST(Axioms, SlnIsInvariantAffineReflectionAlgebra) {
  for (int n = 2; n <= 4; ++n) {
    auto p = make_sl(n);
    EXPECT_TRUE(check_IA1(*p).pass) << n;
    EXPECT_TRUE(check_IA2(*p).pass) << n;
    EXPECT_TRUE(check_IA2_division(*p).pass) << n;
    EXPECT_TRUE(check_IA3(*p, 10).pass) << n;
  }
}

TEST(Axioms, Ia2WitnessSatisfiesIdentity) {
  auto p = make_sl(3);
  const auto spaces = p->root_spaces();
  for (const auto& [a, sp] : spaces) {
    if (a.is_zero()) continue;
    Root na = a;
    for (auto& x : na.c) x = -x;
    auto w = ia2_witness_for(*p, a, sp.front(), spaces.at(na));
    ASSERT_TRUE(w) << a.to_string();
    EXPECT_FALSE(w->pairing.is_zero());
    EXPECT_EQ(w->bracket, scaled(p->representative(a), w->pairing));
  }
}

TEST(Axioms, Sl2TripleRelations) {
  auto p = make_sl(3);
  const auto spaces = p->root_spaces();
  const Root a = oracle_root(3, 0, 2), na = oracle_root(3, 2, 0);
  const Sl2Triple s = sl2_triple(*p, a, spaces.at(a), spaces.at(na));
  const auto& g = p->algebra();
  EXPECT_EQ(g.bracket(s.e, s.f), s.h);
  EXPECT_EQ(g.bracket(s.h, s.e), scaled(s.e, Scalar(2)));
  EXPECT_EQ(g.bracket(s.h, s.f), scaled(s.f, Scalar(-2)));
  EXPECT_THROW(sl2_triple(*p, p->zero_root(), spaces.at(p->zero_root()), spaces.at(p->zero_root())), Error);
}

TEST(Centralizer, OfCartanIsCartan) {
  auto p = make_sl(3);
  std::vector<Element> all;
  for (const auto& k : p->algebra().basis(Degree(0))) all.push_back(basis_element(k));
  auto c = centralizer(p->algebra(), p->toral(), all);
  EXPECT_EQ(c.size(), 2u);
  SpanExpresser t(p->toral());
  for (const auto& x : c) EXPECT_TRUE(t.contains(x));
  // centralizer of e_01 in sl3 has dimension 4
  const auto& m = mat(p);
  EXPECT_EQ(centralizer(p->algebra(), {basis_element(m.off_diagonal_key(Degree(0), 0, 1))}, all).size(), 4u);
}

TEST(CoefficientMatrices, RootSpacesAreEijTimesCoefficientComponent) {
  auto a = GradedCoefficientAlgebra::twisted_group(BaseAlgebra::field(), 1);
  const Window w = Window::box(1, 2);
  auto p = make_sl_Kpm(1, a, w);
  const auto& m = mat(p);
  const auto spaces = p->root_spaces();
  // roots are (α, 0, λ): T = span{h_1, h_2, c, d}
  for (const auto& d : w.degrees())
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const Element x = basis_element(m.off_diagonal_key(d, i, j));
        Root r = p->root_of(x);
        ASSERT_EQ(r.c.size(), 4u);
        Root base = oracle_root(3, i, j);
        EXPECT_EQ(r.c[0], base.c[0]);
        EXPECT_EQ(r.c[1], base.c[1]);
        EXPECT_EQ(r.c[2], Scalar(0));
        EXPECT_EQ(r.c[3], Scalar(d[0]));
        EXPECT_EQ(spaces.at(r).size(), 1u);
      }
  // roots are the window-restricted sum of the finite roots and the null roots
  EXPECT_EQ(spaces.size(), (6 + 1) * w.degrees().size());
  EXPECT_TRUE(check_IA1(*p).pass);
  EXPECT_TRUE(check_IA2(*p).pass);
  EXPECT_TRUE(check_IA3(*p, 10).pass);
}
