#include <gtest/gtest.h>

#include "iara/automorphism.hpp"
#include "iara/grading_props.hpp"
#include "iara/lie_builders.hpp"

using namespace iara;

namespace {

const Verdict& named(const std::vector<Verdict>& vs, const std::string& n) {
  for (const auto& v : vs)
    if (v.name == n) return v;
  throw std::runtime_error("no verdict " + n);
}

CoeffAlgebraPtr laurent1() { return GradedCoefficientAlgebra::twisted_group(BaseAlgebra::field(), 1); }

std::vector<GradingPtr> sample_gradings() {
  std::vector<GradingPtr> out;
  auto s3 = make_sl(3);
  out.push_back(std::make_shared<Grading>(s3, identity_automorphism()));
  out.push_back(std::make_shared<Grading>(s3, involution_automorphism(*s3)));
  out.push_back(std::make_shared<Grading>(s3, inner_diagonal_automorphism(*s3, {0, 1, 2}, 3)));
  auto k1 = make_sl_Kpm(1, laurent1(), Window::box(1, 1));
  out.push_back(std::make_shared<Grading>(k1, involution_automorphism(*k1)));
  return out;
}

}  // namespace

TEST(GradingAxioms, AutomorphismsSatisfyA1ToA3) {
  for (const auto& gr : sample_gradings())
    for (const auto& v : gr->verify_A1_A3()) EXPECT_TRUE(v.pass) << gr->sigma().name() << " " << v.name << ": " << v.detail;
}

TEST(GradingAxioms, ScalingMapIsRejected) {
  auto s2 = make_sl(2);
  Grading gr(s2, scaling_map(Scalar(2), 2));
  const auto vs = gr.verify_A1_A3();
  EXPECT_FALSE(named(vs, "Aut").pass);
  EXPECT_FALSE(named(vs, "A1").pass);
  EXPECT_FALSE(named(vs, "A3").pass);
  EXPECT_TRUE(named(vs, "A2").pass);
}

TEST(GradingAxioms, PeriodIsReportedSeparatelyFromOrder) {
  auto s3 = make_sl(3);
  // the identity claimed with order 2 still has σ^2 = id; only the period shows the difference
  Grading gr(s3, matrix_automorphism(Matrix<Scalar>::identity(8), 2, "claimed-2"));
  const Verdict& a1 = named(gr.verify_A1_A3(), "A1");
  EXPECT_TRUE(a1.pass);
  EXPECT_NE(a1.detail.find("period 1"), std::string::npos) << a1.detail;
  EXPECT_EQ(gr.component_basis(1, Degree(0)).size(), 0u);
}

TEST(GradingComponents, Sl2SignFlip) {
  // σ = Ad(diag(1, -1)) has g^0 = span{h}, g^1 = span{e, f}
  auto s2 = make_sl(2);
  Grading gr(s2, inner_diagonal_automorphism(*s2, {0, 1}, 2));
  EXPECT_EQ(gr.m(), 2);
  EXPECT_EQ(gr.component_basis(0, Degree(0)).size(), 1u);
  EXPECT_EQ(gr.component_basis(1, Degree(0)).size(), 2u);
  const auto& m = *underlying_matrix_algebra(s2->algebra());
  const Element e = basis_element(m.off_diagonal_key(Degree(0), 0, 1));
  EXPECT_EQ(gr.project(e, 1), e);
  EXPECT_TRUE(gr.project(e, 0).empty());
  EXPECT_EQ(gr.sigma().apply(e), scaled(e, Scalar(-1)));
}

TEST(GradingComponents, InvolutionOnSl3) {
  auto s3 = make_sl(3);
  Grading gr(s3, involution_automorphism(*s3));
  // fixed points form so3
  EXPECT_EQ(gr.component_basis(0, Degree(0)).size(), 3u);
  EXPECT_EQ(gr.component_basis(1, Degree(0)).size(), 5u);
  EXPECT_EQ(gr.T0().size(), 1u);
}

TEST(Projections, EigenprojectionEqualsAveragingFormula) {
  for (const auto& gr : sample_gradings())
    for (const auto& d : gr->pair().window().degrees())
      for (int j = 0; j < gr->m(); ++j)
        EXPECT_EQ(eigenprojection(*gr, j, d), formula_projection(*gr, j, d)) << gr->sigma().name() << " j=" << j;
}

TEST(Projections, PropertySuitePasses) {
  for (const auto& gr : sample_gradings()) {
    const auto vs = grading_property_suite(*gr);
    EXPECT_GE(vs.size(), 15u);
    for (const auto& v : vs) EXPECT_TRUE(v.pass) << gr->sigma().name() << " " << v.name << ": " << v.detail;
  }
}

TEST(Projections, SigmaOfProjectionIsEigenvector) {
  auto s3 = make_sl(3);
  Grading gr(s3, inner_diagonal_automorphism(*s3, {0, 1, 2}, 3));
  for (const auto& k : s3->algebra().basis(Degree(0)))
    for (int j = 0; j < 3; ++j) {
      const Element p = gr.project(basis_element(k), j);
      EXPECT_EQ(gr.sigma().apply(p), scaled(p, gr.zeta_power(j)));
    }
}

TEST(RootAction, RestrictedRootsOfInvolution) {
  auto s3 = make_sl(3);
  Grading gr(s3, involution_automorphism(*s3));
  std::set<Root> restricted;
  for (const auto& a : s3->roots()) {
    restricted.insert(gr.restrict_to_T0(a));
    EXPECT_EQ(gr.orbit_rep(gr.act(a)), gr.orbit_rep(a));
    EXPECT_LE(gr.orbit_length(a), 2);
  }
  // BC1: 0, ±a, ±2a
  EXPECT_EQ(restricted.size(), 5u);
}

TEST(StandingAssumptions, A4AndA5OnLoopInvolution) {
  auto k1 = make_sl_Kpm(1, laurent1(), Window::box(1, 1));
  Grading gr(k1, involution_automorphism(*k1));
  EXPECT_TRUE(gr.verify_A4().pass) << gr.verify_A4().detail;
  EXPECT_TRUE(gr.verify_A5().pass) << gr.verify_A5().detail;
  for (const auto& v : gr.verify_A1_A3()) EXPECT_TRUE(v.pass) << v.name;
}

TEST(StandingAssumptions, IsotropicPairInOddDegree) {
  auto k1 = make_sl_Kpm(1, laurent1(), Window::box(1, 1));
  Grading gr(k1, involution_automorphism(*k1));
  const IsotropicPair ip = gr.find_isotropic_pair(1);
  const auto& g = k1->algebra();
  EXPECT_TRUE(g.bracket(ip.e, ip.f).empty());
  EXPECT_FALSE(g.form(ip.e, ip.f).is_zero());
  EXPECT_EQ(gr.project(ip.e, 1), ip.e);
  EXPECT_EQ(gr.project(ip.f, 1), ip.f);
  EXPECT_FALSE(ip.route.empty());
}
