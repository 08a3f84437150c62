#include <gtest/gtest.h>

#include "iara/affinize.hpp"
#include "iara/lie_builders.hpp"

using namespace iara;

namespace {

CoeffAlgebraPtr laurent(int r) { return GradedCoefficientAlgebra::twisted_group(BaseAlgebra::field(), r); }

Affinization untwisted_sl(int n, int bound) {
  auto gr = std::make_shared<Grading>(make_sl(n), identity_automorphism());
  return affinize(gr, laurent(1), {0}, Window::box(1, bound));
}

Affinization twisted_sl3(int bound) {
  auto s3 = make_sl(3);
  auto gr = std::make_shared<Grading>(s3, involution_automorphism(*s3));
  return affinize(gr, laurent(1), {1}, Window::box(1, bound));
}

Degree at(const Affinization& af, int lam) { return Degree::concat(Degree::zero(af.loop->base_rank()), Degree{lam}); }

const Verdict& named(const std::vector<Verdict>& vs, const std::string& n) {
  for (const auto& v : vs)
    if (v.name == n) return v;
  throw std::runtime_error("no verdict " + n);
}

// A 3-dimensional antisymmetric bracket that is not a Lie bracket.
class BrokenAlgebra : public GradedLieAlgebra {
 public:
  int lattice_rank() const override { return 0; }
  std::size_t dim(const Degree&) const override { return 3; }
  Element bracket_basis(const BasisKey& a, const BasisKey& b) const override {
    if (a.idx == b.idx) return {};
    // [x0, x1] = x2, [x1, x2] = x1, [x0, x2] = x0: Jacobi fails on (x0, x1, x2)
    const int s = a.idx < b.idx ? 1 : -1;
    const int lo = std::min(a.idx, b.idx), hi = std::max(a.idx, b.idx);
    const std::uint32_t out = lo == 0 && hi == 1 ? 2 : lo == 1 ? 1 : 0;
    return scaled(basis_element({Degree(0), out}), Scalar(s));
  }
  Scalar form_basis(const BasisKey& a, const BasisKey& b) const override { return Scalar(a.idx == b.idx ? 1 : 0); }
  std::string name() const override { return "broken"; }
};

}  // namespace

TEST(LoopAlgebra, UntwistedDimensions) {
  auto af = untwisted_sl(2, 2);
  for (int l = -2; l <= 2; ++l) {
    EXPECT_EQ(af.loop->dim(at(af, l)), 3u);
    EXPECT_EQ(af.hat->dim(at(af, l)), l == 0 ? 5u : 3u);
  }
}

TEST(LoopAlgebra, TwistedDimensionsFollowParity) {
  auto af = twisted_sl3(3);
  for (int l = -3; l <= 3; ++l) EXPECT_EQ(af.loop->dim(at(af, l)), l % 2 == 0 ? 3u : 5u) << l;
  EXPECT_THROW(affinize(af.loop->base_ptr(), laurent(1), {2}, Window::box(1, 1)), Error);
}

TEST(LoopAlgebra, RejectsAsymmetricAndNoncommutativeInput) {
  auto gr = std::make_shared<Grading>(make_sl(2), identity_automorphism());
  EXPECT_THROW(affinize(gr, laurent(1), {0}, Window(1, {Degree{0}, Degree{1}})), Error);
  auto qp = GradedCoefficientAlgebra::q_algebra(BaseAlgebra::field(), {{1, -1}, {-1, 1}});
  EXPECT_THROW(affinize(gr, qp, {0, 0}, Window::box(2, 1)), Error);
}

TEST(LoopAlgebra, BracketMatchesMatrixLoopOracle) {
  // [x z^a, y z^b] = [x,y] z^{a+b} + a δ_{a+b,0} (x,y) c, with [x,y] from the matrix commutator
  auto af = untwisted_sl(2, 2);
  const auto& base = af.base().pair().algebra();
  const Degree z0(0);
  std::vector<Element> xs;
  for (const auto& k : base.basis(z0)) xs.push_back(basis_element(k));
  auto A = af.loop->coeff();
  const Element c = basis_element(af.hat->c_key(0));
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (const auto& x : xs)
        for (const auto& y : xs) {
          const Element lhs = af.hat->bracket(af.loop->lift(x, A->monomial(Degree{a})), af.loop->lift(y, A->monomial(Degree{b})));
          Element rhs = af.loop->lift(base.bracket(x, y), A->monomial(Degree{a + b}));
          if (a + b == 0) rhs = rhs + scaled(c, Scalar(a) * base.form(x, y));
          EXPECT_EQ(lhs, rhs) << a << " " << b;
        }
}

TEST(LoopAlgebra, GradedFormPairsOppositeDegrees) {
  auto af = twisted_sl3(2);
  const Window& w = af.window();
  for (const auto& d : w.degrees())
    for (const auto& e : w.degrees()) {
      if ((d + e).is_zero()) continue;
      for (const auto& x : af.hat->basis(d))
        for (const auto& y : af.hat->basis(e)) EXPECT_TRUE(af.hat->form_basis(x, y).is_zero());
    }
}

TEST(Extension, DerivationAndCentre) {
  auto af = twisted_sl3(2);
  const Element d = basis_element(af.hat->d_key(0)), c = basis_element(af.hat->c_key(0));
  for (const auto& deg : af.window().degrees())
    for (const auto& k : af.hat->basis(deg)) {
      const Element x = basis_element(k);
      EXPECT_TRUE(af.hat->bracket(c, x).empty());
      if (af.hat->is_inner(k)) { EXPECT_EQ(af.hat->bracket(d, x), scaled(x, Scalar(af.loop->coeff_degree(deg)[0]))); }
    }
  EXPECT_EQ(af.hat->form(c, d), Scalar(1));
  EXPECT_TRUE(af.hat->form(c, c).is_zero());
  EXPECT_TRUE(af.hat->form(d, d).is_zero());
}

TEST(Extension, CentralTermOfSl2Loop) {
  // [e z, f z^{-1}] = h + (e, f) c
  auto af = untwisted_sl(2, 1);
  const auto& m = *underlying_matrix_algebra(af.base().pair().algebra());
  const Element e = basis_element(m.off_diagonal_key(Degree(0), 0, 1)), f = basis_element(m.off_diagonal_key(Degree(0), 1, 0));
  const Element h = basis_element(m.diagonal_key(Degree(0), 0));
  auto A = af.loop->coeff();
  const Element br = af.hat->bracket(af.loop->lift(e, A->monomial(Degree{1})), af.loop->lift(f, A->monomial(Degree{-1})));
  EXPECT_EQ(br, af.loop->lift(h, A->unit()) + basis_element(af.hat->c_key(0)));
}

TEST(HatRoots, UntwistedIsRootsPlusLattice) {
  auto af = untwisted_sl(3, 2);
  std::set<Root> want;
  for (const auto& a : af.base().pair().roots())
    for (int l = -2; l <= 2; ++l) {
      Root h = a;
      h.c.push_back(Scalar(0));
      h.c.push_back(Scalar(l));
      want.insert(h);
    }
  EXPECT_EQ(af.pair->roots(), want);
  // the zero space is T0 ⊗ 1 plus V plus V†
  EXPECT_EQ(af.pair->root_space(af.pair->zero_root()).size(), 4u);
  EXPECT_TRUE(check_hat_roots(af).pass);
}

TEST(HatRoots, TwistedMatchesPrediction) {
  auto af = twisted_sl3(2);
  const Verdict v = check_hat_roots(af);
  EXPECT_TRUE(v.pass) << v.detail;
  // even λ carry π(R) of the fixed algebra, odd λ the restricted roots of g^1
  std::set<Root> even, odd;
  for (const auto& h : af.pair->roots()) {
    const Scalar lam = h.c.back();
    Root pa{{h.c[0]}};
    (lam == Scalar(0) || lam == Scalar(2) || lam == Scalar(-2) ? even : odd).insert(pa);
  }
  EXPECT_EQ(even.size(), 3u);
  EXPECT_EQ(odd.size(), 5u);
}

TEST(AffinizationIsIara, UntwistedSl2) {
  auto af = untwisted_sl(2, 2);
  AffinizationOptions opt;
  opt.samples = 2000;
  const auto vs = verify_theorem_affinization(af, opt);
  for (const auto& v : vs) EXPECT_TRUE(v.pass) << v.name << ": " << v.detail;
  EXPECT_TRUE(named(vs, "splitting-Cartan").pass);
  EXPECT_TRUE(named(vs, "division upgrade IA2'").pass);
  EXPECT_EQ(classify_type(reflection_system(*af.pair)), "A1");
}

TEST(AffinizationIsIara, TwistedSl3IsBC1) {
  auto af = twisted_sl3(2);
  AffinizationOptions opt;
  opt.samples = 2000;
  for (const auto& v : verify_theorem_affinization(af, opt)) EXPECT_TRUE(v.pass) << v.name << ": " << v.detail;
  EXPECT_EQ(classify_type(reflection_system(*af.pair)), "BC1");
}

TEST(Sampling, DetectsBrokenJacobi) {
  BrokenAlgebra g;
  const auto vs = sample_identities(g, Window(), 200);
  EXPECT_FALSE(named(vs, "Jacobi").pass);
}

TEST(Sampling, DeterministicSeed) {
  auto af = untwisted_sl(2, 1);
  const auto a = sample_identities(*af.hat, af.window(), 500), b = sample_identities(*af.hat, af.window(), 500);
  EXPECT_EQ(a[0].detail, b[0].detail);
  EXPECT_NE(a[0].detail.find("with central term"), std::string::npos);
}

TEST(Iteration, ZeroMuGivesFixedLoopPart) {
  // σ' = id, μ = 0: the new automorphism is the identity, so the new g⁰ is everything
  auto af = twisted_sl3(1);
  auto gr = iterate(af, identity_automorphism(), {0});
  EXPECT_EQ(gr->m(), 1);
  for (const auto& d : af.window().degrees()) EXPECT_EQ(gr->component_basis(0, d).size(), af.hat->dim(d));
}

TEST(Iteration, SignMuSplitsByParity) {
  // μ = 1 with σ' = id of order 2: g^1 is the odd λ part, V ⊕ V† stays in degree 0
  auto af = untwisted_sl(2, 2);
  auto id2 = std::make_shared<FunctionAutomorphism>(2, "id2", [](const BasisKey& k) { return basis_element(k); });
  auto gr = iterate(af, id2, {1});
  EXPECT_EQ(gr->m(), 2);
  for (const auto& d : af.window().degrees()) {
    const int lam = af.loop->coeff_degree(d)[0];
    EXPECT_EQ(gr->component_basis(lam % 2 == 0 ? 0 : 1, d).size(), af.hat->dim(d));
  }
  for (const auto& v : gr->verify_A1_A3()) EXPECT_TRUE(v.pass) << v.name;
}

TEST(Iteration, RejectsNoncommutingAutomorphism) {
  auto s3 = make_sl(3);
  // Ad(diag(1, 1, -1)) and the anti-diagonal involution disagree on e_01
  auto gr = std::make_shared<Grading>(s3, inner_diagonal_automorphism(*s3, {0, 0, 1}, 2));
  auto af = affinize(gr, laurent(1), {1}, Window::box(1, 1));
  EXPECT_NO_THROW(iterate(af, inner_diagonal_automorphism(*s3, {0, 1, 1}, 2), {0}));
  EXPECT_THROW(iterate(af, involution_automorphism(*s3), {0}), Error);
}
