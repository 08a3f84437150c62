#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "iara/cyclotomic.hpp"
#include "iara/eigen.hpp"
#include "iara/linalg.hpp"

using namespace iara;
using cd = std::complex<double>;

namespace {

cd as_complex(const Cyclotomic& s) {
  const int m = s.order();
  RatPoly c = s.coeffs_in(m);
  cd acc = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    acc += c[k].num().get_d() / c[k].den().get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(k) / m);
  return acc;
}

cd eval(const IntPoly& p, cd x) {
  cd acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k].get_d();
  return acc;
}

}  // namespace

TEST(Rational, ParseAndNormalize) {
  EXPECT_EQ(Rational::parse("6/-4").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, FieldAxiomsOnSamples) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int it = 0; it < 500; ++it) {
    Rational a(d(rng), d(rng) | 1), b(d(rng), d(rng) | 1), c(d(rng), d(rng) | 1);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) { EXPECT_EQ(a * a.inv(), Rational(1)); }
  }
}

TEST(CyclotomicPolynomial, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (IntPoly{1, 1}));
  // Φ_6 has the primitive 6th roots as its roots and degree φ(6) = 2
  const IntPoly& p6 = cyclotomic_polynomial(6);
  EXPECT_EQ(poly_degree(to_rat(p6)), 2);
  for (int k : {1, 5}) EXPECT_LT(std::abs(eval(p6, std::polar(1.0, 2 * M_PI * k / 6))), 1e-12);
  EXPECT_EQ(p6, (IntPoly{1, -1, 1}));
}

TEST(CyclotomicPolynomial, DegreesAndRootsMatchOracle) {
  for (int m = 1; m <= 30; ++m) {
    const IntPoly& p = cyclotomic_polynomial(m);
    EXPECT_EQ(static_cast<int>(p.size()) - 1, euler_phi(m)) << m;
    for (int k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1) { EXPECT_LT(std::abs(eval(p, std::polar(1.0, 2 * M_PI * k / m))), 1e-9) << m; }
  }
}

TEST(Cyclotomic, PrimitiveRoots) {
  EXPECT_EQ(primitive_root(1), Cyclotomic(1));
  EXPECT_EQ(primitive_root(2), Cyclotomic(-1));
  const Cyclotomic z = primitive_root(4);
  EXPECT_EQ(z * z, Cyclotomic(-1));
  EXPECT_FALSE(z.is_rational());
  for (int m = 1; m <= 12; ++m) {
    const Cyclotomic zm = primitive_root(m);
    EXPECT_EQ(zm.pow(m), Cyclotomic(1)) << m;
    for (int k = 1; k < m; ++k) EXPECT_NE(zm.pow(k), Cyclotomic(1)) << m << " " << k;
  }
}

TEST(Cyclotomic, ArithmeticExamples) {
  const Cyclotomic z4 = primitive_root(4), z3 = primitive_root(3);
  EXPECT_EQ(z4 * z4.pow(3), Cyclotomic(1));
  EXPECT_EQ((Cyclotomic(1) + z3) + (-z3), Cyclotomic(1));
  const Cyclotomic s = (Cyclotomic(1) + z3).inv();
  EXPECT_EQ(s * (Cyclotomic(1) + z3), Cyclotomic(1));
  // 1 + ζ_3 = -ζ_3², so its inverse is -ζ_3
  EXPECT_EQ(s, -z3);
  EXPECT_THROW(Cyclotomic(0).inv(), Error);
}

TEST(Cyclotomic, MixedOrdersEmbedIntoLcm) {
  const Cyclotomic z4 = primitive_root(4), z6 = primitive_root(6);
  const Cyclotomic p = z4 * z6;
  EXPECT_EQ(p.pow(12), Cyclotomic(1));
  EXPECT_LT(std::abs(as_complex(p) - std::polar(1.0, 2 * M_PI * (1.0 / 4 + 1.0 / 6))), 1e-12);
  // values in a subfield collapse back to their natural order
  EXPECT_TRUE((z4 * z4).is_rational());
}

TEST(Cyclotomic, RingOperationsAgreeWithComplexOracle) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5), ord(1, 12);
  auto rnd = [&] {
    const int m = ord(rng);
    RatPoly c;
    for (int k = 0; k < m; ++k) c.push_back(Rational(coef(rng), 1 + (coef(rng) & 3)));
    return Cyclotomic(m, c);
  };
  for (int it = 0; it < 200; ++it) {
    Cyclotomic a = rnd(), b = rnd();
    EXPECT_LT(std::abs(as_complex(a + b) - (as_complex(a) + as_complex(b))), 1e-9);
    EXPECT_LT(std::abs(as_complex(a * b) - as_complex(a) * as_complex(b)), 1e-8);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), Cyclotomic(1));
      EXPECT_LT(std::abs(as_complex(a.inv()) - 1.0 / as_complex(a)), 1e-6 * (1 + std::abs(1.0 / as_complex(a))));
    }
  }
}

TEST(Cyclotomic, ParseRoundTrip) {
  const Cyclotomic a = Cyclotomic::parse("1/2 - 3*z + z^2", 5);
  EXPECT_EQ(Cyclotomic::parse(a.to_string(), 5), a);
  EXPECT_THROW(Cyclotomic::parse("", 3), Error);
  EXPECT_THROW(Cyclotomic::parse("2*z^", 3), Error);
}

TEST(LinearAlgebra, KernelSolveInverse) {
  Matrix<Scalar> m = Matrix<Scalar>::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  EXPECT_EQ(rank(m), 2u);
  auto k = kernel(m);
  ASSERT_EQ(k.size(), 1u);
  Vec<Scalar> z = m * k[0];
  for (const auto& x : z) EXPECT_TRUE(x.is_zero());
  EXPECT_TRUE(determinant(m).is_zero());
  Matrix<Scalar> a = Matrix<Scalar>::from_rows({{2, 1}, {1, 1}}, 2);
  ASSERT_TRUE(inverse(a));
  EXPECT_EQ(a * *inverse(a), Matrix<Scalar>::identity(2));
  EXPECT_FALSE(inverse(m));
  auto x = solve(a, Vec<Scalar>{3, 2});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Scalar(1));
  EXPECT_EQ((*x)[1], Scalar(1));
}

TEST(Eigen, RationalEigenspacesOfDiagonalisableMatrix) {
  Matrix<Scalar> m = Matrix<Scalar>::from_rows({{2, 1}, {0, 3}}, 2);
  auto es = rational_eigenspaces(m);
  std::size_t total = 0;
  for (const auto& e : es) total += e.basis.size();
  EXPECT_EQ(total, 2u);
}
