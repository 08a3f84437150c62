#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "iara/linalg.hpp"

namespace iara {

// Minimal polynomial (monic, low degree first) from the first linear dependency among I, M, M^2, ...
inline std::vector<Scalar> minimal_polynomial(const Matrix<Scalar>& m) {
  const std::size_t n = m.rows();
  std::vector<Vec<Scalar>> powers;
  Matrix<Scalar> p = Matrix<Scalar>::identity(n);
  auto flat = [&](const Matrix<Scalar>& a) {
    Vec<Scalar> v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(a(i, j));
    return v;
  };
  for (std::size_t d = 0; d <= n; ++d) {
    Vec<Scalar> cur = flat(p);
    if (!powers.empty()) {
      Matrix<Scalar> a = Matrix<Scalar>::from_columns(powers, n * n);
      auto sol = solve(a, cur);
      if (sol) {
        std::vector<Scalar> poly(d + 1);
        for (std::size_t k = 0; k < d; ++k) poly[k] = -(*sol)[k];
        poly[d] = Scalar(1);
        return poly;
      }
    } else if (is_zero_vec(cur)) {
      return {Scalar(1)};
    }
    powers.push_back(std::move(cur));
    p = p * m;
  }
  throw Error(ErrorCode::NotToral, "minimal polynomial search exceeded dimension");
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  static const mpz_class kLimit("1000000000000");
  if (n > kLimit) throw Error(ErrorCode::NotToral, "eigenvalue search exceeds coefficient bound");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

// Distinct rational roots of a polynomial with rational coefficients (low degree first).
inline std::vector<Rational> rational_roots(const std::vector<Scalar>& poly) {
  RatPoly p;
  for (const auto& c : poly) {
    if (!c.is_rational()) throw Error(ErrorCode::NotToral, "eigenvalue extraction needs rational coefficients");
    p.push_back(c.rational());
  }
  trim_rat(p);
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, c.den());
  IntPoly z;
  for (const auto& c : p) z.push_back(c.num() * (l / c.den()));
  std::size_t shift = 0;
  while (shift < z.size() && z[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Rational(0));
  IntPoly q(z.begin() + shift, z.end());
  if (q.size() <= 1) return roots;
  auto eval = [&](const Rational& x) {
    Rational v(0);
    for (std::size_t k = q.size(); k-- > 0;) v = v * x + Rational(q[k]);
    return v;
  };
  std::set<Rational> found;
  for (const auto& u : detail::positive_divisors(q.front()))
    for (const auto& v : detail::positive_divisors(q.back()))
      for (int s : {1, -1}) {
        Rational x(mpz_class(s * u), v);
        if (!found.count(x) && eval(x).is_zero()) found.insert(x);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct Eigenspace {
  Scalar value;
  std::vector<Vec<Scalar>> basis;
};

// Eigenspaces of a matrix that must be diagonalizable with rational eigenvalues.
inline std::vector<Eigenspace> rational_eigenspaces(const Matrix<Scalar>& m) {
  const std::size_t n = m.rows();
  std::vector<Eigenspace> out;
  if (n == 0) return out;
  auto poly = minimal_polynomial(m);
  auto roots = rational_roots(poly);
  if (roots.size() + 1 != poly.size())
    throw Error(ErrorCode::NotToral, "minimal polynomial does not split with distinct rational roots");
  std::size_t total = 0;
  for (const auto& r : roots) {
    Matrix<Scalar> shifted = m - Matrix<Scalar>::identity(n).scaled(Scalar(r));
    Eigenspace e{Scalar(r), kernel(shifted)};
    total += e.basis.size();
    out.push_back(std::move(e));
  }
  if (total != n) throw Error(ErrorCode::NotToral, "operator is not diagonalizable");
  return out;
}

}  // namespace iara
