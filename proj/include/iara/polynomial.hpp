#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "iara/error.hpp"
#include "iara/rational.hpp"

namespace iara {

// Dense polynomials, index = degree, trailing zeros trimmed.
using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<Rational>;

template <class P>
inline void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim_rat(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int poly_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
inline IntPoly int_div_exact(IntPoly a, const IntPoly& b) {
  trim(a);
  if (b.empty() || b.back() != 1) throw Error(ErrorCode::InvalidArgument, "divisor must be monic");
  if (a.size() < b.size()) {
    if (a.empty()) return {};
    throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  }
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size() - 1;; --k) {
    mpz_class c = a[k];
    q[k - (b.size() - 1)] = c;
    if (c != 0)
      for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] -= c * b[i];
    if (k == b.size() - 1) break;
  }
  trim(a);
  if (!a.empty()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  trim(q);
  return q;
}

inline int euler_phi(int m) {
  int r = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

// Φ_m via (x^m - 1) / ∏_{d|m, d<m} Φ_d.
inline const IntPoly& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = int_div_exact(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(p)).first->second;
}

// Remainder of p modulo the monic integer polynomial f.
inline void reduce_mod(RatPoly& p, const IntPoly& f) {
  const std::size_t d = f.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k].is_zero()) continue;
    Rational c = p[k];
    for (std::size_t i = 0; i < d; ++i)
      if (f[i] != 0) p[k - d + i] -= c * Rational(f[i]);
    p[k] = Rational(0);
  }
  if (p.size() > d) p.resize(d);
}

inline RatPoly rat_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim_rat(r);
  return r;
}

inline RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim_rat(r);
  return r;
}

// Quotient and remainder over Q.
inline std::pair<RatPoly, RatPoly> rat_divmod(RatPoly a, RatPoly b) {
  trim_rat(a);
  trim_rat(b);
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1);
  Rational lead_inv = b.back().inv();
  for (std::size_t k = a.size() - 1;; --k) {
    Rational c = a[k] * lead_inv;
    q[k - (b.size() - 1)] = c;
    if (!c.is_zero())
      for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] -= c * b[i];
    if (k == b.size() - 1) break;
  }
  trim_rat(a);
  trim_rat(q);
  return {q, a};
}

// Returns s with s*a ≡ gcd (normalized to 1 when coprime) modulo f; throws if not coprime.
inline RatPoly rat_inverse_mod(const RatPoly& a, const RatPoly& f) {
  RatPoly r0 = f, r1 = a, s0, s1 = {Rational(1)};
  trim_rat(r1);
  if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  while (!r1.empty()) {
    auto [q, r] = rat_divmod(r0, r1);
    RatPoly s = rat_sub(s0, rat_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error(ErrorCode::DivisionByZero, "element not invertible modulo polynomial");
  Rational c = r0[0].inv();
  for (auto& x : s0) x *= c;
  return s0;
}

inline std::string int_poly_to_string(const IntPoly& p, const std::string& var = "x") {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] == 0) continue;
    mpz_class c = p[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = (c == 1 && k > 0);
    if (!unit) out += c.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace iara
