#pragma once

#include <cctype>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "iara/polynomial.hpp"
#include "iara/rational.hpp"

namespace iara {

// Element of Q(ζ_m) stored as coefficients of 1, ζ, ..., ζ^{φ(m)-1} modulo Φ_m.
// Rational values are always stored with order 1 so that mixed-order comparisons
// agree with the embedding of Q into every cyclotomic field.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_{Rational(0)} {}
  Cyclotomic(long n) : order_(1), c_{Rational(n)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& q) : order_(1), c_{q} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(int order, RatPoly coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
    reduce_mod(c_, cyclotomic_polynomial(order_));
    c_.resize(euler_phi(order_));
    canonicalize();
  }

  // ζ_m^k.
  static Cyclotomic zeta_power(int m, long k) {
    long e = ((k % m) + m) % m;
    RatPoly p(e + 1);
    p[e] = Rational(1);
    return Cyclotomic(m, std::move(p));
  }
  static Cyclotomic zeta(int m) { return zeta_power(m, 1); }

  int order() const { return order_; }
  const RatPoly& coeffs() const { return c_; }
  bool is_zero() const { return order_ == 1 && c_[0].is_zero(); }
  bool is_one() const { return order_ == 1 && c_[0].is_one(); }
  bool is_rational() const { return order_ == 1; }
  const Rational& rational() const {
    if (order_ != 1) throw Error(ErrorCode::InvalidArgument, "scalar is not rational");
    return c_[0];
  }

  // Coefficients of the image under ζ_m -> ζ_M^{M/m}; requires m | M.
  RatPoly coeffs_in(int M) const {
    if (M % order_ != 0) throw Error(ErrorCode::InvalidArgument, "embedding order must be a multiple");
    if (M == order_) return c_;
    const int step = M / order_;
    RatPoly p((c_.size() - 1) * step + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) p[k * step] = c_[k];
    reduce_mod(p, cyclotomic_polynomial(M));
    p.resize(euler_phi(M));
    return p;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == 1 && b.order_ == 1) return Cyclotomic(a.c_[0] + b.c_[0]);
    int M = std::lcm(a.order_, b.order_);
    RatPoly x = a.coeffs_in(M), y = b.coeffs_in(M);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return from_reduced(M, std::move(x));
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == 1 && b.order_ == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
    if (a.order_ == 1) return b.scaled(a.c_[0]);
    if (b.order_ == 1) return a.scaled(b.c_[0]);
    int M = std::lcm(a.order_, b.order_);
    RatPoly p = rat_mul(a.coeffs_in(M), b.coeffs_in(M));
    reduce_mod(p, cyclotomic_polynomial(M));
    p.resize(euler_phi(M));
    return from_reduced(M, std::move(p));
  }
  Cyclotomic inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero scalar");
    if (order_ == 1) return Cyclotomic(c_[0].inv());
    RatPoly a = c_;
    trim_rat(a);
    RatPoly s = rat_inverse_mod(a, to_rat(cyclotomic_polynomial(order_)));
    return Cyclotomic(order_, std::move(s));
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  Cyclotomic pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Cyclotomic result(1), base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    if (a.order_ == 1 || b.order_ == 1) return false;
    int M = std::lcm(a.order_, b.order_);
    return a.coeffs_in(M) == b.coeffs_in(M);
  }
  // Lexicographic on coefficients after embedding into the common order.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == 1 && b.order_ == 1) return a.c_[0] <=> b.c_[0];
    int M = std::lcm(a.order_, b.order_);
    RatPoly x = a.coeffs_in(M), y = b.coeffs_in(M);
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto c = x[i] <=> y[i];
      if (c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const Rational& c = c_[k];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational a = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (k == 0) {
        out += a.to_string();
        continue;
      }
      if (!a.is_one()) out += a.to_string() + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

  // Grammar: term (('+'|'-') term)*, term := [rational ['*']] ['z' ['^' int]].
  static Cyclotomic parse(std::string_view text, int order) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
    RatPoly acc;
    std::size_t i = 0;
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1;
        ++i;
      } else if (i != 0) {
        throw Error(ErrorCode::ParseError, "expected sign in '" + s + "'");
      }
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      Rational coef(1);
      if (j > i) coef = Rational::parse(s.substr(i, j - i));
      i = j;
      long power = 0;
      if (i < s.size() && s[i] == '*') ++i;
      if (i < s.size() && s[i] == 'z') {
        ++i;
        power = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::size_t k = i;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == i) throw Error(ErrorCode::ParseError, "missing exponent in '" + s + "'");
          power = std::stol(s.substr(i, k - i));
          i = k;
        }
      } else if (j == i && i < s.size() && s[i] != '+' && s[i] != '-') {
        throw Error(ErrorCode::ParseError, "unexpected character in '" + s + "'");
      }
      if (acc.size() <= static_cast<std::size_t>(power)) acc.resize(power + 1);
      acc[power] += sign > 0 ? coef : -coef;
    }
    return Cyclotomic(order, std::move(acc));
  }

 private:
  static Cyclotomic from_reduced(int M, RatPoly p) {
    Cyclotomic r;
    r.order_ = M;
    r.c_ = std::move(p);
    r.canonicalize();
    return r;
  }
  Cyclotomic scaled(const Rational& q) const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x *= q;
    r.canonicalize();
    return r;
  }
  void canonicalize() {
    if (order_ == 1) return;
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return;
    Rational c0 = c_.empty() ? Rational(0) : c_[0];
    order_ = 1;
    c_.assign(1, c0);
  }

  int order_;
  RatPoly c_;
};

using Scalar = Cyclotomic;

inline Cyclotomic primitive_root(int m) { return Cyclotomic::zeta(m); }
inline bool is_zero(const Cyclotomic& s) { return s.is_zero(); }
inline bool is_zero(const Rational& q) { return q.is_zero(); }

}  // namespace iara
