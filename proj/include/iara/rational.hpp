#pragma once

#include <gmpxx.h>

#include <compare>
#include <cctype>
#include <string>
#include <string_view>

#include "iara/error.hpp"

namespace iara {

// Exact rational backed by GMP; always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational parse(std::string_view s) {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw Error(ErrorCode::ParseError, "empty rational");
    auto slash = t.find('/');
    auto check_int = [&](const std::string& u) {
      std::size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
      if (i >= u.size()) return false;
      for (; i < u.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
      return true;
    };
    auto to_z = [&](std::string u) {
      if (!check_int(u)) throw Error(ErrorCode::ParseError, "bad integer '" + u + "'");
      if (u[0] == '+') u = u.substr(1);
      return mpz_class(u, 10);
    };
    if (slash == std::string::npos) return Rational(to_z(t));
    return Rational(to_z(t.substr(0, slash)), to_z(t.substr(slash + 1)));
  }

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational normalized() const { return Rational(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace iara
