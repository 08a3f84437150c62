#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "iara/error.hpp"

namespace iara {

// Element of Z^r with small inline storage.
class Degree {
 public:
  static constexpr int kMaxRank = 8;

  Degree() = default;
  explicit Degree(int rank) : n_(static_cast<std::uint8_t>(rank)) {
    if (rank < 0 || rank > kMaxRank) throw Error(ErrorCode::InvalidArgument, "lattice rank out of range");
  }
  Degree(std::initializer_list<int> xs) : Degree(static_cast<int>(xs.size())) {
    int i = 0;
    for (int x : xs) v_[i++] = x;
  }
  explicit Degree(const std::vector<int>& xs) : Degree(static_cast<int>(xs.size())) {
    for (std::size_t i = 0; i < xs.size(); ++i) v_[i] = xs[i];
  }
  static Degree zero(int rank) { return Degree(rank); }
  static Degree unit(int rank, int i) {
    Degree d(rank);
    d.v_[i] = 1;
    return d;
  }

  int rank() const { return n_; }
  int operator[](int i) const { return v_[i]; }
  int& operator[](int i) { return v_[i]; }
  bool is_zero() const {
    for (int i = 0; i < n_; ++i)
      if (v_[i] != 0) return false;
    return true;
  }
  int max_abs() const {
    int m = 0;
    for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(v_[i]));
    return m;
  }
  std::vector<int> to_vector() const { return std::vector<int>(v_.begin(), v_.begin() + n_); }

  friend Degree operator+(const Degree& a, const Degree& b) {
    check_same(a, b);
    Degree r(a.n_);
    for (int i = 0; i < a.n_; ++i) r.v_[i] = a.v_[i] + b.v_[i];
    return r;
  }
  friend Degree operator-(const Degree& a, const Degree& b) {
    check_same(a, b);
    Degree r(a.n_);
    for (int i = 0; i < a.n_; ++i) r.v_[i] = a.v_[i] - b.v_[i];
    return r;
  }
  Degree operator-() const {
    Degree r(n_);
    for (int i = 0; i < n_; ++i) r.v_[i] = -v_[i];
    return r;
  }
  Degree scaled(int k) const {
    Degree r(n_);
    for (int i = 0; i < n_; ++i) r.v_[i] = k * v_[i];
    return r;
  }
  // (a, b) in Z^{ra + rb}.
  static Degree concat(const Degree& a, const Degree& b) {
    Degree r(a.n_ + b.n_);
    for (int i = 0; i < a.n_; ++i) r.v_[i] = a.v_[i];
    for (int i = 0; i < b.n_; ++i) r.v_[a.n_ + i] = b.v_[i];
    return r;
  }
  Degree slice(int from, int count) const {
    Degree r(count);
    for (int i = 0; i < count; ++i) r.v_[i] = v_[from + i];
    return r;
  }

  friend bool operator==(const Degree& a, const Degree& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.v_[i] != b.v_[i]) return false;
    return true;
  }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (int i = 0; i < a.n_; ++i)
      if (a.v_[i] != b.v_[i]) return a.v_[i] <=> b.v_[i];
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + ")";
  }

 private:
  static void check_same(const Degree& a, const Degree& b) {
    if (a.n_ != b.n_) throw Error(ErrorCode::InvalidArgument, "degree rank mismatch");
  }
  std::array<int, kMaxRank> v_{};
  std::uint8_t n_ = 0;
};

// Finite set of lattice degrees, kept sorted.
class Window {
 public:
  Window() : rank_(0), degrees_{Degree(0)} {}
  Window(int rank, std::vector<Degree> degrees) : rank_(rank), degrees_(std::move(degrees)) {
    for (const auto& d : degrees_)
      if (d.rank() != rank_) throw Error(ErrorCode::InvalidArgument, "window degree rank mismatch");
    std::sort(degrees_.begin(), degrees_.end());
    degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
  }
  // All degrees with every coordinate in [-n, n].
  static Window box(int rank, int n) {
    std::vector<Degree> ds;
    Degree d(rank);
    for (int i = 0; i < rank; ++i) d[i] = -n;
    while (true) {
      ds.push_back(d);
      int i = rank - 1;
      while (i >= 0 && d[i] == n) {
        d[i] = -n;
        --i;
      }
      if (i < 0) break;
      ++d[i];
    }
    return Window(rank, std::move(ds));
  }
  // Box with a separate bound per coordinate.
  static Window box(const std::vector<int>& bounds) {
    const int rank = static_cast<int>(bounds.size());
    if (rank == 0) return Window();
    std::vector<Degree> out;
    const Window cube = box(rank, *std::max_element(bounds.begin(), bounds.end()));
    for (const auto& d : cube.degrees()) {
      bool ok = true;
      for (int i = 0; i < rank; ++i) ok = ok && std::abs(d[i]) <= bounds[i];
      if (ok) out.push_back(d);
    }
    return Window(rank, std::move(out));
  }

  int rank() const { return rank_; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  bool contains(const Degree& d) const { return std::binary_search(degrees_.begin(), degrees_.end(), d); }
  bool is_symmetric() const {
    for (const auto& d : degrees_)
      if (!contains(-d)) return false;
    return true;
  }
  int bound() const {
    int b = 0;
    for (const auto& d : degrees_) b = std::max(b, d.max_abs());
    return b;
  }
  std::string stamp() const {
    if (rank_ == 0) return "W=finite";
    return "W=|lambda|<=" + std::to_string(bound()) + " rank " + std::to_string(rank_);
  }
  // Product window in Z^{ra + rb}.
  static Window product(const Window& a, const Window& b) {
    std::vector<Degree> ds;
    for (const auto& x : a.degrees_)
      for (const auto& y : b.degrees_) ds.push_back(Degree::concat(x, y));
    return Window(a.rank_ + b.rank_, std::move(ds));
  }

 private:
  int rank_;
  std::vector<Degree> degrees_;
};

}  // namespace iara
