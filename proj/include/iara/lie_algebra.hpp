#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "iara/cyclotomic.hpp"
#include "iara/lattice.hpp"
#include "iara/linalg.hpp"

namespace iara {

struct BasisKey {
  Degree deg;
  std::uint32_t idx = 0;
  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
    if (auto c = a.deg <=> b.deg; c != 0) return c;
    return a.idx <=> b.idx;
  }
};

// Sparse linear combination of basis vectors; zero coefficients are never stored.
using Element = std::map<BasisKey, Scalar>;

inline void add_to(Element& x, const BasisKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}
// y += c * x
inline void axpy(Element& y, const Scalar& c, const Element& x) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : x) add_to(y, k, c * v);
}
inline Element scaled(const Element& x, const Scalar& c) {
  Element r;
  axpy(r, c, x);
  return r;
}
inline Element operator+(Element a, const Element& b) {
  axpy(a, Scalar(1), b);
  return a;
}
inline Element operator-(Element a, const Element& b) {
  axpy(a, Scalar(-1), b);
  return a;
}
inline Element basis_element(const BasisKey& k) { return Element{{k, Scalar(1)}}; }
inline bool is_zero(const Element& x) { return x.empty(); }

// Degrees that occur in x.
inline std::set<Degree> degrees_of(const Element& x) {
  std::set<Degree> out;
  for (const auto& [k, v] : x) out.insert(k.deg);
  return out;
}

// Lie algebra graded by Z^r with finite-dimensional components, given through basis brackets.
class GradedLieAlgebra {
 public:
  virtual ~GradedLieAlgebra() = default;
  virtual int lattice_rank() const = 0;
  virtual std::size_t dim(const Degree& d) const = 0;
  virtual Element bracket_basis(const BasisKey& a, const BasisKey& b) const = 0;
  virtual Scalar form_basis(const BasisKey& a, const BasisKey& b) const = 0;
  virtual std::string label(const BasisKey& k) const {
    return "b" + std::to_string(k.idx) + (k.deg.rank() ? k.deg.to_string() : "");
  }
  virtual std::string name() const = 0;

  std::vector<BasisKey> basis(const Degree& d) const {
    std::vector<BasisKey> out;
    const std::size_t n = dim(d);
    for (std::size_t i = 0; i < n; ++i) out.push_back({d, static_cast<std::uint32_t>(i)});
    return out;
  }
  std::vector<BasisKey> basis(const Window& w) const {
    std::vector<BasisKey> out;
    for (const auto& d : w.degrees())
      for (const auto& k : basis(d)) out.push_back(k);
    return out;
  }

  Element bracket(const Element& x, const Element& y) const {
    Element r;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) axpy(r, ca * cb, bracket_basis(a, b));
    return r;
  }
  Scalar form(const Element& x, const Element& y) const {
    Scalar s(0);
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) {
        if (!(a.deg + b.deg).is_zero()) continue;
        Scalar f = form_basis(a, b);
        if (!f.is_zero()) s += ca * cb * f;
      }
    return s;
  }

  // Coordinates of a single-degree element as a dense vector of length dim(d).
  Vec<Scalar> dense(const Element& x, const Degree& d) const {
    Vec<Scalar> v(dim(d), Scalar(0));
    for (const auto& [k, c] : x) {
      if (k.deg != d) throw Error(ErrorCode::NotHomogeneous, "element has a component outside degree " + d.to_string());
      v[k.idx] = c;
    }
    return v;
  }
  static Element sparse(const Vec<Scalar>& v, const Degree& d) {
    Element x;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) x.emplace(BasisKey{d, static_cast<std::uint32_t>(i)}, v[i]);
    return x;
  }

  std::string to_string(const Element& x) const {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : x) {
      if (!out.empty()) out += " + ";
      out += c.is_one() ? label(k) : "(" + c.to_string() + ")*" + label(k);
    }
    return out;
  }
};

using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

// Flattening of a list of elements onto the union of their supports.
struct ElementFrame {
  std::vector<BasisKey> keys;
  std::map<BasisKey, std::size_t> index;

  void include(const Element& x) {
    for (const auto& [k, c] : x)
      if (index.emplace(k, keys.size()).second) keys.push_back(k);
  }
  Vec<Scalar> vec(const Element& x) const {
    Vec<Scalar> v(keys.size(), Scalar(0));
    for (const auto& [k, c] : x) {
      auto it = index.find(k);
      if (it == index.end()) throw Error(ErrorCode::NotInSpan, "element outside frame");
      v[it->second] = c;
    }
    return v;
  }
  // Same as vec but reports false instead of throwing when x leaves the frame.
  bool try_vec(const Element& x, Vec<Scalar>& out) const {
    out.assign(keys.size(), Scalar(0));
    for (const auto& [k, c] : x) {
      auto it = index.find(k);
      if (it == index.end()) return false;
      out[it->second] = c;
    }
    return true;
  }
  Element element(const Vec<Scalar>& v) const {
    Element x;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) x.emplace(keys[i], v[i]);
    return x;
  }
  Matrix<Scalar> columns(const std::vector<Element>& xs) const {
    std::vector<Vec<Scalar>> cols;
    for (const auto& x : xs) cols.push_back(vec(x));
    return Matrix<Scalar>::from_columns(cols, keys.size());
  }
  static ElementFrame of(const std::vector<Element>& xs) {
    ElementFrame f;
    for (const auto& x : xs) f.include(x);
    return f;
  }
};

// Linearly independent subfamily, greedy in the given order.
inline std::vector<Element> independent_elements(const std::vector<Element>& xs) {
  ElementFrame f = ElementFrame::of(xs);
  std::vector<Vec<Scalar>> vs;
  for (const auto& x : xs) vs.push_back(f.vec(x));
  std::vector<Element> out;
  for (std::size_t i : independent_subset(vs)) out.push_back(xs[i]);
  return out;
}

// Expresses elements in a fixed basis of a subspace spanned by elements.
class SpanExpresser {
 public:
  SpanExpresser() = default;
  explicit SpanExpresser(std::vector<Element> basis) : basis_(std::move(basis)) {
    frame_ = ElementFrame::of(basis_);
    std::vector<Vec<Scalar>> vs;
    for (const auto& b : basis_) vs.push_back(frame_.vec(b));
    ex_ = Expresser<Scalar>(vs, frame_.keys.size());
  }
  const std::vector<Element>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::optional<Vec<Scalar>> try_coords(const Element& x) const {
    Vec<Scalar> v;
    if (!frame_.try_vec(x, v)) return std::nullopt;
    return ex_.try_coords(v);
  }
  Vec<Scalar> coords(const Element& x) const {
    auto c = try_coords(x);
    if (!c) throw Error(ErrorCode::NotInSpan, "element is not in the span");
    return *c;
  }
  bool contains(const Element& x) const { return try_coords(x).has_value(); }
  Element combine(const Vec<Scalar>& c) const {
    Element x;
    for (std::size_t i = 0; i < c.size(); ++i) axpy(x, c[i], basis_[i]);
    return x;
  }

 private:
  std::vector<Element> basis_;
  ElementFrame frame_;
  Expresser<Scalar> ex_;
};

}  // namespace iara
