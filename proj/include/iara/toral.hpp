#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iara/eigen.hpp"
#include "iara/lie_algebra.hpp"

namespace iara {

// Functional on T recorded by its values on the toral basis.
struct Root {
  std::vector<Scalar> c;

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const Root&, const Root&) = default;
  friend std::strong_ordering operator<=>(const Root& a, const Root& b) {
    if (a.c.size() != b.c.size()) return a.c.size() <=> b.c.size();
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if (auto r = a.c[i] <=> b.c[i]; r != 0) return r;
    return std::strong_ordering::equal;
  }
  friend Root operator+(Root a, const Root& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend Root operator-(Root a, const Root& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  Root operator-() const {
    Root r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  Root scaled(const Scalar& s) const {
    Root r = *this;
    for (auto& x : r.c) x *= s;
    return r;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ", ";
      s += c[i].to_string();
    }
    return s + ")";
  }
};

struct RootBlock {
  Root root;
  Degree deg;
  std::vector<Element> basis;
};

// (g, T) with T spanned by the given degree-zero elements; the decomposition is computed lazily per degree.
class ToralPair {
 public:
  ToralPair(AlgebraPtr alg, std::vector<Element> toral, Window window, std::string name = {})
      : alg_(std::move(alg)), toral_(std::move(toral)), window_(std::move(window)), name_(std::move(name)) {
    const Degree zero = Degree::zero(alg_->lattice_rank());
    if (window_.rank() != alg_->lattice_rank())
      throw Error(ErrorCode::InvalidArgument, "window rank does not match the algebra");
    for (const auto& t : toral_)
      for (const auto& [k, c] : t)
        if (k.deg != zero) throw Error(ErrorCode::NotToral, "toral element outside degree zero");
    if (independent_elements(toral_).size() != toral_.size())
      throw Error(ErrorCode::NotToral, "toral basis is linearly dependent");
    for (std::size_t i = 0; i < toral_.size(); ++i)
      for (std::size_t j = i + 1; j < toral_.size(); ++j)
        if (!alg_->bracket(toral_[i], toral_[j]).empty()) throw Error(ErrorCode::NotToral, "toral elements do not commute");
    const std::size_t k = toral_.size();
    gram_ = Matrix<Scalar>(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) gram_(i, j) = alg_->form(toral_[i], toral_[j]);
    gram_inv_ = inverse(gram_);
    toral_span_ = SpanExpresser(toral_);
  }

  const GradedLieAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const std::vector<Element>& toral() const { return toral_; }
  std::size_t toral_rank() const { return toral_.size(); }
  const Window& window() const { return window_; }
  const std::string& name() const { return name_; }
  const Matrix<Scalar>& toral_gram() const { return gram_; }
  bool form_nondegenerate_on_T() const { return gram_inv_.has_value(); }
  const SpanExpresser& toral_span() const { return toral_span_; }
  Root zero_root() const { return Root{std::vector<Scalar>(toral_.size(), Scalar(0))}; }

  // Joint eigenspaces of ad(T) on the degree-d component.
  const std::vector<RootBlock>& component(const Degree& d) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = comps_.find(d);
      if (it != comps_.end()) return it->second;
    }
    auto blocks = decompose(d);
    std::lock_guard<std::mutex> lock(mu_);
    return comps_.emplace(d, std::move(blocks)).first->second;
  }

  // Root spaces assembled over the window.
  std::map<Root, std::vector<Element>> root_spaces() const {
    std::map<Root, std::vector<Element>> out;
    for (const auto& d : window_.degrees())
      for (const auto& b : component(d)) {
        auto& v = out[b.root];
        v.insert(v.end(), b.basis.begin(), b.basis.end());
      }
    return out;
  }
  std::set<Root> roots() const {
    std::set<Root> out;
    for (const auto& d : window_.degrees())
      for (const auto& b : component(d)) out.insert(b.root);
    return out;
  }
  std::vector<Element> root_space(const Root& a) const {
    std::vector<Element> out;
    for (const auto& d : window_.degrees())
      for (const auto& b : component(d))
        if (b.root == a) out.insert(out.end(), b.basis.begin(), b.basis.end());
    return out;
  }
  // Root space of a root taken only at one degree (may leave the window).
  std::vector<Element> root_space_at(const Root& a, const Degree& d) const {
    for (const auto& b : component(d))
      if (b.root == a) return b.basis;
    return {};
  }

  // Coordinates of t_α in the toral basis: G^{-1} α.
  Vec<Scalar> representative_coords(const Root& a) const {
    if (!gram_inv_) throw Error(ErrorCode::DegenerateFormOnT, "form is degenerate on T");
    return *gram_inv_ * a.c;
  }
  Element representative(const Root& a) const { return toral_span_.combine(representative_coords(a)); }
  Scalar pair(const Root& a, const Root& b) const {
    Vec<Scalar> x = representative_coords(b);
    Scalar s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += a.c[i] * x[i];
    return s;
  }
  // Value of a root on an element of T.
  Scalar evaluate(const Root& a, const Element& t) const {
    Vec<Scalar> c = toral_span_.coords(t);
    Scalar s(0);
    for (std::size_t i = 0; i < c.size(); ++i) s += a.c[i] * c[i];
    return s;
  }
  // The root of a nonzero root vector, or RootMismatch.
  Root root_of(const Element& x) const {
    if (x.empty()) throw Error(ErrorCode::RootMismatch, "zero vector has no root");
    const BasisKey lead = x.begin()->first;
    Root r;
    for (const auto& t : toral_) {
      Element y = alg_->bracket(t, x);
      auto it = y.find(lead);
      Scalar v = it == y.end() ? Scalar(0) : it->second / x.begin()->second;
      if (y != scaled(x, v)) throw Error(ErrorCode::RootMismatch, "vector is not a joint eigenvector of ad(T)");
      r.c.push_back(v);
    }
    return r;
  }

 private:
  std::vector<RootBlock> decompose(const Degree& d) const {
    const GradedLieAlgebra& g = *alg_;
    const std::size_t n = g.dim(d);
    std::vector<Matrix<Scalar>> ads;
    for (const auto& t : toral_) {
      Matrix<Scalar> m(n, n);
      for (std::size_t j = 0; j < n; ++j) {
        Element y = g.bracket(t, basis_element({d, static_cast<std::uint32_t>(j)}));
        for (const auto& [k, c] : y) {
          if (k.deg != d) throw Error(ErrorCode::NotToral, "ad(t) does not preserve degree");
          m(k.idx, j) = c;
        }
      }
      ads.push_back(std::move(m));
    }
    std::map<Root, std::vector<Element>> grouped;
    bool diagonal = true;
    for (const auto& m : ads) diagonal = diagonal && m.is_diagonal();
    if (diagonal) {
      for (std::size_t j = 0; j < n; ++j) {
        Root r;
        for (const auto& m : ads) r.c.push_back(m(j, j));
        grouped[r].push_back(basis_element({d, static_cast<std::uint32_t>(j)}));
      }
    } else {
      // Refine a list of invariant subspaces one operator at a time.
      struct Piece {
        std::vector<Vec<Scalar>> basis;
        std::vector<Scalar> values;
      };
      std::vector<Piece> pieces;
      {
        Piece all;
        for (std::size_t j = 0; j < n; ++j) {
          Vec<Scalar> e(n, Scalar(0));
          e[j] = Scalar(1);
          all.basis.push_back(e);
        }
        if (n) pieces.push_back(std::move(all));
      }
      for (const auto& m : ads) {
        std::vector<Piece> next;
        for (const auto& p : pieces) {
          Expresser<Scalar> ex(p.basis, n);
          const std::size_t k = p.basis.size();
          Matrix<Scalar> restricted(k, k);
          for (std::size_t j = 0; j < k; ++j) {
            Vec<Scalar> img = ex.coords(m * p.basis[j]);
            for (std::size_t i = 0; i < k; ++i) restricted(i, j) = img[i];
          }
          for (const auto& es : rational_eigenspaces(restricted)) {
            Piece q;
            q.values = p.values;
            q.values.push_back(es.value);
            for (const auto& v : es.basis) {
              Vec<Scalar> w(n, Scalar(0));
              for (std::size_t i = 0; i < k; ++i)
                if (!v[i].is_zero())
                  for (std::size_t r = 0; r < n; ++r) w[r] += v[i] * p.basis[i][r];
              q.basis.push_back(std::move(w));
            }
            next.push_back(std::move(q));
          }
        }
        pieces = std::move(next);
      }
      for (const auto& p : pieces) {
        Root r{p.values};
        for (const auto& v : p.basis) grouped[r].push_back(GradedLieAlgebra::sparse(v, d));
      }
    }
    std::vector<RootBlock> out;
    for (auto& [r, b] : grouped) out.push_back({r, d, std::move(b)});
    return out;
  }

  AlgebraPtr alg_;
  std::vector<Element> toral_;
  Window window_;
  std::string name_;
  Matrix<Scalar> gram_;
  std::optional<Matrix<Scalar>> gram_inv_;
  SpanExpresser toral_span_;
  mutable std::mutex mu_;
  mutable std::map<Degree, std::vector<RootBlock>> comps_;
};

using PairPtr = std::shared_ptr<const ToralPair>;

// Joint kernel of ad(s), s ∈ S, inside span(W).
inline std::vector<Element> centralizer(const GradedLieAlgebra& g, const std::vector<Element>& S,
                                        const std::vector<Element>& W) {
  if (W.empty()) return {};
  std::vector<Element> images;
  ElementFrame frame;
  std::vector<std::vector<Element>> cols(W.size());
  for (std::size_t j = 0; j < W.size(); ++j)
    for (const auto& s : S) {
      Element y = g.bracket(s, W[j]);
      frame.include(y);
      cols[j].push_back(std::move(y));
    }
  const std::size_t rows = frame.keys.size() * S.size();
  Matrix<Scalar> m(rows, W.size());
  for (std::size_t j = 0; j < W.size(); ++j)
    for (std::size_t si = 0; si < S.size(); ++si) {
      Vec<Scalar> v = frame.vec(cols[j][si]);
      for (std::size_t r = 0; r < v.size(); ++r) m(si * frame.keys.size() + r, j) = v[r];
    }
  std::vector<Element> out;
  for (const auto& kv : kernel(m)) {
    Element x;
    for (std::size_t j = 0; j < W.size(); ++j) axpy(x, kv[j], W[j]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace iara
