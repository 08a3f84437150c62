#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "iara/coeff_algebra.hpp"
#include "iara/lie_algebra.hpp"

namespace iara {

// Traceless-type matrix Lie algebra over a graded coefficient algebra A, graded by the degrees of A.
// Basis of the degree-λ component, in index order:
//   e_ij ⊗ b_q   (i ≠ j),
//   (e_ii - e_{i+1,i+1}) ⊗ b_q,
//   e_00 ⊗ b_q   only when A^λ ⊆ [A,A].
class MatrixAlgebra : public GradedLieAlgebra {
 public:
  // Entries of a homogeneous matrix: (row, col) -> B-coordinates of the A^λ entry.
  using Mat = std::map<std::pair<int, int>, Vec<Scalar>>;

  MatrixAlgebra(int n, std::vector<int> labels, CoeffAlgebraPtr coeff, std::string name)
      : n_(n), labels_(std::move(labels)), coeff_(std::move(coeff)), name_(std::move(name)) {
    if (n_ < 2) throw Error(ErrorCode::InvalidArgument, "matrix size must be at least 2");
    if (static_cast<int>(labels_.size()) != n_) throw Error(ErrorCode::InvalidArgument, "label count mismatch");
    b_ = coeff_->component_dim();
  }

  int n() const { return n_; }
  const std::vector<int>& labels() const { return labels_; }
  int index_of_label(int l) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[i] == l) return i;
    throw Error(ErrorCode::InvalidArgument, "no matrix index labelled " + std::to_string(l));
  }
  const CoeffAlgebraPtr& coeff() const { return coeff_; }

  int lattice_rank() const override { return coeff_->rank(); }
  std::string name() const override { return name_; }

  // A^λ ⊆ [A,A]; a component inside both [A,A] and Z(A) would put scalar matrices in the center.
  bool commutator_piece(const Degree& d) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = comm_.find(d);
      if (it != comm_.end()) return it->second;
    }
    auto rep = coeff_->commutator_center_split(Window(d.rank(), {d}));
    const auto& e = rep.entries.front();
    if (e.in_commutator && e.in_center)
      throw Error(ErrorCode::CenterNonzero, "A" + d.to_string() + " lies in [A,A] and in Z(A)");
    std::lock_guard<std::mutex> lock(mu_);
    comm_.emplace(d, e.in_commutator);
    return e.in_commutator;
  }

  std::size_t dim(const Degree& d) const override {
    std::size_t base = static_cast<std::size_t>(n_ * (n_ - 1) + (n_ - 1)) * b_;
    return base + (commutator_piece(d) ? b_ : 0);
  }

  BasisKey off_diagonal_key(const Degree& d, int i, int j, std::size_t q = 0) const {
    int jj = j < i ? j : j - 1;
    return {d, static_cast<std::uint32_t>((i * (n_ - 1) + jj) * b_ + q)};
  }
  BasisKey diagonal_key(const Degree& d, int i, std::size_t q = 0) const {
    return {d, static_cast<std::uint32_t>(n_ * (n_ - 1) * b_ + i * b_ + q)};
  }
  BasisKey trace_key(const Degree& d, std::size_t q = 0) const {
    return {d, static_cast<std::uint32_t>((n_ * (n_ - 1) + (n_ - 1)) * b_ + q)};
  }

  Mat to_matrix(const BasisKey& k) const {
    Mat m;
    const std::size_t q = k.idx % b_;
    const std::size_t slot = k.idx / b_;
    Vec<Scalar> v(b_, Scalar(0));
    v[q] = Scalar(1);
    const std::size_t off = static_cast<std::size_t>(n_ * (n_ - 1));
    if (slot < off) {
      int i = static_cast<int>(slot) / (n_ - 1);
      int jj = static_cast<int>(slot) % (n_ - 1);
      int j = jj < i ? jj : jj + 1;
      m[{i, j}] = v;
    } else if (slot < off + n_ - 1) {
      int i = static_cast<int>(slot - off);
      m[{i, i}] = v;
      Vec<Scalar> w = v;
      w[q] = Scalar(-1);
      m[{i + 1, i + 1}] = w;
    } else {
      m[{0, 0}] = v;
    }
    return m;
  }

  Mat to_matrix(const Element& x, const Degree& d) const {
    Mat m;
    for (const auto& [k, c] : x) {
      if (k.deg != d) throw Error(ErrorCode::NotHomogeneous, "matrix element is not homogeneous");
      for (auto& [pos, v] : to_matrix(k)) {
        auto& slot = m[pos];
        if (slot.empty()) slot.assign(b_, Scalar(0));
        for (std::size_t q = 0; q < b_; ++q) slot[q] += c * v[q];
      }
    }
    return m;
  }

  // Inverse of to_matrix; diagonal trace must vanish unless A^λ ⊆ [A,A].
  Element from_matrix(const Degree& d, const Mat& m) const {
    Element x;
    std::vector<Vec<Scalar>> diag(n_, Vec<Scalar>(b_, Scalar(0)));
    for (const auto& [pos, v] : m) {
      auto [i, j] = pos;
      if (i == j) {
        diag[i] = v;
        continue;
      }
      for (std::size_t q = 0; q < b_; ++q) add_to(x, off_diagonal_key(d, i, j, q), v[q]);
    }
    Vec<Scalar> tail(b_, Scalar(0));
    for (int i = n_ - 1; i >= 1; --i) {
      for (std::size_t q = 0; q < b_; ++q) tail[q] += diag[i][q];
      for (std::size_t q = 0; q < b_; ++q) add_to(x, diagonal_key(d, i - 1, q), -tail[q]);
    }
    Vec<Scalar> total = tail;
    for (std::size_t q = 0; q < b_; ++q) total[q] += diag[0][q];
    if (!is_zero_vec(total)) {
      if (!commutator_piece(d)) throw Error(ErrorCode::NotInSpan, "diagonal trace outside [A,A]");
      for (std::size_t q = 0; q < b_; ++q) add_to(x, trace_key(d, q), total[q]);
    }
    return x;
  }

  Element bracket_basis(const BasisKey& a, const BasisKey& b) const override {
    Mat x = to_matrix(a), y = to_matrix(b);
    Degree d = a.deg + b.deg;
    Mat r;
    auto accumulate = [&](const Mat& p, const Degree& dp, const Mat& q, const Degree& dq, const Scalar& sign) {
      for (const auto& [pp, u] : p)
        for (const auto& [qq, v] : q) {
          if (pp.second != qq.first) continue;
          CoeffElement prod =
              coeff_->mul(CoeffElement::homogeneous(dp, u), CoeffElement::homogeneous(dq, v));
          if (prod.is_zero()) continue;
          Vec<Scalar> w = prod.component(d, b_);
          auto& slot = r[{pp.first, qq.second}];
          if (slot.empty()) slot.assign(b_, Scalar(0));
          for (std::size_t k = 0; k < b_; ++k) slot[k] += sign * w[k];
        }
    };
    accumulate(x, a.deg, y, b.deg, Scalar(1));
    accumulate(y, b.deg, x, a.deg, Scalar(-1));
    return from_matrix(d, r);
  }

  // (a e_ij, b e_ks) = δ_is δ_jk ε(a,b).
  Scalar form_basis(const BasisKey& a, const BasisKey& b) const override {
    if (!(a.deg + b.deg).is_zero()) return Scalar(0);
    Mat x = to_matrix(a), y = to_matrix(b);
    Scalar s(0);
    for (const auto& [pp, u] : x) {
      auto it = y.find({pp.second, pp.first});
      if (it == y.end()) continue;
      s += coeff_->form_eps(CoeffElement::homogeneous(a.deg, u), CoeffElement::homogeneous(b.deg, it->second));
    }
    return s;
  }

  std::string label(const BasisKey& k) const override {
    const std::size_t q = k.idx % b_;
    const std::size_t slot = k.idx / b_;
    const std::size_t off = static_cast<std::size_t>(n_ * (n_ - 1));
    std::string s;
    auto lab = [&](int i) { return std::to_string(labels_[i]); };
    if (slot < off) {
      int i = static_cast<int>(slot) / (n_ - 1);
      int jj = static_cast<int>(slot) % (n_ - 1);
      int j = jj < i ? jj : jj + 1;
      s = "e[" + lab(i) + "," + lab(j) + "]";
    } else if (slot < off + n_ - 1) {
      int i = static_cast<int>(slot - off);
      s = "h[" + lab(i) + "," + lab(i + 1) + "]";
    } else {
      s = "e[" + lab(0) + "," + lab(0) + "]";
    }
    if (b_ > 1) s += "*b" + std::to_string(q);
    if (k.deg.rank() > 0 && !k.deg.is_zero()) s += "*z" + k.deg.to_string();
    return s;
  }

 private:
  int n_;
  std::vector<int> labels_;
  CoeffAlgebraPtr coeff_;
  std::string name_;
  std::size_t b_ = 1;
  mutable std::mutex mu_;
  mutable std::map<Degree, bool> comm_;
};

// g ⊕ V ⊕ V† with V = span{c_i} central, V† = span{d_i}, [d_i, x] = λ_i x for x of degree λ,
// [x,y] = [x,y]_g + Σ_i λ_i(x) (x,y) c_i and (c_i, d_j) = δ_ij.
// coords lists the lattice coordinates that the d_i read off.
class ExtendedAlgebra : public GradedLieAlgebra {
 public:
  ExtendedAlgebra(AlgebraPtr inner, std::vector<int> coords, std::string name)
      : inner_(std::move(inner)), coords_(std::move(coords)), name_(std::move(name)) {
    const int r = inner_->lattice_rank();
    for (int c : coords_)
      if (c < 0 || c >= r) throw Error(ErrorCode::InvalidArgument, "extension coordinate out of range");
    zero_dim_ = inner_->dim(Degree::zero(r));
  }

  const AlgebraPtr& inner() const { return inner_; }
  const std::vector<int>& coords() const { return coords_; }
  int extension_rank() const { return static_cast<int>(coords_.size()); }
  int lattice_rank() const override { return inner_->lattice_rank(); }
  std::string name() const override { return name_; }

  std::size_t dim(const Degree& d) const override {
    return inner_->dim(d) + (d.is_zero() ? 2 * coords_.size() : 0);
  }
  BasisKey c_key(int i) const {
    return {Degree::zero(lattice_rank()), static_cast<std::uint32_t>(zero_dim_ + i)};
  }
  BasisKey d_key(int i) const {
    return {Degree::zero(lattice_rank()), static_cast<std::uint32_t>(zero_dim_ + coords_.size() + i)};
  }
  bool is_inner(const BasisKey& k) const { return !k.deg.is_zero() || k.idx < zero_dim_; }
  bool is_c(const BasisKey& k) const {
    return k.deg.is_zero() && k.idx >= zero_dim_ && k.idx < zero_dim_ + coords_.size();
  }
  bool is_d(const BasisKey& k) const { return k.deg.is_zero() && k.idx >= zero_dim_ + coords_.size(); }
  int extra_index(const BasisKey& k) const {
    return static_cast<int>(is_c(k) ? k.idx - zero_dim_ : k.idx - zero_dim_ - coords_.size());
  }
  int lambda(const Degree& d, int i) const { return d[coords_[i]]; }

  Element bracket_basis(const BasisKey& a, const BasisKey& b) const override {
    if (is_c(a) || is_c(b)) return {};
    if (is_d(a) && is_d(b)) return {};
    if (is_d(a)) return scaled(basis_element(b), Scalar(lambda(b.deg, extra_index(a))));
    if (is_d(b)) return scaled(basis_element(a), Scalar(-lambda(a.deg, extra_index(b))));
    Element r = inner_->bracket_basis(a, b);
    if ((a.deg + b.deg).is_zero()) {
      Scalar f = inner_->form_basis(a, b);
      if (!f.is_zero())
        for (int i = 0; i < extension_rank(); ++i) add_to(r, c_key(i), Scalar(lambda(a.deg, i)) * f);
    }
    return r;
  }

  Scalar form_basis(const BasisKey& a, const BasisKey& b) const override {
    if (is_inner(a) && is_inner(b)) return inner_->form_basis(a, b);
    if (is_c(a) && is_d(b)) return Scalar(extra_index(a) == extra_index(b) ? 1 : 0);
    if (is_d(a) && is_c(b)) return Scalar(extra_index(a) == extra_index(b) ? 1 : 0);
    return Scalar(0);
  }

  std::string label(const BasisKey& k) const override {
    if (is_c(k)) return "c" + std::to_string(extra_index(k) + 1);
    if (is_d(k)) return "d" + std::to_string(extra_index(k) + 1);
    return inner_->label(k);
  }

 private:
  AlgebraPtr inner_;
  std::vector<int> coords_;
  std::string name_;
  std::size_t zero_dim_ = 0;
};

// Subalgebra spanned, degree by degree, by supplied elements of a parent algebra.
class Subalgebra : public GradedLieAlgebra {
 public:
  using BasisFn = std::function<std::vector<Element>(const Degree&)>;

  Subalgebra(AlgebraPtr parent, BasisFn fn, std::string name)
      : parent_(std::move(parent)), fn_(std::move(fn)), name_(std::move(name)) {}

  const AlgebraPtr& parent() const { return parent_; }
  int lattice_rank() const override { return parent_->lattice_rank(); }
  std::string name() const override { return name_; }
  std::size_t dim(const Degree& d) const override { return component(d).size(); }

  const SpanExpresser& component(const Degree& d) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = comps_.find(d);
      if (it != comps_.end()) return it->second;
    }
    auto vs = fn_(d);
    for (const auto& v : vs)
      for (const auto& [k, c] : v)
        if (k.deg != d) throw Error(ErrorCode::NotHomogeneous, "subalgebra basis vector leaves its degree");
    SpanExpresser ex(std::move(vs));
    std::lock_guard<std::mutex> lock(mu_);
    return comps_.emplace(d, std::move(ex)).first->second;
  }

  Element embed(const Element& x) const {
    Element r;
    for (const auto& [k, c] : x) axpy(r, c, component(k.deg).basis()[k.idx]);
    return r;
  }
  // Coordinates of a parent element lying in the subalgebra.
  Element restrict(const Element& x) const {
    std::map<Degree, Element> parts;
    for (const auto& [k, c] : x) parts[k.deg].emplace(k, c);
    Element r;
    for (const auto& [d, part] : parts) {
      auto c = component(d).try_coords(part);
      if (!c) throw Error(ErrorCode::NotInSpan, "element leaves the subalgebra at degree " + d.to_string());
      for (std::size_t i = 0; i < c->size(); ++i) add_to(r, {d, static_cast<std::uint32_t>(i)}, (*c)[i]);
    }
    return r;
  }
  bool contains(const Element& x) const {
    try {
      restrict(x);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  Element bracket_basis(const BasisKey& a, const BasisKey& b) const override {
    return restrict(parent_->bracket(component(a.deg).basis()[a.idx], component(b.deg).basis()[b.idx]));
  }
  Scalar form_basis(const BasisKey& a, const BasisKey& b) const override {
    return parent_->form(component(a.deg).basis()[a.idx], component(b.deg).basis()[b.idx]);
  }
  std::string label(const BasisKey& k) const override {
    return "[" + parent_->to_string(component(k.deg).basis()[k.idx]) + "]";
  }

 private:
  AlgebraPtr parent_;
  BasisFn fn_;
  std::string name_;
  mutable std::mutex mu_;
  mutable std::map<Degree, SpanExpresser> comps_;
};

}  // namespace iara
