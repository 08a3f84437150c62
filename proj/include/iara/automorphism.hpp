#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "iara/lie_builders.hpp"
#include "iara/toral.hpp"

namespace iara {

// Degree-preserving linear map given on basis vectors, with a claimed period m.
class Automorphism {
 public:
  virtual ~Automorphism() = default;
  virtual int order() const = 0;
  virtual std::string name() const = 0;

  const Element& image(const BasisKey& k) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(k);
      if (it != cache_.end()) return it->second;
    }
    Element y = compute(k);
    for (const auto& [kk, c] : y)
      if (kk.deg != k.deg) throw Error(ErrorCode::AxiomFails, "automorphism does not preserve degrees");
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(k, std::move(y)).first->second;
  }
  Element apply(const Element& x) const {
    Element r;
    for (const auto& [k, c] : x) axpy(r, c, image(k));
    return r;
  }
  Element power(Element x, int i) const {
    const int m = order();
    i = ((i % m) + m) % m;
    for (int s = 0; s < i; ++s) x = apply(x);
    return x;
  }
  Scalar zeta() const { return primitive_root(order()); }

 protected:
  virtual Element compute(const BasisKey& k) const = 0;

 private:
  mutable std::mutex mu_;
  mutable std::map<BasisKey, Element> cache_;
};

using AutPtr = std::shared_ptr<const Automorphism>;

class FunctionAutomorphism : public Automorphism {
 public:
  using Fn = std::function<Element(const BasisKey&)>;
  FunctionAutomorphism(int order, std::string name, Fn fn) : m_(order), name_(std::move(name)), fn_(std::move(fn)) {
    if (m_ < 1) throw Error(ErrorCode::InvalidArgument, "automorphism order must be positive");
  }
  int order() const override { return m_; }
  std::string name() const override { return name_; }

 protected:
  Element compute(const BasisKey& k) const override { return fn_(k); }

 private:
  int m_;
  std::string name_;
  Fn fn_;
};

inline AutPtr identity_automorphism() {
  return std::make_shared<FunctionAutomorphism>(1, "identity", [](const BasisKey& k) { return basis_element(k); });
}

// Exact matrix on the degree-zero basis of a finite-dimensional algebra (columns are images).
inline AutPtr matrix_automorphism(const Matrix<Scalar>& m, int order, std::string name) {
  return std::make_shared<FunctionAutomorphism>(order, std::move(name), [m](const BasisKey& k) {
    if (!k.deg.is_zero()) throw Error(ErrorCode::InvalidArgument, "matrix automorphism is finite-dimensional");
    if (k.idx >= m.cols()) throw Error(ErrorCode::InvalidArgument, "matrix automorphism size mismatch");
    return GradedLieAlgebra::sparse(m.column(k.idx), k.deg);
  });
}

namespace detail {

inline const ExtendedAlgebra* as_extended(const GradedLieAlgebra& g) { return dynamic_cast<const ExtendedAlgebra*>(&g); }

// Apply a matrix-level map to the matrix part and the identity to V ⊕ V†.
template <class EntryMap>
AutPtr matrix_level(const ToralPair& p, int order, std::string name, EntryMap f) {
  const MatrixAlgebra* m = underlying_matrix_algebra(p.algebra());
  if (!m) throw Error(ErrorCode::InvalidArgument, name + " needs a matrix algebra");
  const ExtendedAlgebra* ext = as_extended(p.algebra());
  AlgebraPtr keep = p.algebra_ptr();
  return std::make_shared<FunctionAutomorphism>(order, name, [m, ext, keep, f](const BasisKey& k) {
    if (ext && !ext->is_inner(k)) return basis_element(k);
    MatrixAlgebra::Mat out;
    for (const auto& [pos, v] : m->to_matrix(k)) {
      auto [pos2, w] = f(*m, k.deg, pos, v);
      auto& slot = out[pos2];
      if (slot.empty()) slot.assign(w.size(), Scalar(0));
      for (std::size_t q = 0; q < w.size(); ++q) slot[q] += w[q];
    }
    return m->from_matrix(k.deg, out);
  });
}

}  // namespace detail

// σ(a e_ij) = -ā e_{-j,-i}: minus the transpose about the anti-diagonal composed with the bar involution.
inline AutPtr involution_automorphism(const ToralPair& p) {
  return detail::matrix_level(
      p, 2, "involution",
      [](const MatrixAlgebra& m, const Degree& d, std::pair<int, int> pos, const Vec<Scalar>& v) {
        const int n = m.n();
        CoeffElement a = m.coeff()->bar(CoeffElement::homogeneous(d, v));
        Vec<Scalar> w = a.component(d, v.size());
        for (auto& x : w) x = -x;
        return std::make_pair(std::make_pair(n - 1 - pos.second, n - 1 - pos.first), w);
      });
}

// Ad(diag(ζ^{k_0}, ..., ζ^{k_{n-1}})) with ζ a primitive m-th root of unity.
inline AutPtr inner_diagonal_automorphism(const ToralPair& p, std::vector<int> exps, int m) {
  const Scalar z = primitive_root(m);
  std::string nm = "inner_diagonal(";
  for (std::size_t i = 0; i < exps.size(); ++i) nm += (i ? "," : "") + std::to_string(exps[i]);
  nm += ";m=" + std::to_string(m) + ")";
  const MatrixAlgebra* mat = underlying_matrix_algebra(p.algebra());
  if (!mat || static_cast<int>(exps.size()) != mat->n())
    throw Error(ErrorCode::InvalidArgument, "inner_diagonal needs one exponent per matrix index");
  return detail::matrix_level(
      p, m, nm, [exps, z](const MatrixAlgebra&, const Degree&, std::pair<int, int> pos, const Vec<Scalar>& v) {
        Scalar s = z.pow(exps[pos.first] - exps[pos.second]);
        Vec<Scalar> w = v;
        for (auto& x : w) x *= s;
        return std::make_pair(pos, w);
      });
}

// x -> c x, an automorphism only when c = 1; used to exercise the axiom checkers.
inline AutPtr scaling_map(const Scalar& c, int claimed_order) {
  return std::make_shared<FunctionAutomorphism>(claimed_order, "scale(" + c.to_string() + ")",
                                                [c](const BasisKey& k) { return scaled(basis_element(k), c); });
}

}  // namespace iara
