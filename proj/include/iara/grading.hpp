#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iara/automorphism.hpp"
#include "iara/axioms.hpp"

namespace iara {

// A π_j image of a root vector of (g, T): a joint eigenvector for σ (value ζ^j) and for T⁰.
struct AdaptedVector {
  Element v;
  Root alpha;       // root of (g, T) it came from
  Root restricted;  // values of π(α) on the T⁰ basis
};

struct IsotropicPair {
  Element e, f;
  std::string route;
};

// The Z_m-grading of a toral pair induced by σ, with the induced action on T and on roots.
class Grading {
 public:
  Grading(PairPtr pair, AutPtr sigma) : pair_(std::move(pair)), sigma_(std::move(sigma)) {
    m_ = sigma_->order();
    zeta_ = primitive_root(m_);
    for (int j = 0; j < m_; ++j) zeta_pow_.push_back(zeta_.pow(j));
    compute_sigma_on_T();
  }

  const ToralPair& pair() const { return *pair_; }
  const PairPtr& pair_ptr() const { return pair_; }
  const Automorphism& sigma() const { return *sigma_; }
  const AutPtr& sigma_ptr() const { return sigma_; }
  int m() const { return m_; }
  const Scalar& zeta() const { return zeta_; }
  Scalar zeta_power(long k) const { return zeta_pow_[static_cast<std::size_t>(((k % m_) + m_) % m_)]; }
  int mod(int j) const { return ((j % m_) + m_) % m_; }
  bool stabilizes_T() const { return s_inv_t_.has_value(); }

  // π_j = (1/m) Σ_i ζ^{-ji} σ^i.
  Element project(const Element& x, int j) const {
    Element acc, cur = x;
    for (int i = 0; i < m_; ++i) {
      axpy(acc, zeta_power(-static_cast<long>(j) * i), cur);
      if (i + 1 < m_) cur = sigma_->apply(cur);
    }
    return scaled(acc, Scalar(Rational(1, m_)));
  }

  // σ(α) = α ∘ σ^{-1}.
  Root act(const Root& a) const {
    if (!s_inv_t_) throw Error(ErrorCode::AxiomFails, "sigma does not stabilize T");
    return Root{*s_inv_t_ * a.c};
  }
  Root act_power(Root a, int i) const {
    i = mod(i);
    for (int s = 0; s < i; ++s) a = act(a);
    return a;
  }
  // π(α) = (1/m) Σ σ^i(α), as a functional on T.
  Root restricted_root(const Root& a) const {
    Root acc = pair_->zero_root(), cur = a;
    for (int i = 0; i < m_; ++i) {
      acc = acc + cur;
      cur = act(cur);
    }
    return acc.scaled(Scalar(Rational(1, m_)));
  }
  int orbit_length(const Root& a) const {
    Root cur = act(a);
    int l = 1;
    while (cur != a) {
      cur = act(cur);
      ++l;
      if (l > m_) throw Error(ErrorCode::AxiomFails, "root orbit longer than the period");
    }
    return l;
  }
  std::vector<Root> orbit(const Root& a) const {
    std::vector<Root> out{a};
    for (Root cur = act(a); cur != a; cur = act(cur)) {
      out.push_back(cur);
      if (static_cast<int>(out.size()) > m_) throw Error(ErrorCode::AxiomFails, "root orbit longer than the period");
    }
    return out;
  }
  Root orbit_rep(const Root& a) const {
    auto o = orbit(a);
    return *std::min_element(o.begin(), o.end());
  }
  std::vector<Root> orbit_reps() const {
    std::set<Root> reps;
    for (const auto& a : pair_->roots()) reps.insert(orbit_rep(a));
    return {reps.begin(), reps.end()};
  }

  // x̄_j = Σ_{i<m/ℓ} ζ^{-jiℓ} σ^{iℓ}(x) for x ∈ g_α.
  Element xbar(const Root& a, const Element& x, int j) const {
    if (!x.empty() && pair_->root_of(x) != a) throw Error(ErrorCode::RootMismatch, "vector is not in g_a");
    const int l = orbit_length(a);
    Element acc, cur = x;
    for (int i = 0; i < m_ / l; ++i) {
      axpy(acc, zeta_power(-static_cast<long>(j) * i * l), cur);
      cur = sigma_->power(cur, l);
    }
    return acc;
  }

  // Basis of T^j = π_j(T).
  const std::vector<Element>& T_component(int j) const {
    j = mod(j);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = tj_.find(j);
      if (it != tj_.end()) return it->second;
    }
    std::vector<Element> imgs;
    for (const auto& t : pair_->toral()) imgs.push_back(project(t, j));
    auto basis = nonzero_independent(imgs);
    std::lock_guard<std::mutex> lock(mu_);
    return tj_.emplace(j, std::move(basis)).first->second;
  }
  const std::vector<Element>& T0() const { return T_component(0); }

  // Values of α on the T⁰ basis.
  Root restrict_to_T0(const Root& a) const {
    Root r;
    for (const auto& t : T0()) r.c.push_back(pair_->evaluate(a, t));
    return r;
  }

  // Basis of the degree-d part of g^j made of projected root vectors.
  const std::vector<AdaptedVector>& adapted(int j, const Degree& d) const {
    j = mod(j);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = adapted_.find({j, d});
      if (it != adapted_.end()) return it->second;
    }
    std::vector<AdaptedVector> cands;
    for (const auto& blk : pair_->component(d)) {
      Root pr = restrict_to_T0(blk.root);
      for (const auto& b : blk.basis) {
        Element y = project(b, j);
        if (!y.empty()) cands.push_back({std::move(y), blk.root, pr});
      }
    }
    std::vector<Element> els;
    for (const auto& c : cands) els.push_back(c.v);
    std::vector<AdaptedVector> out;
    if (!els.empty()) {
      ElementFrame f = ElementFrame::of(els);
      std::vector<Vec<Scalar>> vs;
      for (const auto& e : els) vs.push_back(f.vec(e));
      for (std::size_t i : independent_subset(vs)) out.push_back(cands[i]);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return adapted_.emplace(std::make_pair(j, d), std::move(out)).first->second;
  }
  std::vector<Element> component_basis(int j, const Degree& d) const {
    std::vector<Element> out;
    for (const auto& a : adapted(j, d)) out.push_back(a.v);
    return out;
  }
  // g^j_{π(0)} over the window.
  std::vector<Element> zero_weight_part(int j) const {
    std::vector<Element> out;
    for (const auto& d : pair_->window().degrees())
      for (const auto& a : adapted(j, d))
        if (a.restricted.is_zero()) out.push_back(a.v);
    return out;
  }

  // Automorphism property and A1-A3 on window basis vectors.
  std::vector<Verdict> verify_A1_A3() const {
    const auto& g = pair_->algebra();
    const std::string stamp = pair_->window().stamp();
    auto basis = g.basis(pair_->window());
    std::vector<Verdict> out;
    {
      Verdict v = make_verdict("Aut", true, "sigma[x,y] = [sigma x, sigma y] on window basis pairs", stamp);
      for (const auto& d : pair_->window().degrees()) {
        std::vector<Element> imgs;
        for (const auto& k : g.basis(d)) imgs.push_back(sigma_->image(k));
        if (independent_elements(imgs).size() != imgs.size()) {
          v.pass = false;
          v.detail = "sigma is singular at degree " + d.to_string();
          break;
        }
      }
      for (std::size_t i = 0; i < basis.size() && v.pass; ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const auto& a = basis[i];
          const auto& b = basis[j];
          Element lhs = sigma_->apply(g.bracket_basis(a, b));
          Element rhs = g.bracket(sigma_->image(a), sigma_->image(b));
          if (lhs != rhs) {
            v.pass = false;
            v.detail = "not a homomorphism on (" + g.label(a) + ", " + g.label(b) + ")";
            break;
          }
        }
      out.push_back(v);
    }
    {
      Verdict v = make_verdict("A1", true, "", stamp);
      // explicit iteration: power() reduces exponents mod m and would hide a wrong period
      std::vector<Element> cur, orig;
      for (const auto& k : basis) orig.push_back(basis_element(k));
      cur = orig;
      int period = 0;
      for (int d = 1; d <= m_; ++d) {
        for (auto& x : cur) x = sigma_->apply(x);
        if (period == 0 && m_ % d == 0 && cur == orig) period = d;
      }
      if (cur != orig) {
        v.pass = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (cur[i] != orig[i]) {
            v.detail = "sigma^" + std::to_string(m_) + " moves " + g.label(basis[i]);
            break;
          }
      } else {
        v.detail = "sigma^m = id with m=" + std::to_string(m_) + " (period " + std::to_string(period) + ")";
      }
      out.push_back(v);
    }
    {
      Verdict v = make_verdict("A2", stabilizes_T(), stabilizes_T() ? "sigma(T) = T" : a2_failure_, stamp);
      out.push_back(v);
    }
    {
      Verdict v = make_verdict("A3", true, "(sigma x, sigma y) = (x, y) on window basis pairs", stamp);
      for (std::size_t i = 0; i < basis.size() && v.pass; ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          if (!(basis[i].deg + basis[j].deg).is_zero()) continue;
          if (g.form(sigma_->image(basis[i]), sigma_->image(basis[j])) != g.form_basis(basis[i], basis[j])) {
            v.pass = false;
            v.detail = "form not preserved on (" + g.label(basis[i]) + ", " + g.label(basis[j]) + ")";
            break;
          }
        }
      out.push_back(v);
    }
    return out;
  }

  bool zero_root_is_abelian() const {
    const auto& g = pair_->algebra();
    auto g0 = pair_->root_space(pair_->zero_root());
    for (std::size_t i = 0; i < g0.size(); ++i)
      for (std::size_t j = i + 1; j < g0.size(); ++j)
        if (!g.bracket(g0[i], g0[j]).empty()) return false;
    return true;
  }

  // A4 directly, cross-checked against the root-level criteria A4' (always) and A4'' (m prime).
  Verdict verify_A4() const {
    const auto& g = pair_->algebra();
    const std::string stamp = pair_->window().stamp();
    bool a4 = true;
    std::string why;
    for (const auto& d : pair_->window().degrees()) {
      auto c = centralizer(g, T0(), component_basis(0, d));
      SpanExpresser g0(pair_->root_space_at(pair_->zero_root(), d));
      for (const auto& x : c)
        if (!g0.contains(x)) {
          a4 = false;
          why = "centralizer element " + g.to_string(x) + " outside g_0";
          break;
        }
      if (!a4) break;
    }
    bool a4p = true, a4pp = true;
    std::string whyp, whypp;
    for (const auto& [a, sp] : pair_->root_spaces()) {
      if (a.is_zero() || !restrict_to_T0(a).is_zero()) continue;
      a4pp = false;
      if (whypp.empty()) whypp = "pi(a) = 0 for a=" + a.to_string();
      const int l = orbit_length(a);
      SpanExpresser ex(sp);
      Matrix<Scalar> m(sp.size(), sp.size());
      for (std::size_t j = 0; j < sp.size(); ++j) {
        Vec<Scalar> c = ex.coords(sigma_->power(sp[j], l) - sp[j]);
        for (std::size_t i = 0; i < sp.size(); ++i) m(i, j) = c[i];
      }
      if (!kernel(m).empty()) {
        a4p = false;
        if (whyp.empty()) whyp = "sigma^l fixes a vector of g_a, a=" + a.to_string();
      }
    }
    const bool prime = is_prime(m_);
    Verdict v = make_verdict("A4", a4, "", stamp);
    v.detail = std::string(a4 ? "C(T0) in g0 lies in g_0" : why) + "; A4'=" + (a4p ? "holds" : "fails");
    if (prime) v.detail += std::string("; A4''=") + (a4pp ? "holds" : "fails");
    if (a4 != a4p || (prime && a4 != a4pp)) {
      v.pass = false;
      v.detail += "; equivalent forms disagree (" + (whyp.empty() ? whypp : whyp) + ")";
    }
    return v;
  }

  // If 0 != g^j_{π(0)} ⊆ g_0 then T^j != 0.
  Verdict verify_A5() const {
    const std::string stamp = pair_->window().stamp();
    std::string triggered;
    for (int j = 0; j < m_; ++j) {
      auto z = zero_weight_part(j);
      if (z.empty()) continue;
      bool inside = true;
      for (const auto& x : z) {
        bool found = false;
        for (const auto& d : degrees_of(x)) {
          SpanExpresser g0(pair_->root_space_at(pair_->zero_root(), d));
          found = g0.contains(x);
        }
        if (!found) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      triggered += (triggered.empty() ? "" : ",") + std::to_string(j);
      if (T_component(j).empty())
        return make_verdict("A5", false, "g^" + std::to_string(j) + "_pi(0) lies in g_0 but T^j = 0", stamp);
    }
    return make_verdict("A5", true,
                        triggered.empty() ? "no j with g^j_pi(0) inside g_0" : "T^j != 0 for j in {" + triggered + "}",
                        stamp);
  }

  // e ∈ g^j_{π(0)}, f ∈ g^{-j}_{π(0)} with [e,f] = 0 and (e,f) != 0.
  IsotropicPair find_isotropic_pair(int j) const {
    const auto& g = pair_->algebra();
    auto spaces = pair_->root_spaces();
    for (const auto& [a, sp] : spaces) {
      if (a.is_zero() || !restrict_to_T0(a).is_zero()) continue;
      auto it = spaces.find(-a);
      if (it == spaces.end()) continue;
      for (const auto& x : sp) {
        Element e = project(x, j);
        if (e.empty()) continue;
        auto w = ia2_witness_for(*pair_, a, xbar(a, x, j), it->second);
        if (!w) continue;
        Element f = project(w->f, -j);
        if (g.bracket(e, f).empty() && !g.form(e, f).is_zero()) return {e, f, "projected root vectors"};
      }
    }
    auto search = [&](const std::vector<Element>& es, const std::vector<Element>& fs, const char* route)
        -> std::optional<IsotropicPair> {
      for (const auto& e : es)
        for (const auto& f : fs)
          if (g.bracket(e, f).empty() && !g.form(e, f).is_zero()) return IsotropicPair{e, f, route};
      return std::nullopt;
    };
    if (zero_root_is_abelian()) {
      std::vector<Element> ep, fm;
      for (const auto& x : pair_->root_space(pair_->zero_root())) {
        Element a = project(x, j), b = project(x, -j);
        if (!a.empty()) ep.push_back(a);
        if (!b.empty()) fm.push_back(b);
      }
      if (auto r = search(ep, fm, "abelian g_0")) return *r;
    }
    if (auto r = search(T_component(j), T_component(-j), "T^j x T^-j")) return *r;
    throw Error(ErrorCode::NoWitness, "no isotropic pair in degree j=" + std::to_string(j));
  }

 private:
  static bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
      if (m % d == 0) return false;
    return true;
  }
  static std::vector<Element> nonzero_independent(const std::vector<Element>& xs) {
    std::vector<Element> nz;
    for (const auto& x : xs)
      if (!x.empty()) nz.push_back(x);
    return nz.empty() ? nz : independent_elements(nz);
  }

  void compute_sigma_on_T() {
    const auto& span = pair_->toral_span();
    const std::size_t k = pair_->toral_rank();
    Matrix<Scalar> s(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto c = span.try_coords(sigma_->apply(pair_->toral()[j]));
      if (!c) {
        a2_failure_ = "sigma moves " + pair_->algebra().to_string(pair_->toral()[j]) + " out of T";
        return;
      }
      for (std::size_t i = 0; i < k; ++i) s(i, j) = (*c)[i];
    }
    auto inv = inverse(s);
    if (!inv) {
      a2_failure_ = "sigma is singular on T";
      return;
    }
    s_inv_t_ = inv->transpose();
  }

  PairPtr pair_;
  AutPtr sigma_;
  int m_ = 1;
  Scalar zeta_;
  std::vector<Scalar> zeta_pow_;
  std::optional<Matrix<Scalar>> s_inv_t_;
  std::string a2_failure_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Element>> tj_;
  mutable std::map<std::pair<int, Degree>, std::vector<AdaptedVector>> adapted_;
};

using GradingPtr = std::shared_ptr<const Grading>;

// Eigenprojection onto g^j at degree d from kernels of σ - ζ^k, as a matrix in the component basis.
inline Matrix<Scalar> eigenprojection(const Grading& gr, int j, const Degree& d) {
  const auto& g = gr.pair().algebra();
  const std::size_t n = g.dim(d);
  Matrix<Scalar> s(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec<Scalar> col = g.dense(gr.sigma().image({d, static_cast<std::uint32_t>(c)}), d);
    for (std::size_t r = 0; r < n; ++r) s(r, c) = col[r];
  }
  std::vector<Vec<Scalar>> cols;
  std::vector<int> label;
  for (int k = 0; k < gr.m(); ++k) {
    for (auto& v : kernel(s - Matrix<Scalar>::identity(n).scaled(gr.zeta_power(k)))) {
      cols.push_back(std::move(v));
      label.push_back(k);
    }
  }
  if (cols.size() != n) throw Error(ErrorCode::NotDiagonalizable, "sigma is not diagonalizable at " + d.to_string());
  Matrix<Scalar> V = Matrix<Scalar>::from_columns(cols, n);
  auto Vinv = inverse(V);
  if (!Vinv) throw Error(ErrorCode::NotDiagonalizable, "eigenvectors are dependent");
  Matrix<Scalar> E(n, n);
  for (std::size_t i = 0; i < n; ++i) E(i, i) = Scalar(label[i] == gr.mod(j) ? 1 : 0);
  return V * E * *Vinv;
}

// π_j at degree d as a matrix, from the averaging formula.
inline Matrix<Scalar> formula_projection(const Grading& gr, int j, const Degree& d) {
  const auto& g = gr.pair().algebra();
  const std::size_t n = g.dim(d);
  Matrix<Scalar> p(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec<Scalar> col = g.dense(gr.project(basis_element({d, static_cast<std::uint32_t>(c)}), j), d);
    for (std::size_t r = 0; r < n; ++r) p(r, c) = col[r];
  }
  return p;
}

}  // namespace iara
