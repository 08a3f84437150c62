#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iara/toral.hpp"
#include "iara/verdict.hpp"

namespace iara {

struct Ia2Witness {
  Element e, f, bracket;
  Scalar pairing;
};

// f in span(minus) with 0 != [e,f] ∈ T, if any. For IARA pairs [e,f] ∈ T forces [e,f] = (e,f) t_α,
// so the search is the kernel of f -> [e,f] - (e,f) t_α intersected with (e,f) != 0.
inline std::optional<Ia2Witness> ia2_witness_for(const ToralPair& p, const Root& a, const Element& e,
                                                 const std::vector<Element>& minus) {
  const auto& g = p.algebra();
  const Element ta = p.representative(a);
  std::vector<Element> P;
  std::vector<Scalar> Q;
  for (const auto& y : minus) {
    Scalar q = g.form(e, y);
    Element br = g.bracket(e, y);
    if (!q.is_zero() && br == scaled(ta, q)) return Ia2Witness{e, y, br, q};
    P.push_back(br - scaled(ta, q));
    Q.push_back(q);
  }
  if (minus.empty()) return std::nullopt;
  ElementFrame frame = ElementFrame::of(P);
  Matrix<Scalar> m = frame.columns(P);
  for (const auto& v : kernel(m)) {
    Scalar q(0);
    for (std::size_t j = 0; j < v.size(); ++j) q += v[j] * Q[j];
    if (q.is_zero()) continue;
    Element f;
    for (std::size_t j = 0; j < v.size(); ++j) axpy(f, v[j], minus[j]);
    return Ia2Witness{e, f, g.bracket(e, f), q};
  }
  return std::nullopt;
}

inline std::string describe_witness(const GradedLieAlgebra& g, const Root& a, const Ia2Witness& w) {
  return a.to_string() + ": e=" + g.to_string(w.e) + " f=" + g.to_string(w.f) + " [e,f]=" + g.to_string(w.bracket);
}

// Nondegeneracy on T and on every pairing g_α × g_{-α}, plus orthogonality of the other pairings.
inline Verdict check_IA1(const ToralPair& p) {
  const std::string stamp = p.window().stamp();
  if (!p.form_nondegenerate_on_T()) return make_verdict("IA1", false, "form degenerate on T", stamp);
  const auto& g = p.algebra();
  auto spaces = p.root_spaces();
  std::size_t pairings = 0;
  for (const auto& [a, sp] : spaces) {
    auto it = spaces.find(-a);
    if (it == spaces.end()) return make_verdict("IA1", false, "root " + a.to_string() + " has no opposite root", stamp);
    const auto& mi = it->second;
    if (mi.size() != sp.size())
      return make_verdict("IA1", false, "dim g_a != dim g_-a at " + a.to_string(), stamp);
    Matrix<Scalar> gm(sp.size(), mi.size());
    for (std::size_t i = 0; i < sp.size(); ++i)
      for (std::size_t j = 0; j < mi.size(); ++j) gm(i, j) = g.form(sp[i], mi[j]);
    if (rank(gm) != sp.size())
      return make_verdict("IA1", false, "pairing degenerate on g_a x g_-a at " + a.to_string(), stamp);
    ++pairings;
  }
  // Orthogonality (g_α, g_β) = 0 for α + β != 0, on pairs whose degrees could pair.
  const auto blocks_window = [&]() {
    std::vector<const RootBlock*> bs;
    for (const auto& d : p.window().degrees())
      for (const auto& b : p.component(d)) bs.push_back(&b);
    return bs;
  }();
  for (const auto* x : blocks_window)
    for (const auto* y : blocks_window) {
      if (!(x->deg + y->deg).is_zero() || (x->root + y->root).is_zero()) continue;
      for (const auto& u : x->basis)
        for (const auto& v : y->basis)
          if (!g.form(u, v).is_zero())
            return make_verdict("IA1", false,
                                "(g_a, g_b) != 0 for a=" + x->root.to_string() + " b=" + y->root.to_string(), stamp);
    }
  return make_verdict("IA1", true,
                      "T nondegenerate (rank " + std::to_string(p.toral_rank()) + "), " + std::to_string(pairings) +
                          " root pairings nondegenerate",
                      stamp);
}

// Search candidates in g_α: basis vectors, then b_i + b_j and b_i - b_j.
inline std::vector<Element> ia2_candidates(const std::vector<Element>& sp) {
  std::vector<Element> out = sp;
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = i + 1; j < sp.size(); ++j) {
      out.push_back(sp[i] + sp[j]);
      out.push_back(sp[i] - sp[j]);
    }
  return out;
}

inline Verdict check_IA2(const ToralPair& p) {
  Verdict v;
  v.name = "IA2";
  v.stamp = p.window().stamp();
  const auto& g = p.algebra();
  auto spaces = p.root_spaces();
  std::size_t count = 0;
  for (const auto& [a, sp] : spaces) {
    if (a.is_zero()) continue;
    auto it = spaces.find(-a);
    if (it == spaces.end()) {
      v.detail = "no opposite root for " + a.to_string();
      return v;
    }
    std::optional<Ia2Witness> w;
    for (const auto& e : ia2_candidates(sp)) {
      w = ia2_witness_for(p, a, e, it->second);
      if (w) break;
    }
    if (!w) {
      v.conclusive = false;
      v.detail = "no witness among searched vectors of g_a for a=" + a.to_string();
      return v;
    }
    if (!p.toral_span().contains(w->bracket) || w->bracket.empty() ||
        w->bracket != scaled(p.representative(a), w->pairing)) {
      v.detail = "witness bracket not equal to (e,f)t_a at " + a.to_string();
      return v;
    }
    v.witnesses.push_back(describe_witness(g, a, *w));
    ++count;
  }
  v.pass = true;
  v.detail = std::to_string(count) + " nonzero roots with witnesses [e,f]=(e,f)t_a";
  return v;
}

namespace detail {

// Words of length dim in the given matrices all vanish.
inline bool generates_nilpotent(const std::vector<Matrix<Scalar>>& gens, std::size_t n) {
  auto flat = [n](const Matrix<Scalar>& m) {
    Vec<Scalar> v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(m(i, j));
    return v;
  };
  std::vector<Matrix<Scalar>> level;
  for (const auto& m : gens)
    if (!m.is_zero_matrix()) level.push_back(m);
  for (std::size_t step = 1; step < n && !level.empty(); ++step) {
    std::vector<Matrix<Scalar>> next;
    for (const auto& w : level)
      for (const auto& m : gens) {
        Matrix<Scalar> prod = w * m;
        if (!prod.is_zero_matrix()) next.push_back(std::move(prod));
      }
    std::vector<Vec<Scalar>> vs;
    for (const auto& m : next) vs.push_back(flat(m));
    std::vector<Matrix<Scalar>> reduced;
    for (std::size_t i : independent_subset(vs)) reduced.push_back(next[i]);
    level = std::move(reduced);
  }
  return level.empty();
}

}  // namespace detail

// Every nonzero e ∈ g_α, α != 0, has a partner. By invariance e has none exactly when
// ad(u)e = (1 + (u,t_α)) e for some u ∈ g_0, so IA2′ holds when the operators
// L(u) = ad(u)|g_α - (u,t_α) generate a nilpotent algebra.
inline Verdict check_IA2_division(const ToralPair& p) {
  Verdict v;
  v.name = "IA2'";
  v.stamp = p.window().stamp();
  const auto& g = p.algebra();
  auto spaces = p.root_spaces();
  const auto g0 = spaces.count(p.zero_root()) ? spaces.at(p.zero_root()) : std::vector<Element>{};
  std::size_t basis_count = 0;
  for (const auto& [a, sp] : spaces) {
    if (a.is_zero()) continue;
    auto it = spaces.find(-a);
    if (it == spaces.end()) {
      v.detail = "no opposite root for " + a.to_string();
      return v;
    }
    for (const auto& e : sp) {
      auto w = ia2_witness_for(p, a, e, it->second);
      if (!w) {
        v.detail = "basis vector " + g.to_string(e) + " of g_a, a=" + a.to_string() + " has no partner";
        return v;
      }
      v.witnesses.push_back(describe_witness(g, a, *w));
      ++basis_count;
    }
    SpanExpresser ex(sp);
    const Element ta = p.representative(a);
    std::vector<Matrix<Scalar>> ls;
    for (const auto& u : g0) {
      Scalar s = g.form(u, ta);
      Matrix<Scalar> m(sp.size(), sp.size());
      for (std::size_t j = 0; j < sp.size(); ++j) {
        Vec<Scalar> c = ex.coords(g.bracket(u, sp[j]) - scaled(sp[j], s));
        for (std::size_t i = 0; i < sp.size(); ++i) m(i, j) = c[i];
      }
      ls.push_back(std::move(m));
    }
    if (detail::generates_nilpotent(ls, sp.size())) continue;
    // Look for an operator in the span with a nonzero eigenvalue in the field: that gives a bad e.
    std::vector<Matrix<Scalar>> probes = ls;
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j) probes.push_back(ls[i] + ls[j]);
    for (const auto& m : probes) {
      std::optional<Scalar> ev;
      if (sp.size() == 1) {
        if (!m(0, 0).is_zero()) ev = m(0, 0);
      } else {
        try {
          for (const auto& r : rational_roots(minimal_polynomial(m)))
            if (!r.is_zero()) {
              ev = Scalar(r);
              break;
            }
        } catch (const Error&) {
        }
      }
      if (!ev) continue;
      auto ker = kernel(m - Matrix<Scalar>::identity(sp.size()).scaled(*ev));
      Element bad = ex.combine(ker.front());
      v.detail = "vector " + g.to_string(bad) + " of g_a, a=" + a.to_string() + " has no partner";
      return v;
    }
    v.conclusive = false;
    v.detail = "could not decide IA2' at a=" + a.to_string();
    return v;
  }
  v.pass = true;
  v.detail = std::to_string(basis_count) + " basis vectors with partners; no vector without a partner";
  return v;
}

// For nonisotropic α: ad(x)^n maps g_β into g_{β+nα}, which needs (β,α) + n(α,α) among the values
// E = {(γ,α)}. The largest such n over windowed β bounds the nilpotency index; an explicit
// iteration on basis vectors confirms it.
inline Verdict check_IA3(const ToralPair& p, int bound) {
  Verdict v;
  v.name = "IA3";
  v.stamp = p.window().stamp();
  const auto& g = p.algebra();
  auto spaces = p.root_spaces();
  std::vector<Root> roots;
  for (const auto& [a, sp] : spaces) roots.push_back(a);
  auto all = g.basis(p.window());
  int worst = 0;
  std::size_t checked = 0;
  for (const auto& a : roots) {
    Vec<Scalar> ta = p.representative_coords(a);
    auto dot = [&](const Root& b) {
      Scalar s(0);
      for (std::size_t i = 0; i < ta.size(); ++i) s += b.c[i] * ta[i];
      return s;
    };
    const Scalar aa = dot(a);
    if (aa.is_zero()) continue;
    std::set<Scalar> E;
    for (const auto& b : roots) E.insert(dot(b));
    int nmax = 0;
    for (const auto& b : roots) {
      Scalar cur = dot(b);
      int n = 0;
      for (int k = 1; k <= bound + 1; ++k) {
        cur += aa;
        if (E.count(cur)) n = k;
      }
      nmax = std::max(nmax, n);
    }
    const int N = nmax + 1;
    if (N > bound) {
      v.conclusive = false;
      v.detail = "nilpotency index for a=" + a.to_string() + " exceeds bound " + std::to_string(bound);
      return v;
    }
    worst = std::max(worst, N);
    for (const auto& x : spaces.at(a))
      for (const auto& k : all) {
        Element y = basis_element(k);
        int steps = 0;
        while (!y.empty() && steps < N) {
          y = g.bracket(x, y);
          ++steps;
        }
        if (!y.empty()) {
          v.detail = "ad(x)^" + std::to_string(N) + " does not vanish on " + g.label(k) + " for x in g_a, a=" +
                     a.to_string();
          return v;
        }
        ++checked;
      }
  }
  v.pass = true;
  v.detail = "nilpotency index <= " + std::to_string(worst) + " on " + std::to_string(checked) +
             " iterations (verified up to bound " + std::to_string(bound) + ")";
  return v;
}

struct Sl2Triple {
  Element e, h, f;
};

// e from es, f from fs with [e,f] = h_α = 2t_α/(α,α).
inline Sl2Triple sl2_triple(const ToralPair& p, const Root& a, const std::vector<Element>& es,
                            const std::vector<Element>& fs) {
  const auto& g = p.algebra();
  const Scalar aa = p.pair(a, a);
  if (aa.is_zero()) throw Error(ErrorCode::NoWitness, "sl2-triple needs a nonisotropic root");
  const Element ta = p.representative(a);
  const Element h = scaled(ta, Scalar(2) / aa);
  for (const auto& e : es)
    for (const auto& f : fs) {
      Element br = g.bracket(e, f);
      Scalar c = g.form(e, f);
      if (c.is_zero() || br != scaled(ta, c)) continue;
      Element f2 = scaled(f, Scalar(2) / (c * aa));
      if (g.bracket(e, f2) != h) continue;
      if (g.bracket(h, e) != scaled(e, Scalar(2))) continue;
      if (g.bracket(h, f2) != scaled(f2, Scalar(-2))) continue;
      return {e, h, f2};
    }
  throw Error(ErrorCode::NoWitness, "no sl2-triple for root " + a.to_string());
}

}  // namespace iara
