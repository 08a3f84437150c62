#pragma once

#include <string>
#include <vector>

#include "iara/grading.hpp"

namespace iara {

namespace detail {

struct PropCheck {
  Verdict v;
  long checked = 0;
  PropCheck(std::string name, const std::string& stamp) : v(make_verdict(std::move(name), true, "", stamp)) {}
  bool fail(std::string why) {
    if (v.pass) v.detail = std::move(why);
    v.pass = false;
    return false;
  }
  Verdict done(const std::string& what) {
    if (v.pass) v.detail = what + " on " + std::to_string(checked) + " cases";
    return v;
  }
};

}  // namespace detail

// Identities of the projection calculus, checked exhaustively on window basis vectors and root spaces.
inline std::vector<Verdict> grading_property_suite(const Grading& gr) {
  using detail::PropCheck;
  const auto& p = gr.pair();
  const auto& g = p.algebra();
  const int m = gr.m();
  const std::string stamp = p.window().stamp();
  auto basis = g.basis(p.window());
  std::vector<Verdict> out;

  std::vector<std::vector<Element>> proj(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < m; ++j) proj[i].push_back(gr.project(basis_element(basis[i]), j));

  {
    PropCheck c("projection-idempotent", stamp);
    for (std::size_t i = 0; i < basis.size() && c.v.pass; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          ++c.checked;
          Element lhs = gr.project(proj[i][k], j);
          if (lhs != (j == k ? proj[i][j] : Element{})) {
            c.fail("pi_" + std::to_string(j) + " pi_" + std::to_string(k) + " wrong on " + g.label(basis[i]));
            break;
          }
        }
    out.push_back(c.done("pi_j pi_k = delta_jk pi_j"));
  }
  {
    PropCheck c("projection-sum", stamp);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Element s;
      for (int j = 0; j < m; ++j) s = s + proj[i][j];
      ++c.checked;
      if (s != basis_element(basis[i])) c.fail("sum of projections differs on " + g.label(basis[i]));
    }
    out.push_back(c.done("sum_j pi_j = id"));
  }
  {
    PropCheck c("projection-eigen", stamp);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int j = 0; j < m; ++j) {
        ++c.checked;
        if (gr.sigma().apply(proj[i][j]) != scaled(proj[i][j], gr.zeta_power(j)))
          c.fail("sigma pi_j != zeta^j pi_j on " + g.label(basis[i]));
      }
    out.push_back(c.done("sigma pi_j = zeta^j pi_j"));
  }
  {
    PropCheck c("graded-form", stamp);
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (!(basis[a].deg + basis[b].deg).is_zero()) continue;
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k) {
            if (gr.mod(j + k) == 0) continue;
            ++c.checked;
            if (!g.form(proj[a][j], proj[b][k]).is_zero())
              c.fail("(pi_j x, pi_k y) != 0 for j+k != 0 on " + g.label(basis[a]) + ", " + g.label(basis[b]));
          }
      }
    out.push_back(c.done("(g^j, g^k) = 0 unless j+k = 0"));
  }
  {
    PropCheck c("bracket-projection", stamp);
    for (std::size_t a = 0; a < basis.size() && c.v.pass; ++a)
      for (std::size_t b = 0; b < basis.size() && c.v.pass; ++b)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k) {
            ++c.checked;
            Element lhs = g.bracket(proj[a][j], proj[b][k]);
            Element rhs = gr.project(g.bracket(basis_element(basis[a]), proj[b][k]), j + k);
            if (lhs != rhs) {
              c.fail("[pi_j x, pi_k y] != pi_{j+k}[x, pi_k y] on " + g.label(basis[a]) + ", " + g.label(basis[b]));
              break;
            }
          }
    out.push_back(c.done("[pi_j x, pi_k y] = pi_{j+k}[x, pi_k y]"));
  }

  auto spaces = p.root_spaces();
  std::map<Root, Root> pi_of;
  for (const auto& [a, sp] : spaces) pi_of.emplace(a, gr.restrict_to_T0(a));

  {
    PropCheck c("projections-of-toral-duals", stamp);
    for (const auto& [a, sp] : spaces) {
      ++c.checked;
      Element lhs = gr.project(p.representative(a), 0);
      Element rhs = p.representative(gr.restricted_root(a));
      if (lhs != rhs) c.fail("pi_0(t_a) != t_pi(a) for a=" + a.to_string());
    }
    out.push_back(c.done("pi_0(t_a) = t_pi(a)"));
  }
  {
    PropCheck c("restricted-root-values", stamp);
    for (const auto& [a, sp] : spaces) {
      Root pa = gr.restricted_root(a);
      ++c.checked;
      if (gr.restrict_to_T0(pa) != pi_of.at(a)) c.fail("pi(a) and a disagree on T0 for a=" + a.to_string());
      for (int j = 1; j < m; ++j)
        for (const auto& t : gr.T_component(j)) {
          ++c.checked;
          if (!p.evaluate(pa, t).is_zero()) c.fail("pi(a) is nonzero on T^" + std::to_string(j));
        }
    }
    out.push_back(c.done("pi(a) = a on T0 and 0 on T^j, j != 0"));
  }
  {
    PropCheck c("double-grading", stamp);
    for (const auto& d : p.window().degrees()) {
      std::size_t total = 0;
      for (int j = 0; j < m; ++j)
        for (const auto& av : gr.adapted(j, d)) {
          ++total;
          ++c.checked;
          if (gr.sigma().apply(av.v) != scaled(av.v, gr.zeta_power(j))) c.fail("adapted vector not a sigma-eigenvector");
          for (std::size_t t = 0; t < gr.T0().size(); ++t)
            if (g.bracket(gr.T0()[t], av.v) != scaled(av.v, av.restricted.c[t]))
              c.fail("adapted vector not a T0-eigenvector at " + d.to_string());
        }
      if (total != g.dim(d)) c.fail("graded pieces do not add up at degree " + d.to_string());
    }
    out.push_back(c.done("g = sum over (j, pi(a)) of g^j_pi(a)"));
  }
  {
    PropCheck c("xbar-recovers-projection", stamp);
    for (const auto& [a, sp] : spaces) {
      const int l = gr.orbit_length(a);
      for (const auto& x : sp)
        for (int j = 0; j < m; ++j) {
          ++c.checked;
          Element xb = gr.xbar(a, x, j);
          Element acc, cur = xb;
          for (int i = 0; i < l; ++i) {
            axpy(acc, gr.zeta_power(-static_cast<long>(j) * i), cur);
            cur = gr.sigma().apply(cur);
          }
          acc = scaled(acc, Scalar(Rational(1, m)));
          Element pj = gr.project(x, j);
          if (acc != pj) c.fail("orbit-sum formula fails for a=" + a.to_string());
          if (pj.empty() != xb.empty()) c.fail("pi_j(x) and xbar_j vanish differently for a=" + a.to_string());
        }
    }
    out.push_back(c.done("pi_j(x) = (1/m) sum_{i<l} zeta^{-ji} sigma^i(xbar_j)"));
  }
  {
    PropCheck br("orbit-sum-bracket", stamp), fm("orbit-sum-form", stamp);
    for (const auto& [a, sp] : spaces) {
      auto it = spaces.find(-a);
      if (it == spaces.end()) continue;
      for (const auto& x : sp)
        for (const auto& y : it->second)
          for (int j = 0; j < m; ++j) {
            Element e = gr.project(x, j), f = gr.project(y, -j), xb = gr.xbar(a, x, j);
            ++br.checked;
            ++fm.checked;
            Element rhs = scaled(gr.project(g.bracket(xb, y), 0), Scalar(Rational(1, m)));
            if (g.bracket(e, f) != rhs) br.fail("[pi_j x, pi_{-j} y] != (1/m) pi[xbar_j, y] for a=" + a.to_string());
            if (g.form(e, f) != g.form(xb, y) * Scalar(Rational(1, m)))
              fm.fail("(pi_j x, pi_{-j} y) != (1/m)(xbar_j, y) for a=" + a.to_string());
          }
    }
    out.push_back(br.done("[pi_j x, pi_{-j} y] = (1/m) pi[xbar_j, y]"));
    out.push_back(fm.done("(pi_j x, pi_{-j} y) = (1/m)(xbar_j, y)"));
  }
  {
    PropCheck c("orbit-restricted-bracket", stamp);
    for (const auto& [a, sp] : spaces) {
      auto it = spaces.find(-a);
      if (it == spaces.end()) continue;
      const int l = gr.orbit_length(a);
      for (const auto& x : sp)
        for (const auto& y : it->second)
          for (int j = 0; j < m; ++j) {
            ++c.checked;
            Element rhs, sy = y;
            for (int i = 0; i < m / l; ++i) {
              axpy(rhs, gr.zeta_power(static_cast<long>(j) * i * l), gr.project(g.bracket(x, sy), 0));
              sy = gr.sigma().power(sy, l);
            }
            rhs = scaled(rhs, Scalar(Rational(1, m)));
            if (g.bracket(gr.project(x, j), gr.project(y, -j)) != rhs)
              c.fail("orbit-length sum differs for a=" + a.to_string());
          }
    }
    out.push_back(c.done("[pi_j x, pi_{-j} y] = (1/m) sum_{i<m/l} pi[x, zeta^{jil} sigma^{il} y]"));
  }
  {
    PropCheck c("orbit-constant-projection", stamp);
    for (const auto& [a, sp] : spaces) {
      Root b = gr.act(a);
      if (b == a || !spaces.count(b)) continue;
      for (int j = 0; j < m; ++j) {
        ++c.checked;
        std::vector<Element> pa, pb;
        for (const auto& x : sp)
          if (Element y = gr.project(x, j); !y.empty()) pa.push_back(y);
        for (const auto& x : spaces.at(b))
          if (Element y = gr.project(x, j); !y.empty()) pb.push_back(y);
        if (!pa.empty()) pa = independent_elements(pa);
        if (!pb.empty()) pb = independent_elements(pb);
        SpanExpresser ea(pa);
        bool ok = pa.size() == pb.size();
        for (const auto& x : pb) ok = ok && ea.contains(x);
        if (!ok) c.fail("pi_j(g_a) != pi_j(g_sigma(a)) for a=" + a.to_string());
      }
    }
    out.push_back(c.done("pi_j(g_a) = pi_j(g_b) on a sigma-orbit"));
  }
  {
    PropCheck same("same-restriction-bracket", stamp), dist("distinct-orbit-bracket", stamp);
    for (const auto& [a, spa] : spaces)
      for (const auto& [b, spb] : spaces) {
        if (a == b || pi_of.at(a) != pi_of.at(b)) continue;
        auto it = spaces.find(-b);
        if (it == spaces.end()) continue;
        const bool distinct = gr.orbit_rep(a) != gr.orbit_rep(b);
        for (const auto& x : spa)
          for (const auto& y : it->second) {
            ++same.checked;
            if (!gr.project(g.bracket(x, y), 0).empty())
              same.fail("pi([x,y]) != 0 for a=" + a.to_string() + ", b=" + b.to_string());
            if (!distinct) continue;
            for (int j = 0; j < m; ++j) {
              ++dist.checked;
              if (!g.bracket(gr.project(x, j), gr.project(y, -j)).empty())
                dist.fail("[pi_j x, pi_{-j} y] != 0 across orbits a=" + a.to_string() + ", b=" + b.to_string());
            }
          }
      }
    out.push_back(same.done("pi([g_a, g_-b]) = 0 when a != b and pi(a) = pi(b)"));
    out.push_back(dist.done("[pi_j g_a, pi_-j g_-b] = 0 for distinct orbits with pi(a) = pi(b)"));
  }
  {
    PropCheck c("eigenprojection-oracle", stamp);
    for (const auto& d : p.window().degrees())
      for (int j = 0; j < m; ++j) {
        ++c.checked;
        if (!(eigenprojection(gr, j, d) == formula_projection(gr, j, d)))
          c.fail("averaging formula differs from eigenprojection at " + d.to_string());
      }
    out.push_back(c.done("averaging formula = eigenspace projection"));
  }
  return out;
}

}  // namespace iara
