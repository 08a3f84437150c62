#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "iara/ars.hpp"
#include "iara/axioms.hpp"
#include "iara/grading.hpp"

namespace iara {

inline Rational to_rational(const Scalar& s, const char* what) {
  if (!s.is_rational()) throw Error(ErrorCode::NotToral, std::string(what) + " has a non-rational value " + s.to_string());
  return s.rational();
}

inline QVec root_qvec(const Root& a) {
  QVec v;
  for (const auto& c : a.c) v.push_back(to_rational(c, "root"));
  return v;
}

// Algebras that carry degree derivations inside a wrapped factor expose them here, keyed by lattice coordinate.
struct DegreeProbed {
  virtual ~DegreeProbed() = default;
  virtual std::map<int, Element> probes() const = 0;
};

// Elements of g acting on g_λ by λ_i, one per lattice coordinate they can see.
inline std::map<int, Element> degree_probe_map(const GradedLieAlgebra& g) {
  if (auto e = dynamic_cast<const ExtendedAlgebra*>(&g)) {
    auto out = degree_probe_map(*e->inner());
    for (int i = 0; i < e->extension_rank(); ++i) out[e->coords()[i]] = basis_element(e->d_key(i));
    return out;
  }
  if (auto s = dynamic_cast<const Subalgebra*>(&g)) {
    std::map<int, Element> out;
    for (const auto& [i, d] : degree_probe_map(*s->parent())) out[i] = s->restrict(d);
    return out;
  }
  if (auto p = dynamic_cast<const DegreeProbed*>(&g)) return p->probes();
  return {};
}

// The probes in coordinate order; empty unless every coordinate is covered.
inline std::vector<Element> degree_probes(const GradedLieAlgebra& g) {
  auto m = degree_probe_map(g);
  std::vector<Element> out;
  for (int i = 0; i < g.lattice_rank(); ++i) {
    auto it = m.find(i);
    if (it == m.end()) return {};
    out.push_back(it->second);
  }
  return out;
}

// Root set of a toral pair as a reflection system, with the window read off through the d_i.
inline ReflectionSystem reflection_system(const ToralPair& p) {
  const std::size_t k = p.toral_rank();
  Matrix<Rational> gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Root a = p.zero_root(), b = p.zero_root();
      a.c[i] = Scalar(1);
      b.c[j] = Scalar(1);
      gram(i, j) = to_rational(p.pair(a, b), "form");
    }
  std::vector<QVec> roots;
  for (const auto& a : p.roots()) roots.push_back(root_qvec(a));
  ReflectionSystem::Inside inside;
  const Window& w = p.window();
  if (w.rank() > 0) {
    auto probes = degree_probes(p.algebra());
    if (probes.size() != static_cast<std::size_t>(w.rank()))
      throw Error(ErrorCode::InvalidArgument, "windowed pair has no degree derivations to locate roots");
    std::vector<Vec<Scalar>> probe_coords;
    for (const auto& d : probes) probe_coords.push_back(p.toral_span().coords(d));
    inside = [probe_coords, w](const QVec& a) {
      std::vector<int> deg;
      for (const auto& c : probe_coords) {
        Rational v;
        for (std::size_t i = 0; i < c.size(); ++i) v += a[i] * c[i].rational();
        if (!v.is_integer()) return false;
        deg.push_back(static_cast<int>(v.num().get_si()));
      }
      return w.contains(Degree(deg));
    };
  }
  return ReflectionSystem(std::move(gram), std::move(roots), std::move(inside));
}

// (g, T⁰) as a toral pair; each restricted root space must be the sum of the g_β it merges.
inline PairPtr restricted_pair(const Grading& gr) {
  const auto& p = gr.pair();
  auto rp = std::make_shared<ToralPair>(p.algebra_ptr(), gr.T0(), p.window(), p.name() + "|T0");
  for (const auto& d : p.window().degrees()) {
    std::map<Root, std::size_t> merged;
    for (const auto& blk : p.component(d)) merged[gr.restrict_to_T0(blk.root)] += blk.basis.size();
    std::map<Root, std::size_t> direct;
    for (const auto& blk : rp->component(d)) direct[blk.root] = blk.basis.size();
    if (merged != direct)
      throw Error(ErrorCode::InconsistentDecomposition, "restricted root spaces do not match at degree " + d.to_string());
  }
  return rp;
}

// (g⁰, T⁰) with g⁰ spanned by the π_0 images of root vectors.
inline PairPtr fixed_subalgebra(const Grading& gr) {
  const auto& p = gr.pair();
  auto keep = std::make_shared<Grading>(gr.pair_ptr(), gr.sigma_ptr());
  auto sub = std::make_shared<Subalgebra>(
      p.algebra_ptr(), [keep](const Degree& d) { return keep->component_basis(0, d); }, p.algebra().name() + "^sigma");
  std::vector<Element> t;
  for (const auto& x : gr.T0()) t.push_back(sub->restrict(x));
  return std::make_shared<ToralPair>(sub, std::move(t), p.window(), p.name() + "^sigma");
}

inline Verdict prefixed(Verdict v, const std::string& prefix) {
  v.name = prefix + v.name;
  return v;
}

// IA1, IA2 or IA2', IA3 on a pair, plus R1-R5 on its root system.
inline std::vector<Verdict> iara_suite(const ToralPair& p, int bound, bool division) {
  std::vector<Verdict> out;
  out.push_back(check_IA1(p));
  out.push_back(check_IA2(p));
  if (division) out.push_back(check_IA2_division(p));
  out.push_back(check_IA3(p, bound));
  for (auto& v : check_R1_R5(reflection_system(p))) out.push_back(std::move(v));
  return out;
}

inline std::vector<Verdict> grading_hypotheses(const Grading& gr) {
  std::vector<Verdict> out;
  for (auto& v : gr.verify_A1_A3()) out.push_back(prefixed(v, "hyp "));
  out.push_back(prefixed(gr.verify_A4(), "hyp "));
  return out;
}

// σ fixes the isotropic roots of (g, T), with σ acting on roots dually.
inline std::vector<Verdict> grading_isotropic_fixed(const Grading& gr) {
  auto to_root = [](const QVec& v) {
    Root r;
    for (const auto& c : v) r.c.push_back(Scalar(c));
    return r;
  };
  return check_isotropic_fixed(
      reflection_system(gr.pair()), [&](const QVec& a) { return root_qvec(gr.act(to_root(a))); }, gr.m());
}

// (g, T⁰) is an IARA with root system π(R), and π(R) inherits indecomposability.
inline std::vector<Verdict> verify_theorem_restricted(const Grading& gr, int bound) {
  std::vector<Verdict> out = grading_hypotheses(gr);
  out.push_back(prefixed(check_IA2_division(gr.pair()), "hyp base "));
  if (!all_pass(out)) throw Error(ErrorCode::HypothesisUnmet, "restriction needs a division base and A1-A4");
  auto rp = restricted_pair(gr);
  for (auto& v : iara_suite(*rp, bound, false)) out.push_back(std::move(v));
  const bool base_connected = reflection_system(gr.pair()).components().size() == 1;
  const bool restricted_connected = reflection_system(*rp).components().size() == 1;
  Verdict v = make_verdict("indecomposable-transfer", !base_connected || restricted_connected, "", rp->window().stamp());
  v.detail = base_connected ? (restricted_connected ? "R and pi(R) indecomposable" : "R indecomposable but pi(R) splits")
                            : "R decomposable, nothing to transfer";
  out.push_back(v);
  return out;
}

// (g⁰, T⁰) is a division IARA with root system R^σ ⊆ π(R).
inline std::vector<Verdict> verify_theorem_fixed(const Grading& gr, int bound) {
  std::vector<Verdict> out = grading_hypotheses(gr);
  out.push_back(prefixed(check_IA2_division(gr.pair()), "hyp base "));
  if (!all_pass(out)) throw Error(ErrorCode::HypothesisUnmet, "fixed points need a division base and A1-A4");
  auto fp = fixed_subalgebra(gr);
  for (auto& v : iara_suite(*fp, bound, true)) out.push_back(std::move(v));
  std::set<Root> pi_r;
  for (const auto& a : gr.pair().roots()) pi_r.insert(gr.restrict_to_T0(a));
  Verdict c = make_verdict("fixed-roots-in-restricted", true, "", fp->window().stamp());
  std::size_t n = 0;
  for (const auto& a : fp->roots()) {
    ++n;
    if (!pi_r.count(a)) {
      c.pass = false;
      c.detail = "root " + a.to_string() + " of the fixed algebra is not in pi(R)";
      break;
    }
  }
  if (c.pass)
    c.detail = "R^sigma (" + std::to_string(n) + " roots) inside pi(R) (" + std::to_string(pi_r.size()) + " roots)";
  out.push_back(c);
  return out;
}

}  // namespace iara
