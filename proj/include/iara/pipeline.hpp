#pragma once

#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "iara/affinize.hpp"
#include "iara/grading_props.hpp"
#include "iara/lie_builders.hpp"

namespace iara {

// ---- config ----

struct ConfigSection {
  std::string kind, name;
  int line = 0;
  std::vector<std::pair<std::string, std::string>> keys;

  std::optional<std::string> get(const std::string& k) const {
    for (const auto& [key, v] : keys)
      if (key == k) return v;
    return std::nullopt;
  }
  std::string need(const std::string& k) const {
    auto v = get(k);
    if (!v) throw Error(ErrorCode::ConfigError, where() + ": missing key '" + k + "'");
    return *v;
  }
  std::string where() const { return "line " + std::to_string(line) + " [" + kind + (name.empty() ? "" : " " + name) + "]"; }
  int get_int(const std::string& k, int dflt) const {
    auto v = get(k);
    return v ? to_int(*v) : dflt;
  }
  int to_int(const std::string& s) const {
    try {
      std::size_t pos = 0;
      int x = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return x;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, where() + ": '" + s + "' is not an integer");
    }
  }
  // "1, 0 -2" -> {1, 0, -2}
  std::vector<int> ints(const std::string& k) const {
    std::vector<int> out;
    std::string s = need(k);
    for (char& c : s)
      if (c == ',') c = ' ';
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(to_int(tok));
    return out;
  }
  // rows separated by ';'
  std::vector<std::vector<std::string>> rows(const std::string& k) const {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(need(k));
    std::string row;
    while (std::getline(in, row, ';')) {
      for (char& c : row)
        if (c == ',') c = ' ';
      std::istringstream rs(row);
      std::vector<std::string> cells;
      std::string tok;
      while (rs >> tok) cells.push_back(tok);
      if (!cells.empty()) out.push_back(std::move(cells));
    }
    return out;
  }
};

struct PipelineConfig {
  std::vector<ConfigSection> sections;

  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static PipelineConfig parse(const std::string& text) {
    static const std::vector<std::string> kinds = {"global",  "coeff-algebra", "build-base", "automorphism",
                                                   "grade",   "restrict",      "fixpoint",   "affinize",
                                                   "iterate", "roots",         "classify"};
    PipelineConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    while (std::getline(in, raw)) {
      ++ln;
      std::string s = trim(raw.substr(0, raw.find('#')));
      if (s.empty()) continue;
      if (s.front() == '[') {
        if (s.back() != ']') throw Error(ErrorCode::ConfigError, "line " + std::to_string(ln) + ": unclosed section header");
        std::istringstream hs(s.substr(1, s.size() - 2));
        ConfigSection sec;
        sec.line = ln;
        hs >> sec.kind >> sec.name;
        std::string extra;
        if (hs >> extra) throw Error(ErrorCode::ConfigError, "line " + std::to_string(ln) + ": trailing text in header");
        if (std::find(kinds.begin(), kinds.end(), sec.kind) == kinds.end())
          throw Error(ErrorCode::ConfigError, "line " + std::to_string(ln) + ": unknown section '" + sec.kind + "'");
        cfg.sections.push_back(std::move(sec));
        continue;
      }
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, "line " + std::to_string(ln) + ": expected key = value");
      if (cfg.sections.empty()) throw Error(ErrorCode::ConfigError, "line " + std::to_string(ln) + ": key outside any section");
      cfg.sections.back().keys.emplace_back(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
    return cfg;
  }
};

// ---- report ----

struct StepReport {
  int index = 0;
  std::string heading;
  std::vector<std::string> lines;
  std::vector<Verdict> verdicts;
  double seconds = 0;
};

struct RenderOptions {
  bool witnesses = false;
  bool timing = false;
};

struct Report {
  std::string title;
  std::vector<StepReport> steps;

  std::size_t count(const char* status) const {
    std::size_t n = 0;
    for (const auto& s : steps)
      for (const auto& v : s.verdicts)
        if (v.status() == status) ++n;
    return n;
  }
  std::size_t verdict_count() const {
    std::size_t n = 0;
    for (const auto& s : steps) n += s.verdicts.size();
    return n;
  }
  bool all_pass() const { return count("PASS") == verdict_count(); }
  const Verdict* find(const std::string& name) const {
    for (const auto& s : steps)
      for (const auto& v : s.verdicts)
        if (v.name == name) return &v;
    return nullptr;
  }

  std::string render(const RenderOptions& opt = {}) const {
    std::ostringstream o;
    o << "iara report v1\n";
    o << "title: " << title << "\n";
    for (const auto& s : steps) {
      o << "[step " << s.index << "] " << s.heading << "\n";
      for (const auto& l : s.lines) o << "  " << l << "\n";
      for (const auto& v : s.verdicts) {
        o << "  " << v.status() << " " << v.name << " :: " << v.detail << " [" << v.stamp << "]\n";
        if (opt.witnesses)
          for (const auto& w : v.witnesses) o << "    witness " << w << "\n";
      }
      if (opt.timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", s.seconds);
        o << "  time " << buf << " s\n";
      }
    }
    o << "summary: " << verdict_count() << " verdicts, " << count("PASS") << " pass, " << count("FAIL") << " fail, "
      << count("INCONCLUSIVE") << " inconclusive\n";
    o << "result: " << (all_pass() ? "PASS" : "FAIL") << "\n";
    return o.str();
  }
};

struct RunOptions {
  std::optional<int> window;  // overrides [global] window
};

// ---- step helpers ----

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Type label plus the rank of the radical of the root lattice.
inline std::string type_with_nullity(const ReflectionSystem& s) {
  const std::size_t n = s.lattice_basis().size();
  const std::size_t r = n ? rank(s.lattice_gram()) : 0;
  return classify_type(s) + " nullity " + std::to_string(n - r);
}

// π(α̇_ij)(e_ii - e_jj) for every i != j of a matrix base with T = span of the e_ii - e_{i+1,i+1}.
struct RestrictedValue {
  int i, j;
  Scalar value;
};

inline std::vector<RestrictedValue> restricted_value_table(const Grading& gr) {
  const auto& p = gr.pair();
  const MatrixAlgebra* m = underlying_matrix_algebra(p.algebra());
  if (!m) throw Error(ErrorCode::InvalidArgument, "restricted value table needs a matrix base");
  const Degree zero = Degree::zero(p.algebra().lattice_rank());
  const Vec<Scalar>& unit = m->coeff()->base().unit();
  auto diag = [&](int a, int b) {  // e_aa - e_bb for positions a < b
    Element t;
    for (int s = a; s < b; ++s)
      for (std::size_t q = 0; q < unit.size(); ++q) add_to(t, m->diagonal_key(zero, s, q), unit[q]);
    return t;
  };
  std::vector<RestrictedValue> out;
  const int n = m->n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      Element x;
      for (std::size_t q = 0; q < unit.size(); ++q) add_to(x, m->off_diagonal_key(zero, a, b, q), unit[q]);
      Root alpha = p.root_of(x);
      Element t = a < b ? diag(a, b) : scaled(diag(b, a), Scalar(-1));
      out.push_back({m->labels()[a], m->labels()[b], p.evaluate(gr.restricted_root(alpha), t)});
    }
  return out;
}

inline std::string root_string(const std::vector<Scalar>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].to_string();
  return s + ")";
}

inline std::string ints_string(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// ---- runner ----

class Pipeline {
 public:
  explicit Pipeline(RunOptions opt = {}) : opt_(opt) {}

  Report run(const PipelineConfig& cfg, std::string title) {
    Report rep;
    rep.title = std::move(title);
    if (opt_.window) window_ = *opt_.window;
    int idx = 0;
    for (const auto& sec : cfg.sections) {
      if (sec.kind == "global") {
        window_ = sec.get_int("window", window_);
        bound_ = sec.get_int("bound", bound_);
        samples_ = static_cast<std::size_t>(sec.get_int("samples", static_cast<int>(samples_)));
        if (opt_.window) window_ = *opt_.window;
        continue;
      }
      StepReport st;
      st.index = ++idx;
      st.heading = sec.kind + (sec.name.empty() ? "" : " " + sec.name);
      const auto t0 = std::chrono::steady_clock::now();
      try {
        dispatch(sec, st);
      } catch (const Error& e) {
        throw Error(e.code(), "step " + std::to_string(st.index) + " (" + st.heading + "): " + e.what());
      }
      st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rep.steps.push_back(std::move(st));
    }
    if (rep.steps.empty()) throw Error(ErrorCode::ConfigError, "config has no steps");
    return rep;
  }

  const Affinization& affinization(const std::string& n) const { return lookup(affs_, n, "affinization"); }
  const GradingPtr& grading(const std::string& n) const { return lookup(grades_, n, "grading"); }
  const PairPtr& pair(const std::string& n) const { return lookup(pairs_, n, "pair"); }
  const std::map<std::string, GradingPtr>& gradings() const { return grades_; }

 private:
  template <class M>
  static const typename M::mapped_type& lookup(const M& m, const std::string& n, const char* what) {
    auto it = m.find(n);
    if (it == m.end()) throw Error(ErrorCode::ConfigError, std::string("no ") + what + " named '" + n + "'");
    return it->second;
  }
  static void name_required(const ConfigSection& sec) {
    if (sec.name.empty()) throw Error(ErrorCode::ConfigError, sec.where() + ": section needs a name");
  }
  int window_for(const ConfigSection& sec) const {
    if (opt_.window) return *opt_.window;
    return sec.get_int("window", window_);
  }

  void dispatch(const ConfigSection& sec, StepReport& st) {
    if (sec.kind == "coeff-algebra") return coeff_step(sec, st);
    if (sec.kind == "build-base") return base_step(sec, st);
    if (sec.kind == "automorphism") return aut_step(sec, st);
    if (sec.kind == "grade") return grade_step(sec, st);
    if (sec.kind == "restrict") return restrict_step(sec, st);
    if (sec.kind == "fixpoint") return fixpoint_step(sec, st);
    if (sec.kind == "affinize") return affinize_step(sec, st);
    if (sec.kind == "iterate") return iterate_step(sec, st);
    if (sec.kind == "roots") return roots_step(sec, st);
    if (sec.kind == "classify") return classify_step(sec, st);
  }

  BaseAlgebra parse_base(const ConfigSection& sec) const {
    const std::string b = sec.get("base").value_or("Q");
    if (b == "Q") return BaseAlgebra::field();
    if (b.size() > 2 && b.rfind("Q^", 0) == 0) return BaseAlgebra::product_normalized(sec.to_int(b.substr(2)));
    throw Error(ErrorCode::ConfigError, sec.where() + ": base must be Q or Q^k");
  }

  void coeff_step(const ConfigSection& sec, StepReport& st) {
    name_required(sec);
    BaseAlgebra base = parse_base(sec);
    CoeffAlgebraPtr a;
    if (sec.get("q")) {
      std::vector<std::vector<int>> q;
      for (const auto& row : sec.rows("q")) {
        std::vector<int> r;
        for (const auto& c : row) r.push_back(sec.to_int(c));
        q.push_back(std::move(r));
      }
      a = GradedCoefficientAlgebra::q_algebra(std::move(base), std::move(q));
    } else {
      const int r = sec.get_int("rank", 1);
      std::vector<std::vector<Vec<Scalar>>> tau;
      if (sec.get("tau")) {
        // entries "i j value" with 1-based generators; unlisted pairs are 1
        tau.assign(r, std::vector<Vec<Scalar>>(r, base.unit()));
        for (const auto& cell : sec.rows("tau")) {
          if (cell.size() != 3) throw Error(ErrorCode::ConfigError, sec.where() + ": tau entries are 'i j value'");
          const int i = sec.to_int(cell[0]) - 1, j = sec.to_int(cell[1]) - 1;
          if (i < 0 || j < 0 || i >= r || j >= r) throw Error(ErrorCode::ConfigError, sec.where() + ": tau index out of range");
          tau[i][j] = base.scalar(Scalar(Rational::parse(cell[2])));
        }
      }
      a = GradedCoefficientAlgebra::twisted_group(std::move(base), r, std::move(tau));
    }
    coeffs_[sec.name] = a;
    const Window w = Window::box(a->rank(), window_for(sec));
    auto pd = a->is_predivision(w);
    auto tor = a->is_torus(w);
    st.lines.push_back("algebra " + a->name() + ", lattice rank " + std::to_string(a->rank()) + ", dim A^lambda " +
                       std::to_string(a->component_dim()));
    st.lines.push_back("commutative " + yes_no(a->commutative()) + ", predivision " + yes_no(pd.holds) + ", torus " +
                       yes_no(tor.holds) + " on " + w.stamp());
  }

  void base_step(const ConfigSection& sec, StepReport& st) {
    name_required(sec);
    const std::string builder = sec.need("builder");
    PairPtr p;
    if (builder == "sl") {
      p = make_sl(sec.get_int("n", 2));
    } else if (builder == "sl_kpm") {
      const auto& a = lookup(coeffs_, sec.need("coeff"), "coefficient algebra");
      p = make_sl_Kpm(sec.get_int("k", 1), a, Window::box(a->rank(), window_for(sec)));
    } else {
      throw Error(ErrorCode::ConfigError, sec.where() + ": builder must be sl or sl_kpm");
    }
    pairs_[sec.name] = p;
    describe_pair(*p, st);
    const bool division = sec.get("division").value_or("yes") == "yes";
    for (auto& v : iara_suite(*p, bound_, division)) st.verdicts.push_back(std::move(v));
    st.lines.push_back("type " + type_with_nullity(reflection_system(*p)));
  }

  static void describe_pair(const ToralPair& p, StepReport& st) {
    std::size_t dim = 0;
    for (const auto& d : p.window().degrees()) dim += p.algebra().dim(d);
    st.lines.push_back("algebra " + p.algebra().name() + ", toral rank " + std::to_string(p.toral_rank()) +
                       ", dim on window " + std::to_string(dim) + ", " + std::to_string(p.roots().size()) +
                       " roots [" + p.window().stamp() + "]");
  }

  void aut_step(const ConfigSection& sec, StepReport& st) {
    name_required(sec);
    const auto& p = pair(sec.need("base"));
    const std::string kind = sec.need("kind");
    AutPtr s;
    if (kind == "identity") {
      s = identity_automorphism();
    } else if (kind == "involution") {
      s = involution_automorphism(*p);
    } else if (kind == "inner") {
      s = inner_diagonal_automorphism(*p, sec.ints("exps"), sec.get_int("order", 2));
    } else {
      throw Error(ErrorCode::ConfigError, sec.where() + ": kind must be identity, involution or inner");
    }
    auts_[sec.name] = {s, sec.need("base")};
    st.lines.push_back("automorphism " + s->name() + " of order " + std::to_string(s->order()) + " on " + p->name());
  }

  void grade_step(const ConfigSection& sec, StepReport& st) {
    name_required(sec);
    const std::string base = sec.need("base");
    const auto& [s, on] = lookup(auts_, sec.need("automorphism"), "automorphism");
    if (on != base) throw Error(ErrorCode::ConfigError, sec.where() + ": automorphism is defined on '" + on + "'");
    auto gr = std::make_shared<Grading>(pair(base), s);
    register_grading(sec.name, gr, st);
    // the zero root space against the base algebra of the coefficients, for matrix bases
    if (const MatrixAlgebra* m = underlying_matrix_algebra(gr->pair().algebra())) {
      if (m->coeff()->rank() > 0 || m->coeff()->component_dim() > 1) {
        const auto& b = m->coeff()->base();
        const bool ab = gr->zero_root_is_abelian();
        const auto& a = *m->coeff();
        const Degree zero = Degree::zero(a.rank());
        bool comm = true;
        for (std::size_t i = 0; i < a.component_dim(); ++i)
          for (std::size_t j = 0; j < a.component_dim(); ++j)
            if (a.mul(a.basis_element(zero, i), a.basis_element(zero, j)) != a.mul(a.basis_element(zero, j), a.basis_element(zero, i)))
              comm = false;
        const bool field = b.dim() == 1;
        std::string fd = field ? "dim 1" : "";
        if (auto z = b.basis_zero_divisors()) fd = "b" + std::to_string(z->first) + "*b" + std::to_string(z->second) + " = 0";
        st.lines.push_back("g_0 abelian " + yes_no(ab) + ", A^0 = " + b.name() + " commutative " + yes_no(comm) +
                           ", field " + yes_no(field) + (fd.empty() ? "" : " (" + fd + ")"));
        st.verdicts.push_back(make_verdict("g0-abelian-iff-A0-commutative", ab == comm,
                                           "g_0 abelian " + yes_no(ab) + ", A^0 commutative " + yes_no(comm),
                                           gr->pair().window().stamp()));
      }
    }
  }

  void register_grading(const std::string& name, const GradingPtr& gr, StepReport& st) {
    grades_[name] = gr;
    for (auto& v : gr->verify_A1_A3()) st.verdicts.push_back(std::move(v));
    st.verdicts.push_back(gr->verify_A4());
    Verdict a5 = gr->verify_A5();
    const bool ab = gr->zero_root_is_abelian();
    st.lines.push_back("m " + std::to_string(gr->m()) + ", rank T0 " + std::to_string(gr->T0().size()) + ", " +
                       std::to_string(gr->orbit_reps().size()) + " root orbits, g_0 abelian " + yes_no(ab) + ", A5 " +
                       a5.status());
    for (int j = 0; j < gr->m(); ++j) {
      std::size_t n = 0;
      for (const auto& d : gr->pair().window().degrees()) n += gr->component_basis(j, d).size();
      st.lines.push_back("dim g^" + std::to_string(j) + " = " + std::to_string(n) + ", rank T^" + std::to_string(j) +
                         " = " + std::to_string(gr->T_component(j).size()));
    }
    for (auto& v : grading_property_suite(*gr)) st.verdicts.push_back(std::move(v));
    for (auto& v : grading_isotropic_fixed(*gr)) st.verdicts.push_back(std::move(v));
  }

  void restrict_step(const ConfigSection& sec, StepReport& st) {
    const auto& gr = grading(sec.need("grade"));
    for (auto& v : verify_theorem_restricted(*gr, bound_)) st.verdicts.push_back(std::move(v));
    auto rp = restricted_pair(*gr);
    describe_pair(*rp, st);
    st.lines.push_back("type pi(R) " + type_with_nullity(reflection_system(*rp)));
    if (underlying_matrix_algebra(gr->pair().algebra()))
      for (const auto& rv : restricted_value_table(*gr))
        st.lines.push_back("pi(a_" + std::to_string(rv.i) + "," + std::to_string(rv.j) + ")(e_" + std::to_string(rv.i) +
                           std::to_string(rv.i) + "-e_" + std::to_string(rv.j) + std::to_string(rv.j) +
                           ") = " + rv.value.to_string());
  }

  void fixpoint_step(const ConfigSection& sec, StepReport& st) {
    const auto& gr = grading(sec.need("grade"));
    for (auto& v : verify_theorem_fixed(*gr, bound_)) st.verdicts.push_back(std::move(v));
    auto fp = fixed_subalgebra(*gr);
    describe_pair(*fp, st);
    const std::string tf = classify_type(reflection_system(*fp));
    const std::string tr = classify_type(reflection_system(*restricted_pair(*gr)));
    st.lines.push_back("type R^sigma " + tf + ", type pi(R) " + tr + ", same type " + yes_no(tf == tr));
  }

  void affinize_step(const ConfigSection& sec, StepReport& st) {
    name_required(sec);
    const auto& gr = grading(sec.need("grade"));
    const auto& a = lookup(coeffs_, sec.need("coeff"), "coefficient algebra");
    std::vector<int> rho = sec.get("rho") ? sec.ints("rho") : std::vector<int>(a->rank(), 0);
    Affinization af = affinize(gr, a, rho, Window::box(a->rank(), window_for(sec)));
    affs_[sec.name] = af;
    pairs_[sec.name] = af.pair;
    st.lines.push_back("rho " + ints_string(rho) + " onto Z_" + std::to_string(gr->m()));
    describe_pair(*af.pair, st);
    AffinizationOptions o;
    o.bound = bound_;
    o.samples = samples_;
    for (auto& v : verify_theorem_affinization(af, o)) st.verdicts.push_back(std::move(v));
    const std::string th = classify_type(reflection_system(*af.pair));
    const std::string tp = classify_type(reflection_system(*restricted_pair(*gr)));
    st.lines.push_back("type R-hat " + type_with_nullity(reflection_system(*af.pair)) + ", type pi(R) " + tp +
                       ", same type " + yes_no(th == tp));
    const std::size_t k = gr->T0().size();
    const int r = a->rank();
    for (const auto& [h, sp] : af.pair->root_spaces()) {
      std::vector<Scalar> pi(h.c.begin(), h.c.begin() + static_cast<long>(k)),
          lam(h.c.begin() + static_cast<long>(k) + r, h.c.end());
      st.lines.push_back("hat root pi=" + root_string(pi) + " lambda=" + root_string(lam) + " dim " +
                         std::to_string(sp.size()));
    }
  }

  void iterate_step(const ConfigSection& sec, StepReport& st) {
    name_required(sec);
    const std::string an = sec.need("affinization");
    const auto& af = affinization(an);
    const auto& [s, on] = lookup(auts_, sec.need("automorphism"), "automorphism");
    if (pair(on)->algebra_ptr() != af.base().pair().algebra_ptr())
      throw Error(ErrorCode::ConfigError, sec.where() + ": automorphism must act on the base of '" + an + "'");
    std::vector<int> mu = sec.get("mu") ? sec.ints("mu") : std::vector<int>(af.loop->coeff_rank(), 0);
    auto gr = iterate(af, s, mu);
    pairs_[sec.name] = af.pair;
    st.lines.push_back("sigma-hat = (" + s->name() + " x id)(id x mu), mu " + ints_string(mu));
    register_grading(sec.name, gr, st);
  }

  ReflectionSystem system_of(const ConfigSection& sec) const {
    const std::string of = sec.need("of");
    const auto colon = of.find(':');
    const std::string what = colon == std::string::npos ? "pair" : of.substr(0, colon);
    const std::string n = colon == std::string::npos ? of : of.substr(colon + 1);
    if (what == "pair") return reflection_system(*pair(n));
    if (what == "restricted") return reflection_system(*restricted_pair(*grading(n)));
    if (what == "fixed") return reflection_system(*fixed_subalgebra(*grading(n)));
    throw Error(ErrorCode::ConfigError, sec.where() + ": 'of' must be pair:N, restricted:N or fixed:N");
  }

  static QVec parse_qvec(const ConfigSection& sec, const std::vector<std::string>& cells) {
    QVec v;
    for (const auto& c : cells) {
      try {
        v.push_back(Rational::parse(c));
      } catch (const Error&) {
        throw Error(ErrorCode::ConfigError, sec.where() + ": '" + c + "' is not a rational");
      }
    }
    return v;
  }

  // Literal systems: gram rows and root rows, both ';'-separated.
  static ReflectionSystem literal_system(const ConfigSection& sec) {
    auto g = sec.rows("gram");
    const std::size_t n = g.size();
    Matrix<Rational> gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      QVec row = parse_qvec(sec, g[i]);
      if (row.size() != n) throw Error(ErrorCode::ConfigError, sec.where() + ": gram must be square");
      for (std::size_t j = 0; j < n; ++j) gram(i, j) = row[j];
    }
    std::vector<QVec> roots;
    for (const auto& r : sec.rows("list")) {
      QVec v = parse_qvec(sec, r);
      if (v.size() != n) throw Error(ErrorCode::ConfigError, sec.where() + ": root length does not match gram");
      roots.push_back(std::move(v));
    }
    return ReflectionSystem(std::move(gram), std::move(roots));
  }

  void roots_step(const ConfigSection& sec, StepReport& st) {
    ReflectionSystem s = sec.get("gram") ? literal_system(sec) : system_of(sec);
    st.lines.push_back(std::to_string(s.roots().size()) + " roots, " + std::to_string(s.nonisotropic().size()) +
                       " nonisotropic, lattice rank " + std::to_string(s.rank()));
    for (auto& v : check_R1_R5(s)) st.verdicts.push_back(std::move(v));
    if (sec.get("dump").value_or("no") == "yes") {
      std::string g, l;
      for (std::size_t i = 0; i < s.ambient_rank(); ++i) {
        for (std::size_t j = 0; j < s.ambient_rank(); ++j) g += (j ? " " : "") + s.form(unit_qvec(s, i), unit_qvec(s, j)).to_string();
        g += i + 1 < s.ambient_rank() ? "; " : "";
      }
      for (std::size_t i = 0; i < s.roots().size(); ++i) {
        for (std::size_t j = 0; j < s.roots()[i].size(); ++j) l += (j ? " " : "") + s.roots()[i][j].to_string();
        l += i + 1 < s.roots().size() ? "; " : "";
      }
      st.lines.push_back("gram = " + g);
      st.lines.push_back("list = " + l);
    }
    if (sec.get("strings").value_or("no") == "yes") {
      for (const auto& a : s.nonisotropic())
        for (const auto& b : s.roots()) {
          if (!s.inside(b)) continue;
          try {
            auto rs = s.root_string(b, a);
            st.lines.push_back("string beta=" + qvec_string(b) + " alpha=" + qvec_string(a) + " d=" +
                               std::to_string(rs.d) + " u=" + std::to_string(rs.u) + (rs.truncated ? " truncated" : ""));
          } catch (const Error& e) {
            st.lines.push_back("string beta=" + qvec_string(b) + " alpha=" + qvec_string(a) + " broken");
          }
        }
    }
    try {
      st.lines.push_back("type " + type_with_nullity(s));
    } catch (const Error& e) {
      st.lines.push_back(std::string("type unavailable: ") + e.what());
    }
  }

  static QVec unit_qvec(const ReflectionSystem& s, std::size_t i) {
    QVec v(s.ambient_rank(), Rational(0));
    v[i] = Rational(1);
    return v;
  }

  void classify_step(const ConfigSection& sec, StepReport& st) {
    ReflectionSystem s = system_of(sec);
    const std::string t = classify_type(s);
    st.lines.push_back("type " + type_with_nullity(s));
    if (auto want = sec.get("expect"))
      st.verdicts.push_back(make_verdict("type-is-" + *want, t == *want, "classified as " + t, "on window"));
  }

  RunOptions opt_;
  int window_ = 2;
  int bound_ = 10;
  std::size_t samples_ = 10000;
  std::map<std::string, CoeffAlgebraPtr> coeffs_;
  std::map<std::string, PairPtr> pairs_;
  std::map<std::string, std::pair<AutPtr, std::string>> auts_;
  std::map<std::string, GradingPtr> grades_;
  std::map<std::string, Affinization> affs_;
};

inline Report run_pipeline(const std::string& text, const std::string& title, const RunOptions& opt = {}) {
  Pipeline p(opt);
  return p.run(PipelineConfig::parse(text), title);
}

// ---- presets ----

inline const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> p = {
      {"sl_n_untwisted", R"(# sl3 tensor Q[z^+-1] plus V and V-dagger, untwisted
[global]
window = 3

[coeff-algebra Z]
base = Q
rank = 1

[build-base g]
builder = sl
n = 3

[automorphism id]
base = g
kind = identity

[grade G]
base = g
automorphism = id

[affinize H]
grade = G
coeff = Z
rho = 0

[classify]
of = pair:H
expect = A2
)"},
      {"sl3_transpose_involution", R"(# sl3 with x -> -x^t read along the anti-diagonal
[global]
window = 2

[build-base g]
builder = sl
n = 3

[automorphism s]
base = g
kind = involution

[grade G]
base = g
automorphism = s

[restrict]
grade = G

[fixpoint]
grade = G

[classify]
of = restricted:G
expect = BC1
)"},
      {"example7_1", R"(# sl2 tensor a twisted group algebra of Z^2 over Q^2
[global]
window = 1

[coeff-algebra A]
base = Q^2
rank = 2
tau = 1 2 -1; 2 1 -1

[build-base g]
builder = sl
n = 2

[automorphism id]
base = g
kind = identity

[grade G]
base = g
automorphism = id

[affinize H]
grade = G
coeff = A
rho = 0 0

[classify]
of = pair:H
expect = A1
)"},
      {"example7_2", R"(# affinize sl3, grade the result by sigma-hat, affinize again
[global]
window = 2

[coeff-algebra Z]
base = Q
rank = 1

[build-base g]
builder = sl
n = 3

[automorphism id]
base = g
kind = identity

[automorphism s]
base = g
kind = involution

[grade G]
base = g
automorphism = id

[affinize H]
grade = G
coeff = Z
rho = 0

[iterate G2]
affinization = H
automorphism = s
mu = 1

[affinize H2]
grade = G2
coeff = Z
rho = 1

[classify]
of = pair:H2
expect = BC1
)"},
      {"example7_3", R"(# sl over B_q[z^+-1] indexed by K^+- with K = {1}, J = {1}, B = Q
[global]
window = 1

[coeff-algebra A]
base = Q
rank = 1

[coeff-algebra W]
base = Q
rank = 1

[build-base g]
builder = sl_kpm
k = 1
coeff = A

[automorphism s]
base = g
kind = involution

[grade G]
base = g
automorphism = s

[restrict]
grade = G

[fixpoint]
grade = G

[classify]
of = restricted:G
expect = BC1

[affinize H]
grade = G
coeff = W
rho = 1
window = 2

[classify]
of = pair:H
expect = BC1

# the same base over B = Q^2, which is commutative but not a field
[coeff-algebra A2]
base = Q^2
rank = 1

[build-base g2]
builder = sl_kpm
k = 1
coeff = A2
division = no

[automorphism s2]
base = g2
kind = involution

[grade G2]
base = g2
automorphism = s2
)"},
  };
  return p;
}

}  // namespace iara
