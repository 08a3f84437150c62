#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "iara/linalg.hpp"
#include "iara/rational.hpp"
#include "iara/verdict.hpp"

namespace iara {

using QVec = std::vector<Rational>;

inline std::string qvec_string(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

inline QVec qvec_add(QVec a, const QVec& b, const Rational& k = Rational(1)) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

inline bool qvec_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// Row-style Hermite normal form; returns a Z-basis of the lattice spanned by the rows.
inline std::vector<std::vector<mpz_class>> hermite_basis(std::vector<std::vector<mpz_class>> rows, std::size_t n) {
  std::vector<std::vector<mpz_class>> out;
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    // gcd-combine all rows below top into a single pivot at this column
    for (std::size_t i = top + 1; i < rows.size(); ++i) {
      while (rows[i][col] != 0) {
        mpz_class q = rows[top][col] / rows[i][col];
        for (std::size_t c = col; c < n; ++c) rows[top][c] -= q * rows[i][c];
        std::swap(rows[top], rows[i]);
      }
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t i = 0; i < top; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
      for (std::size_t c = col; c < n; ++c) rows[i][c] -= q * rows[top][c];
    }
    ++top;
  }
  for (std::size_t i = 0; i < top; ++i) out.push_back(rows[i]);
  return out;
}

// Exact test of positive semidefiniteness by symmetric pivoting.
inline bool is_psd(Matrix<Rational> g) {
  const std::size_t n = g.rows();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && !g(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p == n) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && !g(i, j).is_zero()) return false;
      return true;
    }
    if (g(p, p).sign() < 0) return false;
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Rational f = g(i, p) / g(p, p);
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) g(i, j) -= f * g(p, j);
    }
  }
  return true;
}

struct RootString {
  QVec beta, alpha;
  int d = 0, u = 0;
  bool truncated = false;
};

// A windowed root set with a symmetric form given on ambient coordinates.
// `inside(v)` says whether v lies in the window, where membership in R is decided exactly.
class ReflectionSystem {
 public:
  using Inside = std::function<bool(const QVec&)>;

  ReflectionSystem(Matrix<Rational> ambient_gram, std::vector<QVec> roots, Inside inside = {})
      : gram_(std::move(ambient_gram)), inside_(std::move(inside)) {
    k_ = gram_.rows();
    for (auto& r : roots) {
      if (r.size() != k_) throw Error(ErrorCode::InvalidArgument, "root has wrong length");
      set_.insert(r);
    }
    roots_.assign(set_.begin(), set_.end());
    build_lattice();
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      norms_.push_back(form(roots_[i], roots_[i]));
      if (norms_.back().is_zero()) iso_.push_back(i);
      else noniso_.push_back(i);
    }
  }

  std::size_t ambient_rank() const { return k_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<QVec>& roots() const { return roots_; }
  const std::vector<QVec>& lattice_basis() const { return basis_; }
  const Matrix<Rational>& lattice_gram() const { return lgram_; }
  bool windowed() const { return static_cast<bool>(inside_); }
  bool inside(const QVec& v) const { return !inside_ || inside_(v); }
  bool contains(const QVec& v) const { return set_.count(v) > 0; }
  Rational form(const QVec& a, const QVec& b) const {
    Rational s;
    for (std::size_t i = 0; i < k_; ++i)
      if (!a[i].is_zero())
        for (std::size_t j = 0; j < k_; ++j) s += a[i] * gram_(i, j) * b[j];
    return s;
  }
  bool is_isotropic(const QVec& a) const { return form(a, a).is_zero(); }
  std::vector<QVec> nonisotropic() const { return pick(noniso_); }
  std::vector<QVec> isotropic() const { return pick(iso_); }
  // Integer coordinates in the lattice basis.
  const std::vector<mpz_class>& lattice_coords(const QVec& a) const { return coords_.at(a); }
  bool in_radical(const QVec& a) const {
    for (const auto& b : basis_)
      if (!form(a, b).is_zero()) return false;
    return true;
  }
  Rational max_norm() const {
    Rational m;
    for (const auto& n : norms_) m = std::max(m, n);
    return m;
  }

  // (β + Zα) ∩ R = {β - dα, ..., β + uα}; truncated when the line leaves the window first.
  RootString root_string(const QVec& beta, const QVec& alpha) const {
    const Rational aa = form(alpha, alpha);
    if (aa.is_zero()) throw Error(ErrorCode::InvalidArgument, "string direction must be nonisotropic");
    const Rational ba = form(beta, alpha), bb = form(beta, beta), big = max_norm();
    const Rational vertex = -ba / aa;
    auto q = [&](long k) { return bb + Rational(2 * k) * ba + Rational(k * k) * aa; };
    RootString rs{beta, alpha};
    std::vector<long> hits;
    bool out_of_window = false;
    for (int dir : {1, -1})
      for (long k = (dir > 0 ? 0 : -1);; k += dir) {
        const bool past = dir > 0 ? Rational(k) > vertex : Rational(k) < vertex;
        if (past && q(k) > big) break;
        QVec v = qvec_add(beta, alpha, Rational(k));
        if (!inside(v)) {
          out_of_window = true;
          continue;
        }
        if (contains(v)) hits.push_back(k);
      }
    std::sort(hits.begin(), hits.end());
    if (hits.empty() || !contains(beta))
      throw Error(ErrorCode::InvalidArgument, "string base is not a root");
    const long lo = hits.front(), hi = hits.back();
    if (static_cast<long>(hits.size()) != hi - lo + 1) {
      if (out_of_window) {
        rs.truncated = true;
        return rs;
      }
      throw Error(ErrorCode::StringBroken, "gap in the " + qvec_string(alpha) + "-string through " + qvec_string(beta));
    }
    rs.d = static_cast<int>(-lo);
    rs.u = static_cast<int>(hi);
    rs.truncated = out_of_window && (!inside(qvec_add(beta, alpha, Rational(lo - 1))) ||
                                     !inside(qvec_add(beta, alpha, Rational(hi + 1))));
    return rs;
  }

  Rational cartan(const QVec& beta, const QVec& alpha) const {
    return Rational(2) * form(beta, alpha) / form(alpha, alpha);
  }

  // Components of R^× under non-orthogonality; entries index nonisotropic().
  std::vector<std::vector<std::size_t>> components() const {
    auto nr = nonisotropic();
    std::vector<int> comp(nr.size(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < nr.size(); ++s) {
      if (comp[s] >= 0) continue;
      const int c = static_cast<int>(out.size());
      out.emplace_back();
      std::vector<std::size_t> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        out[c].push_back(i);
        for (std::size_t j = 0; j < nr.size(); ++j)
          if (comp[j] < 0 && !form(nr[i], nr[j]).is_zero()) {
            comp[j] = c;
            stack.push_back(j);
          }
      }
      std::sort(out[c].begin(), out[c].end());
    }
    return out;
  }

 private:
  std::vector<QVec> pick(const std::vector<std::size_t>& idx) const {
    std::vector<QVec> out;
    for (auto i : idx) out.push_back(roots_[i]);
    return out;
  }

  void build_lattice() {
    mpz_class den = 1;
    for (const auto& r : roots_)
      for (const auto& x : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.den().get_mpz_t());
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& r : roots_) {
      std::vector<mpz_class> row;
      for (const auto& x : r) row.push_back(x.num() * (den / x.den()));
      rows.push_back(std::move(row));
    }
    for (const auto& b : hermite_basis(rows, k_)) {
      QVec v;
      for (const auto& x : b) v.push_back(Rational(x, den));
      basis_.push_back(std::move(v));
    }
    const std::size_t n = basis_.size();
    lgram_ = Matrix<Rational>(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lgram_(i, j) = form(basis_[i], basis_[j]);
    std::vector<Vec<Rational>> cols(basis_.begin(), basis_.end());
    Matrix<Rational> bm = Matrix<Rational>::from_columns(cols, k_);
    for (const auto& r : roots_) {
      auto c = solve(bm, Vec<Rational>(r));
      if (!c) throw Error(ErrorCode::InvalidArgument, "root outside its own lattice");
      std::vector<mpz_class> z;
      for (const auto& x : *c) {
        if (!x.is_integer()) throw Error(ErrorCode::InvalidArgument, "lattice basis is not a Z-basis");
        z.push_back(x.num());
      }
      coords_.emplace(r, std::move(z));
    }
  }

  std::size_t k_ = 0;
  Matrix<Rational> gram_;
  Inside inside_;
  std::set<QVec> set_;
  std::vector<QVec> roots_;
  std::vector<Rational> norms_;
  std::vector<std::size_t> iso_, noniso_;
  std::vector<QVec> basis_;
  Matrix<Rational> lgram_;
  std::map<QVec, std::vector<mpz_class>> coords_;
};

inline std::vector<Verdict> check_R1_R5(const ReflectionSystem& s) {
  const std::string stamp = s.windowed() ? "on window" : "W=finite";
  std::vector<Verdict> out;
  const auto nr = s.nonisotropic();
  const auto iso = s.isotropic();
  if (nr.empty()) {
    for (const char* n : {"R1", "R2", "R3", "R4", "R5"})
      out.push_back(make_verdict(n, false, "no nonisotropic roots, so the form on <R> is trivial", stamp));
    return out;
  }
  {
    Verdict v = make_verdict("form-psd", is_psd(s.lattice_gram()), "form on <R> is positive semidefinite", stamp);
    if (!v.pass) v.detail = "form on <R> is not positive semidefinite";
    out.push_back(v);
  }
  {
    Verdict v = make_verdict("R0", s.contains(QVec(s.ambient_rank(), Rational(0))), "0 in R", stamp);
    if (!v.pass) v.detail = "0 is not a root";
    out.push_back(v);
  }
  {
    Verdict v = make_verdict("R1", true, "R = -R", stamp);
    for (const auto& a : s.roots()) {
      QVec m = a;
      for (auto& x : m) x = -x;
      if (s.inside(m) && !s.contains(m)) {
        v.pass = false;
        v.detail = "-" + qvec_string(a) + " is not a root";
        v.witnesses.push_back(qvec_string(a));
        break;
      }
    }
    out.push_back(v);
  }
  out.push_back(make_verdict("R2", s.rank() > 0,
                             "<R> has a Z-basis of rank " + std::to_string(s.rank()) + " taken as A", stamp));
  {
    Verdict v = make_verdict("R3", true, "", stamp);
    long checked = 0, skipped = 0;
    for (const auto& a : nr) {
      for (const auto& b : s.roots()) {
        try {
          RootString rs = s.root_string(b, a);
          if (rs.truncated) {
            ++skipped;
            continue;
          }
          ++checked;
          if (Rational(rs.d - rs.u) != s.cartan(b, a)) {
            v.pass = false;
            v.detail = "d-u != (b, a^v) for a=" + qvec_string(a) + ", b=" + qvec_string(b);
          }
        } catch (const Error& e) {
          v.pass = false;
          v.detail = e.what();
        }
        if (!v.pass) break;
      }
      if (!v.pass) break;
    }
    if (v.pass)
      v.detail = "unbroken strings with d-u = (b, a^v) on " + std::to_string(checked) + " pairs (" +
                 std::to_string(skipped) + " boundary strings excluded)";
    out.push_back(v);
  }
  {
    auto comps = s.components();
    Verdict v = make_verdict("R4", comps.size() == 1, "R^x is connected", stamp);
    if (!v.pass) v.detail = "R^x splits into " + std::to_string(comps.size()) + " orthogonal parts";
    out.push_back(v);
  }
  {
    Verdict v = make_verdict("R5", true, "", stamp);
    long n = 0;
    for (const auto& d : iso) {
      if (qvec_zero(d)) continue;
      ++n;
      bool found = false;
      for (const auto& a : nr) {
        QVec b = qvec_add(a, d, Rational(-1));
        if (s.contains(b) && !s.is_isotropic(b)) {
          found = true;
          break;
        }
      }
      if (!found) {
        v.pass = false;
        v.detail = qvec_string(d) + " is not a difference of nonisotropic roots";
        break;
      }
    }
    if (v.pass) v.detail = n ? "R^0 in R^x - R^x for " + std::to_string(n) + " isotropic roots" : "R^0 = {0}";
    out.push_back(v);
  }
  return out;
}

namespace detail {

using Fingerprint = std::multiset<std::tuple<Rational, Rational, Rational>>;

inline Fingerprint fingerprint(const std::vector<QVec>& rs, const std::function<Rational(const QVec&, const QVec&)>& f) {
  Rational mn;
  bool first = true;
  for (const auto& a : rs) {
    Rational n = f(a, a);
    if (first || n < mn) mn = n;
    first = false;
  }
  Fingerprint fp;
  for (const auto& a : rs)
    for (const auto& b : rs) {
      Rational aa = f(a, a);
      fp.emplace(aa / mn, f(b, b) / mn, Rational(2) * f(b, a) / aa);
    }
  return fp;
}

inline std::vector<QVec> canonical_roots(char type, int n, bool bc = false) {
  std::vector<QVec> out;
  auto e = [&](int dim, std::vector<std::pair<int, int>> terms) {
    QVec v(dim, Rational(0));
    for (auto [i, c] : terms) v[i] += Rational(c);
    return v;
  };
  if (type == 'A') {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (i != j) out.push_back(e(n + 1, {{i, 1}, {j, -1}}));
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {1, -1})
        for (int t : {1, -1}) out.push_back(e(n, {{i, s}, {j, t}}));
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      if (type == 'B' || bc) out.push_back(e(n, {{i, s}}));
      if (type == 'C' || bc) out.push_back(e(n, {{i, 2 * s}}));
    }
  return out;
}

inline Rational dot(const QVec& a, const QVec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::string classify_component(const std::vector<QVec>& rs, const ReflectionSystem& s) {
  // rank of the image modulo the radical equals the rank of the Gram matrix on the component
  Matrix<Rational> g(rs.size(), rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < rs.size(); ++j) g(i, j) = s.form(rs[i], rs[j]);
  const int n = static_cast<int>(iara::rank(g));
  if (n > 4) throw Error(ErrorCode::RankTooHigh, "classification is limited to rank 4");
  auto f = [&](const QVec& a, const QVec& b) { return s.form(a, b); };
  Fingerprint fp = fingerprint(rs, f);
  std::vector<std::pair<std::string, std::vector<QVec>>> cands;
  cands.push_back({"A" + std::to_string(n), canonical_roots('A', n)});
  if (n >= 2) cands.push_back({"B" + std::to_string(n), canonical_roots('B', n)});
  if (n >= 3) cands.push_back({"C" + std::to_string(n), canonical_roots('C', n)});
  if (n >= 4) cands.push_back({"D" + std::to_string(n), canonical_roots('D', n)});
  cands.push_back({"BC" + std::to_string(n), canonical_roots('B', n, true)});
  for (const auto& [name, roots] : cands)
    if (roots.size() == rs.size() && fingerprint(roots, dot) == fp) return name;
  return "unrecognized";
}

}  // namespace detail

// Type of the image of R^× modulo the radical, components joined by "+".
inline std::string classify_type(const ReflectionSystem& s) {
  auto nr = s.nonisotropic();
  if (nr.empty()) return "unrecognized";
  // identify roots with equal images modulo the radical
  std::vector<QVec> images;
  std::vector<QVec> reps;
  for (const auto& a : nr) {
    QVec img;
    for (const auto& b : s.lattice_basis()) img.push_back(s.form(a, b));
    if (std::find(images.begin(), images.end(), img) == images.end()) {
      images.push_back(img);
      reps.push_back(a);
    }
  }
  std::vector<std::string> labels;
  std::vector<int> comp(reps.size(), -1);
  int nc = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (comp[i] >= 0) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < reps.size(); ++j)
        if (comp[j] < 0 && !s.form(reps[x], reps[j]).is_zero()) {
          comp[j] = nc;
          stack.push_back(j);
        }
    }
    ++nc;
  }
  for (int c = 0; c < nc; ++c) {
    std::vector<QVec> part;
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (comp[i] == c) part.push_back(reps[i]);
    labels.push_back(detail::classify_component(part, s));
  }
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "+") + l;
  return out;
}

// σ fixes every isotropic root, given σ permutes R, has period m, and π(δ) != 0 for isotropic δ != 0.
// Returns the hypothesis verdict and the conclusion verdict separately.
inline std::vector<Verdict> check_isotropic_fixed(const ReflectionSystem& s, const std::function<QVec(const QVec&)>& sigma,
                                                  int m) {
  const std::string stamp = s.windowed() ? "on window" : "W=finite";
  Verdict hyp = make_verdict("isotropic-hypotheses", true, "", stamp);
  auto fail_hyp = [&](std::string why) {
    if (hyp.pass) hyp.detail = std::move(why);
    hyp.pass = false;
  };
  for (const auto& a : s.roots()) {
    QVec b = sigma(a);
    if (s.inside(b) && !s.contains(b)) fail_hyp("sigma maps " + qvec_string(a) + " outside R");
    if (s.form(b, b) != s.form(a, a)) fail_hyp("sigma changes the length of " + qvec_string(a));
    QVec c = a;
    for (int i = 0; i < m; ++i) c = sigma(c);
    if (c != a) fail_hyp("sigma^" + std::to_string(m) + " moves " + qvec_string(a));
  }
  long n_iso = 0;
  for (const auto& d : s.isotropic()) {
    if (qvec_zero(d)) continue;
    ++n_iso;
    QVec acc(d.size(), Rational(0)), c = d;
    for (int i = 0; i < m; ++i) {
      acc = qvec_add(acc, c);
      c = sigma(c);
    }
    if (qvec_zero(acc)) fail_hyp("pi(d) = 0 for isotropic d=" + qvec_string(d));
  }
  if (hyp.pass) hyp.detail = "sigma permutes R with period dividing " + std::to_string(m) + ", pi(d) != 0 on " +
                             std::to_string(n_iso) + " isotropic roots";
  Verdict con = make_verdict("isotropic-fixed", true, "", stamp);
  if (!hyp.pass) {
    con.pass = false;
    con.conclusive = false;
    con.detail = "not applicable: hypotheses unmet";
  } else {
    for (const auto& d : s.isotropic())
      if (sigma(d) != d) {
        con.pass = false;
        con.detail = "sigma moves isotropic root " + qvec_string(d);
        break;
      }
    if (con.pass) con.detail = "sigma(d) = d for all " + std::to_string(n_iso) + " nonzero isotropic roots";
  }
  return {hyp, con};
}

}  // namespace iara
