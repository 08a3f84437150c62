#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iara/cyclotomic.hpp"
#include "iara/lattice.hpp"
#include "iara/linalg.hpp"

namespace iara {

// Finite-dimensional commutative unital algebra B with basis b_0..b_{n-1} and form ε_B.
class BaseAlgebra {
 public:
  // The ground field itself, with ε_B(1,1) = 1.
  static BaseAlgebra field() {
    BaseAlgebra b;
    b.name_ = "Q";
    b.dim_ = 1;
    b.mult_ = {{{Scalar(1)}}};
    b.unit_ = {Scalar(1)};
    b.form_ = Matrix<Scalar>::identity(1);
    b.known_field_ = true;
    return b;
  }
  // F^k with componentwise product and ε_B(x,y) = Σ x_i y_i.
  static BaseAlgebra product(int k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "product algebra needs k >= 1");
    if (k == 1) return field();
    BaseAlgebra b;
    b.name_ = "Q^" + std::to_string(k);
    b.dim_ = k;
    b.mult_.assign(k, std::vector<Vec<Scalar>>(k, Vec<Scalar>(k, Scalar(0))));
    for (int i = 0; i < k; ++i) b.mult_[i][i][i] = Scalar(1);
    b.unit_.assign(k, Scalar(1));
    b.form_ = Matrix<Scalar>::identity(k);
    b.known_field_ = false;
    return b;
  }
  // F^k with ε_B(x,y) = (1/k) Σ x_i y_i, so that ε_B(1,1) = 1.
  static BaseAlgebra product_normalized(int k) {
    BaseAlgebra b = product(k);
    if (k > 1) {
      b.name_ += "'";
      b.form_ = Matrix<Scalar>::identity(k).scaled(Scalar(Rational(1) / Rational(k)));
    }
    return b;
  }
  // General structure constants; mult[i][j] holds the coordinates of b_i b_j.
  static BaseAlgebra from_structure(std::string name, std::vector<std::vector<Vec<Scalar>>> mult,
                                    Vec<Scalar> unit, Matrix<Scalar> form) {
    BaseAlgebra b;
    b.name_ = std::move(name);
    b.dim_ = unit.size();
    b.mult_ = std::move(mult);
    b.unit_ = std::move(unit);
    b.form_ = std::move(form);
    b.known_field_ = b.dim_ == 1;
    b.validate();
    return b;
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Vec<Scalar>& unit() const { return unit_; }
  bool known_field() const { return known_field_; }

  Vec<Scalar> mul(const Vec<Scalar>& a, const Vec<Scalar>& b) const {
    Vec<Scalar> r(dim_, Scalar(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        Scalar c = a[i] * b[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!mult_[i][j][k].is_zero()) r[k] += c * mult_[i][j][k];
      }
    }
    return r;
  }
  Scalar eps(const Vec<Scalar>& a, const Vec<Scalar>& b) const {
    Scalar s(0);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (!a[i].is_zero() && !b[j].is_zero() && !form_(i, j).is_zero()) s += a[i] * b[j] * form_(i, j);
    return s;
  }
  // Matrix of left multiplication by a.
  Matrix<Scalar> left_mul(const Vec<Scalar>& a) const {
    Matrix<Scalar> m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec<Scalar> e(dim_, Scalar(0));
      e[j] = Scalar(1);
      Vec<Scalar> p = mul(a, e);
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = p[i];
    }
    return m;
  }
  // Basis vectors b_i, b_j with b_i b_j = 0, which rules out B being a field.
  std::optional<std::pair<std::size_t, std::size_t>> basis_zero_divisors() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        const Vec<Scalar>& p = mult_[i][j];
        if (std::all_of(p.begin(), p.end(), [](const Scalar& x) { return x.is_zero(); })) return std::make_pair(i, j);
      }
    return std::nullopt;
  }
  std::optional<Vec<Scalar>> inverse(const Vec<Scalar>& a) const {
    auto x = solve(left_mul(a), unit_);
    if (!x) return std::nullopt;
    if (mul(*x, a) != unit_) return std::nullopt;
    return x;
  }
  Vec<Scalar> scalar(const Scalar& s) const {
    Vec<Scalar> v = unit_;
    for (auto& x : v) x *= s;
    return v;
  }
  Vec<Scalar> basis_vector(std::size_t i) const {
    Vec<Scalar> v(dim_, Scalar(0));
    v[i] = Scalar(1);
    return v;
  }

 private:
  void validate() const {
    if (mult_.size() != dim_) throw Error(ErrorCode::InvalidArgument, "structure table size mismatch");
    if (form_.rows() != dim_ || form_.cols() != dim_) throw Error(ErrorCode::InvalidArgument, "form size mismatch");
    if (eps(unit_, unit_).is_zero()) throw Error(ErrorCode::DegenerateBaseForm, "eps_B(1,1) = 0");
    if (determinant(form_).is_zero()) throw Error(ErrorCode::DegenerateBaseForm, "base form is degenerate");
  }

  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::vector<Vec<Scalar>>> mult_;
  Vec<Scalar> unit_;
  Matrix<Scalar> form_;
  bool known_field_ = false;
};

// Finitely supported map degree -> B-coordinates.
class CoeffElement {
 public:
  CoeffElement() = default;
  static CoeffElement homogeneous(const Degree& d, Vec<Scalar> b) {
    CoeffElement e;
    if (!is_zero_vec(b)) e.terms_.emplace(d, std::move(b));
    return e;
  }
  const std::map<Degree, Vec<Scalar>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const { return terms_.size() == 1; }
  const Degree& degree() const {
    if (terms_.size() != 1) throw Error(ErrorCode::NotHomogeneous, "element is not homogeneous");
    return terms_.begin()->first;
  }
  Vec<Scalar> component(const Degree& d, std::size_t dim) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Vec<Scalar>(dim, Scalar(0)) : it->second;
  }
  void add(const Degree& d, const Vec<Scalar>& b) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      if (!is_zero_vec(b)) terms_.emplace(d, b);
      return;
    }
    for (std::size_t i = 0; i < b.size(); ++i) it->second[i] += b[i];
    if (is_zero_vec(it->second)) terms_.erase(it);
  }
  friend CoeffElement operator+(CoeffElement a, const CoeffElement& b) {
    for (const auto& [d, v] : b.terms_) a.add(d, v);
    return a;
  }
  CoeffElement scaled(const Scalar& s) const {
    CoeffElement r;
    if (s.is_zero()) return r;
    for (const auto& [d, v] : terms_) {
      Vec<Scalar> w = v;
      for (auto& x : w) x *= s;
      r.terms_.emplace(d, std::move(w));
    }
    return r;
  }
  friend CoeffElement operator-(const CoeffElement& a, const CoeffElement& b) { return a + b.scaled(Scalar(-1)); }
  friend bool operator==(const CoeffElement& a, const CoeffElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Degree, Vec<Scalar>> terms_;
};

struct PredicateResult {
  bool holds = false;
  bool exhaustive = true;  // false when a structure-constant base was only searched
  std::string detail;
};

struct SplitEntry {
  Degree degree;
  bool in_commutator = false;
  bool in_center = false;
};

struct SplitReport {
  bool ok = true;
  std::vector<SplitEntry> entries;
  std::string witness;
};

// Λ-graded algebra A = ⊕ B u_λ with u_λ u_μ = f(λ,μ) u_{λ+μ}.
// Twisted group algebras take f = τ, a biadditive symmetric table of units of B;
// q-algebras take f = ±1 from reordering z^λ z^μ into the fixed normal form.
class GradedCoefficientAlgebra {
 public:
  enum class Kind { TwistedGroup, Quantum };

  static std::shared_ptr<const GradedCoefficientAlgebra> twisted_group(
      BaseAlgebra base, int rank, std::vector<std::vector<Vec<Scalar>>> tau_table = {}) {
    auto a = std::shared_ptr<GradedCoefficientAlgebra>(new GradedCoefficientAlgebra());
    a->kind_ = Kind::TwistedGroup;
    a->base_ = std::move(base);
    a->rank_ = rank;
    if (tau_table.empty()) {
      tau_table.assign(rank, std::vector<Vec<Scalar>>(rank, a->base_.unit()));
    }
    a->tau_ = std::move(tau_table);
    a->validate_cocycle();
    return a;
  }

  static std::shared_ptr<const GradedCoefficientAlgebra> q_algebra(BaseAlgebra base,
                                                                   std::vector<std::vector<int>> q,
                                                                   std::vector<int> total_order = {}) {
    auto a = std::shared_ptr<GradedCoefficientAlgebra>(new GradedCoefficientAlgebra());
    a->kind_ = Kind::Quantum;
    a->base_ = std::move(base);
    a->rank_ = static_cast<int>(q.size());
    for (int i = 0; i < a->rank_; ++i) {
      if (static_cast<int>(q[i].size()) != a->rank_) throw Error(ErrorCode::InvalidSignMatrix, "q must be square");
      if (q[i][i] != 1) throw Error(ErrorCode::InvalidSignMatrix, "q_ii must be 1");
      for (int j = 0; j < a->rank_; ++j) {
        if (q[i][j] != 1 && q[i][j] != -1) throw Error(ErrorCode::InvalidSignMatrix, "q entries must be +-1");
        if (q[i][j] != q[j][i]) throw Error(ErrorCode::InvalidSignMatrix, "q must be symmetric");
      }
    }
    if (total_order.empty())
      for (int i = 0; i < a->rank_; ++i) total_order.push_back(i);
    std::vector<int> seen(a->rank_, 0);
    if (static_cast<int>(total_order.size()) != a->rank_)
      throw Error(ErrorCode::InvalidSignMatrix, "total order must list every generator");
    for (int x : total_order) {
      if (x < 0 || x >= a->rank_ || seen[x]++) throw Error(ErrorCode::InvalidSignMatrix, "bad total order");
    }
    a->position_.assign(a->rank_, 0);
    for (int p = 0; p < a->rank_; ++p) a->position_[total_order[p]] = p;
    a->q_ = std::move(q);
    return a;
  }

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  const BaseAlgebra& base() const { return base_; }
  std::size_t component_dim() const { return base_.dim(); }
  bool commutative() const {
    if (kind_ == Kind::TwistedGroup) return true;
    for (const auto& row : q_)
      for (int x : row)
        if (x != 1) return false;
    return true;
  }
  std::string name() const {
    std::string s = base_.name();
    s += kind_ == Kind::TwistedGroup ? "^t[Z^" : "_q[Z^";
    return s + std::to_string(rank_) + "]";
  }

  // f(λ, μ) as an element of B.
  Vec<Scalar> factor(const Degree& l, const Degree& m) const {
    if (kind_ == Kind::Quantum) return base_.scalar(Scalar(sign(l, m)));
    Vec<Scalar> r = base_.unit();
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        long e = static_cast<long>(l[i]) * m[j];
        if (e == 0) continue;
        Vec<Scalar> t = tau_[i][j];
        if (e < 0) {
          auto inv = base_.inverse(t);
          if (!inv) throw Error(ErrorCode::InvalidCocycle, "cocycle value is not a unit");
          t = *inv;
          e = -e;
        }
        for (long k = 0; k < e; ++k) r = base_.mul(r, t);
      }
    return r;
  }

  CoeffElement unit() const { return CoeffElement::homogeneous(Degree::zero(rank_), base_.unit()); }
  CoeffElement monomial(const Degree& d) const { return CoeffElement::homogeneous(d, base_.unit()); }
  CoeffElement basis_element(const Degree& d, std::size_t i) const {
    return CoeffElement::homogeneous(d, base_.basis_vector(i));
  }

  CoeffElement mul(const CoeffElement& a, const CoeffElement& b) const {
    CoeffElement r;
    for (const auto& [da, va] : a.terms())
      for (const auto& [db, vb] : b.terms()) r.add(da + db, base_.mul(base_.mul(va, vb), factor(da, db)));
    return r;
  }

  // Trace form ε(a,b) = ε_B(coefficient of u_0 in ab, 1).
  Scalar form_eps(const CoeffElement& a, const CoeffElement& b) const {
    Scalar s(0);
    for (const auto& [da, va] : a.terms()) {
      Degree target = -da;
      auto it = b.terms().find(target);
      if (it == b.terms().end()) continue;
      s += base_.eps(base_.mul(base_.mul(va, it->second), factor(da, target)), base_.unit());
    }
    return s;
  }

  CoeffElement invert_homogeneous(const CoeffElement& a) const {
    if (!a.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "inverse needs a homogeneous element");
    const Degree& d = a.degree();
    const Vec<Scalar>& b = a.terms().begin()->second;
    auto binv = base_.inverse(b);
    auto finv = base_.inverse(factor(d, -d));
    if (!binv || !finv) throw Error(ErrorCode::NotInvertible, "homogeneous element is not invertible");
    CoeffElement c = CoeffElement::homogeneous(-d, base_.mul(*binv, *finv));
    if (!(mul(a, c) == unit()) || !(mul(c, a) == unit()))
      throw Error(ErrorCode::NotInvertible, "two-sided inverse check failed");
    return c;
  }

  // Anti-involution fixing B and every z_j.
  CoeffElement bar(const CoeffElement& a) const {
    if (kind_ == Kind::TwistedGroup) return a;
    CoeffElement r;
    for (const auto& [d, v] : a.terms()) {
      int s = 1;
      for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
          if (position_[i] < position_[j] && q_[i][j] == -1 && ((static_cast<long>(d[i]) * d[j]) & 1)) s = -s;
      Vec<Scalar> w = v;
      if (s < 0)
        for (auto& x : w) x = -x;
      r.add(d, w);
    }
    return r;
  }

  PredicateResult is_predivision(const Window& w) const {
    for (const auto& d : w.degrees()) {
      if (!base_.inverse(factor(d, -d)))
        return {false, true, "u" + d.to_string() + " is not invertible"};
    }
    return {true, true, "u_lambda invertible for every lambda (verified on window)"};
  }
  PredicateResult is_division(const Window& w) const {
    auto pre = is_predivision(w);
    if (!pre.holds) return pre;
    if (base_.known_field()) return {true, true, "B is a field (verified on window)"};
    for (std::size_t i = 0; i < base_.dim(); ++i) {
      auto v = base_.basis_vector(i);
      if (!base_.inverse(v))
        return {false, true, "basis element b" + std::to_string(i) + " of B is a nonzero non-invertible element"};
      for (std::size_t j = i + 1; j < base_.dim(); ++j) {
        Vec<Scalar> u = v;
        u[j] -= Scalar(1);
        if (!base_.inverse(u))
          return {false, true, "b" + std::to_string(i) + "-b" + std::to_string(j) + " is not invertible"};
      }
    }
    return {true, false, "no non-invertible element found among searched elements of B"};
  }
  PredicateResult is_torus(const Window& w) const {
    auto pre = is_predivision(w);
    if (!pre.holds) return pre;
    if (base_.dim() != 1) return {false, true, "dim A^lambda = " + std::to_string(base_.dim())};
    return {true, true, "dim A^lambda = 1 and u_lambda invertible (verified on window)"};
  }

  // Each graded piece must lie wholly in [A,A] or in Z(A), never both.
  SplitReport commutator_center_split(const Window& w) const {
    SplitReport rep;
    for (const auto& d : w.degrees()) {
      SplitEntry e{d, false, true};
      for (int i = 0; i < rank_; ++i) {
        Degree ei = Degree::unit(rank_, i);
        CoeffElement comm = mul(monomial(ei), monomial(d - ei)) - mul(monomial(d - ei), monomial(ei));
        if (!comm.is_zero()) e.in_commutator = true;
        CoeffElement c2 = mul(monomial(d), monomial(ei)) - mul(monomial(ei), monomial(d));
        if (!c2.is_zero()) e.in_center = false;
      }
      if (e.in_commutator == e.in_center) {
        rep.ok = false;
        if (rep.witness.empty()) rep.witness = d.to_string();
      }
      rep.entries.push_back(e);
    }
    return rep;
  }

  // Symmetry and the cocycle identity on generator triples.
  bool cocycle_valid(std::string* why = nullptr) const {
    if (kind_ != Kind::TwistedGroup) return true;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        if (tau_[i][j] != tau_[j][i]) {
          if (why) *why = "tau not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          return false;
        }
        if (!base_.inverse(tau_[i][j])) {
          if (why) *why = "tau value is not a unit";
          return false;
        }
      }
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        for (int k = 0; k < rank_; ++k) {
          Degree a = Degree::unit(rank_, i), b = Degree::unit(rank_, j), c = Degree::unit(rank_, k);
          auto lhs = base_.mul(factor(a, b), factor(a + b, c));
          auto rhs = base_.mul(factor(b, c), factor(a, b + c));
          if (lhs != rhs) {
            if (why) *why = "cocycle identity fails on generator triple";
            return false;
          }
        }
    return true;
  }

  std::string element_to_string(const CoeffElement& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [d, v] : a.terms()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + v[i].to_string() + ")";
        if (base_.dim() > 1) out += "*b" + std::to_string(i);
        for (int j = 0; j < rank_; ++j) {
          if (d[j] == 0) continue;
          out += "*z" + std::to_string(j + 1) + "^" + std::to_string(d[j]);
        }
      }
    }
    return out;
  }

 private:
  GradedCoefficientAlgebra() = default;

  int sign(const Degree& l, const Degree& m) const {
    long parity = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (position_[i] > position_[j] && q_[i][j] == -1) parity += static_cast<long>(l[i]) * m[j];
    return (parity & 1) ? -1 : 1;
  }

  void validate_cocycle() const {
    if (static_cast<int>(tau_.size()) != rank_) throw Error(ErrorCode::InvalidCocycle, "tau table size mismatch");
    for (const auto& row : tau_)
      if (static_cast<int>(row.size()) != rank_) throw Error(ErrorCode::InvalidCocycle, "tau table size mismatch");
    std::string why;
    if (!cocycle_valid(&why)) throw Error(ErrorCode::InvalidCocycle, why);
  }

  Kind kind_ = Kind::TwistedGroup;
  BaseAlgebra base_ = BaseAlgebra::field();
  int rank_ = 0;
  std::vector<std::vector<Vec<Scalar>>> tau_;
  std::vector<std::vector<int>> q_;
  std::vector<int> position_;
};

using CoeffAlgebraPtr = std::shared_ptr<const GradedCoefficientAlgebra>;

}  // namespace iara
