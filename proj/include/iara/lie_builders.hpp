#pragma once

#include <memory>
#include <string>
#include <vector>

#include "iara/matrix_algebra.hpp"
#include "iara/toral.hpp"

namespace iara {

// The ground field viewed as a coefficient algebra graded by the zero lattice.
inline CoeffAlgebraPtr scalar_coefficients() {
  static const CoeffAlgebraPtr q = GradedCoefficientAlgebra::twisted_group(BaseAlgebra::field(), 0);
  return q;
}

// sl_n with trace form and diagonal Cartan, indices labelled 1..n.
inline PairPtr make_sl(int n) {
  std::vector<int> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(i);
  auto g = std::make_shared<MatrixAlgebra>(n, labels, scalar_coefficients(), "sl" + std::to_string(n));
  std::vector<Element> t;
  for (int i = 0; i + 1 < n; ++i) t.push_back(basis_element(g->diagonal_key(Degree(0), i)));
  return std::make_shared<ToralPair>(g, std::move(t), Window(), g->name());
}

// sl over A indexed by -k..k, extended by V ⊕ V† for the lattice of A; T = span{e_ii - e_jj} ⊕ V ⊕ V†.
inline PairPtr make_sl_Kpm(int k, const CoeffAlgebraPtr& coeff, const Window& window) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "K must be nonempty");
  const int r = coeff->rank();
  if (window.rank() != r) throw Error(ErrorCode::InvalidArgument, "window rank does not match the coefficient lattice");
  if (!(coeff->form_eps(coeff->unit(), coeff->unit()) == Scalar(1)))
    throw Error(ErrorCode::InvalidArgument, "coefficient form must satisfy eps(1,1) = 1");
  std::vector<int> labels;
  for (int i = -k; i <= k; ++i) labels.push_back(i);
  const int n = 2 * k + 1;
  auto m = std::make_shared<MatrixAlgebra>(n, labels, coeff, "sl_K+-(" + coeff->name() + ")");
  for (const auto& d : window.degrees()) m->commutator_piece(d);
  std::vector<int> coords;
  for (int i = 0; i < r; ++i) coords.push_back(i);
  auto g = std::make_shared<ExtendedAlgebra>(m, coords, m->name() + "+V+Vd");
  const Degree zero = Degree::zero(r);
  const Vec<Scalar>& unit = coeff->base().unit();
  std::vector<Element> t;
  for (int i = 0; i + 1 < n; ++i) {
    Element h;
    for (std::size_t q = 0; q < unit.size(); ++q) add_to(h, m->diagonal_key(zero, i, q), unit[q]);
    t.push_back(std::move(h));
  }
  for (int i = 0; i < r; ++i) t.push_back(basis_element(g->c_key(i)));
  for (int i = 0; i < r; ++i) t.push_back(basis_element(g->d_key(i)));
  return std::make_shared<ToralPair>(g, std::move(t), window, g->name());
}

// The matrix algebra underneath an optional V ⊕ V† extension.
inline const MatrixAlgebra* underlying_matrix_algebra(const GradedLieAlgebra& g) {
  if (auto m = dynamic_cast<const MatrixAlgebra*>(&g)) return m;
  if (auto e = dynamic_cast<const ExtendedAlgebra*>(&g)) return dynamic_cast<const MatrixAlgebra*>(e->inner().get());
  return nullptr;
}

}  // namespace iara
