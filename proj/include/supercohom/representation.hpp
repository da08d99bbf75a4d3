#pragma once

// Finite-dimensional modules given by one action matrix per algebra basis
// element.

#include <utility>
#include <vector>

#include "supercohom/superalg.hpp"

namespace supercohom {

class Representation {
 public:
  Representation(AlgebraPtr algebra, SuperBasis basis, std::vector<Matrix> action);

  const AlgebraPtr& algebra() const { return algebra_; }
  const SuperAlgebra& L() const { return *algebra_; }
  const PrimeField& field() const { return algebra_->field(); }
  const SuperBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  unsigned parity(std::size_t b) const { return basis_.parity(b); }

  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }
  Matrix rho(const Vec& x) const;
  // x . v for an algebra vector x and module vector v.
  Vec act(const Vec& x, const Vec& v) const;
  Vec act_basis(std::size_t i, const Vec& v) const { return action_[i].apply(v); }

 private:
  AlgebraPtr algebra_;
  SuperBasis basis_;
  std::vector<Matrix> action_;
};

// One-dimensional even module with zero action.
Representation trivial_rep(const AlgebraPtr& L);
// Zero action on an arbitrary graded space.
Representation trivial_rep(const AlgebraPtr& L, const SuperBasis& basis);
Representation adjoint_rep(const AlgebraPtr& L);

// Elementary map E(a <- b) sends N-basis b to M-basis a. Hom(N, M) lists the
// even maps first, each block in lexicographic (a, b) order.
std::vector<std::pair<std::size_t, std::size_t>> hom_entries(const Representation& N,
                                                             const Representation& M);
Representation hom_rep(const Representation& N, const Representation& M);
// The matrix (dim M x dim N) of a Hom(N, M) coordinate vector.
Matrix hom_matrix(const Representation& N, const Representation& M, const Vec& phi);

// Parity blocks, rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x), and
// rho(x^[p]) = rho(x)^p on the even basis when the algebra is restricted.
CheckReport check_rep(const Representation& R);

}  // namespace supercohom
