#include "supercohom/cohomology.hpp"

namespace supercohom {

namespace {

void require_degree(unsigned q) {
  if (q > 2) throw DegreeError("cohomology is implemented in degrees 0, 1, 2");
}

unsigned coord_parity(const CochainSpace& C, std::size_t i, Theory t) {
  return t == Theory::Restricted ? restricted_parity(C, i) : C.parity(i);
}

std::size_t coord_dim(const CochainSpace& C, Theory t) {
  return t == Theory::Restricted ? restricted_dim(C) : C.dim();
}

Matrix differential(const CochainSpace& src, const CochainSpace& dst, Theory t) {
  return t == Theory::Restricted ? d_star_matrix(src, dst) : differential_matrix(src, dst);
}

// Cocycles of one parity: the kernel of d together with the vanishing of
// every coordinate of the other parity.
Subspace cocycles_of_parity(const Representation& R, unsigned q, Theory t, unsigned parity) {
  CochainSpace C(R, q), D(R, q + 1);
  const PrimeField& f = R.field();
  Matrix d = differential(C, D, t);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < d.rows(); ++i) rows.push_back(d.row(i));
  const std::size_t n = coord_dim(C, t);
  for (std::size_t j = 0; j < n; ++j)
    if (coord_parity(C, j, t) != parity) rows.push_back(f.unit(n, j));
  return kernel(Matrix::from_rows(f, n, rows));
}

Subspace coboundaries_of_parity(const Representation& R, unsigned q, Theory t, unsigned parity) {
  const PrimeField& f = R.field();
  CochainSpace C(R, q);
  if (q == 0) return Subspace(f, coord_dim(C, t));
  CochainSpace P(R, q - 1);
  Matrix d = differential(P, C, t);
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < d.cols(); ++j)
    if (coord_parity(P, j, t) == parity) cols.push_back(d.column(j));
  return Subspace(f, coord_dim(C, t), cols);
}

}  // namespace

std::string to_string(Theory t) { return t == Theory::Restricted ? "restricted" : "ordinary"; }

Subspace cocycles(const Representation& R, unsigned q, Theory t) {
  require_degree(q);
  CochainSpace C(R, q), D(R, q + 1);
  return kernel(differential(C, D, t));
}

Subspace coboundaries(const Representation& R, unsigned q, Theory t) {
  require_degree(q);
  CochainSpace C(R, q);
  if (q == 0) return Subspace(R.field(), coord_dim(C, t));
  CochainSpace P(R, q - 1);
  return rank_kernel_image(differential(P, C, t)).image;
}

CohomologyReport cohomology(const Representation& R, unsigned q, Theory t) {
  require_degree(q);
  CohomologyReport r;
  r.theory = t;
  r.degree = q;
  for (unsigned parity : {0U, 1U}) {
    Subspace z = cocycles_of_parity(R, q, t, parity);
    Subspace b = coboundaries_of_parity(R, q, t, parity);
    auto reps = quotient_basis(z, b);
    r.dim_z += z.dim();
    r.dim_b += b.dim();
    (parity == 0 ? r.h_even : r.h_odd) = reps.size();
    r.representatives.insert(r.representatives.end(), reps.begin(), reps.end());
  }
  r.dim_h = r.representatives.size();
  return r;
}

CohomologyReport ordinary_cohomology(const Representation& R, unsigned q) {
  return cohomology(R, q, Theory::Ordinary);
}

CohomologyReport restricted_cohomology(const Representation& R, unsigned q) {
  return cohomology(R, q, Theory::Restricted);
}

std::vector<NamedCochain> cocycle_families(const CochainSpace& C2) {
  if (C2.degree() != 2) throw DegreeError("cocycle families live in degree 2");
  const SuperAlgebra& L = C2.L();
  const PrimeField& f = C2.field();
  const std::size_t p = f.characteristic();
  if (L.n_even() != p || L.n_odd() != p || C2.module_dim() != 1)
    throw DimensionError("expected trivial coefficients over a filiform algebra of dimension (p|p)");
  auto X = [](std::size_t i) { return i - 1; };
  auto Y = [p](std::size_t j) { return p + j - 1; };
  auto term = [&](Vec& c, std::size_t a, std::size_t b, Residue coeff) {
    c[C2.index(*C2.find({a, b}), 0)] = f.add(c[C2.index(*C2.find({a, b}), 0)], coeff);
  };
  auto sgn = [&](std::size_t e) { return f.sign(static_cast<unsigned>(e)); };

  std::vector<NamedCochain> out;
  Vec c(C2.dim(), 0);
  term(c, X(1), X(p), 1);
  out.push_back({"X^{1," + std::to_string(p) + "}", c});
  c.assign(C2.dim(), 0);
  term(c, X(1), Y(p), 1);
  out.push_back({"X^1Y^" + std::to_string(p), c});
  for (std::size_t i = 5; i <= p + 2; i += 2) {
    c.assign(C2.dim(), 0);
    for (std::size_t r = 2; r <= i / 2; ++r) term(c, X(r), X(i - r), sgn(r));
    out.push_back({"phi_" + std::to_string(i), c});
  }
  for (std::size_t j = 2; j <= p; ++j) {
    c.assign(C2.dim(), 0);
    for (std::size_t s = 2; s <= j; ++s) term(c, X(s), Y(j - s + 1), sgn(s));
    out.push_back({"psi_" + std::to_string(j), c});
  }
  for (std::size_t k = 2; k <= p + 1; k += 2) {
    c.assign(C2.dim(), 0);
    for (std::size_t t = 1; t + 1 <= k / 2; ++t) term(c, Y(t), Y(k - t), sgn(t));
    term(c, Y(k / 2), Y(k / 2), f.mul(sgn(k / 2), f.inv(2)));
    out.push_back({"phi'_" + std::to_string(k), c});
  }
  return out;
}

}  // namespace supercohom
