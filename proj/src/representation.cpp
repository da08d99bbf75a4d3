#include "supercohom/representation.hpp"

namespace supercohom {

Representation::Representation(AlgebraPtr algebra, SuperBasis basis, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), basis_(std::move(basis)), action_(std::move(action)) {
  if (!algebra_) throw std::invalid_argument("representation needs an algebra");
  if (action_.size() != algebra_->dim())
    throw DimensionError("need one action matrix per algebra basis element");
  for (const auto& m : action_) {
    if (m.rows() != dim() || m.cols() != dim())
      throw DimensionError("action matrix does not match module dimension");
    if (!(m.field() == algebra_->field())) throw AlgebraMismatchError("action over another field");
  }
}

Matrix Representation::rho(const Vec& x) const {
  if (x.size() != algebra_->dim()) throw DimensionError("algebra vector has wrong length");
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m = m + action_[i].scaled(x[i]);
  return m;
}

Vec Representation::act(const Vec& x, const Vec& v) const {
  if (x.size() != algebra_->dim()) throw DimensionError("algebra vector has wrong length");
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) field().axpy(x[i], action_[i].apply(v), out);
  return out;
}

Representation trivial_rep(const AlgebraPtr& L) { return trivial_rep(L, SuperBasis({"1"}, {})); }

Representation trivial_rep(const AlgebraPtr& L, const SuperBasis& basis) {
  std::vector<Matrix> act(L->dim(), Matrix(L->field(), basis.dim(), basis.dim()));
  return Representation(L, basis, std::move(act));
}

Representation adjoint_rep(const AlgebraPtr& L) {
  std::vector<Matrix> act;
  act.reserve(L->dim());
  for (std::size_t i = 0; i < L->dim(); ++i) act.push_back(L->ad_basis(i));
  return Representation(L, L->basis(), std::move(act));
}

std::vector<std::pair<std::size_t, std::size_t>> hom_entries(const Representation& N,
                                                             const Representation& M) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (unsigned par = 0; par < 2; ++par)
    for (std::size_t a = 0; a < M.dim(); ++a)
      for (std::size_t b = 0; b < N.dim(); ++b)
        if ((M.parity(a) ^ N.parity(b)) == par) out.emplace_back(a, b);
  return out;
}

Matrix hom_matrix(const Representation& N, const Representation& M, const Vec& phi) {
  const auto entries = hom_entries(N, M);
  if (phi.size() != entries.size()) throw DimensionError("Hom vector has wrong length");
  Matrix m(M.field(), M.dim(), N.dim());
  for (std::size_t t = 0; t < entries.size(); ++t) m(entries[t].first, entries[t].second) = phi[t];
  return m;
}

Representation hom_rep(const Representation& N, const Representation& M) {
  if (N.algebra() != M.algebra())
    throw AlgebraMismatchError("Hom module needs both modules over the same algebra");
  const auto entries = hom_entries(N, M);
  const PrimeField& f = N.field();
  std::vector<std::string> even, odd;
  std::vector<std::size_t> index(M.dim() * N.dim());
  for (std::size_t t = 0; t < entries.size(); ++t) {
    const auto [a, b] = entries[t];
    index[a * N.dim() + b] = t;
    std::string name = "E[" + M.basis().name(a) + "<-" + N.basis().name(b) + "]";
    ((M.parity(a) ^ N.parity(b)) ? odd : even).push_back(std::move(name));
  }
  const std::size_t d = entries.size();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < N.L().dim(); ++i) {
    const Matrix& rm = M.action(i);
    const Matrix& rn = N.action(i);
    Matrix x(f, d, d);
    for (std::size_t t = 0; t < d; ++t) {
      const auto [a, b] = entries[t];
      const unsigned phi_par = M.parity(a) ^ N.parity(b);
      // rho_M(x) E(a<-b): column b of the result is column a of rho_M(x).
      for (std::size_t r = 0; r < M.dim(); ++r)
        if (rm(r, a) != 0) x.add_to(index[r * N.dim() + b], t, rm(r, a));
      // -(-1)^{|phi||x|} E(a<-b) rho_N(x): row a gets row b of rho_N(x).
      const Residue s = f.neg(f.sign(phi_par * N.L().parity(i)));
      for (std::size_t c = 0; c < N.dim(); ++c)
        if (rn(b, c) != 0) x.add_to(index[a * N.dim() + c], t, f.mul(s, rn(b, c)));
    }
    act.push_back(std::move(x));
  }
  return Representation(N.algebra(), SuperBasis(even, odd), std::move(act));
}

CheckReport check_rep(const Representation& R) {
  const SuperAlgebra& L = R.L();
  const PrimeField& f = R.field();
  CheckEntry blocks{"parity-blocks"}, hom{"bracket-homomorphism"}, res{"restricted-module"};
  auto fail = [&](CheckEntry& e, std::vector<std::size_t> w) {
    if (!e.passed) return;
    e.passed = false;
    e.witness = w;
    e.detail = "first failure at basis indices";
    for (auto i : w) e.detail += " " + L.basis().name(i);
  };
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Matrix& m = R.action(i);
    for (std::size_t r = 0; r < R.dim(); ++r)
      for (std::size_t c = 0; c < R.dim(); ++c)
        if (m(r, c) != 0 && R.parity(r) != (R.parity(c) ^ L.parity(i))) fail(blocks, {i});
  }
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Matrix lhs = R.rho(L.bracket_basis(i, j));
      const Matrix ab = R.action(i) * R.action(j);
      const Matrix ba = R.action(j) * R.action(i);
      const Matrix rhs = ab - ba.scaled(f.sign(L.parity(i) * L.parity(j)));
      if (lhs != rhs) fail(hom, {i, j});
    }
  }
  if (L.restricted()) {
    for (std::size_t i = 0; i < L.n_even(); ++i)
      if (R.rho(L.pmap_basis(i)) != R.action(i).pow(L.p())) fail(res, {i});
  } else {
    res.detail = "algebra has no p-map; skipped";
  }
  CheckReport report;
  report.entries = {blocks, hom, res};
  return report;
}

}  // namespace supercohom
