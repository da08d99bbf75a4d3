#include "supercohom/constructions.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace supercohom {

namespace {

bool block_parity_ok(const Matrix& m, const std::vector<unsigned>& row_par,
                     const std::vector<unsigned>& col_par, unsigned parity) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && (row_par[i] ^ col_par[j]) != parity) return false;
  return true;
}

std::vector<unsigned> parities(const SuperBasis& b) {
  std::vector<unsigned> out(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) out[i] = b.parity(i);
  return out;
}

Vec block_of(const CochainSpace& C, const Vec& coords, std::size_t mono) {
  const std::size_t m = C.module_dim();
  return Vec(coords.begin() + static_cast<std::ptrdiff_t>(mono * m),
             coords.begin() + static_cast<std::ptrdiff_t>((mono + 1) * m));
}

// Variables D(r, c) of a homogeneous n x n matrix of the given parity.
struct MatrixUnknowns {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
};

}  // namespace

CheckReport check_exact(const ExtensionDatum& d) {
  CheckReport r;
  const bool composable = d.pi.cols() == d.iota.rows();
  r.entries.emplace_back("pi-iota-zero", composable && (d.pi * d.iota).is_zero(),
                         std::vector<std::size_t>{}, composable ? "" : "shapes do not compose");
  const std::size_t ri = rank(d.iota), rp = rank(d.pi);
  r.entries.emplace_back("iota-injective", ri == d.iota.cols(), std::vector<std::size_t>{}, "");
  r.entries.emplace_back("pi-surjective", rp == d.pi.rows(), std::vector<std::size_t>{}, "");
  r.entries.emplace_back("exact-middle", composable && ri == d.pi.cols() - rp,
                         std::vector<std::size_t>{}, "");
  return r;
}

// ---- derivations ----

Superderivations restricted_derivations(const SuperAlgebra& L) {
  const PrimeField& f = L.field();
  const std::size_t n = L.dim();
  const unsigned p = L.p();
  Superderivations out;
  for (unsigned theta : {0U, 1U}) {
    MatrixUnknowns u;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((L.parity(r) ^ L.parity(c)) == theta) {
          u.var[{r, c}] = u.cells.size();
          u.cells.emplace_back(r, c);
        }
    const std::size_t nv = u.cells.size();
    auto var = [&](std::size_t r, std::size_t c) -> std::optional<std::size_t> {
      auto it = u.var.find({r, c});
      if (it == u.var.end()) return std::nullopt;
      return it->second;
    };
    std::vector<Vec> rows;
    // right multiplication w -> [w, e_j]
    std::vector<Matrix> right;
    for (std::size_t j = 0; j < n; ++j) {
      Matrix R(f, n, n);
      for (std::size_t c = 0; c < n; ++c) R.set_column(c, L.bracket_basis(c, j));
      right.push_back(std::move(R));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec& b = L.bracket_basis(i, j);
        const Residue s = f.sign(theta * L.parity(i));
        const Matrix& A = L.ad_basis(i);
        const Matrix& R = right[j];
        for (std::size_t r = 0; r < n; ++r) {
          Vec row(nv, 0);
          for (std::size_t c = 0; c < n; ++c) {
            if (b[c] != 0)
              if (auto v = var(r, c)) row[*v] = f.add(row[*v], b[c]);
            if (A(r, c) != 0)
              if (auto v = var(c, j)) row[*v] = f.sub(row[*v], f.mul(s, A(r, c)));
            if (R(r, c) != 0)
              if (auto v = var(c, i)) row[*v] = f.sub(row[*v], R(r, c));
          }
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      }
    if (L.restricted())
      for (std::size_t k = 0; k < L.n_even(); ++k) {
        const Vec& zp = L.pmap_basis(k);
        const Matrix A = L.ad_basis(k).pow(p - 1);
        for (std::size_t r = 0; r < n; ++r) {
          Vec row(nv, 0);
          for (std::size_t c = 0; c < n; ++c) {
            if (zp[c] != 0)
              if (auto v = var(r, c)) row[*v] = f.add(row[*v], zp[c]);
            if (A(r, c) != 0)
              if (auto v = var(c, k)) row[*v] = f.sub(row[*v], A(r, c));
          }
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      }
    Subspace sol = kernel(Matrix::from_rows(f, nv, rows));
    for (const auto& v : sol.basis()) {
      Matrix D(f, n, n);
      for (std::size_t t = 0; t < nv; ++t) D(u.cells[t].first, u.cells[t].second) = v[t];
      (theta == 0 ? out.even : out.odd).push_back(std::move(D));
    }
  }
  return out;
}

CheckReport check_restricted_derivation(const SuperAlgebra& L, const Matrix& D, unsigned parity,
                                        std::mt19937_64& rng, int samples) {
  const PrimeField& f = L.field();
  const std::size_t n = L.dim();
  const auto par = parities(L.basis());
  CheckEntry grading("derivation-parity", block_parity_ok(D, par, par, parity), {}, "");
  CheckEntry leibniz("derivation-leibniz");
  for (std::size_t i = 0; i < n && leibniz.passed; ++i)
    for (std::size_t j = 0; j < n && leibniz.passed; ++j) {
      Vec lhs = D.apply(L.bracket_basis(i, j));
      Vec rhs = f.sum(f.scaled(f.sign(parity * L.parity(i)), L.bracket(L.unit(i), D.column(j))),
                      L.bracket(D.column(i), L.unit(j)));
      if (lhs != rhs) {
        leibniz.passed = false;
        leibniz.witness = {i, j};
      }
    }
  CheckEntry pcond("derivation-p-map");
  if (!L.restricted()) {
    pcond.detail = "skipped: no p-map";
  } else {
    const unsigned p = L.p();
    for (std::size_t k = 0; k < L.n_even() && pcond.passed; ++k)
      if (D.apply(L.pmap_basis(k)) != L.ad_basis(k).pow(p - 1).apply(D.column(k))) {
        pcond.passed = false;
        pcond.witness = {k};
      }
    for (int s = 0; s < samples && pcond.passed; ++s) {
      Vec z = random_even(L, rng);
      if (D.apply(p_power(L, z)) != L.ad_matrix(z).pow(p - 1).apply(D.apply(z))) {
        pcond.passed = false;
        pcond.detail = "fails at a random even vector, sample " + std::to_string(s);
      }
    }
  }
  CheckReport r;
  r.entries = {grading, leibniz, pcond};
  return r;
}

std::size_t inner_derivation_dim(const SuperAlgebra& L) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Matrix& A = L.ad_basis(i);
    Vec flat;
    for (std::size_t r = 0; r < A.rows(); ++r) {
      Vec row = A.row(r);
      flat.insert(flat.end(), row.begin(), row.end());
    }
    rows.push_back(std::move(flat));
  }
  return rank(Matrix::from_rows(L.field(), L.dim() * L.dim(), rows));
}

// ---- module extensions ----

ModuleExtension module_extension_from_cocycle(const Representation& N, const Representation& M,
                                              const Vec& phi) {
  CochainSpace C1(hom_rep(N, M), 1);
  if (phi.size() != C1.dim()) throw DimensionError("cocycle has wrong length");
  const Parity par = cochain_parity(C1, phi);
  if (par == Parity::Mixed) throw ParityError("cocycle must be homogeneous");
  return module_extension_from_cocycle(N, M, phi, par == Parity::Odd ? 1U : 0U);
}

ModuleExtension module_extension_from_cocycle(const Representation& N, const Representation& M,
                                              const Vec& phi, unsigned theta) {
  const Representation H = hom_rep(N, M);
  CochainSpace C1(H, 1), C2(H, 2);
  if (phi.size() != C1.dim()) throw DimensionError("cocycle has wrong length");
  if (theta > 1) throw ParityError("parity must be 0 or 1");
  const Parity par = cochain_parity(C1, phi);
  if (!is_zero(phi) && par != (theta == 0 ? Parity::Even : Parity::Odd))
    throw ParityError("cocycle does not have the requested parity");
  if (!is_zero(d_star_matrix(C1, C2).apply(phi)))
    throw NotCocycleError("phi is not a restricted 1-cocycle");
  const PrimeField& f = N.field();
  const SuperAlgebra& L = N.L();

  // E-coordinates: sort by (E-parity, N before M, index).
  struct Slot {
    unsigned epar, src;
    std::size_t idx;
  };
  std::vector<Slot> slots;
  for (std::size_t b = 0; b < N.dim(); ++b) slots.push_back({N.parity(b), 0, b});
  for (std::size_t a = 0; a < M.dim(); ++a) slots.push_back({M.parity(a) ^ theta, 1, a});
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) {
    return std::tie(x.epar, x.src, x.idx) < std::tie(y.epar, y.src, y.idx);
  });
  ModuleExtension ext{trivial_rep(N.algebra()), {Matrix(f, 1, 1), Matrix(f, 1, 1)}, theta, {}, {}};
  ext.pos_n.resize(N.dim());
  ext.pos_m.resize(M.dim());
  std::vector<std::string> even, odd;
  for (std::size_t t = 0; t < slots.size(); ++t) {
    const auto& s = slots[t];
    (s.src == 0 ? ext.pos_n : ext.pos_m)[s.idx] = t;
    std::string name = s.src == 0 ? "n:" + N.basis().name(s.idx) : "m:" + M.basis().name(s.idx);
    (s.epar == 0 ? even : odd).push_back(std::move(name));
  }
  const std::size_t dE = slots.size();
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < L.dim(); ++x) {
    Matrix A(f, dE, dE);
    const Matrix& rn = N.action(x);
    const Matrix& rm = M.action(x);
    for (std::size_t i = 0; i < N.dim(); ++i)
      for (std::size_t j = 0; j < N.dim(); ++j) A(ext.pos_n[i], ext.pos_n[j]) = rn(i, j);
    for (std::size_t i = 0; i < M.dim(); ++i)
      for (std::size_t j = 0; j < M.dim(); ++j) A(ext.pos_m[i], ext.pos_m[j]) = rm(i, j);
    const Matrix F = hom_matrix(N, M, block_of(C1, phi, *C1.find({x})));
    for (std::size_t a = 0; a < M.dim(); ++a)
      for (std::size_t b = 0; b < N.dim(); ++b)
        if (F(a, b) != 0)
          A(ext.pos_m[a], ext.pos_n[b]) =
              f.mul(f.sign(theta * (L.parity(x) + N.parity(b))), F(a, b));
    act.push_back(std::move(A));
  }
  ext.E = Representation(N.algebra(), SuperBasis(even, odd), std::move(act));
  Matrix iota(f, dE, M.dim()), pi(f, N.dim(), dE);
  for (std::size_t a = 0; a < M.dim(); ++a) iota(ext.pos_m[a], a) = 1;
  for (std::size_t b = 0; b < N.dim(); ++b) pi(b, ext.pos_n[b]) = 1;
  ext.datum = {iota, pi};
  return ext;
}

Matrix module_sigma_from_coboundary(const ModuleExtension& E1, const Representation& N,
                                    const Representation& M, const Vec& f_coords) {
  const PrimeField& f = N.field();
  const Representation H = hom_rep(N, M);
  const Parity par = H.basis().parity_of(f_coords);
  if (par == Parity::Mixed) throw ParityError("f must be homogeneous");
  const unsigned theta = par == Parity::Odd ? 1U : 0U;
  const Matrix F = hom_matrix(N, M, f_coords);
  Matrix sigma = Matrix::identity(f, E1.E.dim());
  for (std::size_t a = 0; a < M.dim(); ++a)
    for (std::size_t b = 0; b < N.dim(); ++b)
      if (F(a, b) != 0)
        sigma(E1.pos_m[a], E1.pos_n[b]) = f.neg(f.mul(f.sign(theta * N.parity(b)), F(a, b)));
  return sigma;
}

std::optional<Matrix> module_equivalence(const ModuleExtension& E1, const ModuleExtension& E2,
                                         const Representation& N, const Representation& M) {
  if (E1.theta != E2.theta || E1.E.dim() != E2.E.dim()) return std::nullopt;
  const PrimeField& f = N.field();
  const std::size_t nN = N.dim(), nM = M.dim();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < nM; ++a)
    for (std::size_t b = 0; b < nN; ++b)
      if ((M.parity(a) ^ E1.theta) == N.parity(b)) {
        var[{a, b}] = cells.size();
        cells.emplace_back(a, b);
      }
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t x = 0; x < N.L().dim(); ++x) {
    const Matrix& A = N.action(x);
    const Matrix& B = M.action(x);
    for (std::size_t a = 0; a < nM; ++a)
      for (std::size_t b = 0; b < nN; ++b) {
        Vec row(cells.size(), 0);
        for (std::size_t t = 0; t < nN; ++t)
          if (A(t, b) != 0)
            if (auto it = var.find({a, t}); it != var.end())
              row[it->second] = f.add(row[it->second], A(t, b));
        for (std::size_t s = 0; s < nM; ++s)
          if (B(a, s) != 0)
            if (auto it = var.find({s, b}); it != var.end())
              row[it->second] = f.sub(row[it->second], B(a, s));
        rows.push_back(std::move(row));
        rhs.push_back(f.sub(E2.E.action(x)(E2.pos_m[a], E2.pos_n[b]),
                            E1.E.action(x)(E1.pos_m[a], E1.pos_n[b])));
      }
  }
  Matrix sys = Matrix::from_rows(f, cells.size(), rows);
  auto g = solve(sys, rhs);
  if (!g) return std::nullopt;
  Matrix sigma = Matrix::identity(f, E1.E.dim());
  for (std::size_t t = 0; t < cells.size(); ++t)
    sigma(E1.pos_m[cells[t].first], E1.pos_n[cells[t].second]) = (*g)[t];
  return sigma;
}

bool is_extension_equivalence(const ModuleExtension& E1, const ModuleExtension& E2,
                              const Matrix& sigma) {
  const std::size_t d = E1.E.dim();
  if (E2.E.dim() != d || sigma.rows() != d || sigma.cols() != d) return false;
  if (rank(sigma) != d) return false;
  const auto par1 = parities(E1.E.basis()), par2 = parities(E2.E.basis());
  if (!block_parity_ok(sigma, par2, par1, 0)) return false;
  for (std::size_t x = 0; x < E1.E.L().dim(); ++x)
    if (!(sigma * E1.E.action(x) == E2.E.action(x) * sigma)) return false;
  return sigma * E1.datum.iota == E2.datum.iota && E2.datum.pi * sigma == E1.datum.pi;
}

// ---- central extensions ----

bool is_strongly_abelian(const SuperAlgebra& K) {
  for (std::size_t i = 0; i < K.dim(); ++i)
    for (std::size_t j = 0; j < K.dim(); ++j)
      if (!is_zero(K.bracket_basis(i, j))) return false;
  if (K.restricted())
    for (const auto& v : K.pmap())
      if (!is_zero(v)) return false;
  return true;
}

Representation central_coefficients(const AlgebraPtr& L, const SuperAlgebra& K) {
  return trivial_rep(L, K.basis());
}

CentralExtension central_extension(const AlgebraPtr& Lp, const SuperAlgebra& K,
                                   const RestrictedTwoCochain& c) {
  const SuperAlgebra& L = *Lp;
  if (!L.restricted()) throw std::invalid_argument("central extension needs a restricted algebra");
  if (!(K.field() == L.field())) throw AlgebraMismatchError("K and L over different fields");
  if (!is_strongly_abelian(K)) throw NotStronglyAbelianError("K is not strongly abelian");
  const Representation R = central_coefficients(Lp, K);
  CochainSpace C2(R, 2), C3(R, 3);
  const Vec flat = flatten(C2, c);
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (flat[i] != 0 && restricted_parity(C2, i) != 0)
      throw ParityError("the restricted 2-cochain must be even");
  if (!is_zero(d_star_matrix(C2, C3).apply(flat)))
    throw NotCocycleError("(alpha, beta) is not a restricted 2-cocycle");

  const PrimeField& f = L.field();
  const std::size_t k0 = K.n_even(), l0 = L.n_even(), k1 = K.n_odd();
  std::vector<std::size_t> kpos(K.dim()), lpos(L.dim());
  for (std::size_t i = 0; i < K.dim(); ++i) kpos[i] = i < k0 ? i : l0 + i;
  for (std::size_t j = 0; j < L.dim(); ++j) lpos[j] = j < l0 ? k0 + j : k0 + k1 + j;
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < k0; ++i) even.push_back(K.basis().name(i));
  for (std::size_t j = 0; j < l0; ++j) even.push_back(L.basis().name(j));
  for (std::size_t i = k0; i < K.dim(); ++i) odd.push_back(K.basis().name(i));
  for (std::size_t j = l0; j < L.dim(); ++j) odd.push_back(L.basis().name(j));
  const std::size_t dE = K.dim() + L.dim();

  auto embed = [&](const Vec& k, const Vec& l) {
    Vec v(dE, 0);
    for (std::size_t i = 0; i < k.size(); ++i) v[kpos[i]] = k[i];
    for (std::size_t j = 0; j < l.size(); ++j) v[lpos[j]] = l[j];
    return v;
  };
  std::vector<BracketEntry> br;
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = a; b < L.dim(); ++b) {
      Vec v = embed(evaluate_basis(C2, c.phi, {a, b}), L.bracket_basis(a, b));
      if (!is_zero(v)) br.push_back({lpos[a], lpos[b], std::move(v)});
    }
  std::vector<Vec> pm;
  for (std::size_t i = 0; i < k0; ++i) pm.push_back(Vec(dE, 0));
  for (std::size_t j = 0; j < l0; ++j) pm.push_back(embed(c.omega[j], L.pmap_basis(j)));

  CentralExtension ext{Lp, K.basis(), nullptr, {Matrix(f, dE, K.dim()), Matrix(f, L.dim(), dE)}};
  ext.E = std::make_shared<const SuperAlgebra>(f, SuperBasis(even, odd), br, pm);
  for (std::size_t i = 0; i < K.dim(); ++i) ext.datum.iota(kpos[i], i) = 1;
  for (std::size_t j = 0; j < L.dim(); ++j) ext.datum.pi(j, lpos[j]) = 1;
  return ext;
}

Matrix canonical_section(const CentralExtension& ext) { return ext.datum.pi.transpose(); }

RestrictedTwoCochain section_to_cocycle(const CentralExtension& ext, const Matrix& rho) {
  const SuperAlgebra& L = *ext.L;
  const SuperAlgebra& E = *ext.E;
  const PrimeField& f = L.field();
  if (rho.rows() != E.dim() || rho.cols() != L.dim())
    throw NotASectionError("section has the wrong shape");
  if (!(ext.datum.pi * rho == Matrix::identity(f, L.dim())))
    throw NotASectionError("pi o rho is not the identity");
  if (!block_parity_ok(rho, parities(E.basis()), parities(L.basis()), 0))
    throw ParityError("section must be even");
  const Representation R = trivial_rep(ext.L, ext.K);
  CochainSpace C2(R, 2);
  // iota^{-1} on vectors in the image of iota
  auto pull = [&](const Vec& v) {
    if (!is_zero(ext.datum.pi.apply(v))) throw std::logic_error("value outside the kernel of pi");
    Vec k(ext.K.dim());
    for (std::size_t i = 0; i < k.size(); ++i) {
      std::size_t pos = 0;
      while (ext.datum.iota(pos, i) == 0) ++pos;
      k[i] = v[pos];
    }
    return k;
  };
  RestrictedTwoCochain out = zero_two(C2);
  for (std::size_t m = 0; m < C2.num_monomials(); ++m) {
    const auto& mono = C2.monomial(m);
    const Vec v = pull(f.difference(E.bracket(rho.column(mono[0]), rho.column(mono[1])),
                                    rho.apply(L.bracket_basis(mono[0], mono[1]))));
    const Residue w = f.inv(C2.weight(m));
    for (std::size_t b = 0; b < v.size(); ++b) out.phi[C2.index(m, b)] = f.mul(w, v[b]);
  }
  for (std::size_t j = 0; j < L.n_even(); ++j)
    out.omega[j] = pull(f.difference(p_power(E, rho.column(j)), rho.apply(L.pmap_basis(j))));
  return out;
}

std::optional<Vec> central_equivalence(const Representation& coeff, const RestrictedTwoCochain& c1,
                                       const RestrictedTwoCochain& c2) {
  CochainSpace C1(coeff, 1), C2(coeff, 2);
  const PrimeField& f = coeff.field();
  const Matrix D = d_star_matrix(C1, C2);
  std::vector<std::size_t> even_cols, all_rows(D.rows());
  for (std::size_t j = 0; j < C1.dim(); ++j)
    if (C1.parity(j) == 0) even_cols.push_back(j);
  for (std::size_t i = 0; i < D.rows(); ++i) all_rows[i] = i;
  auto x = solve(D.submatrix(all_rows, even_cols), f.difference(flatten(C2, c2), flatten(C2, c1)));
  if (!x) return std::nullopt;
  Vec phi(C1.dim(), 0);
  for (std::size_t t = 0; t < even_cols.size(); ++t) phi[even_cols[t]] = (*x)[t];
  return phi;
}

Matrix central_sigma(const CentralExtension& ext, const Vec& phi) {
  const SuperAlgebra& L = *ext.L;
  const PrimeField& f = L.field();
  const Representation R = trivial_rep(ext.L, ext.K);
  CochainSpace C1(R, 1);
  if (phi.size() != C1.dim()) throw DimensionError("phi has wrong length");
  Matrix sigma = Matrix::identity(f, ext.E->dim());
  const Matrix& rho = canonical_section(ext);
  for (std::size_t j = 0; j < L.dim(); ++j) {
    const Vec k = evaluate_basis(C1, phi, {j});
    const Vec img = ext.datum.iota.apply(k);
    const Vec c = rho.column(j);
    std::size_t pos = 0;
    while (c[pos] == 0) ++pos;
    for (std::size_t r = 0; r < img.size(); ++r) sigma(r, pos) = f.sub(sigma(r, pos), img[r]);
  }
  return sigma;
}

bool is_restricted_homomorphism(const SuperAlgebra& A, const SuperAlgebra& B, const Matrix& sigma) {
  if (sigma.rows() != B.dim() || sigma.cols() != A.dim()) return false;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (sigma.apply(A.bracket_basis(i, j)) != B.bracket(sigma.column(i), sigma.column(j)))
        return false;
  if (A.restricted() && B.restricted())
    for (std::size_t i = 0; i < A.n_even(); ++i)
      if (sigma.apply(A.pmap_basis(i)) != p_power(B, sigma.column(i))) return false;
  return true;
}

}  // namespace supercohom
