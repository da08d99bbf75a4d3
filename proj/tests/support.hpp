#pragma once

// Test-only algebra generators.

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercohom/filiform.hpp"
#include "supercohom/superalg.hpp"

namespace testsupport {

using namespace supercohom;

struct Constants {
  std::vector<std::string> even, odd;
  std::vector<BracketEntry> brackets;
  std::vector<Vec> pmap;
};

inline Vec vec_of(const PrimeField& f, std::size_t dim, std::initializer_list<std::pair<std::size_t, std::int64_t>> terms) {
  Vec v(dim, 0);
  for (auto [i, c] : terms) v[i] = f.add(v[i], f.reduce(c));
  return v;
}

// sl2 (e, h, f) acting on an odd copy of itself with [odd, odd] = 0.
inline Constants sl2_takiff(const PrimeField& f) {
  const std::size_t d = 6;
  Constants c{{"e", "h", "f"}, {"Pe", "Ph", "Pf"}, {}, {}};
  auto put = [&](std::size_t i, std::size_t j, Vec v) { c.brackets.push_back({i, j, v}); };
  put(0, 1, vec_of(f, d, {{0, -2}}));  // [e,h] = -2e
  put(0, 2, vec_of(f, d, {{1, 1}}));   // [e,f] = h
  put(1, 2, vec_of(f, d, {{2, -2}}));  // [h,f] = -2f
  put(0, 4, vec_of(f, d, {{3, -2}}));  // [e,Ph] = -2Pe
  put(0, 5, vec_of(f, d, {{4, 1}}));   // [e,Pf] = Ph
  put(1, 3, vec_of(f, d, {{3, 2}}));   // [h,Pe] = 2Pe
  put(1, 5, vec_of(f, d, {{5, -2}}));  // [h,Pf] = -2Pf
  put(2, 3, vec_of(f, d, {{4, -1}}));  // [f,Pe] = -Ph
  put(2, 4, vec_of(f, d, {{5, 2}}));   // [f,Ph] = 2Pf
  c.pmap = {Vec(d, 0), vec_of(f, d, {{1, 1}}), Vec(d, 0)};
  return c;
}

// osp(1|2) plus a central even line z with z^[p] = z.
inline Constants osp12_plus_line(const PrimeField& f) {
  const std::size_t d = 6;
  // even: e h f z ; odd: u (weight +1), w (weight -1)
  Constants c{{"e", "h", "f", "z"}, {"u", "w"}, {}, {}};
  auto put = [&](std::size_t i, std::size_t j, Vec v) { c.brackets.push_back({i, j, v}); };
  put(0, 1, vec_of(f, d, {{0, -2}}));
  put(0, 2, vec_of(f, d, {{1, 1}}));
  put(1, 2, vec_of(f, d, {{2, -2}}));
  put(1, 4, vec_of(f, d, {{4, 1}}));   // [h,u] = u
  put(1, 5, vec_of(f, d, {{5, -1}}));  // [h,w] = -w
  put(0, 5, vec_of(f, d, {{4, -1}}));  // [e,w] = -u
  put(2, 4, vec_of(f, d, {{5, -1}}));  // [f,u] = -w
  put(4, 4, vec_of(f, d, {{0, 2}}));   // [u,u] = 2e
  put(4, 5, vec_of(f, d, {{1, 1}}));   // [u,w] = h
  put(5, 5, vec_of(f, d, {{2, -2}}));  // [w,w] = -2f
  c.pmap = {Vec(d, 0), vec_of(f, d, {{1, 1}}), Vec(d, 0), vec_of(f, d, {{3, 1}})};
  return c;
}

// gl(1|1) plus an abelian (1|1) summand; the extra even element is p-nilpotent.
inline Constants gl11_plus_abelian(const PrimeField& f) {
  const std::size_t d = 6;
  // even: a (E11), b (E22), z ; odd: u (E12), w (E21), y
  Constants c{{"a", "b", "z"}, {"u", "w", "y"}, {}, {}};
  auto put = [&](std::size_t i, std::size_t j, Vec v) { c.brackets.push_back({i, j, v}); };
  put(0, 3, vec_of(f, d, {{3, 1}}));
  put(0, 4, vec_of(f, d, {{4, -1}}));
  put(1, 3, vec_of(f, d, {{3, -1}}));
  put(1, 4, vec_of(f, d, {{4, 1}}));
  put(3, 4, vec_of(f, d, {{0, 1}, {1, 1}}));
  c.pmap = {vec_of(f, d, {{0, 1}}), vec_of(f, d, {{1, 1}}), Vec(d, 0)};
  return c;
}

// Even X1, X2, X3, odd Y1..Y3 with [X1,X2] = X3, [Yi,Yi] = X3 and central
// p-map values.
inline Constants heisenberg_like(const PrimeField& f, std::mt19937_64& rng) {
  const std::size_t d = 6;
  Constants c{{"X1", "X2", "X3"}, {"Y1", "Y2", "Y3"}, {}, {}};
  c.brackets.push_back({0, 1, vec_of(f, d, {{2, 1}})});
  for (std::size_t i = 3; i < 6; ++i) c.brackets.push_back({i, i, vec_of(f, d, {{2, 1}})});
  for (int k = 0; k < 3; ++k)
    c.pmap.push_back(vec_of(f, d, {{2, static_cast<std::int64_t>(rng() % f.characteristic())}}));
  return c;
}

inline Constants filiform33(const PrimeField& f, std::mt19937_64& rng) {
  Vec lam(f.characteristic());
  for (auto& x : lam) x = static_cast<Residue>(rng() % f.characteristic());
  auto L = restricted_model_filiform(f, lam);
  return {L->basis().even_names(), L->basis().odd_names(), L->bracket_entries(), L->pmap()};
}

inline AlgebraPtr build(const PrimeField& f, const Constants& c) {
  return std::make_shared<const SuperAlgebra>(f, SuperBasis(c.even, c.odd), c.brackets, c.pmap);
}

// Random block-diagonal change of basis f_i = G e_i. The new p-map is computed
// with the old algebra's p-th power of G e_i.
inline AlgebraPtr change_basis(const AlgebraPtr& A, std::mt19937_64& rng) {
  const PrimeField& f = A->field();
  const std::size_t n = A->dim(), n0 = A->n_even();
  Matrix G(f, n, n), Ginv(f, n, n);
  while (true) {
    G = Matrix(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((i < n0) == (j < n0)) G(i, j) = static_cast<Residue>(rng() % f.characteristic());
    if (rank(G) == n) break;
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto col = solve(G, f.unit(n, j));
    Ginv.set_column(j, *col);
  }
  std::vector<BracketEntry> br;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec v = Ginv.apply(A->bracket(G.column(i), G.column(j)));
      if (!is_zero(v)) br.push_back({i, j, v});
    }
  std::vector<Vec> pm;
  for (std::size_t i = 0; i < n0; ++i) pm.push_back(Ginv.apply(p_power(*A, G.column(i))));
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < n; ++i) (i < n0 ? even : odd).push_back("f" + std::to_string(i + 1));
  return std::make_shared<const SuperAlgebra>(f, SuperBasis(even, odd), br, pm);
}

// Twenty-five 6-dimensional restricted Lie superalgebras, mostly at p = 3.
inline std::vector<AlgebraPtr> random_restricted_algebras(std::uint64_t seed = 2024) {
  std::mt19937_64 rng(seed);
  std::vector<AlgebraPtr> out;
  for (int t = 0; t < 25; ++t) {
    const PrimeField f(t % 5 == 4 ? 5 : 3);
    Constants c;
    switch (t % 5) {
      case 0:
        c = filiform33(PrimeField(3), rng);
        break;
      case 1:
        c = heisenberg_like(f, rng);
        break;
      case 2:
        c = sl2_takiff(f);
        break;
      case 3:
        c = osp12_plus_line(f);
        break;
      default:
        c = (t / 5) % 2 ? gl11_plus_abelian(f) : heisenberg_like(f, rng);
        break;
    }
    auto base = build(t % 5 == 0 ? PrimeField(3) : f, c);
    out.push_back(change_basis(base, rng));
  }
  return out;
}

}  // namespace testsupport
