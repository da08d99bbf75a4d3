#include "doctest.h"
#include "support.hpp"
#include "supercohom/cohomology.hpp"
#include "supercohom/constructions.hpp"
#include "supercohom/filiform.hpp"

using namespace supercohom;

namespace {

Vec random_vec(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& x : v) x = static_cast<Residue>(rng() % f.characteristic());
  return v;
}

Vec flat(const Matrix& m) {
  Vec v;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec row = m.row(r);
    v.insert(v.end(), row.begin(), row.end());
  }
  return v;
}

Vec unit_lambda(std::size_t p, std::size_t k) {
  Vec v(p, 0);
  if (k > 0) v[k - 1] = 1;
  return v;
}

// A random cocycle of one parity, drawn from the restricted cocycle space.
Vec random_cocycle(const Representation& R, unsigned q, unsigned parity, std::mt19937_64& rng) {
  const PrimeField& f = R.field();
  CochainSpace C(R, q);
  Subspace z = cocycles(R, q, Theory::Restricted);
  Vec out(z.ambient(), 0);
  for (const auto& b : z.basis()) {
    bool ok = true;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0 && restricted_parity(C, i) != parity) ok = false;
    if (ok) f.axpy(static_cast<Residue>(rng() % f.characteristic()), b, out);
  }
  return out;
}

std::shared_ptr<const SuperAlgebra> line(const PrimeField& f, const std::string& name) {
  return std::make_shared<const SuperAlgebra>(f, SuperBasis({name}, {}), std::vector<BracketEntry>{},
                                              std::vector<Vec>{Vec{0}});
}

}  // namespace

TEST_CASE("restricted derivations contain ad L and pass the a posteriori check") {
  std::mt19937_64 rng(1);
  PrimeField f(3);
  std::vector<AlgebraPtr> algs;
  for (std::size_t k : {0, 1, 3}) algs.push_back(restricted_model_filiform(f, unit_lambda(3, k)));
  auto gen = testsupport::random_restricted_algebras();
  for (std::size_t t = 0; t < 5; ++t) algs.push_back(gen[t]);
  for (const auto& L : algs) {
    auto der = restricted_derivations(*L);
    const std::size_t n = L->dim();
    Subspace span(L->field(), n * n);
    for (const auto* block : {&der.even, &der.odd})
      for (const auto& D : *block) span.extend(flat(D));
    CHECK(span.dim() == der.dim());
    for (std::size_t i = 0; i < n; ++i) CHECK(span.contains(flat(L->ad_basis(i))));
    for (unsigned par : {0U, 1U})
      for (const auto& D : par == 0 ? der.even : der.odd)
        CHECK(check_restricted_derivation(*L, D, par, rng, 5).passed());
    // outer derivations against the restricted cohomology of the adjoint module
    CHECK(der.dim() - inner_derivation_dim(*L) == restricted_cohomology(adjoint_rep(L), 1).dim_h);
  }
}

TEST_CASE("derivations of (1|1) algebras agree with brute force over GF(3)") {
  PrimeField f(3);
  std::vector<AlgebraPtr> algs{
      std::make_shared<const SuperAlgebra>(f, SuperBasis({"z"}, {"y"}), std::vector<BracketEntry>{},
                                           std::vector<Vec>{Vec{0, 0}}),
      std::make_shared<const SuperAlgebra>(f, SuperBasis({"z"}, {"y"}),
                                           std::vector<BracketEntry>{{1, 1, Vec{1, 0}}},
                                           std::vector<Vec>{Vec{1, 0}})};
  for (const auto& L : algs) {
    REQUIRE(check_axioms(*L).passed());
    REQUIRE(check_restricted(*L).passed());
    std::size_t count[2] = {0, 0};
    for (unsigned code = 0; code < 81; ++code) {
      Matrix D(f, 2, 2);
      unsigned c = code;
      for (std::size_t e = 0; e < 4; ++e, c /= 3) D(e / 2, e % 2) = c % 3;
      for (unsigned par : {0U, 1U}) {
        bool homogeneous = par == 0 ? D(0, 1) == 0 && D(1, 0) == 0 : D(0, 0) == 0 && D(1, 1) == 0;
        if (!homogeneous) continue;
        bool ok = true;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) {
            Vec lhs = D.apply(L->bracket_basis(i, j));
            Vec rhs = f.sum(f.scaled(f.sign(par * L->parity(i)), L->bracket(L->unit(i), D.column(j))),
                            L->bracket(D.column(i), L->unit(j)));
            ok = ok && lhs == rhs;
          }
        Vec z = L->unit(0);
        ok = ok && D.apply(L->pmap_basis(0)) == L->ad_basis(0).pow(2).apply(D.apply(z));
        if (ok) ++count[par];
      }
    }
    auto der = restricted_derivations(*L);
    CHECK(count[0] == static_cast<std::size_t>(std::pow(3, der.even.size())));
    CHECK(count[1] == static_cast<std::size_t>(std::pow(3, der.odd.size())));
  }
}

TEST_CASE("module extension from the cocycle X^1") {
  PrimeField f(3);
  auto L = restricted_model_filiform(f, Vec(3, 0));
  auto T = trivial_rep(L);
  auto H = hom_rep(T, T);
  CochainSpace C1(H, 1);
  Vec phi(C1.dim(), 0);
  phi[*C1.find({0})] = 1;
  auto ext = module_extension_from_cocycle(T, T, phi);
  CHECK(ext.E.dim() == 2);
  CHECK(check_rep(ext.E).passed());
  CHECK(check_exact(ext.datum).passed());
  Matrix jordan(f, 2, 2);
  jordan(1, 0) = 1;
  CHECK(ext.E.action(0) == jordan);
  for (std::size_t x = 1; x < L->dim(); ++x) CHECK(ext.E.action(x).is_zero());
  // not a coboundary: no equivalence with the split extension
  auto split = module_extension_from_cocycle(T, T, Vec(C1.dim(), 0));
  CHECK_FALSE(module_equivalence(split, ext, T, T).has_value());
  auto self = module_equivalence(ext, ext, T, T);
  REQUIRE(self.has_value());
  CHECK(is_extension_equivalence(ext, ext, *self));

  // an odd cocycle: M enters E with shifted parity
  Vec y1(C1.dim(), 0);
  y1[*C1.find({3})] = 1;
  auto odd = module_extension_from_cocycle(T, T, y1);
  CHECK(odd.theta == 1);
  CHECK(odd.E.basis().n_odd() == 1);
  CHECK(check_rep(odd.E).passed());

  Vec x3(C1.dim(), 0);
  x3[*C1.find({2})] = 1;
  CHECK_THROWS_AS(module_extension_from_cocycle(T, T, x3), NotCocycleError);
  CHECK_THROWS_AS(module_extension_from_cocycle(T, T, f.sum(phi, y1)), ParityError);
}

TEST_CASE("module extensions: coboundaries split, cocycles give modules") {
  std::mt19937_64 rng(17);
  PrimeField f(3);
  std::vector<AlgebraPtr> algs{restricted_model_filiform(f, Vec(3, 0)),
                               restricted_model_filiform(f, Vec{1, 0, 2})};
  auto gen = testsupport::random_restricted_algebras();
  algs.push_back(gen[0]);
  algs.push_back(gen[2]);
  for (const auto& L : algs) {
    auto T = trivial_rep(L);
    auto A = adjoint_rep(L);
    for (auto [N, M] : {std::pair{&T, &A}, std::pair{&A, &T}}) {
      auto H = hom_rep(*N, *M);
      CochainSpace C0(H, 0), C1(H, 1);
      Matrix d0 = d_star_matrix(C0, C1);
      auto split = module_extension_from_cocycle(*N, *M, Vec(C1.dim(), 0));
      CHECK(check_rep(split.E).passed());
      for (unsigned par : {0U, 1U}) {
        // coboundary: sigma of the printed shape and the solver both work
        Vec fvec = random_vec(f, H.dim(), rng);
        for (std::size_t i = 0; i < fvec.size(); ++i)
          if (H.parity(i) != par) fvec[i] = 0;
        Vec phi = d0.apply(fvec);
        auto e0 = module_extension_from_cocycle(*N, *M, Vec(C1.dim(), 0), par);
        auto e1 = module_extension_from_cocycle(*N, *M, phi, par);
        CHECK(check_rep(e1.E).passed());
        Matrix sigma = module_sigma_from_coboundary(e0, *N, *M, fvec);
        CHECK(is_extension_equivalence(e0, e1, sigma));
        auto solved = module_equivalence(e0, e1, *N, *M);
        REQUIRE(solved.has_value());
        CHECK(is_extension_equivalence(e0, e1, *solved));
        // random cocycle of this parity
        Vec z = random_cocycle(H, 1, par, rng);
        auto ez = module_extension_from_cocycle(*N, *M, z, par);
        CHECK(check_rep(ez.E).passed());
        CHECK(check_exact(ez.datum).passed());
        const bool boundary = coboundaries(H, 1, Theory::Restricted).contains(z);
        auto split_par = module_extension_from_cocycle(*N, *M, Vec(C1.dim(), 0), par);
        CHECK(module_equivalence(split_par, ez, *N, *M).has_value() == boundary);
      }
    }
  }
}

TEST_CASE("central extensions") {
  PrimeField f(3);
  auto L = restricted_model_filiform(f, Vec(3, 0));
  auto K = line(f, "c");
  auto R = central_coefficients(L, *K);
  CochainSpace C1(R, 1), C2(R, 2), C3(R, 3);

  auto direct = central_extension(L, *K, zero_two(C2));
  CHECK(direct.E->dim() == 7);
  CHECK(check_axioms(*direct.E).passed());
  CHECK(check_restricted(*direct.E).passed());
  CHECK(check_exact(direct.datum).passed());

  RestrictedTwoCochain c = zero_two(C2);
  c.phi[*C2.find({0, 2})] = 1;
  auto ext = central_extension(L, *K, c);
  CHECK(check_axioms(*ext.E).passed());
  CHECK(check_restricted(*ext.E).passed());
  CHECK(section_to_cocycle(ext, canonical_section(ext)).phi == c.phi);

  RestrictedTwoCochain bad = zero_two(C2);
  bad.phi[*C2.find({4, 4})] = 1;
  CHECK_THROWS_AS(central_extension(L, *K, bad), NotCocycleError);
  RestrictedTwoCochain odd = zero_two(C2);
  odd.phi[*C2.find({0, 3})] = 1;
  CHECK_THROWS_AS(central_extension(L, *K, odd), ParityError);
  auto nonab = std::make_shared<const SuperAlgebra>(f, SuperBasis({"c"}, {}), std::vector<BracketEntry>{},
                                                    std::vector<Vec>{Vec{1}});
  CHECK_THROWS_AS(central_extension(L, *nonab, c), NotStronglyAbelianError);
  CHECK_THROWS_AS(section_to_cocycle(ext, Matrix(f, 7, 6)), NotASectionError);
}

TEST_CASE("central extension round trip and section change") {
  std::mt19937_64 rng(2024);
  PrimeField f(3);
  auto L = restricted_model_filiform(f, Vec(3, 0));
  auto K = line(f, "c");
  auto R = central_coefficients(L, *K);
  CochainSpace C1(R, 1), C2(R, 2);
  Subspace b2 = coboundaries(R, 2, Theory::Restricted);
  for (int s = 0; s < 10; ++s) {
    auto c = unflatten_two(C2, random_cocycle(R, 2, 0, rng));
    auto ext = central_extension(L, *K, c);
    CHECK(check_axioms(*ext.E).passed());
    CHECK(check_restricted(*ext.E, static_cast<std::uint64_t>(s)).passed());
    auto back = section_to_cocycle(ext, canonical_section(ext));
    CHECK(flatten(C2, back) == flatten(C2, c));

    Vec phi = random_vec(f, C1.dim(), rng);
    for (std::size_t i = 0; i < phi.size(); ++i)
      if (C1.parity(i) != 0) phi[i] = 0;
    Matrix shift(f, ext.E->dim(), L->dim());
    for (std::size_t j = 0; j < L->dim(); ++j)
      shift.set_column(j, ext.datum.iota.apply(evaluate_basis(C1, phi, {j})));
    auto moved = section_to_cocycle(ext, canonical_section(ext) + shift);
    Vec diff = f.difference(flatten(C2, moved), flatten(C2, c));
    CHECK(b2.contains(diff));
    CHECK(diff == flatten(C2, d_star1(C1, C2, phi)));

    // the equivalence solver recovers a phi and sigma is a restricted isomorphism
    auto ext2 = central_extension(L, *K, moved);
    auto found = central_equivalence(R, c, moved);
    REQUIRE(found.has_value());
    Matrix sigma = central_sigma(ext, *found);
    CHECK(is_restricted_homomorphism(*ext.E, *ext2.E, sigma));
    CHECK(rank(sigma) == ext.E->dim());
  }
  // a class outside B^2_* has no equivalence with the split extension
  RestrictedTwoCochain c = zero_two(C2);
  c.phi[*C2.find({0, 2})] = 1;
  CHECK_FALSE(central_equivalence(R, zero_two(C2), c).has_value());
}
