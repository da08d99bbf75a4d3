#include "doctest.h"
#include "support.hpp"
#include "supercohom/filiform.hpp"
#include "supercohom/representation.hpp"

using namespace supercohom;

TEST_CASE("trivial module") {
  PrimeField f(5);
  auto L = restricted_model_filiform(f, {0, 0, 0, 0, 1});
  auto T = trivial_rep(L);
  CHECK(T.dim() == 1);
  for (std::size_t i = 0; i < L->dim(); ++i) CHECK(T.action(i).is_zero());
  CHECK(check_rep(T).passed());
}

TEST_CASE("adjoint module") {
  PrimeField f(3);
  auto L = restricted_model_filiform(f, Vec(3, 0));
  auto A = adjoint_rep(L);
  CHECK(A.action(0) == L->ad_basis(0));
  CHECK(A.action(2).is_zero());
  CHECK(check_rep(A).passed());
  for (std::uint32_t p : {3U, 5U}) {
    PrimeField g(p);
    Vec lam(p, 1);
    CHECK(check_rep(adjoint_rep(restricted_model_filiform(g, lam))).passed());
  }
}

TEST_CASE("hom module") {
  PrimeField f(3);
  auto L = restricted_model_filiform(f, {1, 2, 0});
  auto T = trivial_rep(L);
  auto A = adjoint_rep(L);
  auto TT = hom_rep(T, T);
  CHECK(TT.dim() == 1);
  for (std::size_t i = 0; i < L->dim(); ++i) CHECK(TT.action(i).is_zero());

  auto TA = hom_rep(T, A);
  CHECK(TA.dim() == A.dim());
  for (std::size_t i = 0; i < L->dim(); ++i) CHECK(TA.action(i) == A.action(i));

  auto AA = hom_rep(A, A);
  CHECK(AA.dim() == 36);
  CHECK(check_rep(AA).passed());
  CHECK(AA.basis().n_even() == 18);

  // Action agrees with (x phi) = rho(x) phi - (-1)^{|phi||x|} phi rho(x) on matrices.
  const auto entries = hom_entries(A, A);
  for (std::size_t i = 0; i < L->dim(); ++i) {
    for (std::size_t t = 0; t < entries.size(); ++t) {
      Vec e(entries.size(), 0);
      e[t] = 1;
      Matrix phi = hom_matrix(A, A, e);
      unsigned par = A.parity(entries[t].first) ^ A.parity(entries[t].second);
      Matrix expect = A.action(i) * phi -
                      (phi * A.action(i)).scaled(f.sign(par * L->parity(i)));
      CHECK(hom_matrix(A, A, AA.action(i).column(t)) == expect);
    }
  }
  auto other = restricted_model_filiform(f, {1, 2, 0});
  CHECK_THROWS_AS(hom_rep(T, trivial_rep(other)), AlgebraMismatchError);
}

TEST_CASE("check_rep detects a flipped sign") {
  PrimeField f(5);
  auto L = restricted_model_filiform(f, Vec(5, 0));
  auto A = adjoint_rep(L);
  auto act = A.actions();
  act[0] = act[0].scaled(f.neg(1));
  act[0](2, 1) = 1;  // only X2 -> X3 keeps its sign
  Representation bad(L, A.basis(), act);
  auto rep = check_rep(bad);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.find("bracket-homomorphism")->witness.empty());
}

TEST_CASE("restricted condition on generated algebras") {
  for (const auto& L : testsupport::random_restricted_algebras()) {
    auto A = adjoint_rep(L);
    CHECK(check_rep(A).passed());
    for (std::size_t i = 0; i < L->n_even(); ++i)
      CHECK(A.rho(L->pmap_basis(i)) == A.action(i).pow(L->p()));
  }
}
