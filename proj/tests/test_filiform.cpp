#include "doctest.h"
#include "supercohom/filiform.hpp"

using namespace supercohom;

TEST_CASE("model filiform brackets") {
  PrimeField f(7);
  auto L = model_filiform(f, 3, 3);
  CHECK(L->dim() == 6);
  CHECK(L->bracket(L->unit(0), L->unit(1)) == L->unit(2));
  CHECK(L->bracket(L->unit(0), L->unit(3)) == L->unit(4));
  CHECK(L->bracket(L->unit(0), L->unit(4)) == L->unit(5));
  CHECK(L->bracket_entries().size() == 3);
  CHECK(is_zero(L->bracket(L->unit(1), L->unit(2))));
  CHECK_FALSE(L->restricted());
  CHECK(L->basis().name(0) == "X1");
  CHECK(L->basis().name(3) == "Y1");
  CHECK(check_axioms(*model_filiform(PrimeField(5), 5, 5)).passed());
  CHECK_THROWS(model_filiform(f, 0, 2));
}

TEST_CASE("restricted family p-map") {
  PrimeField f(5);
  auto L0 = restricted_model_filiform(f, Vec(5, 0));
  for (const auto& v : L0->pmap()) CHECK(is_zero(v));
  auto L = restricted_model_filiform(f, {0, 0, 0, 0, 1});
  CHECK(L->pmap_basis(4) == L->unit(4));
  for (std::size_t k = 0; k < 4; ++k) CHECK(is_zero(L->pmap_basis(k)));
  CHECK_THROWS_AS(restricted_model_filiform(f, {1, 2}), std::length_error);

  PrimeField g(3);
  auto L3 = restricted_model_filiform(g, {1, 2, 0});
  CHECK(check_restricted(*L3).passed());
  for (std::size_t k = 0; k < 3; ++k) CHECK(L3->ad_basis(k).pow(3).is_zero());
}

TEST_CASE("nilpotency and centre") {
  for (std::uint32_t p : {3U, 5U, 7U}) {
    PrimeField f(p);
    auto L = restricted_model_filiform(f, Vec(p, 1));
    CHECK(L->ad_basis(0).pow(p).is_zero());
    for (std::size_t i = 1; i < p; ++i)
      for (std::size_t j = 1; j < p; ++j) CHECK((L->ad_basis(i) * L->ad_basis(j)).is_zero());
    for (std::size_t i = 0; i < L->dim(); ++i) {
      CHECK(is_zero(L->bracket(L->unit(i), L->unit(p - 1))));
      CHECK(is_zero(L->bracket(L->unit(i), L->unit(2 * p - 1))));
    }
  }
  auto L = model_filiform(PrimeField(3), 4, 6);
  CHECK(L->ad_basis(0).pow(6).is_zero());
  CHECK_FALSE(L->ad_basis(0).pow(5).is_zero());
}
