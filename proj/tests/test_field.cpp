#include <random>

#include "doctest.h"
#include "supercohom/field.hpp"

using namespace supercohom;

namespace {

// Inverse by exhaustive search, independent of the extended Euclid code.
Residue scan_inverse(std::uint32_t p, Residue a) {
  for (Residue x = 1; x < p; ++x)
    if (static_cast<std::uint64_t>(a) * x % p == 1) return x;
  return 0;
}

// Pascal triangle over the integers, reduced at the end.
std::uint64_t pascal(int j, int k) {
  std::vector<std::vector<std::uint64_t>> t(j + 1, std::vector<std::uint64_t>(j + 1, 0));
  for (int r = 0; r <= j; ++r) {
    t[r][0] = 1;
    for (int c = 1; c <= r; ++c) t[r][c] = t[r - 1][c - 1] + (c <= r - 1 ? t[r - 1][c] : 0);
  }
  return t[j][k];
}

}  // namespace

TEST_CASE("field_inv examples") {
  CHECK(field_inv(FieldScalar(PrimeField(5), 2)).value() == 3);
  CHECK(field_inv(FieldScalar(PrimeField(7), 1)).value() == 1);
  CHECK(field_inv(FieldScalar(PrimeField(11), 4)).value() == scan_inverse(11, 4));
  CHECK(field_inv(FieldScalar(PrimeField(11), 4)).value() == 3);
}

TEST_CASE("field_inv rejects zero") {
  CHECK_THROWS_AS(field_inv(FieldScalar(PrimeField(7), 0)), DivisionByZero);
  CHECK_THROWS_AS(field_inv(FieldScalar(PrimeField(7), 14)), DivisionByZero);
}

TEST_CASE("inverse is an involution and matches exhaustive search") {
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U, 101U}) {
    PrimeField f(p);
    for (Residue a = 1; a < p; ++a) {
      FieldScalar x(f, a);
      CHECK((x * field_inv(x)).value() == 1);
      CHECK(field_inv(field_inv(x)) == x);
      CHECK(f.inv(a) == scan_inverse(p, a));
    }
  }
}

TEST_CASE("binomial_mod_p examples") {
  CHECK(binomial_mod_p(PrimeField(5), 4, 2).value() == 1);
  CHECK(binomial_mod_p(PrimeField(3), 3, 1).value() == 0);
  CHECK(binomial_mod_p(PrimeField(7), 6, 3).value() == pascal(6, 3) % 7);
  CHECK(binomial_mod_p(PrimeField(7), 6, 3).value() == 6);
  CHECK(binomial_mod_p(PrimeField(7), 3, 5).value() == 0);
  CHECK(binomial_mod_p(PrimeField(7), 3, -1).value() == 0);
}

TEST_CASE("binomial_mod_p agrees with integer Pascal triangle and its recurrence") {
  for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
    PrimeField f(p);
    for (int j = 1; j <= 30; ++j) {
      for (int k = 0; k <= j; ++k) {
        const auto lhs = binomial_mod_p(f, j, k);
        CHECK(lhs == binomial_mod_p(f, j - 1, k - 1) + binomial_mod_p(f, j - 1, k));
        if (j <= 20) CHECK(lhs.value() == pascal(j, k) % p);
      }
    }
  }
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(PrimeField(2), InvalidModulus);
  CHECK_THROWS_AS(PrimeField(9), InvalidModulus);
  CHECK_THROWS_AS(PrimeField(1), InvalidModulus);
  CHECK_NOTHROW(PrimeField(3));
}

TEST_CASE("scalar arithmetic") {
  PrimeField f(7);
  FieldScalar a(f, 3), b(f, -2);
  CHECK(b.value() == 5);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a / b) == a * field_inv(b));
  CHECK((-a).value() == 4);
  CHECK_THROWS(a + FieldScalar(PrimeField(5), 1));
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.sign(3) == 6);
}
