#include <map>

#include "doctest.h"
#include "support.hpp"
#include "supercohom/cochain.hpp"
#include "supercohom/filiform.hpp"

using namespace supercohom;

namespace {

// Filiform monomials written with 1-based X/Y labels, e.g. {{1,3},{2}} is X^{1,3}Y^2.
struct Label {
  std::vector<std::size_t> x, y;
  bool operator<(const Label& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
};

std::size_t mono_of(const CochainSpace& C, const Label& l, std::size_t p) {
  Monomial m;
  for (auto i : l.x) m.push_back(i - 1);
  for (auto j : l.y) m.push_back(p + j - 1);
  auto idx = C.find(m);
  REQUIRE(idx.has_value());
  return *idx;
}

// The printed images of the filiform differentials with trivial coefficients.
std::map<Label, std::int64_t> printed_d1(const Label& s) {
  std::map<Label, std::int64_t> out;
  if (!s.x.empty() && s.x[0] >= 3) out[{{1, s.x[0] - 1}, {}}] = -1;
  if (!s.y.empty() && s.y[0] >= 2) out[{{1}, {s.y[0] - 1}}] = -1;
  return out;
}

std::map<Label, std::int64_t> printed_d2(const Label& s) {
  std::map<Label, std::int64_t> out;
  auto add = [&](Label l, std::int64_t c) {
    // an X-index repeated means the monomial vanishes
    for (std::size_t k = 1; k < l.x.size(); ++k)
      if (l.x[k] == l.x[k - 1]) return;
    out[l] += c;
  };
  if (s.x.size() == 2) {
    const auto i = s.x[0], j = s.x[1];
    if (i == 1) return out;
    if (i == 2) {
      if (j >= 4) add({{1, 2, j - 1}, {}}, -1);
      return out;
    }
    add({{1, i - 1, j}, {}}, -1);
    add({{1, i, j - 1}, {}}, -1);
  } else if (s.x.size() == 1) {
    const auto i = s.x[0], j = s.y[0];
    if (i == 1) return out;
    if (i == 2) {
      if (j >= 2) add({{1, 2}, {j - 1}}, -1);
      return out;
    }
    add({{1, i - 1}, {j}}, -1);
    if (j >= 2) add({{1, i}, {j - 1}}, -1);
  } else {
    const auto i = s.y[0], j = s.y[1];
    if (i == j) {
      if (i >= 2) add({{1}, {i - 1, i}}, -2);
      return out;
    }
    if (i >= 2) add({{1}, {i - 1, j}}, -1);
    add({{1}, {i, j - 1}}, -1);
  }
  return out;
}

Label label_of(const CochainSpace& C, std::size_t m, std::size_t p) {
  Label l;
  for (auto i : C.monomial(m)) (i < p ? l.x : l.y).push_back(i < p ? i + 1 : i - p + 1);
  return l;
}

}  // namespace

TEST_CASE("basis enumeration") {
  PrimeField f(5);
  auto L = restricted_model_filiform(f, Vec(5, 0));
  auto T = trivial_rep(L);
  CHECK(enumerate_basis(T, 2).size() == 50);
  CHECK(enumerate_basis(T, 1).size() == 10);
  CHECK(enumerate_basis(T, 0).size() == 1);
  CHECK_THROWS_AS(CochainSpace(T, 4), DegreeError);
  // blocks: even-even, even-odd, odd-odd
  auto b = enumerate_basis(T, 2);
  CHECK(b[0].first == Monomial{0, 1});
  CHECK(b[10].first == Monomial{0, 5});
  CHECK(b[35].first == Monomial{5, 5});
  for (std::uint32_t p : {3U, 5U, 7U}) {
    PrimeField g(p);
    auto Lp = restricted_model_filiform(g, Vec(p, 0));
    CHECK(CochainSpace(trivial_rep(Lp), 2).dim() == 2 * p * p);
  }
  auto A = adjoint_rep(L);
  CHECK(enumerate_basis(A, 1).size() == 100);
}

TEST_CASE("evaluate on basis tuples") {
  PrimeField f(5);
  auto L = restricted_model_filiform(f, Vec(5, 0));
  CochainSpace C(trivial_rep(L), 2);
  auto coord = [&](Monomial m) {
    Vec c(C.dim(), 0);
    c[*C.find(m)] = 1;
    return c;
  };
  Vec x12 = coord({0, 1});
  CHECK(evaluate_basis(C, x12, {1, 0}) == Vec{4});
  CHECK(evaluate_basis(C, x12, {0, 1}) == Vec{1});
  CHECK(evaluate_basis(C, x12, {0, 0}) == Vec{0});
  // product-normalised dual basis: Y^{1,1}(Y1, Y1) = 2
  Vec y11 = coord({5, 5});
  CHECK(evaluate_basis(C, y11, {5, 5}) == Vec{2});
  // odd-even transposition has sign -1, odd-odd +1
  Vec x1y1 = coord({0, 5});
  CHECK(evaluate_basis(C, x1y1, {5, 0}) == Vec{4});
  Vec y12 = coord({5, 6});
  CHECK(evaluate_basis(C, y12, {6, 5}) == Vec{1});
  CHECK(evaluate(C, x12, {L->unit(1), L->unit(0)}) == Vec{4});
  // bilinearity: X^{1,2}(X1 + 2X2, 3X1 + X2) = 1*1 - 2*3 = -5 = 0 mod 5
  CHECK(evaluate(C, x12, {{1, 2, 0, 0, 0, 0, 0, 0, 0, 0}, {3, 1, 0, 0, 0, 0, 0, 0, 0, 0}}) == Vec{0});
  CHECK_THROWS_AS(evaluate(C, x12, {L->unit(0)}), DimensionError);

  // weight fallback: Y^{1,1,1} at p = 3 has weight 3! = 0 mod 3 and is taken as 1
  PrimeField g(3);
  auto L3 = restricted_model_filiform(g, Vec(3, 0));
  CochainSpace C3(trivial_rep(L3), 3);
  auto m = *C3.find({3, 3, 3});
  CHECK(C3.weight(m) == 1);
  CHECK(C3.weight(*C3.find({3, 3, 4})) == 2);
}

TEST_CASE("canonicalize signs") {
  PrimeField f(7);
  auto L = model_filiform(f, 3, 3);
  CochainSpace C(trivial_rep(L), 3);
  auto c = C.canonicalize({2, 1, 0});
  CHECK(c.sign == 6);  // three even transpositions
  CHECK(C.monomial(c.mono) == Monomial{0, 1, 2});
  c = C.canonicalize({4, 3, 0});  // Y2 Y1 X1 -> X1 Y1 Y2: one odd-odd (+1) and two even-odd (-1) swaps
  CHECK(c.sign == 1);
  CHECK(C.canonicalize({0, 1, 0}).sign == 0);
  CHECK(C.canonicalize({3, 0, 3}).sign == 6);
}

TEST_CASE("filiform differential examples") {
  PrimeField f(5);
  auto L = restricted_model_filiform(f, Vec(5, 0));
  auto T = trivial_rep(L);
  CochainSpace C1(T, 1), C2(T, 2), C3(T, 3);
  Matrix d1 = differential_matrix(C1, C2);
  Matrix d2 = differential_matrix(C2, C3);
  Vec x3(C1.dim(), 0);
  x3[*C1.find({2})] = 1;
  Vec img = d1.apply(x3);
  Vec expect(C2.dim(), 0);
  expect[*C2.find({0, 1})] = 4;
  CHECK(img == expect);
  for (std::size_t i : {0, 1, 5}) CHECK(is_zero(d1.column(*C1.find({i}))));
  Vec y22 = d2.column(*C2.find({6, 6}));
  Vec e(C3.dim(), 0);
  e[*C3.find({0, 5, 6})] = 3;  // -2 mod 5
  CHECK(y22 == e);
  CHECK(rank(d1) == 7);
  auto rki = rank_kernel_image(d2);
  CHECK(rki.kernel.dim() == 18);
  CHECK(quotient_basis(rki.kernel, rank_kernel_image(d1).image).size() == 11);
}

TEST_CASE("printed filiform differentials are reproduced entry by entry") {
  for (std::uint32_t p : {3U, 5U, 7U}) {
    PrimeField f(p);
    Vec lam(p, 1);
    auto L = restricted_model_filiform(f, lam);
    auto T = trivial_rep(L);
    CochainSpace C1(T, 1), C2(T, 2), C3(T, 3);
    for (auto [src, dst, printed] :
         {std::tuple{&C1, &C2, &printed_d1}, std::tuple{&C2, &C3, &printed_d2}}) {
      Matrix d = differential_matrix(*src, *dst);
      for (std::size_t m = 0; m < src->num_monomials(); ++m) {
        Vec expect(dst->dim(), 0);
        for (auto [lab, c] : (*printed)(label_of(*src, m, p)))
          expect[mono_of(*dst, lab, p)] = f.reduce(c);
        INFO("p = " << p << ", source " << src->monomial_name(m));
        CHECK(d.column(m) == expect);
      }
    }
  }
}

TEST_CASE("d o d = 0 and parity preservation") {
  std::vector<Representation> mods;
  for (std::uint32_t p : {3U, 5U}) {
    PrimeField f(p);
    Vec lam(p);
    for (std::size_t k = 0; k < p; ++k) lam[k] = static_cast<Residue>(k % p);
    auto L = restricted_model_filiform(f, lam);
    mods.push_back(trivial_rep(L));
    mods.push_back(adjoint_rep(L));
  }
  auto gen = testsupport::random_restricted_algebras();
  for (std::size_t t = 0; t < 5; ++t) mods.push_back(adjoint_rep(gen[t]));
  for (const auto& R : mods) {
    CochainSpace C0(R, 0), C1(R, 1), C2(R, 2), C3(R, 3);
    Matrix d0 = differential_matrix(C0, C1), d1 = differential_matrix(C1, C2),
           d2 = differential_matrix(C2, C3);
    CHECK((d1 * d0).is_zero());
    CHECK((d2 * d1).is_zero());
    for (auto [d, s, t] : {std::tuple{&d1, &C1, &C2}, std::tuple{&d2, &C2, &C3}})
      for (std::size_t i = 0; i < d->rows(); ++i)
        for (std::size_t j = 0; j < d->cols(); ++j)
          if ((*d)(i, j) != 0) CHECK(t->parity(i) == s->parity(j));
  }
}

TEST_CASE("cochain parity") {
  PrimeField f(3);
  auto L = restricted_model_filiform(f, Vec(3, 0));
  CochainSpace C(trivial_rep(L), 2);
  Vec c(C.dim(), 0);
  CHECK(cochain_parity(C, c) == Parity::Even);
  c[*C.find({0, 3})] = 1;
  CHECK(cochain_parity(C, c) == Parity::Odd);
  c[*C.find({0, 1})] = 1;
  CHECK(cochain_parity(C, c) == Parity::Mixed);
}
