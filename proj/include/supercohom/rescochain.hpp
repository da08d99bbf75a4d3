#pragma once

// The restricted complex C^q_*, q <= 3.
//
// A restricted 2-cochain (phi, omega) is stored as the coordinates of phi
// followed by omega's values on the even basis; omega elsewhere is fixed by
// the *-property. A restricted 3-cochain (alpha, beta) stores beta on ordered
// pairs of even basis elements.
//
// Sign convention: d^q_* = (d^q, -ind^q) for q = 1, 2. With ind^q as printed
// this is the choice for which d_* o d_* = 0 and the *-property of ind^1 hold
// together with the differential d^q used throughout.

#include <cstdint>
#include <functional>
#include <random>

#include "supercohom/cochain.hpp"

namespace supercohom {

struct RestrictedTwoCochain {
  Vec phi;
  std::vector<Vec> omega;  // one module vector per even basis element
};

struct RestrictedThreeCochain {
  Vec alpha;
  std::vector<std::vector<Vec>> beta;  // beta[x][y] on even basis pairs
};

// Dimension of C^q_*: dim C^q plus the stored omega / beta values.
std::size_t restricted_dim(const CochainSpace& C);
// Parity of a coordinate of C^q_*.
unsigned restricted_parity(const CochainSpace& C, std::size_t idx);

Vec flatten(const CochainSpace& C2, const RestrictedTwoCochain& c);
Vec flatten(const CochainSpace& C3, const RestrictedThreeCochain& c);
RestrictedTwoCochain unflatten_two(const CochainSpace& C2, const Vec& v);
RestrictedThreeCochain unflatten_three(const CochainSpace& C3, const Vec& v);
RestrictedTwoCochain zero_two(const CochainSpace& C2);

// Correction term of the *-property for omega(u + v) - omega(u) - omega(v):
// sum over words w in {u, v}^p with w_1 = u, w_2 = v of
// (1/#u) sum_{k=0}^{p-2} (-1)^k w_p ... w_{p-k+1} . phi([w_1, ..., w_{p-k-1}], w_{p-k}).
Vec star_correction(const CochainSpace& C2, const Vec& phi, const Vec& u, const Vec& v);

// omega(x) for even x, from its basis values by p-semilinearity and the
// additivity rule applied over the support of x in basis order.
Vec star_extend(const CochainSpace& C2, const RestrictedTwoCochain& c, const Vec& x);

// ind^1(psi)(x) = psi(x^[p]) - x^{p-1} psi(x), on the even basis and at any even x.
std::vector<Vec> ind1(const CochainSpace& C1, const Vec& psi);
Vec ind1_at(const CochainSpace& C1, const Vec& psi, const Vec& x);

// ind^2(alpha, beta)(x, y) = alpha(x, y^[p]) - sum_{i+j=p-1} (-1)^i y^i alpha([x, y, .., y], y)
// + x beta(y), with j copies of y in the bracket.
std::vector<std::vector<Vec>> ind2(const CochainSpace& C2, const RestrictedTwoCochain& c);
// The same expression at arbitrary even x, y, with beta(y) from star_extend.
Vec ind2_at(const CochainSpace& C2, const RestrictedTwoCochain& c, const Vec& x, const Vec& y);

// Matrix of d^q_*: C^q_* -> C^{q+1}_*, q <= 2, in flattened coordinates.
Matrix d_star_matrix(const CochainSpace& src, const CochainSpace& dst);
Matrix d_star_matrix(const Representation& R, unsigned q);

RestrictedTwoCochain d_star1(const CochainSpace& C1, const CochainSpace& C2, const Vec& psi);
RestrictedThreeCochain d_star2(const CochainSpace& C2, const CochainSpace& C3,
                               const RestrictedTwoCochain& c);

// Correction term of the **-property:
// (1/#y1) sum_{j=0}^{p-2} (-1)^j sum_{k=0}^{j} C(j,k) h_p ... h_{p-k+1} .
//   alpha([x, h_{p-k}, ..., h_{p-j+1}], [h_1, ..., h_{p-j-1}], h_{p-j})
// over words h in {y1, y2}^p with h_1 = y1, h_2 = y2.
Vec doublestar_correction(const CochainSpace& C3, const Vec& alpha, const Vec& x, const Vec& y1,
                          const Vec& y2);

// beta(x, y) for even x, y: linear in x, and in y by semilinearity and
// beta(x, y1 + y2) = beta(x, y1) + beta(x, y2) - correction.
Vec doublestar_extend(const CochainSpace& C3, const RestrictedThreeCochain& c, const Vec& x,
                      const Vec& y);

using OmegaFn = std::function<Vec(const Vec&)>;
using BetaFn = std::function<Vec(const Vec&, const Vec&)>;

// *-property (i) omega(a x) = a^p omega(x) and (ii) the additivity rule, at
// random even vectors.
CheckReport star_property_check(const CochainSpace& C2, const Vec& phi, const OmegaFn& omega,
                                std::mt19937_64& rng, int samples = 20);
CheckReport star_property_check(const CochainSpace& C2, const RestrictedTwoCochain& c,
                                std::mt19937_64& rng, int samples = 20);

// **-property: (i) linearity in x, (ii) semilinearity in y, (iii) additivity
// in y with the correction above, at random even vectors.
CheckReport doublestar_property_check(const CochainSpace& C3, const Vec& alpha, const BetaFn& beta,
                                      std::mt19937_64& rng, int samples = 10);
CheckReport doublestar_property_check(const CochainSpace& C3, const RestrictedThreeCochain& c,
                                      std::mt19937_64& rng, int samples = 10);

// A uniformly random even vector of L.
Vec random_even(const SuperAlgebra& L, std::mt19937_64& rng);

}  // namespace supercohom
