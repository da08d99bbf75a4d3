#pragma once

// Restricted superderivations, module extensions from 1-cocycles, central
// extensions from restricted 2-cocycles, and the maps realising equivalence
// of extensions.

#include <optional>
#include <random>

#include "supercohom/rescochain.hpp"

namespace supercohom {

// 0 -> K --iota--> E --pi--> N -> 0 as matrices.
struct ExtensionDatum {
  Matrix iota;
  Matrix pi;
};

// pi iota = 0, iota injective, pi surjective, rank iota = dim ker pi.
CheckReport check_exact(const ExtensionDatum& d);

// ---- derivations ----

struct Superderivations {
  std::vector<Matrix> even;
  std::vector<Matrix> odd;
  std::size_t dim() const { return even.size() + odd.size(); }
};

// Homogeneous D with D([x,y]) = (-1)^{|D||x|}[x, D y] + [D x, y] on basis pairs
// and D(z^[p]) = (ad z)^{p-1} D(z) on the even basis.
Superderivations restricted_derivations(const SuperAlgebra& L);

// Both conditions on all basis pairs, and the p-condition at random even z.
CheckReport check_restricted_derivation(const SuperAlgebra& L, const Matrix& D, unsigned parity,
                                        std::mt19937_64& rng, int samples = 10);

// dim ad L = dim L - dim Z(L).
std::size_t inner_derivation_dim(const SuperAlgebra& L);

// ---- module extensions ----

struct ModuleExtension {
  Representation E;
  ExtensionDatum datum;  // iota: M -> E, pi: E -> N
  unsigned theta = 0;    // parity of the cocycle; M sits in E with parity shifted by theta
  std::vector<std::size_t> pos_n, pos_m;  // E coordinates of the N and M basis
};

// E = N + M with x(n, m) = (xn, xm + (-1)^{|phi|(|x|+|n|)} phi(x)(n)), for a
// homogeneous restricted 1-cocycle phi with values in Hom(N, M). E is ordered
// by E-parity, N before M inside each block. Throws NotCocycleError unless
// d^1_* phi = 0 and ParityError for a cocycle of mixed parity.
ModuleExtension module_extension_from_cocycle(const Representation& N, const Representation& M,
                                              const Vec& phi);
// The same with the parity fixed, so that phi = 0 can be given the odd layout.
ModuleExtension module_extension_from_cocycle(const Representation& N, const Representation& M,
                                              const Vec& phi, unsigned theta);

// sigma(n, m) = (n, m - (-1)^{theta|n|} f(n)) for f in Hom(N, M) of parity theta;
// maps the extension of phi1 onto that of phi1 + d^0_* f.
Matrix module_sigma_from_coboundary(const ModuleExtension& E1, const Representation& N,
                                    const Representation& M, const Vec& f);

// Searches sigma(n, m) = (n, m + g(n)) with g even for the E-grading and
// sigma an L-module map E1 -> E2.
std::optional<Matrix> module_equivalence(const ModuleExtension& E1, const ModuleExtension& E2,
                                         const Representation& N, const Representation& M);

// sigma rho_1(x) = rho_2(x) sigma on the basis, sigma iota_1 = iota_2,
// pi_2 sigma = pi_1 and sigma invertible.
bool is_extension_equivalence(const ModuleExtension& E1, const ModuleExtension& E2,
                              const Matrix& sigma);

// ---- central extensions ----

struct CentralExtension {
  AlgebraPtr L;
  SuperBasis K;
  AlgebraPtr E;          // basis K_even, L_even, K_odd, L_odd
  ExtensionDatum datum;  // iota: K -> E, pi: E -> L
};

// Zero bracket and zero p-map on the even part.
bool is_strongly_abelian(const SuperAlgebra& K);

// The trivial L-module carried by the graded space of K.
Representation central_coefficients(const AlgebraPtr& L, const SuperAlgebra& K);

// L_{alpha,beta} = K + L with [(k1,l1),(k2,l2)] = (alpha(l1,l2), [l1,l2]) and
// (k,l)^[p] = (beta(l), l^[p]). c lives in C^2_* of central_coefficients(L, K).
CentralExtension central_extension(const AlgebraPtr& L, const SuperAlgebra& K,
                                   const RestrictedTwoCochain& c);

// l -> (0, l).
Matrix canonical_section(const CentralExtension& ext);

// alpha(x,y) = iota^{-1}([rho x, rho y] - rho[x,y]) and
// beta(z) = iota^{-1}(rho(z)^[p] - rho(z^[p])) on the even basis.
RestrictedTwoCochain section_to_cocycle(const CentralExtension& ext, const Matrix& rho);

// An even phi in C^1(L; K) with c2 = c1 + d^1_* phi, if any.
std::optional<Vec> central_equivalence(const Representation& coeff, const RestrictedTwoCochain& c1,
                                       const RestrictedTwoCochain& c2);

// sigma(k, l) = (k - phi(l), l) from the extension of c1 to that of c1 + d^1_* phi.
Matrix central_sigma(const CentralExtension& ext, const Vec& phi);

// sigma[u,v] = [sigma u, sigma v] on basis pairs and sigma(u^[p]) = sigma(u)^[p]
// on the even basis.
bool is_restricted_homomorphism(const SuperAlgebra& A, const SuperAlgebra& B, const Matrix& sigma);

}  // namespace supercohom
