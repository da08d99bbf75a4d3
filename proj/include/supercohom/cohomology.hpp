#pragma once

// Cocycles, coboundaries and cohomology in degrees 0-2, ordinary and
// restricted, split by parity.

#include <string>
#include <vector>

#include "supercohom/rescochain.hpp"

namespace supercohom {

enum class Theory { Ordinary, Restricted };

std::string to_string(Theory t);

struct CohomologyReport {
  Theory theory = Theory::Ordinary;
  unsigned degree = 0;
  std::size_t dim_z = 0, dim_b = 0, dim_h = 0;
  std::size_t h_even = 0, h_odd = 0;
  // Echelon-canonical coset representatives, even classes first. Restricted
  // degree-2 representatives are flattened (phi, omega) coordinates.
  std::vector<Vec> representatives;
};

// Z^q and B^q as subspaces of the (flattened) cochain coordinates.
Subspace cocycles(const Representation& R, unsigned q, Theory t);
Subspace coboundaries(const Representation& R, unsigned q, Theory t);

CohomologyReport cohomology(const Representation& R, unsigned q, Theory t);
CohomologyReport ordinary_cohomology(const Representation& R, unsigned q);
CohomologyReport restricted_cohomology(const Representation& R, unsigned q);

struct NamedCochain {
  std::string name;
  Vec coords;
};

// The named 2-cocycles of the filiform algebra L_{p,p} with trivial
// coefficients: X^{1,p}, X^1Y^p, phi_i (i = 5, 7, .., p+2), psi_j (2 <= j <= p)
// and the Y-families phi_k (k = 2, 4, .., p+1). C2 must be C^2 of a trivial
// module over a filiform algebra with n = m = p.
std::vector<NamedCochain> cocycle_families(const CochainSpace& C2);

}  // namespace supercohom
