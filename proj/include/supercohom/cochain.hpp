#pragma once

// Ordinary cochains C^q(L; M), q <= 3, over the canonical super-exterior basis.
//
// A monomial lists algebra basis indices with the even ones first, even
// indices strictly increasing and odd indices weakly increasing. The dual
// basis is product-normalised: a basis cochain evaluated on its own monomial
// gives prod(r!) over the multiplicities r of repeated odd indices (the
// "weight"), so coordinates are values divided by the weight. When the weight
// vanishes mod p (three equal odd indices at p = 3) it is taken to be 1.

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "supercohom/representation.hpp"

namespace supercohom {

using Monomial = std::vector<std::size_t>;

class CochainSpace {
 public:
  static constexpr unsigned kMaxDegree = 3;

  CochainSpace(const Representation& R, unsigned q);

  unsigned degree() const { return q_; }
  const Representation& module() const { return R_; }
  const SuperAlgebra& L() const { return R_.L(); }
  const PrimeField& field() const { return R_.field(); }

  std::size_t num_monomials() const { return monomials_.size(); }
  const Monomial& monomial(std::size_t m) const { return monomials_[m]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t module_dim() const { return R_.dim(); }
  std::size_t dim() const { return monomials_.size() * R_.dim(); }
  std::size_t index(std::size_t mono, std::size_t b) const { return mono * R_.dim() + b; }
  std::pair<std::size_t, std::size_t> split(std::size_t idx) const {
    return {idx / R_.dim(), idx % R_.dim()};
  }

  unsigned monomial_parity(std::size_t m) const { return mono_parity_[m]; }
  unsigned parity(std::size_t idx) const {
    const auto [m, b] = split(idx);
    return mono_parity_[m] ^ R_.parity(b);
  }
  Residue weight(std::size_t m) const { return weight_[m]; }

  // Index of a monomial already in canonical order.
  std::optional<std::size_t> find(const Monomial& m) const;

  struct Canonical {
    Residue sign = 0;  // 0 when the tuple vanishes in the exterior power
    std::size_t mono = 0;
  };
  // Sorts a tuple of basis indices into canonical order, with sign
  // -(-1)^{|a||b|} per adjacent transposition.
  Canonical canonicalize(const std::vector<std::size_t>& tuple) const;

  std::string monomial_name(std::size_t m) const;
  std::string basis_name(std::size_t idx) const;

 private:
  static std::uint64_t key(const Monomial& m);

  Representation R_;
  unsigned q_;
  std::vector<Monomial> monomials_;
  std::vector<unsigned> mono_parity_;
  std::vector<Residue> weight_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

struct Cochain {
  unsigned degree = 0;
  Vec coords;
};

// (monomial, basis index) pairs in the order used by every coordinate vector.
std::vector<std::pair<Monomial, std::size_t>> enumerate_basis(const Representation& R, unsigned q);

// Parity of a coordinate vector (the zero cochain counts as even).
Parity cochain_parity(const CochainSpace& C, const Vec& coords);

// For arguments u_1..u_q returns pairs (monomial m, c_m) with
// phi(u_1, ..., u_q) = sum_m c_m * phi_m, phi_m the block of coordinates of m.
std::vector<std::pair<std::size_t, Residue>> pairing(const CochainSpace& C,
                                                     const std::vector<Vec>& args);

// Value of a cochain on algebra vectors (multilinear extension).
Vec evaluate(const CochainSpace& C, const Vec& coords, const std::vector<Vec>& args);
// Value on a tuple of algebra basis indices.
Vec evaluate_basis(const CochainSpace& C, const Vec& coords, const std::vector<std::size_t>& idx);

// Matrix of d^q : C^q -> C^{q+1}, q <= 2.
Matrix differential_matrix(const CochainSpace& src, const CochainSpace& dst);
Matrix differential_matrix(const Representation& R, unsigned q);

}  // namespace supercohom
