#pragma once

// Lie superalgebras given by structure constants, with an optional p-map on
// the even basis.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supercohom/field.hpp"
#include "supercohom/linalg.hpp"
#include "supercohom/report.hpp"

namespace supercohom {

enum class Parity { Even, Odd, Mixed };

std::string to_string(Parity p);
inline unsigned parity_bit(Parity p) { return p == Parity::Odd ? 1U : 0U; }

// Even names come first in the concatenated index order.
class SuperBasis {
 public:
  SuperBasis() = default;
  SuperBasis(std::vector<std::string> even, std::vector<std::string> odd);

  std::size_t n_even() const { return even_.size(); }
  std::size_t n_odd() const { return odd_.size(); }
  std::size_t dim() const { return even_.size() + odd_.size(); }
  unsigned parity(std::size_t i) const { return i < even_.size() ? 0U : 1U; }
  const std::string& name(std::size_t i) const;
  std::optional<std::size_t> index_of(const std::string& name) const;
  const std::vector<std::string>& even_names() const { return even_; }
  const std::vector<std::string>& odd_names() const { return odd_; }

  // Parity of a coordinate vector; Mixed when its support meets both blocks.
  // The zero vector counts as even.
  Parity parity_of(const Vec& v) const;

  friend bool operator==(const SuperBasis&, const SuperBasis&) = default;

 private:
  std::vector<std::string> even_;
  std::vector<std::string> odd_;
};

struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Vec out;
};

class SuperAlgebra {
 public:
  // brackets lists [e_i, e_j] for i <= j; unlisted pairs are zero. pmap, when
  // present, holds e_i^[p] for every even basis index i.
  SuperAlgebra(const PrimeField& field, SuperBasis basis, const std::vector<BracketEntry>& brackets,
               std::optional<std::vector<Vec>> pmap = std::nullopt);

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.characteristic(); }
  const SuperBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  std::size_t n_even() const { return basis_.n_even(); }
  std::size_t n_odd() const { return basis_.n_odd(); }
  unsigned parity(std::size_t i) const { return basis_.parity(i); }

  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec bracket(const Vec& u, const Vec& v) const;
  // Left-normed [[..[w0, w1], ..], wk].
  Vec left_normed(const std::vector<Vec>& words) const;
  const Matrix& ad_basis(std::size_t i) const { return ad_[i]; }
  Matrix ad_matrix(const Vec& x) const;

  bool restricted() const { return pmap_.has_value(); }
  const std::vector<Vec>& pmap() const;
  const Vec& pmap_basis(std::size_t i) const;

  // The stored constants for i <= j, in row-major order, zero pairs omitted.
  std::vector<BracketEntry> bracket_entries() const;

  Vec zero() const { return Vec(dim(), 0); }
  Vec unit(std::size_t i) const { return field_.unit(dim(), i); }

 private:
  PrimeField field_;
  SuperBasis basis_;
  std::vector<Vec> table_;
  std::vector<Matrix> ad_;
  std::optional<std::vector<Vec>> pmap_;
};

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

Vec bracket(const SuperAlgebra& L, const Vec& u, const Vec& v);
Matrix ad_matrix(const SuperAlgebra& L, const Vec& x);

// Skew-symmetry, [x,x] = 0 for even x, [y,[y,y]] = 0 for odd y, bracket
// parity and the super Jacobi identity on all basis tuples.
CheckReport check_axioms(const SuperAlgebra& L);

// s_i(x, y): i * s_i is the coefficient of t^(i-1) in ad(tx + y)^(p-1)(x).
Vec jacobson_term(const SuperAlgebra& L, const Vec& x, const Vec& y, unsigned i);
// All s_1 .. s_{p-1}.
std::vector<Vec> jacobson_terms(const SuperAlgebra& L, const Vec& x, const Vec& y);

// x^[p] for even x, by two-term Jacobson additivity over the support of x in
// basis order and (a e_i)^[p] = a^p e_i^[p].
Vec p_power(const SuperAlgebra& L, const Vec& x);

// ad(e^[p]) = (ad e)^p on all of L for even basis e, even support of the
// p-map, semilinearity and additivity samples.
CheckReport check_restricted(const SuperAlgebra& L, std::uint64_t seed = 1);

}  // namespace supercohom
