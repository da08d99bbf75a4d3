#pragma once

// Arithmetic in the prime field GF(p), p an odd prime.
//
// Vectors and matrices store raw residues in [0, p) and carry the field
// separately; FieldScalar bundles a residue with its modulus for the
// scalar-level API.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercohom {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in GF(p)") {}
};

class InvalidModulus : public std::invalid_argument {
 public:
  explicit InvalidModulus(std::uint64_t p)
      : std::invalid_argument("modulus " + std::to_string(p) +
                              " is not an odd prime") {}
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Residue reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  // (-1)^e as a residue.
  Residue sign(unsigned e) const { return (e & 1U) ? p_ - 1 : 1; }

  // Vector helpers.
  Vec zeros(std::size_t n) const { return Vec(n, 0); }
  Vec unit(std::size_t n, std::size_t i) const;
  void axpy(Residue a, const Vec& x, Vec& y) const;  // y += a*x
  Vec scaled(Residue a, const Vec& x) const;
  Vec sum(const Vec& x, const Vec& y) const;
  Vec difference(const Vec& x, const Vec& y) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_zero(const Vec& v);

// A residue together with its modulus.
class FieldScalar {
 public:
  FieldScalar(const PrimeField& field, std::int64_t value)
      : p_(field.characteristic()), value_(field.reduce(value)) {}

  Residue value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;

  friend bool operator==(const FieldScalar&, const FieldScalar&) = default;

 private:
  void require_same(const FieldScalar& o) const;
  std::uint32_t p_;
  Residue value_;
};

// Multiplicative inverse; throws DivisionByZero on 0.
FieldScalar field_inv(const FieldScalar& a);

// C(j, k) mod p; 0 when k is outside [0, j].
FieldScalar binomial_mod_p(const PrimeField& field, std::int64_t j, std::int64_t k);

}  // namespace supercohom
