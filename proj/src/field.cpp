#include "supercohom/field.hpp"

namespace supercohom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p <= 2 || !is_prime(p) || p > (1U << 30)) throw InvalidModulus(p);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % p_;
  Residue base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  a %= p_;
  if (a == 0) throw DivisionByZero();
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

Vec PrimeField::unit(std::size_t n, std::size_t i) const {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

void PrimeField::axpy(Residue a, const Vec& x, Vec& y) const {
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = add(y[i], mul(a, x[i]));
}

Vec PrimeField::scaled(Residue a, const Vec& x) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mul(a, x[i]);
  return out;
}

Vec PrimeField::sum(const Vec& x, const Vec& y) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = add(x[i], y[i]);
  return out;
}

Vec PrimeField::difference(const Vec& x, const Vec& y) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = sub(x[i], y[i]);
  return out;
}

bool is_zero(const Vec& v) {
  for (Residue r : v)
    if (r != 0) return false;
  return true;
}

void FieldScalar::require_same(const FieldScalar& o) const {
  if (o.p_ != p_) throw std::invalid_argument("mixing scalars of different fields");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  require_same(o);
  return {field(), static_cast<std::int64_t>(field().add(value_, o.value_))};
}
FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  require_same(o);
  return {field(), static_cast<std::int64_t>(field().sub(value_, o.value_))};
}
FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_same(o);
  return {field(), static_cast<std::int64_t>(field().mul(value_, o.value_))};
}
FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  require_same(o);
  return {field(), static_cast<std::int64_t>(field().div(value_, o.value_))};
}
FieldScalar FieldScalar::operator-() const {
  return {field(), static_cast<std::int64_t>(field().neg(value_))};
}

FieldScalar field_inv(const FieldScalar& a) {
  const PrimeField f = a.field();
  return {f, static_cast<std::int64_t>(f.inv(a.value()))};
}

FieldScalar binomial_mod_p(const PrimeField& field, std::int64_t j, std::int64_t k) {
  if (j < 0 || k < 0 || k > j) return {field, 0};
  // Lucas: C(j,k) = prod C(j_i, k_i) over base-p digits.
  const std::int64_t p = field.characteristic();
  Residue result = 1;
  while (j > 0 || k > 0) {
    const std::int64_t jd = j % p, kd = k % p;
    if (kd > jd) return {field, 0};
    Residue num = 1, den = 1;
    for (std::int64_t t = 0; t < kd; ++t) {
      num = field.mul(num, field.reduce(jd - t));
      den = field.mul(den, field.reduce(t + 1));
    }
    result = field.mul(result, field.div(num, den));
    j /= p;
    k /= p;
  }
  return {field, static_cast<std::int64_t>(result)};
}

}  // namespace supercohom
