#include "supercohom/superalg.hpp"

#include <random>
#include <set>
#include <sstream>

namespace supercohom {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    case Parity::Mixed:
      return "mixed";
  }
  return "mixed";
}

SuperBasis::SuperBasis(std::vector<std::string> even, std::vector<std::string> odd)
    : even_(std::move(even)), odd_(std::move(odd)) {
  std::set<std::string> seen;
  for (const auto* list : {&even_, &odd_}) {
    for (const auto& n : *list) {
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate basis name '" + n + "'");
    }
  }
}

const std::string& SuperBasis::name(std::size_t i) const {
  if (i < even_.size()) return even_[i];
  if (i < dim()) return odd_[i - even_.size()];
  throw DimensionError("basis index out of range");
}

std::optional<std::size_t> SuperBasis::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (this->name(i) == name) return i;
  return std::nullopt;
}

Parity SuperBasis::parity_of(const Vec& v) const {
  if (v.size() != dim()) throw DimensionError("vector length does not match basis");
  bool even = false, odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    (parity(i) ? odd : even) = true;
  }
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

SuperAlgebra::SuperAlgebra(const PrimeField& field, SuperBasis basis,
                           const std::vector<BracketEntry>& brackets,
                           std::optional<std::vector<Vec>> pmap)
    : field_(field), basis_(std::move(basis)), pmap_(std::move(pmap)) {
  const std::size_t n = dim();
  table_.assign(n * n, Vec(n, 0));
  std::vector<bool> seen(n * n, false);
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n) throw DimensionError("bracket index out of range");
    if (b.i > b.j) throw std::invalid_argument("bracket entries must satisfy i <= j");
    if (b.out.size() != n) throw DimensionError("bracket value has wrong length");
    if (seen[b.i * n + b.j]) throw std::invalid_argument("duplicate bracket entry");
    seen[b.i * n + b.j] = true;
    Vec v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = b.out[k] % field_.characteristic();
    table_[b.i * n + b.j] = v;
    if (b.i != b.j) {
      // [e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j]
      const bool both_odd = parity(b.i) && parity(b.j);
      table_[b.j * n + b.i] = both_odd ? v : field_.scaled(field_.neg(1), v);
    }
  }
  if (pmap_) {
    if (pmap_->size() != n_even()) throw DimensionError("p-map must list every even basis element");
    for (auto& v : *pmap_) {
      if (v.size() != n) throw DimensionError("p-map value has wrong length");
      for (auto& x : v) x %= field_.characteristic();
    }
  }
  ad_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(field_, n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, table_[i * n + j]);
    ad_.push_back(std::move(m));
  }
}

Vec SuperAlgebra::bracket(const Vec& u, const Vec& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw DimensionError("bracket argument has wrong length");
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      field_.axpy(field_.mul(u[i], v[j]), table_[i * n + j], out);
    }
  }
  return out;
}

Vec SuperAlgebra::left_normed(const std::vector<Vec>& words) const {
  if (words.empty()) return zero();
  Vec acc = words.front();
  for (std::size_t k = 1; k < words.size(); ++k) acc = bracket(acc, words[k]);
  return acc;
}

Matrix SuperAlgebra::ad_matrix(const Vec& x) const {
  if (x.size() != dim()) throw DimensionError("ad argument has wrong length");
  Matrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] != 0) m = m + ad_[i].scaled(x[i]);
  return m;
}

const std::vector<Vec>& SuperAlgebra::pmap() const {
  if (!pmap_) throw std::logic_error("algebra has no p-map");
  return *pmap_;
}

const Vec& SuperAlgebra::pmap_basis(std::size_t i) const {
  if (i >= n_even()) throw ParityError("p-map is defined on even basis elements only");
  return pmap().at(i);
}

std::vector<BracketEntry> SuperAlgebra::bracket_entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j)
      if (!is_zero(table_[i * dim() + j])) out.push_back({i, j, table_[i * dim() + j]});
  return out;
}

Vec bracket(const SuperAlgebra& L, const Vec& u, const Vec& v) { return L.bracket(u, v); }

Matrix ad_matrix(const SuperAlgebra& L, const Vec& x) { return L.ad_matrix(x); }

namespace {

std::string join_names(const SuperAlgebra& L, const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? ", " : "") << L.basis().name(idx[k]);
  os << ")";
  return os.str();
}

void fail(CheckEntry& e, const SuperAlgebra& L, std::vector<std::size_t> idx) {
  if (!e.passed) return;
  e.passed = false;
  e.detail = "first failure at " + join_names(L, idx);
  e.witness = std::move(idx);
}

void require_even(const SuperAlgebra& L, const Vec& x) {
  if (x.size() != L.dim()) throw DimensionError("vector has wrong length");
  for (std::size_t i = L.n_even(); i < L.dim(); ++i)
    if (x[i] != 0) throw ParityError("p-th power requires an even vector");
}

}  // namespace

CheckReport check_axioms(const SuperAlgebra& L) {
  const PrimeField& f = L.field();
  const std::size_t n = L.dim();
  CheckEntry parity{"bracket-parity"}, skew{"super-skew-symmetry"}, square{"even-square"},
      cube{"odd-cube"}, jacobi{"super-jacobi"};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& v = L.bracket_basis(i, j);
      const unsigned want = L.parity(i) ^ L.parity(j);
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0 && L.parity(k) != want) fail(parity, L, {i, j});
      const Vec& w = L.bracket_basis(j, i);
      const Residue s = (L.parity(i) && L.parity(j)) ? 1 : f.neg(1);
      if (v != f.scaled(s, w)) fail(skew, L, {i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec x = L.unit(i);
    if (L.parity(i) == 0) {
      if (!is_zero(L.bracket(x, x))) fail(square, L, {i});
    } else {
      if (!is_zero(L.bracket(x, L.bracket(x, x)))) fail(cube, L, {i});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec x = L.unit(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vec y = L.unit(j);
      const Vec xy = L.bracket(x, y);
      const Residue s = f.sign(L.parity(i) * L.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        const Vec z = L.unit(k);
        Vec lhs = L.bracket(x, L.bracket(y, z));
        Vec rhs = L.bracket(xy, z);
        f.axpy(s, L.bracket(y, L.bracket(x, z)), rhs);
        if (lhs != rhs) fail(jacobi, L, {i, j, k});
      }
    }
  }
  CheckReport r;
  r.entries = {parity, skew, square, cube, jacobi};
  return r;
}

std::vector<Vec> jacobson_terms(const SuperAlgebra& L, const Vec& x, const Vec& y) {
  require_even(L, x);
  require_even(L, y);
  const PrimeField& f = L.field();
  const unsigned p = L.p();
  // poly[k] is the coefficient of t^k in ad(tx + y)^m (x).
  std::vector<Vec> poly{x};
  for (unsigned m = 0; m + 1 < p; ++m) {
    std::vector<Vec> next(poly.size() + 1, L.zero());
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (is_zero(poly[k])) continue;
      next[k + 1] = f.sum(next[k + 1], L.bracket(x, poly[k]));
      next[k] = f.sum(next[k], L.bracket(y, poly[k]));
    }
    poly = std::move(next);
  }
  std::vector<Vec> s;
  s.reserve(p - 1);
  for (unsigned i = 1; i < p; ++i) s.push_back(f.scaled(f.inv(i), poly[i - 1]));
  return s;
}

Vec jacobson_term(const SuperAlgebra& L, const Vec& x, const Vec& y, unsigned i) {
  if (i < 1 || i >= L.p())
    throw std::out_of_range("Jacobson term index must lie in [1, p-1]");
  return jacobson_terms(L, x, y)[i - 1];
}

Vec p_power(const SuperAlgebra& L, const Vec& x) {
  require_even(L, x);
  const PrimeField& f = L.field();
  Vec cur = L.zero();
  Vec acc = L.zero();
  bool first = true;
  for (std::size_t i = 0; i < L.n_even(); ++i) {
    const Residue a = x[i];
    if (a == 0) continue;
    Vec term = L.unit(i);
    term[i] = a;
    Vec power = f.scaled(f.pow(a, L.p()), L.pmap_basis(i));
    if (!first) {
      for (const auto& s : jacobson_terms(L, cur, term)) power = f.sum(power, s);
    }
    acc = f.sum(acc, power);
    cur = f.sum(cur, term);
    first = false;
  }
  return acc;
}

CheckReport check_restricted(const SuperAlgebra& L, std::uint64_t seed) {
  CheckReport report;
  if (!L.restricted()) {
    report.entries.push_back({"p-map", false, {}, "algebra has no p-map"});
    return report;
  }
  const PrimeField& f = L.field();
  const unsigned p = L.p();
  const std::size_t n0 = L.n_even();

  CheckEntry support{"p-map-parity"}, ad{"ad-p-map"}, additive{"additivity"},
      semilinear{"semilinearity"};
  for (std::size_t i = 0; i < n0; ++i) {
    if (L.basis().parity_of(L.pmap_basis(i)) != Parity::Even) fail(support, L, {i});
    if (L.ad_matrix(L.pmap_basis(i)) != L.ad_basis(i).pow(p)) fail(ad, L, {i});
  }
  if (!support.passed) {
    report.entries = {support, ad};
    return report;
  }
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = i + 1; j < n0; ++j) {
      Vec ei = L.unit(i), ej = L.unit(j);
      Vec sum = f.sum(ei, ej);
      Vec forward = p_power(L, sum);
      Vec backward = f.sum(L.pmap_basis(i), L.pmap_basis(j));
      for (const auto& s : jacobson_terms(L, ej, ei)) backward = f.sum(backward, s);
      if (forward != backward || L.ad_matrix(forward) != L.ad_matrix(sum).pow(p))
        fail(additive, L, {i, j});
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Residue> coef(0, p - 1);
  for (int t = 0; t < 8 && n0 > 0; ++t) {
    Vec x = L.zero();
    for (std::size_t i = 0; i < n0; ++i) x[i] = coef(rng);
    const Residue lam = coef(rng);
    Vec px = p_power(L, x);
    if (p_power(L, f.scaled(lam, x)) != f.scaled(f.pow(lam, p), px)) fail(semilinear, L, {});
    if (L.ad_matrix(px) != L.ad_matrix(x).pow(p)) fail(additive, L, {});
  }
  report.entries = {support, ad, additive, semilinear};
  return report;
}

}  // namespace supercohom
