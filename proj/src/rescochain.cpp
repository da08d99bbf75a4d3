#include "supercohom/rescochain.hpp"

namespace supercohom {

namespace {

void require_degree(const CochainSpace& C, unsigned q) {
  if (C.degree() != q)
    throw DegreeError("expected a cochain space of degree " + std::to_string(q));
}

void require_even(const SuperAlgebra& L, const Vec& x) {
  if (x.size() != L.dim()) throw DimensionError("vector has wrong length");
  for (std::size_t i = L.n_even(); i < L.dim(); ++i)
    if (x[i] != 0) throw ParityError("expected an even vector");
}

// Words (w_1, ..., w_p) in {u, v}^p with w_1 = u, w_2 = v, and 1/#u.
template <typename F>
void for_each_word(const PrimeField& f, const Vec& u, const Vec& v, F&& body) {
  const unsigned p = f.characteristic();
  const unsigned free = p - 2;
  std::vector<const Vec*> w(p);
  w[0] = &u;
  w[1] = &v;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
    unsigned count_u = 1;
    for (unsigned t = 0; t < free; ++t) {
      const bool is_v = (mask >> t) & 1U;
      w[t + 2] = is_v ? &v : &u;
      if (!is_v) ++count_u;
    }
    body(w, f.inv(count_u));
  }
}

Vec left_normed(const SuperAlgebra& L, const std::vector<const Vec*>& w, std::size_t count) {
  Vec acc = *w[0];
  for (std::size_t t = 1; t < count; ++t) acc = L.bracket(acc, *w[t]);
  return acc;
}

// Applies w_to ... w_from to v, with w_from innermost (1-based positions).
Vec act_chain(const Representation& R, const std::vector<const Vec*>& w, std::size_t from,
              std::size_t to, Vec v) {
  for (std::size_t t = from; t <= to; ++t) v = R.act(*w[t - 1], v);
  return v;
}

Vec zero_module(const CochainSpace& C) { return Vec(C.module_dim(), 0); }

}  // namespace

std::size_t restricted_dim(const CochainSpace& C) {
  const std::size_t n0 = C.L().n_even(), m = C.module_dim();
  switch (C.degree()) {
    case 2:
      return C.dim() + n0 * m;
    case 3:
      return C.dim() + n0 * n0 * m;
    default:
      return C.dim();
  }
}

unsigned restricted_parity(const CochainSpace& C, std::size_t idx) {
  if (idx < C.dim()) return C.parity(idx);
  return C.module().parity((idx - C.dim()) % C.module_dim());
}

Vec flatten(const CochainSpace& C2, const RestrictedTwoCochain& c) {
  require_degree(C2, 2);
  if (c.phi.size() != C2.dim() || c.omega.size() != C2.L().n_even())
    throw DimensionError("restricted 2-cochain has wrong shape");
  Vec v = c.phi;
  for (const auto& w : c.omega) {
    if (w.size() != C2.module_dim()) throw DimensionError("omega value has wrong length");
    v.insert(v.end(), w.begin(), w.end());
  }
  return v;
}

Vec flatten(const CochainSpace& C3, const RestrictedThreeCochain& c) {
  require_degree(C3, 3);
  const std::size_t n0 = C3.L().n_even();
  if (c.alpha.size() != C3.dim() || c.beta.size() != n0)
    throw DimensionError("restricted 3-cochain has wrong shape");
  Vec v = c.alpha;
  for (const auto& row : c.beta) {
    if (row.size() != n0) throw DimensionError("restricted 3-cochain has wrong shape");
    for (const auto& w : row) {
      if (w.size() != C3.module_dim()) throw DimensionError("beta value has wrong length");
      v.insert(v.end(), w.begin(), w.end());
    }
  }
  return v;
}

RestrictedTwoCochain unflatten_two(const CochainSpace& C2, const Vec& v) {
  require_degree(C2, 2);
  if (v.size() != restricted_dim(C2)) throw DimensionError("coordinate vector has wrong length");
  const std::size_t m = C2.module_dim();
  RestrictedTwoCochain c;
  c.phi.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(C2.dim()));
  for (std::size_t k = 0; k < C2.L().n_even(); ++k) {
    auto start = v.begin() + static_cast<std::ptrdiff_t>(C2.dim() + k * m);
    c.omega.emplace_back(start, start + static_cast<std::ptrdiff_t>(m));
  }
  return c;
}

RestrictedThreeCochain unflatten_three(const CochainSpace& C3, const Vec& v) {
  require_degree(C3, 3);
  if (v.size() != restricted_dim(C3)) throw DimensionError("coordinate vector has wrong length");
  const std::size_t m = C3.module_dim(), n0 = C3.L().n_even();
  RestrictedThreeCochain c;
  c.alpha.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(C3.dim()));
  c.beta.assign(n0, std::vector<Vec>(n0));
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y) {
      auto start = v.begin() + static_cast<std::ptrdiff_t>(C3.dim() + (x * n0 + y) * m);
      c.beta[x][y].assign(start, start + static_cast<std::ptrdiff_t>(m));
    }
  return c;
}

RestrictedTwoCochain zero_two(const CochainSpace& C2) {
  require_degree(C2, 2);
  return {Vec(C2.dim(), 0), std::vector<Vec>(C2.L().n_even(), zero_module(C2))};
}

Vec star_correction(const CochainSpace& C2, const Vec& phi, const Vec& u, const Vec& v) {
  require_degree(C2, 2);
  const SuperAlgebra& L = C2.L();
  const Representation& R = C2.module();
  const PrimeField& f = C2.field();
  const unsigned p = f.characteristic();
  const bool trivial_action = [&] {
    for (const auto& m : R.actions())
      if (!m.is_zero()) return false;
    return true;
  }();
  Vec corr = zero_module(C2);
  for_each_word(f, u, v, [&](const std::vector<const Vec*>& w, Residue inv) {
    for (unsigned k = 0; k + 1 < p; ++k) {
      if (k > 0 && trivial_action) break;
      Vec br = left_normed(L, w, p - k - 1);
      if (is_zero(br)) continue;
      Vec val = evaluate(C2, phi, {br, *w[p - k - 1]});
      if (k > 0) val = act_chain(R, w, p - k + 1, p, val);
      f.axpy(f.mul(inv, f.sign(k)), val, corr);
    }
  });
  return corr;
}

Vec star_extend(const CochainSpace& C2, const RestrictedTwoCochain& c, const Vec& x) {
  require_degree(C2, 2);
  const SuperAlgebra& L = C2.L();
  require_even(L, x);
  const PrimeField& f = C2.field();
  Vec cur = L.zero();
  Vec acc = zero_module(C2);
  bool first = true;
  for (std::size_t i = 0; i < L.n_even(); ++i) {
    const Residue a = x[i];
    if (a == 0) continue;
    Vec term = L.zero();
    term[i] = a;
    f.axpy(f.pow(a, f.characteristic()), c.omega.at(i), acc);
    if (!first) acc = f.sum(acc, star_correction(C2, c.phi, cur, term));
    cur = f.sum(cur, term);
    first = false;
  }
  return acc;
}

Vec ind1_at(const CochainSpace& C1, const Vec& psi, const Vec& x) {
  require_degree(C1, 1);
  const SuperAlgebra& L = C1.L();
  require_even(L, x);
  const PrimeField& f = C1.field();
  Vec out = evaluate(C1, psi, {p_power(L, x)});
  Vec v = evaluate(C1, psi, {x});
  for (unsigned t = 0; t + 1 < f.characteristic(); ++t) v = C1.module().act(x, v);
  return f.difference(out, v);
}

std::vector<Vec> ind1(const CochainSpace& C1, const Vec& psi) {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < C1.L().n_even(); ++k) out.push_back(ind1_at(C1, psi, C1.L().unit(k)));
  return out;
}

Vec ind2_at(const CochainSpace& C2, const RestrictedTwoCochain& c, const Vec& x, const Vec& y) {
  require_degree(C2, 2);
  const SuperAlgebra& L = C2.L();
  require_even(L, x);
  require_even(L, y);
  const Representation& R = C2.module();
  const PrimeField& f = C2.field();
  const unsigned p = f.characteristic();
  Vec out = evaluate(C2, c.phi, {x, p_power(L, y)});
  for (unsigned i = 0; i < p; ++i) {
    const unsigned j = p - 1 - i;
    Vec br = x;
    for (unsigned t = 0; t < j; ++t) br = L.bracket(br, y);
    if (is_zero(br)) continue;
    Vec v = evaluate(C2, c.phi, {br, y});
    for (unsigned t = 0; t < i; ++t) v = R.act(y, v);
    f.axpy(f.neg(f.sign(i)), v, out);
  }
  return f.sum(out, R.act(x, star_extend(C2, c, y)));
}

std::vector<std::vector<Vec>> ind2(const CochainSpace& C2, const RestrictedTwoCochain& c) {
  const SuperAlgebra& L = C2.L();
  std::vector<std::vector<Vec>> out(L.n_even());
  for (std::size_t x = 0; x < L.n_even(); ++x)
    for (std::size_t y = 0; y < L.n_even(); ++y)
      out[x].push_back(ind2_at(C2, c, L.unit(x), L.unit(y)));
  return out;
}

Matrix d_star_matrix(const CochainSpace& src, const CochainSpace& dst) {
  if (dst.degree() != src.degree() + 1) throw DegreeError("target must have degree q + 1");
  if (src.degree() > 2) throw DegreeError("restricted differential is implemented for q <= 2");
  if (src.degree() == 0) return differential_matrix(src, dst);

  const SuperAlgebra& L = src.L();
  const Representation& R = src.module();
  const PrimeField& f = src.field();
  const unsigned p = f.characteristic();
  const std::size_t n0 = L.n_even(), m = R.dim();
  const Matrix d = differential_matrix(src, dst);

  if (src.degree() == 1) {
    // Rows: d^1, then -ind^1 at (k, b).
    Matrix ind(f, n0 * m, src.dim());
    for (std::size_t k = 0; k < n0; ++k) {
      const Vec xk = L.unit(k);
      for (const auto& [mono, c] : pairing(src, {L.pmap_basis(k)}))
        for (std::size_t b = 0; b < m; ++b) ind.add_to(k * m + b, src.index(mono, b), c);
      const Matrix P = R.action(k).pow(p - 1);
      const auto self = src.canonicalize({k});
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t b2 = 0; b2 < m; ++b2)
          if (P(b, b2) != 0)
            ind.add_to(k * m + b, src.index(self.mono, b2), f.neg(f.mul(self.sign, P(b, b2))));
    }
    return d.vstack(ind.scaled(f.neg(1)));
  }

  // Degree 2: columns are (phi | omega), rows are (d^2 alpha | -ind^2 on pairs).
  const std::size_t cols = restricted_dim(src);
  Matrix top(f, dst.dim(), cols);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) top(i, j) = d(i, j);
  Matrix ind(f, n0 * n0 * m, cols);
  for (std::size_t x = 0; x < n0; ++x) {
    const Vec ex = L.unit(x);
    for (std::size_t y = 0; y < n0; ++y) {
      const Vec ey = L.unit(y);
      const std::size_t row0 = (x * n0 + y) * m;
      for (const auto& [mono, c] : pairing(src, {ex, L.pmap_basis(y)}))
        for (std::size_t b = 0; b < m; ++b) ind.add_to(row0 + b, src.index(mono, b), c);
      for (unsigned i = 0; i < p; ++i) {
        const unsigned j = p - 1 - i;
        Vec br = ex;
        for (unsigned t = 0; t < j; ++t) br = L.bracket(br, ey);
        if (is_zero(br)) continue;
        const Matrix Q = R.action(y).pow(i);
        const Residue s = f.neg(f.sign(i));
        for (const auto& [mono, c] : pairing(src, {br, ey}))
          for (std::size_t b = 0; b < m; ++b)
            for (std::size_t b2 = 0; b2 < m; ++b2)
              if (Q(b, b2) != 0)
                ind.add_to(row0 + b, src.index(mono, b2), f.mul(s, f.mul(c, Q(b, b2))));
      }
      const Matrix& rx = R.action(x);
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t b2 = 0; b2 < m; ++b2)
          if (rx(b, b2) != 0) ind.add_to(row0 + b, src.dim() + y * m + b2, rx(b, b2));
    }
  }
  return top.vstack(ind.scaled(f.neg(1)));
}

Matrix d_star_matrix(const Representation& R, unsigned q) {
  if (q > 2) throw DegreeError("restricted differential is implemented for q <= 2");
  return d_star_matrix(CochainSpace(R, q), CochainSpace(R, q + 1));
}

RestrictedTwoCochain d_star1(const CochainSpace& C1, const CochainSpace& C2, const Vec& psi) {
  require_degree(C1, 1);
  const PrimeField& f = C1.field();
  RestrictedTwoCochain out;
  out.phi = differential_matrix(C1, C2).apply(psi);
  for (const auto& v : ind1(C1, psi)) out.omega.push_back(f.scaled(f.neg(1), v));
  return out;
}

RestrictedThreeCochain d_star2(const CochainSpace& C2, const CochainSpace& C3,
                               const RestrictedTwoCochain& c) {
  require_degree(C2, 2);
  const PrimeField& f = C2.field();
  RestrictedThreeCochain out;
  out.alpha = differential_matrix(C2, C3).apply(c.phi);
  for (auto& row : ind2(C2, c)) {
    for (auto& v : row) v = f.scaled(f.neg(1), v);
    out.beta.push_back(std::move(row));
  }
  return out;
}

Vec doublestar_correction(const CochainSpace& C3, const Vec& alpha, const Vec& x, const Vec& y1,
                          const Vec& y2) {
  require_degree(C3, 3);
  const SuperAlgebra& L = C3.L();
  const Representation& R = C3.module();
  const PrimeField& f = C3.field();
  const unsigned p = f.characteristic();
  Vec corr = zero_module(C3);
  for_each_word(f, y1, y2, [&](const std::vector<const Vec*>& h, Residue inv) {
    for (unsigned j = 0; j + 1 < p; ++j) {
      const Vec inner = left_normed(L, h, p - j - 1);
      const Vec& last = *h[p - j - 1];
      for (unsigned k = 0; k <= j; ++k) {
        const Residue binom = binomial_mod_p(f, j, k).value();
        if (binom == 0) continue;
        // [x, h_{p-k}, h_{p-k-1}, ..., h_{p-j+1}]
        Vec outer = x;
        for (unsigned t = p - k; t >= p - j + 1 && t >= 1; --t) outer = L.bracket(outer, *h[t - 1]);
        if (is_zero(outer) || is_zero(inner)) continue;
        Vec v = evaluate(C3, alpha, {outer, inner, last});
        if (k > 0) v = act_chain(R, h, p - k + 1, p, v);
        f.axpy(f.mul(inv, f.mul(binom, f.sign(j))), v, corr);
      }
    }
  });
  return corr;
}

Vec doublestar_extend(const CochainSpace& C3, const RestrictedThreeCochain& c, const Vec& x,
                      const Vec& y) {
  require_degree(C3, 3);
  const SuperAlgebra& L = C3.L();
  require_even(L, x);
  require_even(L, y);
  const PrimeField& f = C3.field();
  const std::size_t n0 = L.n_even();
  // beta(x, .) on a scaled basis vector, linear in x.
  auto on_basis = [&](std::size_t yi, Residue a) {
    Vec out = zero_module(C3);
    for (std::size_t xi = 0; xi < n0; ++xi)
      if (x[xi] != 0) f.axpy(x[xi], c.beta.at(xi).at(yi), out);
    return f.scaled(f.pow(a, f.characteristic()), out);
  };
  Vec cur = L.zero();
  Vec acc = zero_module(C3);
  bool first = true;
  for (std::size_t i = 0; i < n0; ++i) {
    const Residue a = y[i];
    if (a == 0) continue;
    Vec term = L.zero();
    term[i] = a;
    acc = f.sum(acc, on_basis(i, a));
    if (!first) acc = f.difference(acc, doublestar_correction(C3, c.alpha, x, cur, term));
    cur = f.sum(cur, term);
    first = false;
  }
  return acc;
}

Vec random_even(const SuperAlgebra& L, std::mt19937_64& rng) {
  Vec x = L.zero();
  for (std::size_t i = 0; i < L.n_even(); ++i) x[i] = static_cast<Residue>(rng() % L.p());
  return x;
}

CheckReport star_property_check(const CochainSpace& C2, const Vec& phi, const OmegaFn& omega,
                                std::mt19937_64& rng, int samples) {
  require_degree(C2, 2);
  const SuperAlgebra& L = C2.L();
  const PrimeField& f = C2.field();
  CheckEntry semi("star-semilinearity"), add("star-additivity");
  for (int s = 0; s < samples; ++s) {
    const Vec x = random_even(L, rng), y = random_even(L, rng);
    const Residue a = static_cast<Residue>(rng() % L.p());
    const Vec wx = omega(x);
    if (omega(f.scaled(a, x)) != f.scaled(f.pow(a, L.p()), wx) && semi.passed) {
      semi.passed = false;
      semi.detail = "omega(a x) != a^p omega(x) at sample " + std::to_string(s);
    }
    Vec rhs = f.sum(f.sum(wx, omega(y)), star_correction(C2, phi, x, y));
    if (omega(f.sum(x, y)) != rhs && add.passed) {
      add.passed = false;
      add.detail = "additivity fails at sample " + std::to_string(s);
    }
  }
  CheckReport r;
  r.entries = {semi, add};
  return r;
}

CheckReport star_property_check(const CochainSpace& C2, const RestrictedTwoCochain& c,
                                std::mt19937_64& rng, int samples) {
  return star_property_check(
      C2, c.phi, [&](const Vec& x) { return star_extend(C2, c, x); }, rng, samples);
}

CheckReport doublestar_property_check(const CochainSpace& C3, const Vec& alpha, const BetaFn& beta,
                                      std::mt19937_64& rng, int samples) {
  require_degree(C3, 3);
  const SuperAlgebra& L = C3.L();
  const PrimeField& f = C3.field();
  CheckEntry lin("doublestar-linearity-x"), semi("doublestar-semilinearity-y"),
      add("doublestar-additivity-y");
  auto fail = [](CheckEntry& e, int s) {
    if (!e.passed) return;
    e.passed = false;
    e.detail = "fails at sample " + std::to_string(s);
  };
  for (int s = 0; s < samples; ++s) {
    const Vec x1 = random_even(L, rng), x2 = random_even(L, rng);
    const Vec y1 = random_even(L, rng), y2 = random_even(L, rng);
    const Residue a = static_cast<Residue>(rng() % L.p());
    const Vec b11 = beta(x1, y1);
    if (beta(f.sum(f.scaled(a, x1), x2), y1) != f.sum(f.scaled(a, b11), beta(x2, y1)))
      fail(lin, s);
    if (beta(x1, f.scaled(a, y1)) != f.scaled(f.pow(a, L.p()), b11)) fail(semi, s);
    Vec rhs = f.difference(f.sum(b11, beta(x1, y2)), doublestar_correction(C3, alpha, x1, y1, y2));
    if (beta(x1, f.sum(y1, y2)) != rhs) fail(add, s);
  }
  CheckReport r;
  r.entries = {lin, semi, add};
  return r;
}

CheckReport doublestar_property_check(const CochainSpace& C3, const RestrictedThreeCochain& c,
                                      std::mt19937_64& rng, int samples) {
  return doublestar_property_check(
      C3, c.alpha, [&](const Vec& x, const Vec& y) { return doublestar_extend(C3, c, x, y); }, rng,
      samples);
}

}  // namespace supercohom
