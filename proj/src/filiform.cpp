#include "supercohom/filiform.hpp"

#include <stdexcept>

namespace supercohom {

namespace {

std::vector<BracketEntry> filiform_brackets(std::size_t n, std::size_t m) {
  const std::size_t d = n + m;
  std::vector<BracketEntry> br;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    Vec v(d, 0);
    v[i + 1] = 1;
    br.push_back({0, i, v});
  }
  for (std::size_t j = 0; j + 1 < m; ++j) {
    Vec v(d, 0);
    v[n + j + 1] = 1;
    br.push_back({0, n + j, v});
  }
  return br;
}

SuperBasis filiform_basis(std::size_t n, std::size_t m) {
  std::vector<std::string> even, odd;
  for (std::size_t i = 1; i <= n; ++i) even.push_back("X" + std::to_string(i));
  for (std::size_t j = 1; j <= m; ++j) odd.push_back("Y" + std::to_string(j));
  return {even, odd};
}

}  // namespace

AlgebraPtr model_filiform(const PrimeField& field, std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("filiform algebra needs n, m >= 1");
  return std::make_shared<const SuperAlgebra>(field, filiform_basis(n, m),
                                              filiform_brackets(n, m));
}

AlgebraPtr restricted_model_filiform(const PrimeField& field, const Vec& lambda) {
  const std::size_t p = field.characteristic();
  if (lambda.size() != p)
    throw std::length_error("lambda must have exactly p = " + std::to_string(p) + " entries");
  std::vector<Vec> pmap;
  for (std::size_t k = 0; k < p; ++k) {
    Vec v(2 * p, 0);
    v[p - 1] = lambda[k] % field.characteristic();
    pmap.push_back(v);
  }
  return std::make_shared<const SuperAlgebra>(field, filiform_basis(p, p),
                                              filiform_brackets(p, p), pmap);
}

Vec filiform_p_power_closed_form(const SuperAlgebra& L, const Vec& lambda, const Vec& x) {
  const PrimeField& f = L.field();
  const std::size_t p = f.characteristic();
  Residue c = 0;
  for (std::size_t k = 0; k < p; ++k) c = f.add(c, f.mul(f.pow(x.at(k), p), lambda.at(k)));
  Vec out(L.dim(), 0);
  out[p - 1] = c;
  return out;
}

}  // namespace supercohom
