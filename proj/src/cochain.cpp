#include "supercohom/cochain.hpp"

#include <functional>

namespace supercohom {

namespace {

void multisets(std::size_t lo, std::size_t hi, std::size_t k, bool strict,
               std::vector<std::size_t>& cur, std::vector<Monomial>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = lo; i < hi; ++i) {
    cur.push_back(i);
    multisets(strict ? i + 1 : i, hi, k - 1, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CochainSpace::CochainSpace(const Representation& R, unsigned q) : R_(R), q_(q) {
  if (q > kMaxDegree) throw DegreeError("cochain degree must be at most 3");
  const SuperAlgebra& A = R_.L();
  const std::size_t n0 = A.n_even(), d = A.dim();
  const PrimeField& f = field();
  for (std::size_t ne = q + 1; ne-- > 0;) {
    std::vector<Monomial> evens, odds;
    std::vector<std::size_t> cur;
    multisets(0, n0, ne, true, cur, evens);
    multisets(n0, d, q - ne, false, cur, odds);
    for (const auto& e : evens) {
      for (const auto& o : odds) {
        Monomial m = e;
        m.insert(m.end(), o.begin(), o.end());
        monomials_.push_back(std::move(m));
      }
    }
  }
  for (std::size_t t = 0; t < monomials_.size(); ++t) {
    const Monomial& m = monomials_[t];
    unsigned par = 0;
    Residue w = 1;
    std::size_t run = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
      par ^= A.parity(m[k]);
      if (A.parity(m[k]) && k > 0 && m[k - 1] == m[k]) {
        ++run;
        w = f.mul(w, f.reduce(static_cast<std::int64_t>(run + 1)));
      } else {
        run = 0;
      }
    }
    mono_parity_.push_back(par);
    weight_.push_back(w == 0 ? 1 : w);
    lookup_.emplace(key(m), t);
  }
}

std::uint64_t CochainSpace::key(const Monomial& m) {
  std::uint64_t k = m.size();
  for (auto i : m) k = (k << 16U) | (static_cast<std::uint64_t>(i) + 1);
  return k;
}

std::optional<std::size_t> CochainSpace::find(const Monomial& m) const {
  if (m.size() != q_) return std::nullopt;
  auto it = lookup_.find(key(m));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

CochainSpace::Canonical CochainSpace::canonicalize(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != q_) throw DimensionError("tuple length must equal the cochain degree");
  const SuperAlgebra& A = L();
  const PrimeField& f = field();
  std::vector<std::size_t> t = tuple;
  Residue sign = 1;
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t[a] >= A.dim()) throw DimensionError("basis index out of range");
    for (std::size_t b = 0; b + 1 < t.size() - a; ++b) {
      if (t[b] > t[b + 1]) {
        if (!(A.parity(t[b]) && A.parity(t[b + 1]))) sign = f.neg(sign);
        std::swap(t[b], t[b + 1]);
      }
    }
  }
  for (std::size_t b = 0; b + 1 < t.size(); ++b)
    if (t[b] == t[b + 1] && A.parity(t[b]) == 0) return {0, 0};
  return {sign, *find(t)};
}

std::string CochainSpace::monomial_name(std::size_t m) const {
  const Monomial& mono = monomials_.at(m);
  if (mono.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < mono.size(); ++k) s += (k ? "*" : "") + L().basis().name(mono[k]);
  return s;
}

std::string CochainSpace::basis_name(std::size_t idx) const {
  const auto [m, b] = split(idx);
  std::string s = monomial_name(m);
  if (R_.dim() > 1) s += "@" + R_.basis().name(b);
  return s;
}

std::vector<std::pair<Monomial, std::size_t>> enumerate_basis(const Representation& R, unsigned q) {
  CochainSpace C(R, q);
  std::vector<std::pair<Monomial, std::size_t>> out;
  out.reserve(C.dim());
  for (std::size_t m = 0; m < C.num_monomials(); ++m)
    for (std::size_t b = 0; b < C.module_dim(); ++b) out.emplace_back(C.monomial(m), b);
  return out;
}

Parity cochain_parity(const CochainSpace& C, const Vec& coords) {
  if (coords.size() != C.dim()) throw DimensionError("cochain has wrong length");
  bool even = false, odd = false;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) (C.parity(i) ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

std::vector<std::pair<std::size_t, Residue>> pairing(const CochainSpace& C,
                                                     const std::vector<Vec>& args) {
  if (args.size() != C.degree())
    throw DimensionError("cochain of degree " + std::to_string(C.degree()) + " takes " +
                         std::to_string(C.degree()) + " arguments");
  const PrimeField& f = C.field();
  const std::size_t d = C.L().dim();
  for (const auto& a : args)
    if (a.size() != d) throw DimensionError("argument has wrong length");
  Vec acc(C.num_monomials(), 0);
  std::vector<std::size_t> idx(args.size());
  std::function<void(std::size_t, Residue)> rec = [&](std::size_t k, Residue c) {
    if (k == args.size()) {
      const auto can = C.canonicalize(idx);
      if (can.sign == 0) return;
      acc[can.mono] = f.add(acc[can.mono], f.mul(c, f.mul(can.sign, C.weight(can.mono))));
      return;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (args[k][i] == 0) continue;
      idx[k] = i;
      rec(k + 1, f.mul(c, args[k][i]));
    }
  };
  rec(0, 1);
  std::vector<std::pair<std::size_t, Residue>> out;
  for (std::size_t m = 0; m < acc.size(); ++m)
    if (acc[m] != 0) out.emplace_back(m, acc[m]);
  return out;
}

Vec evaluate(const CochainSpace& C, const Vec& coords, const std::vector<Vec>& args) {
  if (coords.size() != C.dim()) throw DimensionError("cochain has wrong length");
  const PrimeField& f = C.field();
  Vec out(C.module_dim(), 0);
  for (const auto& [m, c] : pairing(C, args))
    for (std::size_t b = 0; b < out.size(); ++b)
      out[b] = f.add(out[b], f.mul(c, coords[C.index(m, b)]));
  return out;
}

Vec evaluate_basis(const CochainSpace& C, const Vec& coords, const std::vector<std::size_t>& idx) {
  if (coords.size() != C.dim()) throw DimensionError("cochain has wrong length");
  const PrimeField& f = C.field();
  Vec out(C.module_dim(), 0);
  const auto can = C.canonicalize(idx);
  if (can.sign == 0) return out;
  const Residue c = f.mul(can.sign, C.weight(can.mono));
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = f.mul(c, coords[C.index(can.mono, b)]);
  return out;
}

Matrix differential_matrix(const CochainSpace& src, const CochainSpace& dst) {
  if (src.degree() > 2) throw DegreeError("differential is implemented for q <= 2");
  if (dst.degree() != src.degree() + 1) throw DegreeError("target must have degree q + 1");
  const SuperAlgebra& A = src.L();
  const Representation& M = src.module();
  const PrimeField& f = src.field();
  const std::size_t n = dst.degree();
  const std::size_t mdim = M.dim();
  Matrix D(f, dst.dim(), src.dim());

  std::vector<std::size_t> rest;
  for (std::size_t t = 0; t < dst.num_monomials(); ++t) {
    const Monomial& x = dst.monomial(t);
    std::vector<unsigned> par(n), prefix(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
      par[k] = A.parity(x[k]);
      prefix[k + 1] = prefix[k] + par[k];
    }
    const Residue winv = f.inv(dst.weight(t));
    // Bracket terms: (-1)^{sigma_ij} phi([x_i, x_j], x_1, ..^i..^j.., x_n).
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const unsigned sigma = static_cast<unsigned>((i + 1) + (j + 1)) + par[i] * prefix[i] +
                               par[j] * (prefix[j] + par[i]);
        const Vec& br = A.bracket_basis(x[i], x[j]);
        rest.clear();
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && k != j) rest.push_back(x[k]);
        std::vector<std::size_t> tuple(1 + rest.size());
        std::copy(rest.begin(), rest.end(), tuple.begin() + 1);
        for (std::size_t c = 0; c < br.size(); ++c) {
          if (br[c] == 0) continue;
          tuple[0] = c;
          const auto can = src.canonicalize(tuple);
          if (can.sign == 0) continue;
          const Residue v = f.mul(f.mul(f.sign(sigma), br[c]),
                                  f.mul(f.mul(can.sign, src.weight(can.mono)), winv));
          for (std::size_t b = 0; b < mdim; ++b)
            D.add_to(dst.index(t, b), src.index(can.mono, b), v);
        }
      }
    }
    // Action terms: (-1)^{gamma_i} x_i . phi(x_1, ..^i.., x_n).
    for (std::size_t i = 0; i < n; ++i) {
      rest.clear();
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) rest.push_back(x[k]);
      const auto can = src.canonicalize(rest);
      if (can.sign == 0) continue;
      const Matrix& rho = M.action(x[i]);
      const Residue base = f.mul(f.mul(can.sign, src.weight(can.mono)), winv);
      for (std::size_t bo = 0; bo < mdim; ++bo) {
        for (std::size_t b = 0; b < mdim; ++b) {
          if (rho(bo, b) == 0) continue;
          const unsigned phi_par = src.monomial_parity(can.mono) ^ M.parity(b);
          const unsigned gamma = static_cast<unsigned>(i + 2) + par[i] * (prefix[i] + phi_par);
          D.add_to(dst.index(t, bo), src.index(can.mono, b),
                   f.mul(f.sign(gamma), f.mul(rho(bo, b), base)));
        }
      }
    }
  }
  return D;
}

Matrix differential_matrix(const Representation& R, unsigned q) {
  if (q > 2) throw DegreeError("differential is implemented for q <= 2");
  return differential_matrix(CochainSpace(R, q), CochainSpace(R, q + 1));
}

}  // namespace supercohom
