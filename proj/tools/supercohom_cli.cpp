// Command-line front end: checks, cohomology, derivations, extensions,
// cocycle families and (p, lambda) sweeps.
//
// Exit codes: 0 success, 1 semantic failure, 2 input error.

#include <algorithm>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "supercohom/cohomology.hpp"
#include "supercohom/constructions.hpp"
#include "supercohom/filiform.hpp"
#include "supercohom/json_io.hpp"

using namespace supercohom;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::string algebra_file;
  std::string module = "trivial";
  std::optional<std::uint32_t> p;
  std::string lambda;
  std::optional<std::size_t> n, m;
  unsigned degree = 1;
  bool restricted = false;
  std::string format = "table";
  std::uint64_t seed = 1;
  // subcommand specific
  std::string cocycle_file;
  std::string center_file;
  std::string module_n = "trivial", module_m = "trivial";
  std::string primes = "3,5,7";
  bool units = false;
  unsigned samples = 0;
};

std::vector<std::int64_t> parse_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("cannot parse " + what + " entry '" + tok + "'");
    }
  }
  return out;
}

PrimeField field_for(std::int64_t p) {
  if (p < 3 || p > (std::int64_t{1} << 30) || !is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("p = " + std::to_string(p) + " is not an odd prime");
  return PrimeField(static_cast<std::uint32_t>(p));
}

// lambda entries are reduced mod p.
Vec parse_lambda(const PrimeField& f, const std::string& s) {
  const std::size_t p = f.characteristic();
  if (s.empty()) return Vec(p, 0);
  Vec lam;
  for (auto x : parse_list(s, "lambda")) lam.push_back(f.reduce(x));
  if (lam.size() != p)
    throw InputError("lambda needs " + std::to_string(p) + " entries, got " + std::to_string(lam.size()));
  return lam;
}

struct Source {
  AlgebraPtr L;
  std::optional<Vec> lambda;
};

Source load_algebra(const Options& o) {
  const bool file = !o.algebra_file.empty();
  const bool gen = o.p.has_value();
  if (file == gen) throw InputError("give exactly one of --algebra or --p");
  if (file) {
    if (!o.lambda.empty() || o.n || o.m) throw InputError("--lambda, --n and --m need the filiform generator");
    return {algebra_from_json(read_json_file(o.algebra_file)), std::nullopt};
  }
  PrimeField f = field_for(*o.p);
  if (o.n || o.m) {
    if (!o.lambda.empty()) throw InputError("--lambda applies to L_{p,p} only");
    if (!o.n || !o.m || *o.n < 1) throw InputError("--n and --m go together, with n >= 1");
    return {model_filiform(f, *o.n, *o.m), std::nullopt};
  }
  Vec lam = parse_lambda(f, o.lambda);
  return {restricted_model_filiform(f, lam), lam};
}

Representation load_module(const std::string& spec, const AlgebraPtr& L) {
  if (spec == "trivial") return trivial_rep(L);
  if (spec == "adjoint") return adjoint_rep(L);
  try {
    return module_from_json(read_json_file(spec), L);
  } catch (const DimensionError& e) {
    throw InputError(e.what());
  }
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::string cell = r[c];
      if (c + 1 < r.size()) cell.resize(width[c] + 2, ' ');
      line += cell;
    }
    std::cout << line << '\n';
  }
}

std::string lambda_string(const std::optional<Vec>& lam) {
  if (!lam) return "-";
  std::string s;
  for (std::size_t i = 0; i < lam->size(); ++i) s += (i ? "," : "") + std::to_string((*lam)[i]);
  return s;
}

Json report_json(const CheckReport& r) {
  Json j = Json::array();
  for (const auto& e : r.entries)
    j.push_back({{"name", e.name}, {"passed", e.passed}, {"witness", e.witness}, {"detail", e.detail}});
  return j;
}

void print_checks(const CheckReport& r) {
  std::vector<std::vector<std::string>> rows{{"check", "result", "witness", "detail"}};
  for (const auto& e : r.entries) {
    std::string w;
    for (std::size_t i = 0; i < e.witness.size(); ++i) w += (i ? "," : "") + std::to_string(e.witness[i]);
    rows.push_back({e.name, e.passed ? "pass" : "FAIL", w.empty() ? "-" : w, e.detail});
  }
  print_table(rows);
}

int cmd_check(const Options& o) {
  auto src = load_algebra(o);
  CheckReport r = check_axioms(*src.L);
  if (src.L->restricted()) r.append(check_restricted(*src.L, o.seed));
  if (o.module != "trivial") r.append(check_rep(load_module(o.module, src.L)));
  if (o.format == "json")
    std::cout << Json{{"passed", r.passed()}, {"checks", report_json(r)}}.dump(2) << '\n';
  else
    print_checks(r);
  return r.passed() ? kOk : kFailure;
}

int cmd_cohom(const Options& o) {
  auto src = load_algebra(o);
  if (o.degree > 2) throw InputError("--degree must be 0, 1 or 2");
  if (o.restricted && !src.L->restricted()) throw InputError("--restricted needs an algebra with a p-map");
  auto R = load_module(o.module, src.L);
  const Theory t = o.restricted ? Theory::Restricted : Theory::Ordinary;
  ReportRecord rec{src.L->p(), src.lambda, cohomology(R, o.degree, t)};
  CochainSpace C(R, o.degree);
  if (o.format == "json") {
    std::cout << report_to_json(C, rec).dump(2) << '\n';
    return kOk;
  }
  const auto& rep = rec.report;
  print_table({{"p", "lambda", "theory", "degree", "dimZ", "dimB", "dimH", "even", "odd"},
               {std::to_string(rec.p), lambda_string(rec.lambda), to_string(t), std::to_string(o.degree),
                std::to_string(rep.dim_z), std::to_string(rep.dim_b), std::to_string(rep.dim_h),
                std::to_string(rep.h_even), std::to_string(rep.h_odd)}});
  std::cout << "representatives:\n";
  const bool paired = t == Theory::Restricted && o.degree == 2;
  for (const auto& v : rep.representatives) {
    std::string s;
    const std::size_t n = paired ? C.dim() : v.size();
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0) s += (s.empty() ? "" : " + ") + std::to_string(v[i]) + "*" + C.basis_name(i);
    if (paired)
      for (std::size_t k = 0; k < src.L->n_even(); ++k)
        for (std::size_t b = 0; b < C.module_dim(); ++b) {
          const Residue x = v[C.dim() + k * C.module_dim() + b];
          if (x != 0)
            s += (s.empty() ? "" : " + ") + std::to_string(x) + "*omega(" + src.L->basis().name(k) +
                 ")[" + std::to_string(b) + "]";
        }
    std::cout << "  " << (s.empty() ? "0" : s) << '\n';
  }
  return kOk;
}

int cmd_derivations(const Options& o) {
  auto src = load_algebra(o);
  const auto& L = *src.L;
  auto der = restricted_derivations(L);
  std::mt19937_64 rng(o.seed);
  bool ok = true;
  for (unsigned par : {0U, 1U})
    for (const auto& D : par == 0 ? der.even : der.odd)
      ok = ok && check_restricted_derivation(L, D, par, rng, 5).passed();
  const std::size_t inner = inner_derivation_dim(L);
  if (o.format == "json") {
    Json basis = Json::array();
    for (unsigned par : {0U, 1U})
      for (const auto& D : par == 0 ? der.even : der.odd) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < D.rows(); ++r) rows.push_back(D.row(r));
        basis.push_back({{"parity", par == 0 ? "even" : "odd"}, {"matrix", rows}});
      }
    std::cout << Json{{"p", L.p()},
                      {"lambda", src.lambda ? Json(*src.lambda) : Json(nullptr)},
                      {"dimEven", der.even.size()},
                      {"dimOdd", der.odd.size()},
                      {"dimInner", inner},
                      {"dimOuter", der.dim() - inner},
                      {"verified", ok},
                      {"basis", basis}}
                     .dump(2)
              << '\n';
  } else {
    print_table({{"p", "lambda", "dimDer", "even", "odd", "inner", "outer", "verified"},
                 {std::to_string(L.p()), lambda_string(src.lambda), std::to_string(der.dim()),
                  std::to_string(der.even.size()), std::to_string(der.odd.size()), std::to_string(inner),
                  std::to_string(der.dim() - inner), ok ? "yes" : "no"}});
  }
  return ok ? kOk : kFailure;
}

int cmd_extend_central(const Options& o) {
  auto src = load_algebra(o);
  if (!src.L->restricted()) throw InputError("central extensions need an algebra with a p-map");
  const PrimeField& f = src.L->field();
  AlgebraPtr K = o.center_file.empty()
                     ? std::make_shared<const SuperAlgebra>(f, SuperBasis({"c"}, {}), std::vector<BracketEntry>{},
                                                            std::vector<Vec>{Vec{0}})
                     : algebra_from_json(read_json_file(o.center_file));
  if (!(K->field() == f)) throw InputError("center and algebra use different primes");
  auto R = central_coefficients(src.L, *K);
  CochainSpace C2(R, 2);
  RestrictedTwoCochain c =
      o.cocycle_file.empty() ? zero_two(C2) : restricted_two_from_json(read_json_file(o.cocycle_file), C2);
  auto ext = central_extension(src.L, *K, c);
  CheckReport r = check_axioms(*ext.E);
  r.append(check_restricted(*ext.E, o.seed));
  r.append(check_exact(ext.datum));
  const bool round_trip = flatten(C2, section_to_cocycle(ext, canonical_section(ext))) == flatten(C2, c);
  r.entries.emplace_back("section-round-trip", round_trip, std::vector<std::size_t>{}, "");
  if (o.format == "json")
    std::cout << Json{{"algebra", algebra_to_json(*ext.E)}, {"checks", report_json(r)}}.dump(2) << '\n';
  else {
    std::cout << "extension of dimension (" << ext.E->n_even() << "|" << ext.E->n_odd() << ")\n";
    print_checks(r);
  }
  return r.passed() ? kOk : kFailure;
}

int cmd_extend_module(const Options& o) {
  auto src = load_algebra(o);
  auto N = load_module(o.module_n, src.L);
  auto M = load_module(o.module_m, src.L);
  CochainSpace C1(hom_rep(N, M), 1);
  Vec phi = o.cocycle_file.empty() ? Vec(C1.dim(), 0) : cochain_from_json(read_json_file(o.cocycle_file), C1);
  auto ext = module_extension_from_cocycle(N, M, phi);
  CheckReport r = check_rep(ext.E);
  r.append(check_exact(ext.datum));
  auto split = module_extension_from_cocycle(N, M, Vec(C1.dim(), 0), ext.theta);
  const bool splits = module_equivalence(split, ext, N, M).has_value();
  if (o.format == "json")
    std::cout << Json{{"module", module_to_json(ext.E)}, {"splits", splits}, {"checks", report_json(r)}}.dump(2)
              << '\n';
  else {
    std::cout << "extension of dimension (" << ext.E.basis().n_even() << "|" << ext.E.basis().n_odd()
              << "), " << (splits ? "split" : "non-split") << "\n";
    print_checks(r);
  }
  return r.passed() ? kOk : kFailure;
}

int cmd_families(const Options& o) {
  if (!o.p) throw InputError("families needs --p");
  PrimeField f = field_for(*o.p);
  auto L = restricted_model_filiform(f, parse_lambda(f, o.lambda));
  auto T = trivial_rep(L);
  CochainSpace C2(T, 2), C3(T, 3);
  const Matrix d2 = differential_matrix(C2, C3);
  Subspace span = coboundaries(T, 2, Theory::Ordinary);
  bool ok = true;
  Json out = Json::array();
  std::vector<std::vector<std::string>> rows{{"name", "closed", "new class", "terms"}};
  for (const auto& c : cocycle_families(C2)) {
    const bool closed = is_zero(d2.apply(c.coords));
    const bool fresh = span.extend(c.coords);
    ok = ok && closed && fresh;
    if (o.format == "json") {
      out.push_back({{"name", c.name}, {"closed", closed}, {"independent", fresh},
                     {"cochain", cochain_to_json(C2, c.coords)}});
    } else {
      std::string s;
      for (std::size_t i = 0; i < c.coords.size(); ++i)
        if (c.coords[i] != 0) s += (s.empty() ? "" : " + ") + std::to_string(c.coords[i]) + "*" + C2.basis_name(i);
      rows.push_back({c.name, closed ? "yes" : "no", fresh ? "yes" : "no", s});
    }
  }
  if (o.format == "json")
    std::cout << Json{{"p", *o.p}, {"count", out.size()}, {"verified", ok}, {"families", out}}.dump(2) << '\n';
  else
    print_table(rows);
  return ok ? kOk : kFailure;
}

struct SweepRow {
  std::uint32_t p;
  Vec lambda;
  std::size_t h1, h1s, h2, h2s;
};

int cmd_sweep(const Options& o) {
  std::vector<std::pair<std::uint32_t, Vec>> jobs;
  std::mt19937_64 rng(o.seed);
  for (auto p64 : parse_list(o.primes, "primes")) {
    field_for(p64);
    const auto p = static_cast<std::uint32_t>(p64);
    std::vector<Vec> lams{Vec(p, 0)};
    if (o.units)
      for (std::size_t k = 0; k < p; ++k) {
        Vec v(p, 0);
        v[k] = 1;
        lams.push_back(v);
      }
    for (unsigned s = 0; s < o.samples; ++s) {
      Vec v(p, 0);
      while (is_zero(v))
        for (auto& x : v) x = static_cast<Residue>(rng() % p);
      lams.push_back(v);
    }
    std::sort(lams.begin(), lams.end());
    lams.erase(std::unique(lams.begin(), lams.end()), lams.end());
    for (auto& v : lams) jobs.emplace_back(p, std::move(v));
  }
  std::sort(jobs.begin(), jobs.end());
  std::vector<std::future<SweepRow>> futures;
  for (const auto& [p, lam] : jobs)
    futures.push_back(std::async(std::launch::async, [p = p, lam = lam] {
      PrimeField f(p);
      auto T = trivial_rep(restricted_model_filiform(f, lam));
      return SweepRow{p, lam, ordinary_cohomology(T, 1).dim_h, restricted_cohomology(T, 1).dim_h,
                      ordinary_cohomology(T, 2).dim_h, restricted_cohomology(T, 2).dim_h};
    }));
  std::vector<SweepRow> rows;
  for (auto& fut : futures) rows.push_back(fut.get());
  if (o.format == "json") {
    Json out = Json::array();
    for (const auto& r : rows)
      out.push_back({{"p", r.p}, {"lambda", r.lambda}, {"H1", r.h1}, {"H1_res", r.h1s}, {"H2", r.h2},
                     {"H2_res", r.h2s}});
    std::cout << out.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> table{{"p", "lambda", "H1", "H1_res", "H2", "H2_res"}};
    for (const auto& r : rows)
      table.push_back({std::to_string(r.p), lambda_string(r.lambda), std::to_string(r.h1), std::to_string(r.h1s),
                       std::to_string(r.h2), std::to_string(r.h2s)});
    print_table(table);
  }
  return kOk;
}

void add_source_flags(CLI::App* sub, Options& o) {
  sub->add_option("--algebra", o.algebra_file, "algebra JSON file");
  sub->add_option("--p", o.p, "prime for the filiform generator");
  sub->add_option("--lambda", o.lambda, "comma-separated p-map coefficients, reduced mod p");
  sub->add_option("--n", o.n, "even dimension of the non-restricted filiform algebra");
  sub->add_option("--m", o.m, "odd dimension of the non-restricted filiform algebra");
  sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--seed", o.seed, "seed for sampled checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of restricted Lie superalgebras over GF(p)"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "verify the superalgebra, p-map and module axioms");
  add_source_flags(check, o);
  check->add_option("--module", o.module, "trivial, adjoint or a module JSON file");

  auto* cohom = app.add_subcommand("cohom", "ordinary or restricted cohomology in degree 0, 1 or 2");
  add_source_flags(cohom, o);
  cohom->add_option("--module", o.module, "trivial, adjoint or a module JSON file");
  cohom->add_option("--degree", o.degree, "cohomological degree");
  cohom->add_flag("--restricted", o.restricted, "use the restricted complex");

  auto* der = app.add_subcommand("derivations", "restricted superderivations and outer dimension");
  add_source_flags(der, o);

  auto* central = app.add_subcommand("extend-central", "central extension from a restricted 2-cocycle");
  add_source_flags(central, o);
  central->add_option("--cocycle", o.cocycle_file, "restricted 2-cochain JSON (default zero)");
  central->add_option("--center", o.center_file, "strongly abelian algebra JSON (default a line)");

  auto* modext = app.add_subcommand("extend-module", "module extension from a restricted 1-cocycle");
  add_source_flags(modext, o);
  modext->add_option("--module-n", o.module_n, "quotient module N");
  modext->add_option("--module-m", o.module_m, "submodule M");
  modext->add_option("--cocycle", o.cocycle_file, "1-cochain JSON with values in Hom(N, M)");

  auto* fam = app.add_subcommand("families", "the named 2-cocycles of L_{p,p} and their classes");
  add_source_flags(fam, o);

  auto* sweep = app.add_subcommand("sweep", "H^1 and H^2, ordinary and restricted, over (p, lambda)");
  sweep->add_option("--primes", o.primes, "comma-separated primes");
  sweep->add_flag("--units", o.units, "include every unit vector lambda = e_k");
  sweep->add_option("--samples", o.samples, "random nonzero lambda per prime");
  sweep->add_option("--seed", o.seed, "seed for the random lambda");
  sweep->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(o);
    if (*cohom) return cmd_cohom(o);
    if (*der) return cmd_derivations(o);
    if (*central) return cmd_extend_central(o);
    if (*modext) return cmd_extend_module(o);
    if (*fam) return cmd_families(o);
    if (*sweep) return cmd_sweep(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidModulus& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kInputError;
}
